"""Exception types shared across the package."""


class BBLabError(Exception):
    """Base class for all package-specific errors."""


class StepAfterHalt(BBLabError):
    """A halted configuration was asked to execute another transition."""


class ParseError(BBLabError):
    """Syntax error in a machine description file."""

    def __init__(self, line_no, reason):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class ValidationError(BBLabError):
    """A parsed machine description is structurally invalid."""


class MissingPadding(BBLabError):
    """A reverse-ternary word handed to the doubling transducer lacks its
    trailing padding zero."""


class MalformedTape(BBLabError):
    """A tape region expected to hold one contiguous ternary number has a
    non-blank symbol after the terminating blank."""


class UnknownKey(BBLabError):
    """A (state, previous-direction) pair outside the reachable key set."""


class UndefinedCost(BBLabError):
    """The step-cost table has no entry for this (key, symbol) pair; the
    simulated machine entered a combination the simulation proof excludes."""


class OutOfRange(BBLabError):
    """Requested step index exceeds the verified range of a transcript."""


class SpaceTooLarge(BBLabError):
    """The requested enumeration space exceeds the candidate-count guard."""


class CheckpointMismatch(BBLabError):
    """A checkpoint configuration of the power-of-two machine deviates from
    the predicted state/head/tape."""

    def __init__(self, n, detail):
        super().__init__(f"checkpoint n={n}: {detail}")
        self.n = n
        self.detail = detail
