"""Arbitrary-precision base-3 arithmetic on digit vectors, and the scanner
that looks for powers of two with no ternary digit 2.

Digit vectors are least-significant first ("reverse-ternary"), one digit
per byte.  TernaryNumber values are canonical (no most-significant
zeros, except the single 0 representing zero) and immutable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedTape


def _settle_carries(d: np.ndarray) -> np.ndarray:
    """Reduce every digit of `d` into {0,1,2} by propagating carries.
    `d` must have enough headroom at the top (digits < 3 there)."""
    while True:
        carry = d // 3
        if not carry.any():
            return d
        d %= 3
        d[1:] += carry[:-1]


def _double_digits(d: np.ndarray) -> np.ndarray:
    """Double a canonical digit vector; returns a canonical vector."""
    out = np.zeros(len(d) + 1, dtype=np.int16)
    out[:len(d)] = d
    out[:len(d)] *= 2
    out = _settle_carries(out)
    if out[-1] == 0 and len(out) > 1:
        out = out[:-1]
    return out


class TernaryNumber:
    """Immutable natural number stored as a base-3 digit vector."""

    __slots__ = ("_digits",)

    def __init__(self, digits):
        arr = np.asarray(list(digits) if not isinstance(digits, np.ndarray)
                         else digits, dtype=np.int16)
        if arr.ndim != 1 or len(arr) == 0:
            raise ValueError("digits must be a non-empty 1-d sequence")
        if ((arr < 0) | (arr > 2)).any():
            raise ValueError("digits must lie in {0, 1, 2}")
        # canonical form: strip most-significant zeros
        n = len(arr)
        while n > 1 and arr[n - 1] == 0:
            n -= 1
        arr = arr[:n].copy()
        arr.setflags(write=False)
        self._digits = arr

    @classmethod
    def from_int(cls, value: int) -> "TernaryNumber":
        if value < 0:
            raise ValueError("only naturals are representable")
        digits = []
        while True:
            value, r = divmod(value, 3)
            digits.append(r)
            if value == 0:
                return cls(digits)

    @property
    def digits(self) -> np.ndarray:
        """Read-only digit vector, least-significant first."""
        return self._digits

    def __len__(self):
        return len(self._digits)

    def __iter__(self):
        return iter(int(d) for d in self._digits)

    def __int__(self):
        value = 0
        for d in self._digits[::-1]:
            value = value * 3 + int(d)
        return value

    def __eq__(self, other):
        if not isinstance(other, TernaryNumber):
            return NotImplemented
        return (len(self._digits) == len(other._digits)
                and bool((self._digits == other._digits).all()))

    def __hash__(self):
        return hash(self._digits.tobytes())

    def __repr__(self):
        return f"TernaryNumber({self.msf_str()!r} base 3)"

    def lsf_str(self) -> str:
        """Digits as a string, least-significant first (tape order)."""
        return "".join(str(int(d)) for d in self._digits)

    def msf_str(self) -> str:
        """Conventional most-significant-first rendering."""
        return self.lsf_str()[::-1]

    def doubled(self) -> "TernaryNumber":
        return TernaryNumber(_double_digits(self._digits))


def powers_of_two(n_max: int):
    """Yield (n, TernaryNumber of 2**n) for n = 0..n_max, maintaining the
    digit vector incrementally (one doubling per exponent)."""
    d = np.array([1], dtype=np.int16)
    for n in range(n_max + 1):
        yield n, TernaryNumber(d)
        d = _double_digits(d)


def power_of_two_ternary(n: int) -> TernaryNumber:
    """Canonical digits of 2**n, computed by n doublings starting from 1."""
    if n < 0:
        raise ValueError("exponent must be a natural number")
    d = np.array([1], dtype=np.int16)
    for _ in range(n):
        d = _double_digits(d)
    return TernaryNumber(d)


def has_digit_two(x: TernaryNumber) -> bool:
    return bool((x.digits == 2).any())


@dataclass
class ScanReport:
    """Outcome of scanning exponents 0..bound for digit-2-free powers."""

    bound: int
    free_exponents: list[int] = field(default_factory=list)
    digit_lengths: dict[int, int] = field(default_factory=dict)
    digit_ops: int = 0
    elapsed_seconds: float = 0.0

    @property
    def counterexample(self) -> int | None:
        """Smallest digit-2-free exponent above 8, if the scan found one."""
        for n in self.free_exponents:
            if n > 8:
                return n
        return None

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "free_exponents": self.free_exponents,
            "digit_lengths": {str(k): v for k, v in self.digit_lengths.items()},
            "digit_ops": self.digit_ops,
            "counterexample": self.counterexample,
        }


def scan_erdos(n_max: int) -> ScanReport:
    """Record every n <= n_max whose 2**n has no ternary digit 2.

    The digit vector is maintained incrementally (never recomputed from
    scratch), so total work is O(n_max * log 2**n_max) digit operations.
    """
    start = time.perf_counter()
    report = ScanReport(bound=n_max)
    d = np.array([1], dtype=np.int16)
    for n in range(n_max + 1):
        report.digit_ops += len(d)
        if not (d == 2).any():
            report.free_exponents.append(n)
            report.digit_lengths[n] = len(d)
        if n < n_max:
            d = _double_digits(d)
    report.elapsed_seconds = time.perf_counter() - start
    return report


def decode_tape_number(labels: str, blank: str = "#") -> TernaryNumber:
    """Decode a tape window read from cell 1 upward into the number it
    holds: digits until the first blank, least-significant first.

    Raises MalformedTape if a non-blank symbol follows the first blank.
    An empty digit run decodes to zero.
    """
    digits = []
    seen_blank = False
    for ch in labels:
        if ch == blank:
            seen_blank = True
            continue
        if seen_blank:
            raise MalformedTape(
                f"digit {ch!r} found after the terminating blank")
        if ch not in "012":
            raise MalformedTape(f"unexpected tape symbol {ch!r}")
        digits.append(int(ch))
    if not digits:
        return TernaryNumber([0])
    return TernaryNumber(digits)
