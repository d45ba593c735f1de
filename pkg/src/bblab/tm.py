"""Exact execution engine for deterministic single-tape Turing machines.

Machines have a bi-infinite tape indexed by integers, a finite symbol
alphabet with one designated blank, and per-(state, symbol) transitions
that either halt or write a symbol, move the head one cell, and change
state.  The step count of a halting run includes the final Halt
instruction as one executed transition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StepAfterHalt, ValidationError

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

L = "L"
R = "R"

_MOVE_DELTA = {L: -1, R: 1}

# Budget above which run() compiles the table to arrays and uses the
# jitted inner loop.  Below it the pure-Python stepper is faster than
# paying the dispatch overhead.
_FAST_THRESHOLD = 200_000


class _Halt:
    """Singleton marker for the halting instruction."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Halt"


HALT = _Halt()


@dataclass(frozen=True)
class Transition:
    """Write `write`, move the head in direction `move`, enter `next_state`.

    All three fields use indices into the owning table, except `move`
    which is the character 'L' or 'R'.
    """

    write: int
    move: str
    next_state: int


@dataclass(frozen=True)
class MachineTable:
    """Immutable n-state, k-symbol transition table.

    `table[state][symbol]` is either a Transition or the HALT marker.
    `symbols` and `states` carry display labels in declaration order;
    `blank` and `init` are indices.
    """

    name: str
    symbols: tuple[str, ...]
    blank: int
    states: tuple[str, ...]
    init: int
    table: tuple[tuple[object, ...], ...]

    def __post_init__(self):
        n, k = len(self.states), len(self.symbols)
        if len(set(self.symbols)) != k:
            raise ValidationError("duplicate symbol labels")
        if len(set(self.states)) != n:
            raise ValidationError("duplicate state names")
        if not 0 <= self.blank < k:
            raise ValidationError("blank symbol index out of range")
        if not 0 <= self.init < n:
            raise ValidationError("initial state index out of range")
        if len(self.table) != n:
            raise ValidationError("table must have one row per state")
        for q, row in enumerate(self.table):
            if len(row) != k:
                raise ValidationError(
                    f"state {self.states[q]}: expected {k} cells, got {len(row)}"
                )
            for s, tr in enumerate(row):
                if tr is HALT:
                    continue
                if not isinstance(tr, Transition):
                    raise ValidationError(
                        f"cell ({self.states[q]}, {self.symbols[s]}) is not "
                        "a Transition or Halt"
                    )
                if not 0 <= tr.write < k:
                    raise ValidationError(
                        f"cell ({self.states[q]}, {self.symbols[s]}): "
                        "write symbol out of range"
                    )
                if tr.move not in (L, R):
                    raise ValidationError(
                        f"cell ({self.states[q]}, {self.symbols[s]}): "
                        f"bad move {tr.move!r}"
                    )
                if not 0 <= tr.next_state < n:
                    raise ValidationError(
                        f"cell ({self.states[q]}, {self.symbols[s]}): "
                        "next state out of range"
                    )

    @property
    def n_states(self):
        return len(self.states)

    @property
    def n_symbols(self):
        return len(self.symbols)

    def state_index(self, name: str) -> int:
        return self.states.index(name)

    def symbol_index(self, label: str) -> int:
        return self.symbols.index(label)

    def transition(self, state: int, symbol: int):
        return self.table[state][symbol]

    def with_cell(self, state: int, symbol: int, tr) -> "MachineTable":
        """Copy of this table with one cell replaced (used by fault-injection
        tests and enumeration)."""
        rows = [list(row) for row in self.table]
        rows[state][symbol] = tr
        return MachineTable(
            name=self.name,
            symbols=self.symbols,
            blank=self.blank,
            states=self.states,
            init=self.init,
            table=tuple(tuple(row) for row in rows),
        )


class Tape:
    """Sparse bi-infinite tape over symbol indices.

    Backed by two growable one-sided lists (negative and non-negative
    cells).  Cells outside the stored arrays read as blank.  The touched
    extent [lo, hi] covers every cell the head has visited; it never
    shrinks.
    """

    __slots__ = ("blank", "_neg", "_pos", "lo", "hi")

    def __init__(self, blank: int):
        self.blank = blank
        self._neg: list[int] = []
        self._pos: list[int] = [blank]
        self.lo = 0
        self.hi = 0

    def read(self, i: int) -> int:
        if i >= 0:
            return self._pos[i] if i < len(self._pos) else self.blank
        j = -i - 1
        return self._neg[j] if j < len(self._neg) else self.blank

    def write(self, i: int, symbol: int) -> None:
        if i >= 0:
            pos = self._pos
            while i >= len(pos):
                pos.append(self.blank)
            pos[i] = symbol
        else:
            j = -i - 1
            neg = self._neg
            while j >= len(neg):
                neg.append(self.blank)
            neg[j] = symbol

    def touch(self, i: int) -> None:
        if i < self.lo:
            self.lo = i
        elif i > self.hi:
            self.hi = i

    def window(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self.read(i) for i in range(lo, hi + 1))

    def clone(self) -> "Tape":
        t = Tape(self.blank)
        t._neg = self._neg.copy()
        t._pos = self._pos.copy()
        t.lo = self.lo
        t.hi = self.hi
        return t


class Configuration:
    """Machine state + tape + head + step counter; single-owner mutable."""

    __slots__ = ("state", "head", "tape", "step_count", "halted")

    def __init__(self, state: int, head: int, tape: Tape, step_count: int = 0,
                 halted: bool = False):
        self.state = state
        self.head = head
        self.tape = tape
        self.step_count = step_count
        self.halted = halted

    def read(self) -> int:
        return self.tape.read(self.head)

    def clone(self) -> "Configuration":
        return Configuration(self.state, self.head, self.tape.clone(),
                             self.step_count, self.halted)


@dataclass
class RunOutcome:
    """Result of a bounded run: halted, still running, or proven non-halting.

    The non-halting variant is produced only by the search deciders, never
    by direct execution.
    """

    kind: str  # "halted" | "running" | "nonhalt"
    step_count: int | None = None
    config: Configuration | None = None
    decider: str | None = None
    certificate: object = None

    @property
    def halted(self) -> bool:
        return self.kind == "halted"


def initial_configuration(m: MachineTable) -> Configuration:
    """Initial state, head at cell 0, all-blank tape, zero steps."""
    return Configuration(m.init, 0, Tape(m.blank))


def step(m: MachineTable, c: Configuration) -> Configuration:
    """Execute one transition in place.

    Halt executes no write and no move but still counts as a step; the
    configuration is frozen afterwards.
    """
    if c.halted:
        raise StepAfterHalt("configuration is frozen")
    tr = m.table[c.state][c.tape.read(c.head)]
    c.step_count += 1
    if tr is HALT:
        c.halted = True
        return c
    c.tape.write(c.head, tr.write)
    c.head += _MOVE_DELTA[tr.move]
    c.tape.touch(c.head)
    c.state = tr.next_state
    return c


if _HAVE_NUMBA:

    @njit(cache=True)
    def _run_arrays(write, move, nxt, budget, tape, origin, head, state, done):
        """Run until halt, budget, or the head reaching the tape array edge.

        Returns (status, state, head, done, lo, hi) with status 0=running,
        1=halted, 2=edge reached (caller regrows and re-enters).  `head`
        is an index into `tape`; cell i lives at tape[i + origin].
        """
        lo = head
        hi = head
        size = tape.shape[0]
        while done < budget:
            sym = tape[head]
            j = nxt[state, sym]
            done += 1
            if j < 0:
                return 1, state, head, done, lo - origin, hi - origin
            tape[head] = write[state, sym]
            head += move[state, sym]
            if head < lo:
                lo = head
            elif head > hi:
                hi = head
            state = j
            if head == 0 or head == size - 1:
                return 2, state, head, done, lo - origin, hi - origin
        return 0, state, head, done, lo - origin, hi - origin


def _table_arrays(m: MachineTable):
    import numpy as np

    n, k = m.n_states, m.n_symbols
    write = np.zeros((n, k), dtype=np.int64)
    move = np.zeros((n, k), dtype=np.int64)
    nxt = np.zeros((n, k), dtype=np.int64)
    for q in range(n):
        for s in range(k):
            tr = m.table[q][s]
            if tr is HALT:
                nxt[q, s] = -1
            else:
                write[q, s] = tr.write
                move[q, s] = _MOVE_DELTA[tr.move]
                nxt[q, s] = tr.next_state
    return write, move, nxt


def _run_fast(m: MachineTable, budget: int) -> Configuration:
    """Array-backed run from the initial configuration."""
    import numpy as np

    write, move, nxt = _table_arrays(m)
    size = 1 << 14
    tape = np.full(size, m.blank, dtype=np.uint8)
    origin = size // 2
    head = origin
    state = m.init
    done = 0
    lo_cell, hi_cell = 0, 0
    while True:
        status, state, head, done, lo, hi = _run_arrays(
            write, move, nxt, budget, tape, origin, head, state, done
        )
        lo_cell = min(lo_cell, lo)
        hi_cell = max(hi_cell, hi)
        if status != 2:
            halted = status == 1
            break
        # Head reached the array edge: regrow around the current content.
        new_size = tape.shape[0] * 2
        new_tape = np.full(new_size, m.blank, dtype=np.uint8)
        shift = tape.shape[0] // 2
        new_tape[shift:shift + tape.shape[0]] = tape
        tape = new_tape
        origin += shift
        head += shift

    out = Tape(m.blank)
    for i in range(lo_cell, hi_cell + 1):
        sym = int(tape[i + origin])
        if sym != m.blank:
            out.write(i, sym)
    out.lo = lo_cell
    out.hi = hi_cell
    return Configuration(state, head - origin, out, done, halted)


def run(m: MachineTable, budget: int,
        config: Configuration | None = None) -> RunOutcome:
    """Run from the initial configuration (or `config`) for up to `budget`
    executed transitions.  Deterministic: equal budgets give equal results."""
    if config is None:
        if _HAVE_NUMBA and budget >= _FAST_THRESHOLD:
            c = _run_fast(m, budget)
            if c.halted:
                return RunOutcome("halted", c.step_count, c)
            return RunOutcome("running", c.step_count, c)
        config = initial_configuration(m)
    c = config
    while c.step_count < budget and not c.halted:
        step(m, c)
    if c.halted:
        return RunOutcome("halted", c.step_count, c)
    return RunOutcome("running", c.step_count, c)


def run_trace(m: MachineTable, checkpoints: list[int]) -> list[Configuration]:
    """Snapshots of the configuration at each requested step count.

    `checkpoints` must be sorted ascending.  Execution stops early if the
    machine halts; the halting configuration is then the last snapshot.
    """
    if list(checkpoints) != sorted(checkpoints):
        raise ValueError("checkpoints must be sorted ascending")
    c = initial_configuration(m)
    out = []
    for target in checkpoints:
        while c.step_count < target and not c.halted:
            step(m, c)
        out.append(c.clone())
        if c.halted:
            break
    return out


def tape_window(c: Configuration, lo: int, hi: int) -> tuple[int, ...]:
    """Symbol indices at cells lo..hi inclusive (blank where untouched)."""
    if lo > hi:
        raise ValueError("lo must be <= hi")
    return c.tape.window(lo, hi)


def window_str(m: MachineTable, c: Configuration, lo: int, hi: int) -> str:
    """Display labels of cells lo..hi, concatenated."""
    return "".join(m.symbols[s] for s in tape_window(c, lo, hi))
