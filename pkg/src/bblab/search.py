"""Brute-force enumeration of tiny machine spaces with non-halt deciders,
plus the checkpoint schedule of the power-of-two machine.

Deciders run cheapest first: the escape decider (no halting transition
is reachable in the state graph), the cycler (exact configuration
repeat), the translated cycler (recurring record-breaking configuration
shifted by a rigid offset), and finally the regular-closure decider (a
searched-for regular set of configurations that contains the initial
one, is closed under stepping, and excludes every halting one — the
escape idea generalized from the state graph to tape contents; both are
tagged "escape" since both prove halting unreachable).  Enumeration
runs either over the raw space of all (2nk+1)^(nk) tables or over a
canonical subset built in tree normal form: cells are filled lazily in
the order the blank-tape run first needs them, new states/symbols are
introduced lowest-index-first, and the very first transition moves
right.  The reduction preserves every halting step count, so maxima are
exact; raw mode remains available as ground truth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CheckpointMismatch, SpaceTooLarge
from .tm import (HALT, L, R, MachineTable, Transition, initial_configuration,
                 step)
from . import ternary

_CANDIDATE_GUARD = 10 ** 9

# Where the power-of-two machine's separator blank settles when the run
# starts with the head at cell 0: the counter lives one cell further
# left, the reverse-ternary digits start one cell to the right.
REST_CELL = -1


# ---------------------------------------------------------------------------
# checkpoint schedule of the power-of-two machine


def counter_bumps(n: int) -> int:
    """Extra steps spent incrementing the special-case counter by
    exponent n: two per digit-2-free power seen so far (2^2 and 2^8)."""
    if n <= 1:
        return 0
    if n <= 7:
        return 2
    return 4


class _CheckpointCache:
    """Prefix sums of 2*(digits(2^k) + 1), grown on demand."""

    def __init__(self):
        self._sums = [0]  # cumulative over k = 1..n
        self._powers = ternary.powers_of_two(10 ** 9)
        next(self._powers)  # discard k = 0

    def prefix(self, n: int) -> int:
        while len(self._sums) <= n:
            _, p = next(self._powers)
            self._sums.append(self._sums[-1] + 2 * (len(p) + 1))
        return self._sums[n]


_checkpoints = _CheckpointCache()


def checkpoint_steps(n: int) -> int:
    """Step at which the power-of-two machine returns to `rewind` at cell 0
    holding 2^n: 5 + bumps + sum of 2*(digits(2^k)+1) for k = 1..n."""
    if n < 0:
        raise ValueError("n must be a natural number")
    return 5 + counter_bumps(n) + _checkpoints.prefix(n)


@dataclass
class CheckpointReport:
    n_max: int
    final_step: int
    checked: int


def verify_checkpoints(m54: MachineTable, n_max: int) -> CheckpointReport:
    """Run the power-of-two machine and assert the predicted configuration
    at every checkpoint step s_n for n <= n_max.

    At s_n the machine must be in `rewind` resting on the separator cell,
    with the digit-2-free counter one cell to its left, the cells to its
    right decoding to exactly 2^n, and everything beyond blank.  With the
    head starting at cell 0, the separator settles at cell -1 (counter at
    -2, digits from 0).  Raises CheckpointMismatch otherwise.
    """
    rest = REST_CELL
    rewind = m54.state_index("rewind")
    c = initial_configuration(m54)
    powers = ternary.powers_of_two(n_max)
    for n in range(n_max + 1):
        target = checkpoint_steps(n)
        while c.step_count < target:
            if c.halted:
                raise CheckpointMismatch(n, "machine halted before s_n")
            step(m54, c)
        if c.state != rewind:
            raise CheckpointMismatch(
                n, f"state {m54.states[c.state]}, expected rewind")
        if c.head != rest:
            raise CheckpointMismatch(n, f"head at {c.head}, expected {rest}")
        if c.tape.read(rest) != m54.blank:
            raise CheckpointMismatch(n, "separator cell is not blank")
        _, expected = next(powers)
        digits = expected.digits
        for i, d in enumerate(digits, start=rest + 1):
            if c.tape.read(i) != int(d):
                raise CheckpointMismatch(
                    n, f"cell {i} holds {m54.symbols[c.tape.read(i)]}, "
                    f"expected digit {int(d)} of 2^{n}")
        for i in range(rest + 1 + len(digits), c.tape.hi + 1):
            if c.tape.read(i) != m54.blank:
                raise CheckpointMismatch(n, f"cell {i} not blank past 2^{n}")
        counter = counter_bumps(n) // 2
        if c.tape.read(rest - 1) != m54.symbol_index(str(counter)):
            raise CheckpointMismatch(
                n, f"counter cell holds {m54.symbols[c.tape.read(rest - 1)]}, "
                f"expected {counter}")
    return CheckpointReport(n_max=n_max, final_step=c.step_count,
                            checked=n_max + 1)


# ---------------------------------------------------------------------------
# non-halt deciders


@dataclass(frozen=True)
class EscapeCertificate:
    """Closed set of states containing the initial one, none of which has
    a halting transition: the run can never escape it, so it never halts."""
    reachable: tuple


@dataclass(frozen=True)
class RegularClosureCertificate:
    """A regular set of configurations witnessing that halting is
    unreachable.

    A configuration is abstracted to a quadruple (l, q, s, r): l is the
    left DFA run over the tape from the left edge up to the cell before
    the head, q and s are the machine state and the symbol under the
    head, and r is the right DFA run over the tape from the right edge
    up to the cell after the head.  Both DFAs start in state 0 and fix
    blank to map 0 to 0, so the infinite blank fringes are absorbed.
    `accepted` contains the quadruple of the initial configuration, is
    closed under machine steps (checked by revalidate_certificate), and
    contains no quadruple whose (q, s) cell halts — so the machine never
    reaches a halting configuration.
    """
    left_dfa: tuple   # per DFA state: k-tuple of successor states
    right_dfa: tuple  # same shape, run from the right edge inward
    accepted: tuple   # sorted quadruples (l, q, s, r)


@dataclass(frozen=True)
class CyclerCertificate:
    """Exact configuration repeat: config at t2 equals config at t1."""
    t1: int
    t2: int


@dataclass(frozen=True)
class TranslatedCyclerCertificate:
    """Recurring record-breaking configuration, shifted by `offset`.

    t1 and t2 are steps at which the head reached a fresh extreme in the
    same direction with equal state, and the tape within reach of the
    future run (the segment between the record cell and the farthest
    opposite excursion of the t1..t2 interval) is identical relative to
    the head.  The run from t2 therefore replays the run from t1 shifted
    by `offset`, forever.
    """
    t1: int
    t2: int
    offset: int


class _DictSim:
    """Lightweight stepper over a possibly partial table (None = undefined
    cell), with signature helpers for the deciders."""

    __slots__ = ("table", "blank", "tape", "head", "state", "steps")

    def __init__(self, table, blank, init):
        self.table = table
        self.blank = blank
        self.tape = {}
        self.head = 0
        self.state = init
        self.steps = 0

    def read(self):
        return self.tape.get(self.head, self.blank)

    def advance(self, tr):
        """Execute a concrete non-halt transition."""
        self.tape[self.head] = tr[0]
        self.head += tr[1]
        self.state = tr[2]
        self.steps += 1

    def stripped(self):
        """(content bytes, start index) of the non-blank span; (b"", head)
        when the tape is all blank."""
        cells = [i for i, s in self.tape.items() if s != self.blank]
        if not cells:
            return b"", self.head
        lo, hi = min(cells), max(cells)
        return bytes(self.tape.get(i, self.blank)
                     for i in range(lo, hi + 1)), lo

    def exact_signature(self):
        content, lo = self.stripped()
        return (self.state, self.head, lo, content)


class _TranslatedDetector:
    """Record-breaking translated-cycle detection, shared by the deciders.

    A record-breaking step puts the head strictly beyond every previously
    visited cell; everything further out is still blank.  For two records
    t1 < t2 in the same direction with equal state, let the reach be the
    farthest opposite excursion of steps t1+1..t2.  If the tape between
    the reach and the head reads the same relative to both record heads,
    the run from t2 replays the run from t1 shifted by head(t2)-head(t1):
    it reads only checked-equal cells or blanks beyond the record, so it
    drifts forever and never halts.
    """

    __slots__ = ("blank", "lo", "hi", "heads", "records")

    def __init__(self, blank):
        self.blank = blank
        self.lo = 0
        self.hi = 0
        self.heads = [0]
        self.records = {}  # (direction, state) -> [(t, head, snapshot)]

    def on_step(self, sim) -> TranslatedCyclerCertificate | None:
        """Feed the configuration after each step; certificate on match."""
        self.heads.append(sim.head)
        if self.lo <= sim.head <= self.hi:
            return None
        d = 1 if sim.head > self.hi else -1
        self.lo = min(self.lo, sim.head)
        self.hi = max(self.hi, sim.head)
        t2, p2, blank = sim.steps, sim.head, self.blank
        bucket = self.records.setdefault((d, sim.state), [])
        for t1, p1, snap in bucket:
            between = self.heads[t1 + 1:t2 + 1]
            if d > 0:
                width = max(0, p1 - min(between))
            else:
                width = max(0, max(between) - p1)
            if all(snap.get(p1 - d * j, blank)
                   == sim.tape.get(p2 - d * j, blank)
                   for j in range(width + 1)):
                return TranslatedCyclerCertificate(t1, t2, p2 - p1)
        bucket.append((t2, p2, dict(sim.tape)))
        return None


def _compile(m: MachineTable):
    """Table rows as tuples (write, delta, next) with None for Halt."""
    rows = []
    for row in m.table:
        cells = []
        for tr in row:
            if tr is HALT:
                cells.append(None)
            else:
                cells.append((tr.write, 1 if tr.move == R else -1,
                              tr.next_state))
        rows.append(tuple(cells))
    return tuple(rows)


def _escape_reachable(table, init):
    """States reachable from init over transition edges, or None if any
    reachable state has a halting (or still-undefined) cell."""
    seen = {init}
    stack = [init]
    while stack:
        q = stack.pop()
        for tr in table[q]:
            if tr is None or tr == "halt":
                return None
            if tr[2] not in seen:
                seen.add(tr[2])
                stack.append(tr[2])
    return seen


def decide_escape(m: MachineTable):
    """Certificate that no halting transition is reachable in the state
    graph from the initial state, or None.  Reachability ignores the tape
    (it over-approximates the states the run can enter), so a certificate
    soundly implies the machine never halts."""
    reachable = _escape_reachable(_compile(m), m.init)
    if reachable is None:
        return None
    return EscapeCertificate(tuple(sorted(reachable)))


def decide_cycler(m: MachineTable, budget: int):
    """Certificate (t1, t2) of an exact configuration repeat within budget,
    or None if the machine halts first or no repeat shows up."""
    sim = _DictSim(_compile(m), m.blank, m.init)
    seen = {sim.exact_signature(): 0}
    while sim.steps < budget:
        tr = sim.table[sim.state][sim.read()]
        if tr is None:
            return None  # halts
        sim.advance(tr)
        sig = sim.exact_signature()
        if sig in seen:
            return CyclerCertificate(seen[sig], sim.steps)
        seen[sig] = sim.steps
    return None


def decide_translated_cycler(m: MachineTable, budget: int):
    """Certificate of a recurring record-breaking configuration with a
    nonzero shift (see _TranslatedDetector for the matching rule), or
    None if the machine halts first or no repeat shows up in budget."""
    sim = _DictSim(_compile(m), m.blank, m.init)
    detector = _TranslatedDetector(m.blank)
    while sim.steps < budget:
        tr = sim.table[sim.state][sim.read()]
        if tr is None:
            return None
        sim.advance(tr)
        cert = detector.on_step(sim)
        if cert is not None:
            return cert
    return None


def _canonical_dfas(n_max: int, k: int, blank: int):
    """Canonical total DFAs over k symbols with at most n_max states,
    state 0 initial, and blank fixed on state 0 (so leading blanks are
    absorbed).  Cells are filled in row-major order with the
    restricted-growth rule (a cell may reference at most one state never
    referenced before), which yields one representative per isomorphism
    class.  Each item is (delta, n_states, preimage) where
    preimage[symbol][target] lists the source states mapping there."""
    out = []
    table = []

    def rec(used):
        idx = len(table)
        if idx == used * k:
            delta = tuple(tuple(table[q * k + s] for s in range(k))
                          for q in range(used))
            pre = tuple(tuple(tuple(p for p in range(used)
                                    if delta[p][s] == t)
                              for t in range(used))
                        for s in range(k))
            out.append((delta, used, pre))
            return
        q, s = divmod(idx, k)
        if q == 0 and s == blank:
            table.append(0)
            rec(used)
            table.pop()
            return
        for v in range(min(used, n_max - 1) + 1):
            table.append(v)
            rec(max(used, v + 1))
            table.pop()

    rec(1)
    return out


_dfa_cache: dict = {}

# Never materialize more canonical DFAs per alphabet than this; it holds
# the decider's memory flat even for alphabets whose next size class is
# hundreds of thousands of automata.
_DFA_LIMIT = 25_000


def _dfas(n_max: int, k: int, blank: int):
    key = (n_max, k, blank)
    if key not in _dfa_cache:
        _dfa_cache[key] = _canonical_dfas(n_max, k, blank)
    return _dfa_cache[key]


def _dfa_count(n_max: int, k: int) -> int:
    """How many DFAs _canonical_dfas would yield, without building them.
    Counts restricted-growth fillings by (cells filled, states in use);
    one cell of row 0 is pinned, and a table is complete once every row
    of a used state is filled."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def f(idx: int, used: int) -> int:
        if idx == used * k:
            return 1
        total = (used if used < n_max else n_max) * f(idx + 1, used)
        if used < n_max:
            total += f(idx + 1, used + 1)
        return total

    # cell 0 of row 0 is the pinned blank transition (which symbol is
    # pinned does not change the count)
    return f(1, 1)


def _ctl_closure(rows, k, left, left_pre, right, right_pre):
    """Smallest quadruple set containing the initial configuration and
    closed under machine steps, or None as soon as it touches a halting
    cell.  Per step, moving right extends the left word by the written
    symbol and peels one symbol off the right; every way the right DFA
    could have produced the current state is covered via the preimage
    (and symmetrically for moving left)."""
    accepted = set()
    stack = [(0, rows.init, rows.blank, 0)]
    table = rows.table
    while stack:
        quad = stack.pop()
        if quad in accepted:
            continue
        accepted.add(quad)
        l, q, s, r = quad
        tr = table[q][s]
        if tr is None:
            return None
        w, mv, q2 = tr
        if mv > 0:
            l2 = left[l][w]
            for s2 in range(k):
                for r2 in right_pre[s2][r]:
                    stack.append((l2, q2, s2, r2))
        else:
            r2 = right[r][w]
            for s2 in range(k):
                for l2 in left_pre[s2][l]:
                    stack.append((l2, q2, s2, r2))
    return accepted


@dataclass(frozen=True)
class _Rows:
    """Compiled table bundled with the indices the closure needs."""
    table: tuple
    init: int
    blank: int


def decide_regular_closure(m: MachineTable, max_dfa_states: int = 5,
                           pair_budget: int = 3_000_000):
    """Search for a RegularClosureCertificate over canonical DFA pairs
    with up to `max_dfa_states` states per side, or None when no tried
    pair closes without reaching a halting cell.

    Size classes are visited cheapest first (ordered by how many pairs
    they contain), sides may be asymmetric, and at most `pair_budget`
    pairs are tried in total, so the per-machine cost is bounded no
    matter the alphabet.  Size classes past _DFA_LIMIT automata are
    never materialized at all."""
    table = _compile(m)
    # a machine observed to halt has no closure certificate; a short
    # concrete run is far cheaper than discovering that pair by pair
    probe = _DictSim(table, m.blank, m.init)
    for _ in range(4096):
        tr = probe.table[probe.state][probe.read()]
        if tr is None:
            return None
        probe.advance(tr)
    rows = _Rows(table, m.init, m.blank)
    k = m.n_symbols
    top = 1
    while (top < max_dfa_states
           and _dfa_count(top + 1, k) <= _DFA_LIMIT):
        top += 1
    by_size: dict = {n: [] for n in range(1, top + 1)}
    for entry in _dfas(top, k, m.blank):
        by_size[entry[1]].append(entry)
    layers = sorted(
        ((len(by_size[a]) * len(by_size[b]), a + b, a, b)
         for a in range(1, top + 1) for b in range(1, top + 1)),
        key=lambda t: t[:3])
    budget = pair_budget
    for _, _, a, b in layers:
        for left, _, left_pre in by_size[a]:
            for right, _, right_pre in by_size[b]:
                budget -= 1
                if budget < 0:
                    return None
                accepted = _ctl_closure(rows, k, left, left_pre,
                                        right, right_pre)
                if accepted is not None:
                    return RegularClosureCertificate(
                        left_dfa=left, right_dfa=right,
                        accepted=tuple(sorted(accepted)))
    return None


def _closure_axioms_hold(m: MachineTable,
                         cert: RegularClosureCertificate) -> bool:
    """Check every axiom of the closure proof directly against the table;
    independent of how the certificate was found."""
    k = m.n_symbols
    left, right = cert.left_dfa, cert.right_dfa
    for dfa in (left, right):
        if not dfa or dfa[0][m.blank] != 0:
            return False
        if any(len(row) != k for row in dfa):
            return False
        if any(not 0 <= t < len(dfa) for row in dfa for t in row):
            return False
    accepted = set(cert.accepted)
    if (0, m.init, m.blank, 0) not in accepted:
        return False
    table = _compile(m)
    for l, q, s, r in accepted:
        if not (0 <= l < len(left) and 0 <= r < len(right)
                and 0 <= q < m.n_states and 0 <= s < k):
            return False
        tr = table[q][s]
        if tr is None:
            return False  # a halting configuration is accepted
        w, mv, q2 = tr
        if mv > 0:
            l2 = left[l][w]
            successors = ((l2, q2, s2, r2) for s2 in range(k)
                          for r2 in range(len(right))
                          if right[r2][s2] == r)
        else:
            r2 = right[r][w]
            successors = ((l2, q2, s2, r2) for s2 in range(k)
                          for l2 in range(len(left))
                          if left[l2][s2] == l)
        if any(succ not in accepted for succ in successors):
            return False
    return True


def revalidate_certificate(m: MachineTable, cert) -> bool:
    """Independently re-check a decider certificate: against the table for
    escape, against the closure axioms for regular closure, and against
    tm execution for the cycler certificates."""
    if isinstance(cert, RegularClosureCertificate):
        return _closure_axioms_hold(m, cert)
    if isinstance(cert, EscapeCertificate):
        states = set(cert.reachable)
        if m.init not in states:
            return False
        for q in states:
            for tr in m.table[q]:
                if tr is HALT or tr.next_state not in states:
                    return False
        return True
    c = initial_configuration(m)
    heads = [c.head]
    for _ in range(cert.t1):
        if c.halted:
            return False
        step(m, c)
        heads.append(c.head)
    snap1 = c.clone()
    for _ in range(cert.t2 - cert.t1):
        if c.halted:
            return False
        step(m, c)
        heads.append(c.head)
    offset = getattr(cert, "offset", 0)
    if c.state != snap1.state or c.head != snap1.head + offset:
        return False
    p1, p2 = snap1.head, c.head
    if offset == 0:
        lo = min(snap1.tape.lo, c.tape.lo) - 1
        hi = max(snap1.tape.hi, c.tape.hi) + 1
        return all(snap1.tape.read(i) == c.tape.read(i)
                   for i in range(lo, hi + 1))
    # translated case: both ends must be strict head records in the drift
    # direction, and the tape between the record cell and the farthest
    # opposite excursion of the interval must match relative to the heads
    d = 1 if offset > 0 else -1
    before = [d * h for h in heads[:cert.t1]]
    if before and max(before) >= d * p1:
        return False
    if max(d * h for h in heads[:cert.t2]) >= d * p2:
        return False
    between = heads[cert.t1 + 1:cert.t2 + 1]
    if d > 0:
        width = max(0, p1 - min(between))
    else:
        width = max(0, max(between) - p1)
    return all(snap1.tape.read(p1 - d * j) == c.tape.read(p2 - d * j)
               for j in range(width + 1))


# ---------------------------------------------------------------------------
# classification and enumeration


@dataclass
class Classification:
    status: str  # "halts" | "nonhalt" | "undecided"
    steps: int | None = None
    decider: str | None = None
    certificate: object = None


def classify(m: MachineTable, budget: int) -> Classification:
    """Cheapest decider first: the static escape check, a bounded run with
    the cycler inline, the translated cycler, then the regular-closure
    search on survivors; anything left is Undecided at this budget."""
    escape = decide_escape(m)
    if escape is not None:
        return Classification("nonhalt", decider="escape",
                              certificate=escape)
    sim = _DictSim(_compile(m), m.blank, m.init)
    seen = {sim.exact_signature(): 0}
    while sim.steps < budget:
        tr = sim.table[sim.state][sim.read()]
        if tr is None:
            return Classification("halts", steps=sim.steps + 1)
        sim.advance(tr)
        sig = sim.exact_signature()
        if sig in seen:
            return Classification(
                "nonhalt", decider="cycler",
                certificate=CyclerCertificate(seen[sig], sim.steps))
        seen[sig] = sim.steps
    cert = decide_translated_cycler(m, budget)
    if cert is not None:
        return Classification("nonhalt", decider="translated-cycler",
                              certificate=cert)
    closure = decide_regular_closure(m)
    if closure is not None:
        return Classification("nonhalt", decider="escape",
                              certificate=closure)
    return Classification("undecided")


@dataclass
class EnumerationSummary:
    n: int
    k: int
    budget: int
    reduced: bool
    total: int = 0
    counts: dict = field(default_factory=lambda: {
        "halts": 0, "escape": 0, "cycler": 0, "translated-cycler": 0,
        "undecided": 0})
    max_steps: int = 0
    champions: list = field(default_factory=list)
    undecided: list = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        """The reported maximum is a proven BB value only when nothing was
        left undecided."""
        return self.counts["undecided"] == 0

    def record(self, cls: Classification, table: MachineTable):
        self.total += 1
        if cls.status == "halts":
            self.counts["halts"] += 1
            if cls.steps > self.max_steps:
                self.max_steps = cls.steps
                self.champions = [table]
            elif cls.steps == self.max_steps:
                self.champions.append(table)
        elif cls.status == "nonhalt":
            self.counts[cls.decider] += 1
        else:
            self.counts["undecided"] += 1
            self.undecided.append(table)

    def to_dict(self) -> dict:
        from .machines import serialize_machine
        return {
            "n": self.n, "k": self.k, "budget": self.budget,
            "reduced": self.reduced, "total": self.total,
            "counts": self.counts, "max_steps": self.max_steps,
            "confirmed": self.confirmed,
            "champions": [serialize_machine(m) for m in self.champions[:5]],
            "undecided": [serialize_machine(m) for m in self.undecided],
        }


def _generic_names(n: int, k: int):
    states = tuple(chr(ord("A") + i) for i in range(n))
    symbols = tuple(str(i) for i in range(k))
    return states, symbols


def _materialize(n, k, cells) -> MachineTable:
    """Concrete MachineTable from enumeration cells; unreached undefined
    cells become Halt (any completion behaves identically from blank)."""
    states, symbols = _generic_names(n, k)
    table = []
    for q in range(n):
        row = []
        for s in range(k):
            tr = cells[q][s]
            if tr is None or tr == "halt":
                row.append(HALT)
            else:
                w, delta, q2 = tr
                row.append(Transition(w, R if delta > 0 else L, q2))
        table.append(tuple(row))
    return MachineTable(name=f"tm{n}x{k}", symbols=symbols, blank=0,
                        states=states, init=0, table=tuple(table))


def _classify_partial(cells, n, k, budget):
    """Run the partial table from blank.  Returns one of
    ("undef", q, sym), ("halt", steps), ("cycle", decider, cert),
    ("undecided",)."""
    reachable = _escape_reachable(cells, 0)
    if reachable is not None:
        return ("cycle", "escape", EscapeCertificate(tuple(sorted(reachable))))
    sim = _DictSim(cells, 0, 0)
    seen = {sim.exact_signature(): 0}
    detector = _TranslatedDetector(0)
    while sim.steps < budget:
        sym = sim.read()
        tr = sim.table[sim.state][sym]
        if tr is None:
            return ("undef", sim.state, sym, sim.steps)
        if tr == "halt":
            return ("halt", sim.steps + 1)
        sim.advance(tr)
        sig = sim.exact_signature()
        if sig in seen:
            return ("cycle", "cycler",
                    CyclerCertificate(seen[sig], sim.steps))
        seen[sig] = sim.steps
        cert = detector.on_step(sim)
        if cert is not None:
            return ("cycle", "translated-cycler", cert)
    return ("undecided",)


def _tnf_enumerate(n: int, k: int, budget: int, summary: EnumerationSummary):
    cells = [[None] * k for _ in range(n)]

    def branch_options(first: bool):
        used_states = {0}
        used_symbols = {0}
        for q in range(n):
            for s in range(k):
                tr = cells[q][s]
                if tr is not None and tr != "halt":
                    used_states.add(q)
                    used_states.add(tr[2])
                    used_symbols.add(s)
                    used_symbols.add(tr[0])
        max_state = min(max(used_states) + 1, n - 1)
        max_symbol = min(max(used_symbols) + 1, k - 1)
        moves = (1,) if first else (-1, 1)
        return [(w, d, q2)
                for w in range(max_symbol + 1)
                for d in moves
                for q2 in range(max_state + 1)]

    def recurse():
        outcome = _classify_partial(cells, n, k, budget)
        if outcome[0] == "undef":
            _, q, sym, steps = outcome
            # halting branch: reaching an undefined cell means every
            # completion with Halt there stops after one more step
            cells[q][sym] = "halt"
            summary.record(Classification("halts", steps=steps + 1),
                           _materialize(n, k, cells))
            for option in branch_options(first=(steps == 0)):
                cells[q][sym] = option
                recurse()
            cells[q][sym] = None
        elif outcome[0] == "halt":
            summary.record(Classification("halts", steps=outcome[1]),
                           _materialize(n, k, cells))
        elif outcome[0] == "cycle":
            summary.record(
                Classification("nonhalt", decider=outcome[1],
                               certificate=outcome[2]),
                _materialize(n, k, cells))
        else:
            m = _materialize(n, k, cells)
            cert = decide_regular_closure(m)
            if cert is not None:
                summary.record(
                    Classification("nonhalt", decider="escape",
                                   certificate=cert), m)
            else:
                summary.record(Classification("undecided"), m)

    recurse()


def _raw_enumerate(n: int, k: int, budget: int, summary: EnumerationSummary):
    options = ["halt"] + [(w, d, q2) for w in range(k) for d in (-1, 1)
                          for q2 in range(n)]
    for combo in itertools.product(options, repeat=n * k):
        cells = [list(combo[q * k:(q + 1) * k]) for q in range(n)]
        outcome = _classify_partial(cells, n, k, budget)
        if outcome[0] == "halt":
            summary.record(Classification("halts", steps=outcome[1]),
                           _materialize(n, k, cells))
        elif outcome[0] == "cycle":
            summary.record(
                Classification("nonhalt", decider=outcome[1],
                               certificate=outcome[2]),
                _materialize(n, k, cells))
        else:
            m = _materialize(n, k, cells)
            cert = decide_regular_closure(m)
            if cert is not None:
                summary.record(
                    Classification("nonhalt", decider="escape",
                                   certificate=cert), m)
            else:
                summary.record(Classification("undecided"), m)


def enumerate_and_classify(n: int, k: int, budget: int,
                           reduced: bool = True) -> EnumerationSummary:
    """Classify every n-state k-symbol machine (canonical representatives
    when `reduced`, the full raw space otherwise)."""
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 states and k >= 2 symbols")
    raw_count = (2 * n * k + 1) ** (n * k)
    if not reduced and raw_count > _CANDIDATE_GUARD:
        raise SpaceTooLarge(
            f"raw space has {raw_count} candidates (> {_CANDIDATE_GUARD})")
    summary = EnumerationSummary(n=n, k=k, budget=budget, reduced=reduced)
    if reduced:
        _tnf_enumerate(n, k, budget, summary)
    else:
        _raw_enumerate(n, k, budget, summary)
    return summary
