"""Mechanical lockstep verifier for the 2-symbol machine's simulation of
the 4-symbol machine.

The verifier runs the 4-symbol machine (`small`) one step at a time and
advances the 2-symbol machine (`big`) by exactly the step cost assigned
to that (state, previous-direction, read-symbol) triple.  After each
simulated step it asserts the coupling: big's state matches the state
map, big's head sits at 2i plus the direction offset, every block of two
big cells the big head visited spells the encoding of the corresponding
small cell, and the machines halt in sync.  It executes big itself
rather than trusting the accumulated time-scale, so any off-by-one drift
is caught immediately with a precise location.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange, UndefinedCost, UnknownKey, ValidationError
from .tm import HALT, L, R, MachineTable, initial_configuration

BLOCK = 2


@dataclass(frozen=True)
class Encoding:
    """Injective block encoding from 4-symbol labels to 2-symbol words."""

    words: dict  # symbol label -> word over big's symbol labels
    block: int = BLOCK

    def __post_init__(self):
        if len(set(self.words.values())) != len(self.words):
            raise ValidationError("encoding must be injective")
        for word in self.words.values():
            if len(word) != self.block:
                raise ValidationError("all code words must have block length")


DEFAULT_ENCODING = Encoding({"#": "bb", "0": "ba", "1": "ab", "2": "aa"})

# Reachable (small state, previous head direction) pairs.
K = (
    ("mul2_F", R),
    ("mul2_G", R),
    ("find_2", L),
    ("check_halt", L),
    ("rewind", L),
    ("rewind", R),
)

_H = {
    ("mul2_F", R): "mul2_F_sim",
    ("mul2_G", R): "mul2_G_sim",
    ("find_2", L): "find_2_sim",
    ("check_halt", L): "check_halt_sim",
    ("rewind", L): "rewind_sim",
    ("rewind", R): "rewind_b",
}

# Micro-steps big needs per small step, by key and read symbol.  The
# (rewind, R) column is defined only for the blank: rewind can only be
# entered rightward at cell 0, which always holds a blank.
STEP_COSTS = {
    ("mul2_F", R): {"0": 2, "1": 2, "2": 2, "#": 3},
    ("mul2_G", R): {"0": 2, "1": 4, "2": 2, "#": 2},
    ("find_2", L): {"0": 2, "1": 2, "2": 2, "#": 2},
    ("check_halt", L): {"0": 3, "1": 1, "2": 2, "#": 1},
    ("rewind", L): {"0": 2, "1": 2, "2": 2, "#": 3},
    ("rewind", R): {"#": 2},
}


def state_map_h(key: tuple[str, str]) -> str:
    """Big-machine state simulating a (small state, previous direction)."""
    try:
        return _H[key]
    except KeyError:
        raise UnknownKey(f"{key} is outside the reachable key set") from None


def head_map(i: int, d: str) -> int:
    """Big-machine head cell for small head i entered moving d."""
    return 2 * i + (1 if d == L else 0)


def step_cost(key: tuple[str, str], symbol: str) -> int:
    """Figure-of-merit lookup; absent cells are verification failures."""
    costs = STEP_COSTS.get(key)
    if costs is None:
        raise UnknownKey(f"{key} is outside the reachable key set")
    try:
        return costs[symbol]
    except KeyError:
        raise UndefinedCost(
            f"no cost for key {key} reading {symbol!r}: the simulated "
            "machine entered a combination the proof excludes") from None


@dataclass
class SimulationTranscript:
    """Per-step record of a bounded lockstep verification.

    `f[n]` is the big-machine step paired with small step n; `keys`,
    `sigmas` and `heads` record k_n (as an index into K), the read symbol
    index and the small head position for each verified step.
    """

    status: str  # "verified" | "both-halted" | "mismatch"
    n_verified: int
    f: np.ndarray
    keys: np.ndarray
    sigmas: np.ndarray
    heads: np.ndarray
    mismatch: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status in ("verified", "both-halted")

    def time_scale(self, n: int) -> int:
        if not 0 <= n < len(self.f):
            raise OutOfRange(f"step {n} beyond verified range "
                             f"0..{len(self.f) - 1}")
        return int(self.f[n])

    def summary(self) -> str:
        if self.ok:
            tail = f"f({self.n_verified}) = {self.time_scale(self.n_verified)}"
            return f"{self.status} to n = {self.n_verified}, {tail}"
        m = self.mismatch
        return (f"mismatch at n = {m['n']} (big step {m['f']}): {m['kind']}, "
                f"expected {m['expected']!r}, got {m['actual']!r}")


def time_scale(transcript: SimulationTranscript, n: int) -> int:
    return transcript.time_scale(n)


def verify_simulation(big: MachineTable, small: MachineTable,
                      enc: Encoding = DEFAULT_ENCODING,
                      n_max: int = 1000) -> SimulationTranscript:
    """Run `small` for up to n_max steps with `big` in lockstep and check
    the simulation relation at every step.

    Stops at the first mismatch with a diagnostic carrying the small step
    n, big step f(n), the failed check, and expected/actual values.
    """
    if small.n_symbols != len(enc.words):
        raise ValidationError("encoding must be total on small's alphabet")
    if big.n_symbols != 2:
        raise ValidationError("big machine must have 2 symbols")

    big_sym = {label: i for i, label in enumerate(big.symbols)}
    # small symbol index -> pair of big symbol indices
    enc_pairs = []
    for label in small.symbols:
        word = enc.words[label]
        enc_pairs.append((big_sym[word[0]], big_sym[word[1]]))
    blank_pair = enc_pairs[small.blank]
    if blank_pair != (big.blank, big.blank):
        raise ValidationError("small blank must encode to big blanks")

    key_code = {}
    h_state = {}
    cost_idx = {}
    for code, (state_name, d) in enumerate(K):
        q = small.state_index(state_name)
        key_code[(q, d)] = code
        h_state[code] = big.state_index(_H[(state_name, d)])
        cost_idx[code] = {
            small.symbol_index(sym): c
            for sym, c in STEP_COSTS[(state_name, d)].items()
        }

    n_cap = n_max + 1
    f_arr = np.zeros(n_cap, dtype=np.int64)
    keys_arr = np.zeros(n_cap, dtype=np.int8)
    sig_arr = np.zeros(n_cap, dtype=np.int8)
    head_arr = np.zeros(n_cap, dtype=np.int64)

    sc = initial_configuration(small)
    bc = initial_configuration(big)
    s_table = small.table
    b_table = big.table
    s_tape = sc.tape
    b_tape = bc.tape
    d = R
    f = 0

    def fail(n, kind, expected, actual):
        return SimulationTranscript(
            status="mismatch", n_verified=max(n - 1, 0),
            f=f_arr[:n + 1].copy(), keys=keys_arr[:n + 1].copy(),
            sigmas=sig_arr[:n + 1].copy(), heads=head_arr[:n + 1].copy(),
            mismatch={"n": n, "f": f, "kind": kind,
                      "expected": expected, "actual": actual})

    for n in range(n_max + 1):
        key = key_code.get((sc.state, d))
        if key is None:
            raise UnknownKey(f"({small.states[sc.state]}, {d}) at step {n}")
        sigma = s_tape.read(sc.head)
        f_arr[n] = f
        keys_arr[n] = key
        sig_arr[n] = sigma
        head_arr[n] = sc.head

        # coupling checks at (n, f(n))
        if bc.state != h_state[key]:
            return fail(n, "state", big.states[h_state[key]],
                        big.states[bc.state])
        expected_head = 2 * sc.head + (1 if d == L else 0)
        if bc.head != expected_head:
            return fail(n, "head", expected_head, bc.head)

        if n == n_max:
            break

        cost = cost_idx[key].get(sigma)
        if cost is None:
            raise UndefinedCost(
                f"key ({small.states[sc.state]}, {d}) reading "
                f"{small.symbols[sigma]!r} at step {n}")

        # advance small one step
        tr = s_table[sc.state][sigma]
        small_halts = tr is HALT
        if not small_halts:
            s_tape.write(sc.head, tr.write)
            sc.head += 1 if tr.move == R else -1
            s_tape.touch(sc.head)
            sc.state = tr.next_state
            d = tr.move
        sc.step_count += 1

        # advance big exactly `cost` micro-steps, tracking head excursion
        big_halted_at = None
        lo = hi = bc.head
        for micro in range(cost):
            btr = b_table[bc.state][b_tape.read(bc.head)]
            f += 1
            if btr is HALT:
                big_halted_at = micro + 1
                break
            b_tape.write(bc.head, btr.write)
            bc.head += 1 if btr.move == R else -1
            b_tape.touch(bc.head)
            bc.state = btr.next_state
            if bc.head < lo:
                lo = bc.head
            elif bc.head > hi:
                hi = bc.head

        if small_halts:
            if big_halted_at != cost:
                return fail(n + 1, "halting-synchrony",
                            f"big halts at micro-step {cost}",
                            f"big halted at {big_halted_at}")
            return SimulationTranscript(
                status="both-halted", n_verified=n,
                f=f_arr[:n + 1].copy(), keys=keys_arr[:n + 1].copy(),
                sigmas=sig_arr[:n + 1].copy(), heads=head_arr[:n + 1].copy())
        if big_halted_at is not None:
            return fail(n + 1, "halting-synchrony", "big still running",
                        f"big halted at micro-step {big_halted_at}")

        # every small cell whose block the big head visited must still
        # encode correctly; unvisited blocks are unchanged, so this is a
        # complete per-step check of the tape law
        for j in range(lo // 2, hi // 2 + 1):
            want = enc_pairs[s_tape.read(j)]
            got = (b_tape.read(2 * j), b_tape.read(2 * j + 1))
            if got != want:
                return fail(n + 1, f"tape cell {j}",
                            enc.words[small.symbols[s_tape.read(j)]],
                            big.symbols[got[0]] + big.symbols[got[1]])

    # closing sweep over the whole touched extent plus one blank cell
    for j in range(s_tape.lo - 1, s_tape.hi + 2):
        want = enc_pairs[s_tape.read(j)]
        got = (b_tape.read(2 * j), b_tape.read(2 * j + 1))
        if got != want:
            return fail(n_max, f"tape cell {j} (final sweep)",
                        enc.words[small.symbols[s_tape.read(j)]],
                        big.symbols[got[0]] + big.symbols[got[1]])

    return SimulationTranscript(
        status="verified", n_verified=n_max, f=f_arr, keys=keys_arr,
        sigmas=sig_arr, heads=head_arr)
