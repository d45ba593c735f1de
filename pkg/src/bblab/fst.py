"""Two-state transducer that doubles a reverse-ternary number.

Words are strings of digits '0'/'1'/'2', least-significant digit first.
State F computes x -> 2x; state G carries a pending +1, computing
x -> 2x+1.  Doubling a word requires one trailing (most-significant)
padding zero so the result fits in the same length.
"""

from __future__ import annotations

from .errors import MissingPadding

F = "F"
G = "G"

# (state, read) -> (write, next state)
_ARROWS = {
    (F, "0"): ("0", F),
    (F, "1"): ("2", F),
    (F, "2"): ("1", G),
    (G, "0"): ("1", F),
    (G, "1"): ("0", G),
    (G, "2"): ("2", G),
}


def transduce(start: str, word: str) -> str:
    """Run the transducer from `start` over `word`; one output digit per
    input digit.  The final state is discarded.  Empty input is allowed
    and produces empty output."""
    if start not in (F, G):
        raise ValueError(f"start state must be F or G, got {start!r}")
    state = start
    out = []
    for digit in word:
        try:
            written, state = _ARROWS[(state, digit)]
        except KeyError:
            raise ValueError(f"invalid ternary digit {digit!r}") from None
        out.append(written)
    return "".join(out)


def double_reverse_ternary(word: str) -> str:
    """Double the number represented by `word` (reverse-ternary with one
    trailing padding zero).  Length-preserving."""
    if not word or word[-1] != "0":
        raise MissingPadding(
            "input must end with a single padding zero; doubling could "
            "overflow the fixed length otherwise")
    return transduce(F, word)


def oracle_double(digits) -> list[int]:
    """Independent doubling oracle: schoolbook carry propagation over a
    base-3 digit vector (least-significant first).  Accepts any sequence
    of digit ints; returns a canonical digit list (no most-significant
    zeros, except [0] for zero).  Deliberately shares no code with
    `transduce`."""
    out = []
    carry = 0
    for d in digits:
        v = 2 * int(d) + carry
        out.append(v % 3)
        carry = v // 3
    if carry:
        out.append(carry)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
