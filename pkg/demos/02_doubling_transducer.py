"""The two-state transducer that doubles a reverse-ternary number.

State F doubles; state G doubles and adds a pending carry of one.  A
padded word (one trailing zero) always doubles in place, one output
digit per input digit, in a single left-to-right pass.
"""

import itertools

from bblab import fst

word = "2210"  # 2 + 2*3 + 1*9 = 17, least-significant digit first
doubled = fst.double_reverse_ternary(word)
print(f"{word} (= 17) -> {doubled} (= 34), one pass, no lookahead")

# Exhaustive check against an independent schoolbook oracle.
checked = 0
for length in range(2, 10):
    for body in itertools.product("012", repeat=length - 1):
        w = "".join(body) + "0"
        got = [int(d) for d in fst.transduce(fst.F, w)]
        while len(got) > 1 and got[-1] == 0:
            got.pop()
        assert got == fst.oracle_double(int(d) for d in w), w
        checked += 1
print(f"all {checked} padded words of up to 9 digits double correctly")

# Starting in G computes 2x + 1: the carry arrives at the low digit.
for w in ("00", "10", "20"):
    out = fst.transduce(fst.G, w)
    value = sum(int(d) * 3 ** i for i, d in enumerate(w))
    result = sum(int(d) * 3 ** i for i, d in enumerate(out))
    print(f"G over {w}: {out}  ({value} -> {result} = 2*{value}+1)")
