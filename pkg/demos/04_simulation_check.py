"""Mechanically verifying that the 2-symbol machine simulates the
4-symbol power-of-two machine.

Each 4-symbol cell is a block of two binary cells; the verifier runs
both machines in lockstep, advancing the big machine by the tabulated
step cost of each small step and checking state, head, and tape
coupling at every step.  It also demonstrates fault detection: corrupt
one transition of the big table and the coupling breaks within a few
hundred steps.
"""

import time

from bblab import machines, simcheck
from bblab.tm import Transition

big = machines.builtin_m152()
small = machines.builtin_m54()

started = time.perf_counter()
t = simcheck.verify_simulation(big, small, simcheck.DEFAULT_ENCODING, 10_000)
print(f"{t.summary()}  ({time.perf_counter() - started:.2f}s)")
print(f"time scale: f(5)={t.time_scale(5)}, f(16)={t.time_scale(16)}, "
      f"f(333)={t.time_scale(333)}")

# The scale factor settles near 2 big steps per small step:
for n in (10, 100, 1000, 10_000):
    print(f"  f({n}) / {n} = {t.time_scale(n) / n:.3f}")

# -- fault injection ---------------------------------------------------------

q = big.state_index("rewind_sim")
tr = big.transition(q, 0)
bad = big.with_cell(q, 0, Transition(1 - tr.write, tr.move, tr.next_state))
out = simcheck.verify_simulation(bad, small, simcheck.DEFAULT_ENCODING, 1000)
print("\nwith one corrupted cell:")
print(f"  {out.summary()}")
