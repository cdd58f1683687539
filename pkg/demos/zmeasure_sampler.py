"""Compare the exact z-measure with the occupation law of the jump process.

Run: python3 demos/zmeasure_sampler.py [trajectories]
"""

import sys
from fractions import Fraction

from orthosym import ParamPoint, zmeasure_table
from orthosym.dynamics import simulate, stationarity_run

p = ParamPoint.split(2, 3, xi=Fraction(1, 2))
table = zmeasure_table(p, 3)
probs = table.probabilities()
print("most likely diagrams up to size 3:")
for lam, q in sorted(probs.items(), key=lambda kv: -kv[1])[:6]:
    print(f"  {list(lam)!s:12s} {q:.5f}")

tr = simulate((), 4, p, seed=1)
print(f"\none trajectory to t=4 visits {len(tr.states)} states, ending at {list(tr.states[-1][1])}")

count = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
rep = stationarity_run(p, count=count, horizon=50, burn_in=10, seed=2026)
print(f"\n{count} trajectories: TV on diagrams of size <= 12 = {rep.tv:.4f}, size-law TV = {rep.size_tv:.4f}")
