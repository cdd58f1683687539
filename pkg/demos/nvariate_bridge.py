"""The N-variate side: specialize symmetric functions to N variables and
check them against polynomials built independently from determinants.

Run: python3 demos/nvariate_bridge.py
"""

from fractions import Fraction

from orthosym import oracle
from orthosym.scalars import ParamPoint

b, xi = Fraction(3), Fraction(1, 3)
for N in (1, 2, 3):
    p = ParamPoint.degenerate(N, b, xi=xi)
    print(f"N={N}: z={p.z}, z'={p.zp}")
    for nu in [(1,), (2,), (1, 1), (2, 1), (1, 1, 1, 1)]:
        out = oracle.specialization_check(nu, N, p)
        tag = "vanishes" if not out["fits"] else "matches"
        print(f"  nu={list(nu)!s:14s} {tag:9s} ok={out['ok']}")

p = ParamPoint.degenerate(2, b, xi=xi)
L = oracle.nvariate("laguerre", (1,), 2, p)
poly = " + ".join(f"({c})*x^{list(e)}" for e, c in sorted(L.terms.items(), reverse=True))
print(f"\nLaguerre (1) in two variables at b=3: {poly}")
print(f"(L, L) by moments = {oracle.nvariate_inner_product('laguerre', L, L, 2, p)}, closed form = {oracle.nvariate_norm_closed('laguerre', (1,), 2, p)}")
print("\nunivariate scaling certificate, n=3, b=3:", oracle.uni_scaling_limit_check(3, b)["divisible"])
