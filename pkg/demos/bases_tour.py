"""Build a few basis elements exactly and watch the operator act on them.

Run: python3 demos/bases_tour.py
"""

from fractions import Fraction

from orthosym import ParamPoint, S, apply_operator, charlier, laguerre, meixner
from orthosym.measures import norm_closed_form, orthogonality_check


def show(title, f):
    terms = ", ".join(f"{list(k) or '()'}: {v}" for k, v in sorted(f.items(), key=lambda kv: (-kv[0].size, kv[0])))
    print(f"{title:28s} {terms}")


p = ParamPoint.split(2, 3, xi=Fraction(1, 2))
print("parameters z=2, z'=3, xi=1/2\n")

show("Laguerre (2) in Schur:", laguerre((2,), p).in_schur)
show("Meixner (2) in FS:", meixner((2,), p).in_native)
show("Meixner (2) in Schur:", meixner((2,), p).in_schur)
show("Charlier (1,1), theta=3:", charlier((1, 1), 3).in_schur)

print("\neigenvalues of D on Laguerre functions:")
for nu in [(1,), (2, 1), (3, 1, 1)]:
    f = laguerre(nu, p).in_native
    g = apply_operator("laguerre", p, f)
    ratio = {g.terms.get(k, 0) / c for k, c in f.terms.items()}
    print(f"  nu={list(nu)}: D F / F = {sorted(str(r) for r in ratio)}")

print("\nnorms (exact) against the closed form:")
q = ParamPoint.split(Fraction(5, 2), Fraction(11, 4), xi=Fraction(1, 3))
for nu in [(1,), (2,), (1, 1), (2, 1)]:
    got = orthogonality_check("meixner", nu, nu, q)
    print(f"  Meixner nu={list(nu)}: {got} == {norm_closed_form('meixner', nu, q)}")
print(f"  off-diagonal <M_(2), M_(1,1)> = {orthogonality_check('meixner', (2,), (1, 1), q)}")
print(f"\nSchur S_(2,1) has {len(S(2, 1).terms)} term(s); its Laguerre partner has {len(laguerre((2, 1), p).in_schur.terms)}")
