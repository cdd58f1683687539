"""One test per acceptance criterion.  Each prints a single PASS/FAIL line,
also collected into the terminal summary."""

import time
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ACCEPTANCE_LINES
from orthosym import oracle
from orthosym.measures import orthogonality_check
from orthosym.partitions import partitions_up_to
from orthosym.scalars import ParamPoint
from orthosym.sym import S, ThomaPoint, convert, evaluate_at_thoma
from orthosym.verify import B_XI_POINTS, Context, run_suite


def report(n: int, title: str, ok: bool, detail: str = ""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def suite(name: str, **ctx):
    t0 = time.perf_counter()
    res = run_suite(name, Context(**ctx))
    return res, time.perf_counter() - t0


def test_criterion_01_eigenrelations():
    res, dt = suite("eigen", cap=6)
    ok = res.ok and res.checks > 0 and dt < 60
    assert report(1, "D F_nu = -|nu| F_nu, |nu| <= 6, LA/ME/Ch at 3 points", ok, f"{res.checks} checks, {dt:.1f}s"), res.failures


def test_criterion_02_orthogonality():
    res, dt = suite("orthogonality")
    enough = all(res.details[f]["points"] >= 5 for f in ("laguerre", "meixner", "charlier"))
    # Charlier norm is theta^|nu|
    p = ParamPoint.charlier(Fraction(5, 3))
    charlier_ok = all(
        orthogonality_check("charlier", nu, nu, p) == Fraction(5, 3) ** nu.size for nu in partitions_up_to(5)
    )
    ok = res.ok and enough and charlier_ok
    detail = ", ".join(f"{f}: {res.details[f]['points']} points" for f in ("laguerre", "meixner", "charlier"))
    assert report(2, "Gram matrices certified as polynomial identities", ok, f"{detail}, {dt:.1f}s"), res.failures


def test_criterion_03_operator_forms():
    res, dt = suite("forms", cap=6)
    assert report(3, "E/H/P operator forms agree with the Schur matrix, degree <= 6", res.ok and res.checks > 0, f"{res.checks} checks"), res.failures


def test_criterion_04_specialization():
    res, _ = suite("specialization", cap=4)
    vanishing = []
    for b, xi in B_XI_POINTS:
        for N in (1, 2, 3):
            q = ParamPoint.degenerate(N, b, xi=xi)
            vanishing += [oracle.specialization_check(nu, N, q) for nu in partitions_up_to(4) if len(nu) > N]
    vanishing = bool(vanishing) and all(r["ok"] and not r["fits"] for r in vanishing)
    ok = res.ok and vanishing and res.checks == 3 * 3 * len(partitions_up_to(4))
    assert report(4, "pi_N specializations, |nu| <= 4, N in {1,2,3}", ok, f"{res.checks} checks"), res.failures


def test_criterion_05_nvariate_orthogonality():
    res, _ = suite("nvariate-orthogonality", cap=3)
    assert report(5, "N-variate inner products match closed forms, (1,1)_N = 1", res.ok and res.checks > 0, f"{res.checks} checks"), res.failures


def test_criterion_06_univariate():
    res, _ = suite("univariate", cap=8)
    direct = True
    for b, xi in B_XI_POINTS:
        p = ParamPoint.degenerate(1, b, xi=xi)
        for n in range(9):
            rising = Fraction(1)
            for k in range(n):
                rising *= b + k
            f, g = oracle.uni("laguerre", n, p), oracle.uni("meixner", n, p)
            la = oracle.expectation("laguerre", f * f, p)
            me = oracle.expectation("meixner", g * g, p)
            direct &= la == rising * factorial(n)
            direct &= me == xi ** n * (1 - xi) ** (-2 * n) * rising * factorial(n)
    assert report(6, "univariate norms n <= 8 and eps-divisible scaling", res.ok and direct, f"{res.checks} checks"), res.failures


def test_criterion_07_zmeasure():
    res, _ = suite("zmeasure", cap=4)
    assert report(7, "level sums, coherency, per-level identity, detailed balance", res.ok, f"{res.checks} checks"), res.failures


def test_criterion_08_autoduality():
    res, _ = suite("autoduality", cap=4)
    assert report(8, "M'_nu(lam) = M'_lam(nu), |nu|,|lam| <= 4", res.ok and res.checks > 0, f"{res.checks} checks"), res.failures


def test_criterion_09_limits():
    res, _ = suite("limits", cap=4)
    assert report(9, "eps-divisibility, moment ratio (1-eps)^|nu|, Charlier degeneration", res.ok, f"{res.checks} checks"), res.failures


_SCHUR_P = {nu: convert(S(*nu), "p") for nu in partitions_up_to(5)}
_THOMA_SEEN = []


def _thoma_points():
    coord = st.builds(Fraction, st.integers(1, 30), st.integers(1, 10))
    seq = st.lists(coord, max_size=3).map(lambda xs: tuple(sorted(xs, reverse=True)))
    gap = st.builds(Fraction, st.integers(0, 30), st.integers(1, 10))
    return st.builds(lambda a, b, g: ThomaPoint(a, b, sum(a) + sum(b) + g), seq, seq, gap)


@settings(max_examples=100, database=None, derandomize=True)
@given(_thoma_points())
def _thoma_property(w):
    _THOMA_SEEN.append(w)
    for nu, f in _SCHUR_P.items():
        assert evaluate_at_thoma(f, w) >= 0, (nu, w)


def test_criterion_10_thoma_nonnegativity():
    _THOMA_SEEN.clear()
    try:
        _thoma_property()
        prop_ok = True
    except AssertionError:
        prop_ok = False
    res, _ = suite("thoma", cap=5)
    ok = prop_ok and res.ok and len(_THOMA_SEEN) >= 100
    assert report(10, "Schur nonnegativity on random Thoma points, |nu| <= 5", ok, f"{len(_THOMA_SEEN)} hypothesis points + {res.checks} seeded checks")


@pytest.mark.slow
def test_criterion_11_stationarity():
    res, dt = suite("stationarity", cap=12, seed=2026, horizon=50, burn_in=10, trajectories=10_000)
    d = res.details
    ok = res.ok and dt < 300
    detail = f"TV {d['tv']:.4f} < 0.03, size TV {d['size_tv']:.4f} < 0.02, {dt:.0f}s"
    assert report(11, "sampler stationarity at (2, 3, 1/2)", ok, detail), res.failures
