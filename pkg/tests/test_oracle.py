from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions, rationals, unit_rationals
from orthosym import oracle
from orthosym.errors import DomainError
from orthosym.oracle import NVarPoly, UniPoly
from orthosym.partitions import Partition, partitions_up_to
from orthosym.scalars import ParamPoint

B_XI = [(Fraction(3), Fraction(1, 3)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(7, 3), Fraction(3, 4))]


def uni_point(b, xi=None):
    return ParamPoint.degenerate(1, b, xi=xi)


def test_uni_examples():
    b, xi = Fraction(5, 2), Fraction(1, 3)
    p = uni_point(b, xi)
    assert oracle.uni("laguerre", 1, p) == UniPoly([-b, 1])
    assert oracle.uni("meixner", 1, p) == UniPoly([-b * xi / (1 - xi), 1])
    assert oracle.uni("charlier", 1, ParamPoint.charlier(2)) == UniPoly([-2, 1])
    for fam in ("monomial", "falling", "laguerre", "meixner"):
        assert oracle.uni(fam, 0, p) == UniPoly([1])
    assert oracle.uni("falling", 3, None) == UniPoly([0, 2, -3, 1])


def test_uni_are_monic():
    p = uni_point(Fraction(7, 3), Fraction(2, 5))
    for fam in ("laguerre", "meixner"):
        for n in range(9):
            f = oracle.uni(fam, n, p)
            assert f.degree == n and f.is_monic()


def test_laguerre_operator_examples():
    b = Fraction(5, 2)
    p = uni_point(b)
    assert oracle.uni_operator_apply("laguerre", UniPoly([0, 1]), p) == UniPoly([b, -1])
    for n in range(7):
        f = oracle.uni("laguerre", n, p)
        assert oracle.uni_operator_apply("laguerre", f, p) == -n * f


def test_meixner_falling_basis_action():
    # D x^{down n} = -n x^{down n} + xi/(1-xi) n (n+b-1) x^{down (n-1)}
    b, xi = Fraction(3, 2), Fraction(1, 4)
    p = uni_point(b, xi)
    r = xi / (1 - xi)
    for n in range(1, 6):
        got = oracle.uni_operator_direct("meixner", oracle.falling(n), p)
        assert got == -n * oracle.falling(n) + r * n * (n + b - 1) * oracle.falling(n - 1)


@given(st.lists(rationals(), min_size=1, max_size=6), rationals(0, 5, 4).filter(lambda x: x > 0), unit_rationals())
def test_basis_formulas_match_direct_operators(coeffs, b, xi):
    f = UniPoly(coeffs)
    p = uni_point(b, xi)
    for fam in ("laguerre", "meixner"):
        assert oracle.uni_operator_apply(fam, f, p) == oracle.uni_operator_direct(fam, f, p)
    c = ParamPoint.charlier(b)
    assert oracle.uni_operator_apply("charlier", f, c) == oracle.uni_operator_direct("charlier", f, c)


def test_norm_examples():
    b = Fraction(7, 3)
    assert oracle.uni_norm("laguerre", 1, uni_point(b)) == (b, b)
    assert oracle.uni_norm("meixner", 1, uni_point(b, Fraction(1, 2))) == (2 * b, 2 * b)
    assert oracle.uni_norm("laguerre", 0, uni_point(b)) == (1, 1)
    assert oracle.uni_norm("meixner", 0, uni_point(b, Fraction(1, 2))) == (1, 1)


@pytest.mark.parametrize("b,xi", B_XI)
def test_univariate_orthogonality(b, xi):
    p = uni_point(b, xi)
    for fam in ("laguerre", "meixner"):
        polys = [oracle.uni(fam, n, p) for n in range(9)]
        for m, f in enumerate(polys):
            for n, g in enumerate(polys):
                want = oracle.uni_norm_closed(fam, n, p) if m == n else 0
                assert oracle.expectation(fam, f * g, p) == want


def test_charlier_univariate():
    p = ParamPoint.charlier(Fraction(5, 2))
    for n in range(7):
        closed, moment = oracle.uni_norm("charlier", n, p)
        assert closed == moment == Fraction(5, 2) ** n * factorial(n)


def test_moments_are_classical():
    # gamma(b): E x^2 = b(b+1); NB factorial moments; Poisson E x^2 = t + t^2
    b, xi = Fraction(3, 2), Fraction(1, 3)
    assert oracle.moment("laguerre", 2, uni_point(b)) == b * (b + 1)
    r = xi / (1 - xi)
    assert oracle.moment("meixner", 2, uni_point(b, xi)) == b * (b + 1) * r * r + b * r
    assert oracle.moment("charlier", 2, ParamPoint.charlier(4)) == 4 + 16


def test_scaling_limit_examples():
    b = Fraction(5, 2)
    for eps in (Fraction(1, 10), Fraction(1, 100)):
        dev = oracle.uni_scaled_meixner(1, b, eps) - oracle.uni("laguerre", 1, uni_point(b))
        assert dev == UniPoly([b * eps])
        zero = oracle.uni_scaled_meixner(0, b, eps) - oracle.uni("laguerre", 0, uni_point(b))
        assert zero == UniPoly()
    cert = oracle.uni_scaling_limit_check(3, 2, ["1/100"])
    assert cert["divisible"]
    assert Fraction(cert["max_abs_deviation"][0]) < Fraction(3, 100) * 60


@pytest.mark.parametrize("n", range(9))
def test_scaling_limit_divisible(n):
    assert oracle.uni_scaling_limit_check(n, Fraction(7, 3))["divisible"]


def test_nvariate_examples():
    b = Fraction(5, 2)
    x1, x2 = NVarPoly.var(2, 0), NVarPoly.var(2, 1)
    assert oracle.nvariate("schur", (1,), 2) == x1 + x2
    assert oracle.nvariate("laguerre", (1,), 2, ParamPoint.degenerate(2, b)) == x1 + x2 - 2 * (b + 1)
    assert oracle.nvariate("factorial", (1,), 2) == x1 + x2 - 1
    with pytest.raises(DomainError):
        oracle.nvariate("schur", (1, 1, 1), 2)


@given(partitions(4, 3), st.lists(rationals(), min_size=3, max_size=3, unique=True))
def test_nvariate_is_symmetric_and_matches_pointwise_ratio(nu, xs):
    N = 3
    f = oracle.nvariate("schur", nu, N)
    assert f.is_symmetric()
    rows = list(nu) + [0] * (N - len(nu))
    m = [[NVarPoly.constant(N, x ** (rows[i] + N - 1 - i)) for x in xs] for i in range(N)]
    num = oracle.poly_det(m)(xs)
    assert f(xs) * oracle._vdm_value(xs) == num


def test_divide_linear_rejects_remainder():
    x1, x2 = NVarPoly.var(2, 0), NVarPoly.var(2, 1)
    assert (x1 * x1 - x2 * x2).divide_linear(0, 1) == x1 + x2
    with pytest.raises(ArithmeticError):
        (x1 * x1 + x2).divide_linear(0, 1)


def test_expansion_examples():
    p = ParamPoint.degenerate(2, Fraction(5, 2), xi=Fraction(1, 3))
    assert oracle.expansion_check("laguerre", (1,), 2, p)[0]
    assert oracle.expansion_check("meixner", (2,), 2, p)[0]
    assert oracle.expansion_check("laguerre", (), 2, p)[0]


@pytest.mark.parametrize("b,xi", B_XI)
def test_expansions(b, xi):
    for N in (1, 2, 3):
        p = ParamPoint.degenerate(N, b, xi=xi)
        for nu in partitions_up_to(4):
            if len(nu) <= N:
                assert oracle.expansion_check("laguerre", nu, N, p)[0]
                assert oracle.expansion_check("meixner", nu, N, p)[0]


def test_specialization_examples():
    p = ParamPoint.degenerate(2, Fraction(5, 2), xi=Fraction(1, 3))
    assert oracle.specialization_check((1,), 2, p)["ok"]
    out = oracle.specialization_check((1, 1, 1), 2, p)
    assert out["ok"] and not out["fits"]
    assert oracle.specialization_check((), 2, p)["ok"]


def test_inner_product_examples():
    b = Fraction(5, 2)
    for N in (1, 2, 3):
        p = ParamPoint.degenerate(N, b, xi=Fraction(1, 3))
        one = NVarPoly.constant(N, 1)
        assert oracle.nvariate_inner_product("laguerre", one, one, N, p) == 1
        assert oracle.nvariate_inner_product("meixner", one, one, N, p) == 1
    p = ParamPoint.degenerate(2, b, xi=Fraction(1, 3))
    l1 = oracle.nvariate("laguerre", (1,), 2, p)
    assert oracle.nvariate_inner_product("laguerre", l1, l1, 2, p) == 2 * (b + 1)
    m1, m2 = oracle.nvariate("meixner", (1,), 2, p), oracle.nvariate("meixner", (2,), 2, p)
    assert oracle.nvariate_inner_product("meixner", m1, m2, 2, p) == 0


def test_difference_operator_eigenrelation():
    for b, xi in B_XI:
        p = ParamPoint.degenerate(2, b, xi=xi)
        for nu in partitions_up_to(3):
            if len(nu) <= 2:
                assert oracle.difference_eigen_check(nu, 2, p)


def test_operator_actions():
    b, xi = B_XI[0]
    for N in (1, 2, 3):
        p = ParamPoint.degenerate(N, b, xi=xi)
        for nu in partitions_up_to(4):
            if len(nu) <= N:
                for fam in ("laguerre", "meixner"):
                    assert oracle.schur_action_check(fam, nu, N, p)
                    assert oracle.sym_operator_check(fam, nu, N, p)


def test_frobenius_dimension_formula():
    for N in (1, 2, 3, 4):
        for lam in partitions_up_to(6):
            if len(lam) <= N:
                a, c = oracle.frobenius_dimension_check(lam, N)
                assert a == c


def test_restricted_rates():
    for b, xi in B_XI:
        for N in (1, 2, 3):
            p = ParamPoint.degenerate(N, b, xi=xi)
            for lam in partitions_up_to(6):
                if len(lam) <= N:
                    assert oracle.restricted_rates_check(lam, N, p)


def test_pi_n_of_power_sums():
    from orthosym.sym import SymElement

    p2 = SymElement.basis_element("p", (2,))
    x1, x2 = NVarPoly.var(2, 0), NVarPoly.var(2, 1)
    assert oracle.pi_N(p2, 2) == x1 * x1 + x2 * x2
    p1 = SymElement.basis_element("p", (1,))
    # p_1 -> sum (x_i - N + 1/2) - (-i + 1/2) = x_1 + x_2 - 1
    assert oracle.pi_prime_N(p1, 2) == x1 + x2 - 1
