from fractions import Fraction
from itertools import permutations
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions, rationals
from orthosym.errors import DegreeOverflow, DomainError
from orthosym.partitions import Partition, addable, add_box, enumerate_partitions, partitions_up_to, transpose
from orthosym.sym import (
    S,
    SymElement,
    ThomaPoint,
    convert,
    evaluate_at_diagram,
    evaluate_at_thoma,
    generator_in_p,
    lr_coefficient,
    lr_via_p,
    monomial_to_p_newton,
    multiply,
    schur_to_eh,
    schur_to_p,
    sigma,
    thoma_moment_check,
)


def leibniz(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = prod(-1 if perm[i] > perm[j] else 1 for i in range(n) for j in range(i + 1, n))
        total += sign * prod((m[i][perm[i]] for i in range(n)), start=Fraction(1))
    return total


def bialternant(nu, xs):
    """Schur polynomial by the ratio of alternants, in len(xs) variables."""
    n = len(xs)
    rows = list(nu) + [0] * (n - len(nu))
    if len(nu) > n:
        return Fraction(0)
    num = leibniz([[x ** (rows[i] + n - 1 - i) for x in xs] for i in range(n)])
    den = leibniz([[x ** (n - 1 - i) for x in xs] for i in range(n)])
    return num / den


def eval_p(f, xs):
    f = convert(f, "p")
    return sum(c * prod((sum(x**k for x in xs) for k in rho), start=Fraction(1)) for rho, c in f.items())


XS = [Fraction(2), Fraction(-1, 3), Fraction(5, 2), Fraction(1, 7)]


def test_schur_to_p_examples():
    assert schur_to_p((1,)).terms == {Partition((1,)): 1}
    assert dict(schur_to_p((2,)).terms) == {Partition((2,)): Fraction(1, 2), Partition((1, 1)): Fraction(1, 2)}
    assert dict(schur_to_p((1, 1)).terms) == {Partition((2,)): Fraction(-1, 2), Partition((1, 1)): Fraction(1, 2)}


@pytest.mark.parametrize("n", range(6))
def test_schur_to_p_matches_bialternant(n):
    for nu in enumerate_partitions(n):
        assert eval_p(S(*nu), XS) == bialternant(nu, XS)


def test_jacobi_trudi_examples():
    assert dict(schur_to_eh((1, 1), "e").terms) == {Partition((2,)): 1}
    assert dict(schur_to_eh((2,), "e").terms) == {Partition((1, 1)): 1, Partition((2,)): -1}
    assert dict(schur_to_eh((2,), "h").terms) == {Partition((2,)): 1}


def test_newton_route_agrees_with_characters():
    for nu in partitions_up_to(6):
        for which in ("e", "h"):
            assert monomial_to_p_newton(schur_to_eh(nu, which)) == schur_to_p(nu)


def test_multiply_examples():
    assert S(1) * S(1) == S(2) + S(1, 1)
    for nu in partitions_up_to(5):
        assert S(1) * S(*nu) == sum((S(*add_box(nu, b)) for b in addable(nu)), SymElement("schur", {}))
    f = S(2, 1) - 3 * S(1)
    assert multiply(SymElement.one(), f) == f


def test_lr_products_match_power_sum_route():
    for n in range(7):
        for mu in partitions_up_to(n):
            for nu in enumerate_partitions(n - mu.size):
                assert S(*mu) * S(*nu) == lr_via_p(mu, nu)


def test_lr_products_match_bialternants():
    for mu in partitions_up_to(3):
        for nu in partitions_up_to(3):
            lhs = eval_p(S(*mu) * S(*nu), XS)
            assert lhs == bialternant(mu, XS) * bialternant(nu, XS)


def test_known_lr_coefficient():
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


small_elements = st.lists(st.tuples(partitions(3), rationals()), max_size=3).map(lambda t: SymElement("schur", dict(t)))


@given(small_elements, small_elements, small_elements)
def test_multiplication_commutative_associative(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


@given(small_elements, small_elements, partitions(6))
def test_diagram_evaluation_is_multiplicative(f, g, lam):
    assert evaluate_at_diagram(f * g, lam) == evaluate_at_diagram(f, lam) * evaluate_at_diagram(g, lam)


def test_sigma_examples():
    assert sigma(S(2)) == S(1, 1)
    assert sigma(SymElement.basis_element("e", (2,))) == SymElement.basis_element("h", (2,))
    for k in range(1, 6):
        assert sigma(generator_in_p("e", k)) == generator_in_p("h", k)


@given(small_elements)
def test_sigma_involution(f):
    assert sigma(sigma(f)) == f
    assert sigma(convert(f, "p")) == convert(sigma(f), "p")


def test_sigma_on_schur_transposes():
    for nu in partitions_up_to(5):
        assert sigma(S(*nu)) == S(*transpose(nu))


def test_diagram_evaluation_examples():
    p1 = SymElement.basis_element("p", (1,))
    for lam in partitions_up_to(6):
        assert evaluate_at_diagram(p1, lam) == lam.size
    assert evaluate_at_diagram(S(2), (2,)) == 3
    f = S(2, 1) + 7
    assert evaluate_at_diagram(f, ()) == 7


def test_thoma_evaluation():
    w = ThomaPoint((Fraction(1, 2),), (Fraction(1, 3),), Fraction(1))
    p = lambda k: SymElement.basis_element("p", (k,))  # noqa: E731
    assert evaluate_at_thoma(p(1), w) == 1
    # sign convention p_k = sum alpha^k + (-1)^(k-1) sum beta^k
    assert evaluate_at_thoma(p(2), w) == Fraction(1, 4) - Fraction(1, 9)
    assert evaluate_at_thoma(p(3), w) == Fraction(1, 8) + Fraction(1, 27)


def test_thoma_validation():
    with pytest.raises(DomainError):
        ThomaPoint((Fraction(1, 3), Fraction(1, 2)), (), 1)
    with pytest.raises(DomainError):
        ThomaPoint((Fraction(1),), (Fraction(1, 2),), 1)


thoma_points = st.builds(
    lambda a, b, g: ThomaPoint(tuple(sorted(a, reverse=True)), tuple(sorted(b, reverse=True)), sum(a) + sum(b) + g),
    st.lists(rationals(0, 2, 5).filter(lambda x: x > 0), max_size=3),
    st.lists(rationals(0, 2, 5).filter(lambda x: x > 0), max_size=3),
    rationals(0, 2, 5),
)


@given(thoma_points)
def test_schur_nonnegative_on_thoma_cone(w):
    for nu in partitions_up_to(5):
        assert evaluate_at_thoma(S(*nu), w) >= 0


@given(thoma_points, st.integers(0, 6))
def test_thoma_moments(w, k):
    pk, moment = thoma_moment_check(w, k)
    assert pk == moment


def test_thoma_moment_examples():
    w = ThomaPoint((Fraction(1),), (), 1)
    assert thoma_moment_check(w, 1) == (1, 1)
    g = ThomaPoint((), (), 1)
    assert thoma_moment_check(g, 0) == (1, 1)
    assert thoma_moment_check(g, 3) == (0, 0)


def test_element_invariants_and_json():
    f = SymElement("schur", {(2,): Fraction(3, 2), (1,): 0, (): -1})
    assert Partition((1,)) not in f.terms
    assert SymElement.from_json(f.to_json()) == f
    assert f.to_json()["terms"][0] == {"label": [], "coeff": "-1"}
    with pytest.raises(DegreeOverflow):
        SymElement("schur", {(9,): 1})
    with pytest.raises(DegreeOverflow):
        S(5) * S(4)
