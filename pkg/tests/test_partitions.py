from fractions import Fraction
from functools import cache
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partitions, rationals
from orthosym.oracle import lemma_product
from orthosym.partitions import (
    Box,
    Partition,
    addable,
    contains,
    content_pochhammer,
    corners,
    dim,
    enumerate_partitions,
    frobenius,
    paired_pochhammer,
    parse,
    partitions_with_length,
    remove_box,
    skew_dim,
    sort_key,
    transpose,
)


@cache
def paths(nu: tuple, mu: tuple = ()) -> int:
    """Count saturated chains mu -> nu in the Young graph by removing boxes."""
    if sum(nu) == sum(mu):
        return int(nu == mu)
    rows = list(nu)
    total = 0
    for i in range(len(rows)):
        if i + 1 == len(rows) or rows[i] > rows[i + 1]:
            smaller = rows[:i] + [rows[i] - 1] + rows[i + 1 :]
            smaller = tuple(r for r in smaller if r)
            if all(a >= b for a, b in zip(smaller, list(mu) + [0] * len(smaller))) and len(smaller) >= len(mu):
                total += paths(smaller, mu)
    return total


def brute_partitions(n, bound=None):
    bound = n if bound is None else bound
    if n == 0:
        return [()]
    return [(k,) + rest for k in range(min(n, bound), 0, -1) for rest in brute_partitions(n - k, k)]


def test_enumerate_small_cases():
    assert enumerate_partitions(0) == (Partition(()),)
    assert [len(enumerate_partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_enumerate_canonical_order_and_completeness():
    parts = enumerate_partitions(4)
    assert [tuple(p) for p in parts] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for n in range(9):
        assert sorted(map(tuple, enumerate_partitions(n))) == sorted(brute_partitions(n))


def test_sort_key_orders_by_size_first():
    assert sort_key((1, 1, 1)) > sort_key((2,))
    assert sort_key((3,)) < sort_key((2, 1))


def test_contains_examples():
    assert contains((), (3, 1))
    assert not contains((2,), (1, 1))
    assert contains((1, 1), (2, 1))


def test_corners_and_addable_examples():
    assert corners(Partition((3, 2, 2))) == [Box(1, 3), Box(3, 2)]
    assert addable(Partition(())) == [Box(1, 1)]
    assert addable(Partition((2, 1))) == [Box(1, 3), Box(2, 2), Box(3, 1)]


def test_box_content():
    assert Box(2, 5).content == 3
    assert Box(3, 1).content == -2


def test_dim_examples():
    assert dim(Partition((2, 1))) == 2
    assert skew_dim(Partition((2, 1)), Partition((1,))) == 2
    assert skew_dim(Partition((2, 1)), Partition((2,))) == 1
    assert skew_dim(Partition((2,)), Partition((1, 1))) == 0


@pytest.mark.parametrize("n", range(9))
def test_hook_formula_matches_chain_count(n):
    for nu in enumerate_partitions(n):
        assert dim(nu) == paths(tuple(nu))


def test_skew_dim_matches_chain_count():
    for n in range(7):
        for nu in enumerate_partitions(n):
            for m in range(n + 1):
                for mu in enumerate_partitions(m):
                    expected = paths(tuple(nu), tuple(mu)) if contains(mu, nu) else 0
                    assert skew_dim(nu, mu) == expected


@given(partitions(8))
def test_transpose_is_involution(nu):
    assert transpose(transpose(nu)) == nu
    assert transpose(nu).size == nu.size


@given(partitions(7))
def test_skew_dim_branching(nu):
    for mu in [Partition(()), Partition((1,))]:
        if nu.size > mu.size and contains(mu, nu):
            assert sum(skew_dim(remove_box(nu, b), mu) for b in corners(nu)) == skew_dim(nu, mu)
        assert skew_dim(nu, nu) == 1


def test_frobenius_examples():
    h = Fraction(1, 2)
    f = frobenius(Partition((3, 2, 2)))
    assert f.a == (2 + h, h) and f.b == (2 + h, 1 + h)
    assert frobenius(Partition(())).d == 0
    one = frobenius(Partition((1,)))
    assert one.a == (h,) and one.b == (h,)


@given(partitions(9))
def test_frobenius_invariants(lam):
    f = frobenius(lam)
    assert sum(f.a) + sum(f.b) == lam.size
    assert all(x > y for x, y in zip(f.a, f.a[1:])) and all(x > 0 for x in f.a + f.b)
    g = frobenius(transpose(lam))
    assert (g.a, g.b) == (f.b, f.a)


def test_content_pochhammer_examples():
    z = Fraction(7, 3)
    assert content_pochhammer(z, Partition((2,))) == z * (z + 1)
    assert content_pochhammer(z, Partition((1, 1))) == z * (z - 1)
    assert content_pochhammer(z, Partition((2, 1)), Partition((2, 1))) == 1


@given(partitions(6), rationals(), rationals())
def test_paired_matches_split(nu, z, zp):
    assert paired_pochhammer(z + zp, z * zp, nu) == content_pochhammer(z, nu) * content_pochhammer(zp, nu)


@given(partitions(6), rationals())
def test_negated_pochhammer_transposes(nu, z):
    assert content_pochhammer(-z, nu) == (-1) ** nu.size * content_pochhammer(z, transpose(nu))


@pytest.mark.parametrize("b", [Fraction(3), Fraction(1, 2), Fraction(7, 3)])
def test_content_product_identity(b):
    for N in range(1, 5):
        for n in range(6):
            for nu in partitions_with_length(n, N):
                for m in range(n + 1):
                    for mu in partitions_with_length(m, N):
                        if contains(mu, nu):
                            want = content_pochhammer(Fraction(N), nu, mu) * content_pochhammer(N + b - 1, nu, mu)
                            assert lemma_product(nu, mu, N, b) == want


def test_parse_and_validation():
    assert parse("") == Partition(())
    assert parse("3,2,2") == Partition((3, 2, 2))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
