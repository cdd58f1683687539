from fractions import Fraction

import pytest
from hypothesis import given

from conftest import partitions, rationals
from orthosym.errors import ParameterError
from orthosym.partitions import Partition, content_pochhammer
from orthosym.scalars import ParamPoint, admissible_product, classify, format_rational, rational


def test_rational_parsing():
    assert rational("5/2") == Fraction(5, 2)
    assert rational(3) == 3
    with pytest.raises(TypeError):
        rational(0.5)
    with pytest.raises(ValueError):
        rational("x")


def test_format_rational():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(4) == "4"


def test_classify_examples():
    assert classify(ParamPoint.split("5/2", "11/4")).tag == "complementary"
    assert classify(ParamPoint.symmetric(2, 5)).tag == "principal"
    deg = classify(ParamPoint.split(2, Fraction(7, 2)))
    assert deg.tag == "degenerate" and deg.witness == (2, Fraction(5, 2))
    assert classify(ParamPoint.split(-3, 4)).tag == "inadmissible"


def test_admissible_product_examples():
    p = ParamPoint.split(2, 3)
    assert admissible_product(p, Partition((1,))) == 6
    assert admissible_product(p, Partition(())) == 1
    assert admissible_product(p, Partition((1, 1))) == 12


def test_degenerate_point_kills_tall_columns():
    for N in (1, 2, 3):
        p = ParamPoint.degenerate(N, Fraction(3, 2))
        assert admissible_product(p, Partition((1,) * (N + 1))) == 0
        assert admissible_product(p, Partition((1,) * N)) != 0


@given(partitions(6), rationals(nonzero=True), rationals(nonzero=True))
def test_symmetric_mode_equals_split_mode(nu, z, zp):
    a = ParamPoint.split(z, zp)
    b = ParamPoint.symmetric(z + zp, z * zp)
    assert a.pochhammer(nu) == b.pochhammer(nu) == content_pochhammer(z, nu) * content_pochhammer(zp, nu)


@given(partitions(5), rationals(-4, 4), rationals(0, 4))
def test_conjugate_pairs_are_nonnegative(nu, re, im2):
    # z = re +- i*sqrt(im2): (z)_nu (zbar)_nu = |(z)_nu|^2
    if re * re + im2 == 0:
        return
    p = ParamPoint.symmetric(2 * re, re * re + im2)
    assert p.pochhammer(nu) >= 0


def test_parameter_validation():
    with pytest.raises(ParameterError):
        ParamPoint.split(0, 3)
    with pytest.raises(ParameterError):
        ParamPoint.charlier(0)
    with pytest.raises(ParameterError):
        ParamPoint.split(2, 3, xi=1).xi_ratio()
    with pytest.raises(ParameterError):
        ParamPoint.symmetric(1, 3).b
