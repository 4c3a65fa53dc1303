"""Truncated polynomial ring and rational-series arithmetic."""

from fractions import Fraction

import pytest

from rslab.errors import InputError
from rslab.exactpoly import (
    RationalFunctionSeries,
    TruncatedPoly,
    series_exp,
    series_inverse,
    series_log,
)


def _poly(coeffs, cutoff=8, var="x"):
    return TruncatedPoly((var,), (cutoff,), {(k,): v for k, v in coeffs.items()})


def test_binomial_expansion():
    one_plus_x = _poly({0: 1, 1: 1})
    fifth = one_plus_x**5
    assert [fifth.coefficient((k,)) for k in range(6)] == [1, 5, 10, 10, 5, 1]
    assert fifth.coefficient((6,)) == 0


def test_truncation_drops_high_terms():
    p = TruncatedPoly(("x",), (3,), {(0,): 1, (1,): 1})
    q = p**5
    assert q.coefficient((3,)) == 10
    # degree-4 and higher terms never exist in this ring
    assert q.coefficient((4,)) == 0


def test_two_variable_product():
    p = TruncatedPoly(("h", "y"), (3, 2), {(0, 0): 1, (1, 0): 1})
    q = TruncatedPoly(("h", "y"), (3, 2), {(0, 0): 1, (0, 1): 2})
    prod = (p**2) * q
    assert prod.coefficient((2, 0)) == 1
    assert prod.coefficient((1, 1)) == 4
    assert prod.coefficient((2, 1)) == 2
    assert prod.coefficient((0, 2)) == 0


def test_ring_mismatch_rejected():
    p = _poly({0: 1})
    q = TruncatedPoly(("z",), (8,), {(0,): 1})
    with pytest.raises(InputError):
        _ = p + q
    with pytest.raises(InputError):
        _ = p * q


def test_add_sub_round_trip():
    a = _poly({0: 1, 2: Fraction(3, 7), 5: -2})
    b = _poly({1: 4, 2: Fraction(1, 7)})
    assert (a + b) - b == a
    assert a - a == TruncatedPoly.zero(("x",), (8,))
    assert (-a) + a == TruncatedPoly.zero(("x",), (8,))


def test_scalar_multiplication():
    a = _poly({0: 2, 3: Fraction(1, 2)})
    half = a * Fraction(1, 2)
    assert half.coefficient((0,)) == 1
    assert half.coefficient((3,)) == Fraction(1, 4)


def test_series_inverse():
    p = _poly({0: 1, 1: 1, 2: 3})
    inv = series_inverse(p)
    assert p * inv == TruncatedPoly.constant(1, ("x",), (8,))
    with pytest.raises(InputError):
        series_inverse(_poly({1: 1}))


def test_exp_log_round_trip():
    p = _poly({1: Fraction(1, 3), 2: -2, 4: Fraction(7, 5)})
    assert series_log(series_exp(p)) == p
    q = _poly({0: 1, 1: 1})
    assert series_exp(series_log(q)) == q
    with pytest.raises(InputError):
        series_exp(_poly({0: 1}))
    with pytest.raises(InputError):
        series_log(_poly({0: 2}))


def test_geometric_series():
    num = _poly({0: 1}, cutoff=10, var="z")
    den = _poly({0: 1, 1: -1}, cutoff=10, var="z")
    geo = RationalFunctionSeries(num, den)
    assert geo.coefficients(6) == [1, 1, 1, 1, 1, 1]


def test_rational_series_coefficients():
    # (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
    num = _poly({0: 1, 1: 1}, cutoff=12, var="z")
    den = _poly({0: 1, 1: -1}, cutoff=12, var="z")
    series = RationalFunctionSeries(num, den)
    assert series.series_coefficient(0) == 1
    assert all(series.series_coefficient(k) == 2 for k in range(1, 8))
    with pytest.raises(InputError):
        series.series_coefficient(-1)


def test_rational_series_preconditions():
    num = _poly({0: 1}, var="z")
    with pytest.raises(InputError):
        RationalFunctionSeries(num, _poly({1: 1}, var="z"))
    two_var = TruncatedPoly(("h", "y"), (2, 2), {(0, 0): 1})
    with pytest.raises(InputError):
        RationalFunctionSeries(two_var, two_var)


def test_constructor_validation():
    with pytest.raises(InputError):
        TruncatedPoly(("x", "y", "z"), (2, 2, 2), {})
    with pytest.raises(InputError):
        TruncatedPoly(("x",), (2, 3), {})
    with pytest.raises(InputError):
        TruncatedPoly(("x",), (-1,), {})
    with pytest.raises(InputError):
        TruncatedPoly(("x",), (2,), {(0, 0): 1})
