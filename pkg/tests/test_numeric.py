from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from metriclie import _numeric as num
from metriclie._numeric import MixedModeError


@pytest.mark.parametrize(
    "text, expected",
    [("3", 3), ("-5/4", Fraction(-5, 4)), ("6/8", Fraction(3, 4)), ("0.5", 0.5), ("1e-3", 1e-3), (" 2 / 3 ", Fraction(2, 3))],
)
def test_parse_scalar(text, expected):
    value = num.parse_scalar(text)
    assert value == expected
    assert type(value) is type(expected)


@pytest.mark.parametrize("text", ["1/0", "abc", ""])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        num.parse_scalar(text)


def test_fractions_stay_in_lowest_terms():
    assert num.parse_scalar("10/4") == Fraction(5, 2)
    assert num.parse_scalar("10/4").denominator == 2


def test_mode_inference():
    assert num.infer_exact([1, 2]) is True
    assert num.infer_exact([1, Fraction(1, 2)]) is True
    assert num.infer_exact([1, 0.5]) is False
    with pytest.raises(MixedModeError):
        num.infer_exact([Fraction(1, 2), 0.5])


def test_coerce_refuses_cross_mode():
    with pytest.raises(MixedModeError):
        num.coerce(0.5, exact=True)
    with pytest.raises(MixedModeError):
        num.coerce(Fraction(1, 3), exact=False)
    assert num.coerce("3/6", True) == Fraction(1, 2)


@given(st.fractions(max_denominator=10**6))
def test_format_roundtrip_exact(q):
    assert num.parse_scalar(num.format_scalar(q)) == q


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_roundtrip_float(x):
    back = num.parse_scalar(num.format_scalar(x))
    assert float(back) == x


def test_rational_sqrt():
    assert num.rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert num.rational_sqrt(Fraction(2)) is None


def test_exact_nullspace_and_rank():
    A = num.as_array([[1, 2, 3], [2, 4, 6], [1, 0, 1]], True)
    null = num.nullspace(A, True)
    assert null.shape == (1, 3)
    assert all(v == 0 for v in A @ null[0])
    assert num.rank(A, True) == 2


def test_float_nullspace_is_orthonormal():
    A = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]])
    null = num.nullspace(A, False)
    assert null.shape == (2, 3)
    np.testing.assert_allclose(null @ null.T, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(A @ null.T, 0, atol=1e-12)


def test_exact_solve_and_inverse():
    A = num.as_array([[2, 1], [1, 1]], True)
    inv = num.inverse(A, True)
    assert np.all(A @ inv == num.eye(2, True))
    x = num.solve(A, num.as_array([3, 2], True), True)
    assert list(x) == [1, 1]
