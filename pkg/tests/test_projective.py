from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from portraitdyn import PointError, ProjectivePoint


def test_normalization():
    assert ProjectivePoint.of(4, 2) == ProjectivePoint(2, 1)
    assert ProjectivePoint.of(-3, -6) == ProjectivePoint(1, 2)
    assert ProjectivePoint.of(2, -4) == ProjectivePoint(-1, 2)
    assert ProjectivePoint.of(-5, 0) == ProjectivePoint(1, 0)
    assert ProjectivePoint.of(Fraction(1, 2), Fraction(1, 3)) == ProjectivePoint(3, 2)


def test_invalid_points():
    with pytest.raises(PointError):
        ProjectivePoint.of(0, 0)
    with pytest.raises(PointError):
        ProjectivePoint(2, 4)
    with pytest.raises(PointError):
        ProjectivePoint(1, -1)


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_normalize_idempotent(x, y):
    if x == 0 and y == 0:
        return
    p = ProjectivePoint.of(x, y)
    assert ProjectivePoint.of(p.x, p.y) == p


@given(st.fractions(min_value=-50, max_value=50))
def test_affine_round_trip(q):
    p = ProjectivePoint.affine(q)
    assert p.to_affine() == q
    assert ProjectivePoint.parse(str(p)) == p


def test_infinity():
    inf = ProjectivePoint.infinity()
    assert inf.is_infinity
    assert str(inf) == "inf"
    assert ProjectivePoint.parse("inf") == inf
    with pytest.raises(PointError):
        inf.to_affine()


def test_apply_matrix():
    p = ProjectivePoint.affine(2)
    assert p.apply_matrix(0, 1, 1, 0) == ProjectivePoint.affine(Fraction(1, 2))
    assert p.apply_matrix(1, 1, 0, 1) == ProjectivePoint.affine(3)
