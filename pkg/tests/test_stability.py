from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sdquiver.quiver import builtin_quiver, dual_class
from sdquiver.stability import Stability, dominates, parse_stability, trivial_stability

A1 = builtin_quiver("atilde1:+,++")
POINT = builtin_quiver("point:+")


def test_slopes():
    tau = Stability.of([1, -1])
    assert trivial_stability(A1).slope((3, 1)) == 0
    assert tau.slope((1, 0)) == 1 and tau.slope((1, 1)) == 0
    assert Stability.of([Fraction(2, 3)]).slope((5,)) == Fraction(2, 3)
    with pytest.raises(ValueError):
        tau.slope((0, 0))


def test_self_duality():
    assert trivial_stability(A1).is_self_dual(A1)
    assert Stability.of([1, -1]).is_self_dual(A1)
    assert not Stability.of([1]).is_self_dual(POINT)


def test_compare():
    tau = Stability.of([1, -1])
    assert tau.compare((2, 1), (2, 1)) == 0
    assert tau.compare((1, 0), (0, 1)) == 1
    assert tau.compare((2, 1), (4, 2)) == 0


def test_dominance():
    tau = Stability.of([1, -1])
    assert dominates(A1, trivial_stability(A1), tau, 6)
    assert dominates(A1, tau, tau, 6)
    assert dominates(A1, tau, Stability.of([2, -2]), 6)
    assert dominates(A1, Stability.of([2, -2]), tau, 6)
    assert not dominates(A1, Stability.of([-1, 1]), tau, 3)


def test_parsing(tmp_path):
    assert parse_stability("trivial", A1) == trivial_stability(A1)
    assert parse_stability("1/2,-1/2", A1) == Stability.of([Fraction(1, 2), Fraction(-1, 2)])
    assert parse_stability('{"1": "1", "2": "-1"}', A1) == Stability.of([1, -1])
    path = tmp_path / "s.json"
    path.write_text('{"1": "3/2", "2": "-3/2"}')
    assert parse_stability(str(path), A1).weights == (Fraction(3, 2), Fraction(-3, 2))
    with pytest.raises(ValueError):
        parse_stability('{"1": "1"}', A1)


weights = st.fractions(min_value=-5, max_value=5, max_denominator=4)
vec = st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(any)


@given(weights, vec, st.integers(1, 5))
def test_slope_properties(w, alpha, k):
    tau = Stability.of([w, -w])
    assert tau.slope(tuple(k * a for a in alpha)) == tau.slope(alpha)
    assert tau.slope(dual_class(A1, alpha)) == -tau.slope(alpha)
    assert tau.slope((alpha[0], alpha[0]) if alpha[0] else (1, 1)) == 0
