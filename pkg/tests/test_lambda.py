from __future__ import annotations

from hypothesis import given, settings, strategies as st

from sdquiver.euler import chi_sd
from sdquiver.lambda_ import (
    LambdaElement, LambdaSdElement, basis, basis_sd, diamond, heart, involution, star,
)
from sdquiver.quiver import builtin_quiver
from sdquiver.ratfun import L, RationalFunction, lefschetz_power
from sdquiver.verify import run_suite

POINT = builtin_quiver("point:+")
LOOP = builtin_quiver("loop:1:+:+")
A1 = builtin_quiver("atilde1:+,++")


def test_units():
    x = basis(A1, (1, 0), L) + basis(A1, (2, 1), 3)
    m = basis_sd(A1, (1, 1), L + 1)
    assert star(basis(A1, (0, 0)), x) == x == star(x, basis(A1, (0, 0)))
    assert diamond(basis(A1, (0, 0)), m) == m


def test_star_examples():
    assert basis(POINT, (1,)) * basis(POINT, (1,)) == basis(POINT, (2,), RationalFunction(1) / L)
    assert basis(LOOP, (2,)) * basis(LOOP, (3,)) == basis(LOOP, (5,))


def test_diamond_examples():
    assert diamond(basis(POINT, (1,)), basis_sd(POINT, (0,))) == basis_sd(POINT, (2,))
    assert diamond(basis(POINT, (1,)), basis_sd(POINT, (2,))) == basis_sd(POINT, (4,), L ** -2)


def test_involution_and_heart_examples():
    x = basis(POINT, (2,), L)
    assert involution(x) == x
    assert heart(x, basis_sd(POINT, (1,))).is_zero()
    assert involution(basis(A1, (1, 0))) == basis(A1, (0, 1))
    y = basis(A1, (2, 1), L - 3) + basis(A1, (0, 1))
    assert involution(involution(y)) == y
    got = heart(basis(A1, (1, 0)), basis_sd(A1, (0, 0)))
    coeff = lefschetz_power(-chi_sd(A1, (1, 0), (0, 0))) - lefschetz_power(-chi_sd(A1, (0, 1), (0, 0)))
    assert got == basis_sd(A1, (1, 1), coeff)


def test_zero_coefficients_are_dropped():
    x = basis(A1, (1, 0), L) - basis(A1, (1, 0), L)
    assert x.is_zero() and x.terms == {}
    assert LambdaSdElement(A1, {(1, 1): 0}).is_zero()
    assert isinstance(x, LambdaElement)


classes = st.tuples(st.integers(0, 3), st.integers(0, 3))


@settings(max_examples=40, deadline=None)
@given(classes, classes, st.integers(0, 3))
def test_heart_is_antisymmetric_in_the_twist(a, b, r):
    x = basis(A1, a, L) + basis(A1, b, 2)
    m = basis_sd(A1, (r, r))
    assert heart(involution(x), m) == -heart(x, m)


def test_lambda_suite():
    result = run_suite("lambda", seed=11, cases=60)
    assert result.ok, result.lines()
