from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from sdquiver import identities as ids
from sdquiver.identities import Z2FinObject as Z
from sdquiver.ratfun import Polynomial


def test_bernoulli_polynomials():
    assert ids.bernoulli_poly(0).coeffs == Polynomial([1])
    assert ids.bernoulli_poly(1).coeffs == Polynomial([Fraction(-1, 2), 1])
    assert ids.bernoulli_poly(2).coeffs == Polynomial([Fraction(1, 6), -1, 1])


def _derivative(p: Polynomial) -> list[Fraction]:
    c = list(p.coeffs)
    return [k * c[k] for k in range(1, len(c))]


def _integral_01(p: Polynomial) -> Fraction:
    return sum((Fraction(c) / (k + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


@pytest.mark.parametrize("k", range(1, 10))
def test_bernoulli_polynomial_structure(k):
    b, prev = ids.bernoulli_poly(k).coeffs, ids.bernoulli_poly(k - 1).coeffs
    assert Polynomial(_derivative(b)) == prev * k
    assert _integral_01(b) == 0
    assert b.compose_affine(1, 1) - b == Polynomial([0, 1]) ** (k - 1) * k


def test_bernoulli_identity_examples():
    assert ids.check_bernoulli_identity(1, 1, 1)
    lhs, rhs = ids.bernoulli_identity_sides(3, 1, 2)
    assert lhs == Polynomial() == rhs
    assert all(ids.check_bernoulli_identity(2, i, n) for n in range(1, 9) for i in range(1, n + 1))


def test_alt_binom_examples():
    assert ids.check_alt_binom(1, 1, 2)
    assert ids.check_alt_binom(2, 1, 2)
    assert all(ids.check_alt_binom(i, k, n)
               for n in range(2, 11) for i in range(1, n + 1) for k in range(1, n))


def test_surjection_counts():
    assert ids.count_z2_surjections(Z(1, 0), Z(1, 0)) == 1
    assert ids.count_z2_surjections_brute(Z(1, 0), Z(1, 0)) == 1
    assert ids.count_z2_surjections(Z(1, 0), Z(0, 2)) == 0
    assert ids.count_z2_surjections_brute(Z(1, 0), Z(0, 2)) == 0
    for r in range(4):
        for r2 in range(3):
            assert ids.count_z2_surjections(Z(r, 1), Z(r2, 0)) == 0
    assert Z(3, 2).cardinality == 8


def test_plain_surjections_match_stirling():
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert ids.count_surjections_brute(n, k) == ids.stirling2(n, k)


def test_chain_examples():
    assert ids.chain_sum_z2(1, 0) == -1
    assert ids.chain_sum_z2(0, 2) == 0
    assert ids.chain_sum_fin(3) == 2
    assert ids.chain_sum_z2(0, 1) == 1


def test_double_factorial():
    assert [ids.double_factorial(n) for n in range(-1, 8)] == [1, 1, 1, 2, 3, 8, 15, 48, 105]
    for r in range(8):
        assert ids.double_factorial(2 * r - 1) == factorial(2 * r) // (2 ** r * factorial(r))


def test_double_factorial_identity_vanishes():
    assert all(ids.double_factorial_identity(r) == 0 for r in range(1, 11))
    assert ids.double_factorial_identity(0) == 1


def test_invalid_arguments():
    with pytest.raises(ValueError):
        ids.check_bernoulli_identity(1, 0, 3)
    with pytest.raises(ValueError):
        ids.chain_sum_z2(0, 0)
    with pytest.raises(ValueError):
        Z(-1, 0)


def test_suites():
    from sdquiver.verify import run_suite
    for name in ("bernoulli", "chains"):
        result = run_suite(name)
        assert result.ok, result.lines()
