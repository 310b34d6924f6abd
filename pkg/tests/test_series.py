from __future__ import annotations

from fractions import Fraction

import pytest

from sdquiver.quiver import builtin_quiver
from sdquiver.ratfun import RationalFunction
from sdquiver.series import (
    CONJECTURE_STABILITY, Series, atilde1_case, atilde1_conjecture, binomial_series,
    point_conjecture, series_report,
)
from sdquiver.wallcross import binomial

VARIANTS = ("atilde1:+,++", "atilde1:+,+-", "atilde1:+,--")


def test_series_product_truncates():
    a = binomial_series(1, 1, 1, 4)
    b = binomial_series(-1, 1, 1, 4)
    assert [c.constant_value() for c in (a * b).coeffs] == [1, 0, -1, 0, 0]
    assert (Series.one(3) * a).coeffs == a.coeffs[:4]


def test_binomial_series_square_root():
    s = binomial_series(1, 1, Fraction(1, 2), 6)
    assert s * s == binomial_series(1, 1, 1, 6)


def test_cases():
    assert [atilde1_case(builtin_quiver(n)) for n in VARIANTS] == [1, 2, 3]
    with pytest.raises(ValueError):
        atilde1_case(builtin_quiver("point:+"))


def test_constant_terms():
    for name in VARIANTS:
        q = builtin_quiver(name)
        for kind in ("Jsd", "chiJsd", "DTsd"):
            assert atilde1_conjecture(q, kind, 3)[0] == 1


def test_case3_dt_series():
    q = builtin_quiver("atilde1:+,--")
    dt = atilde1_conjecture(q, "DTsd", 4)
    assert dt[0] == 1 and dt[1] == 0 and dt[2] == Fraction(-1, 2)
    rows = series_report(q, 1, CONJECTURE_STABILITY, kinds=("DTsd",))
    assert [r.computed for r in rows] == [RationalFunction(1), RationalFunction(0)]


def test_point_conjecture_coefficients():
    for n in range(6):
        assert point_conjecture("chiJsd", 0, 5)[n] == binomial(Fraction(1, 4), n)
        assert point_conjecture("chiJsd", 1, 5)[n] == binomial(Fraction(-1, 4), n)
        assert point_conjecture("DTsd", 0, 5)[n] == binomial(Fraction(1, 4), n) * (-1) ** n
    with pytest.raises(ValueError):
        point_conjecture("Jsd", 0, 3)


@pytest.mark.parametrize("name", ["point:+", "point:-"])
def test_point_reports_match(name):
    rows = series_report(builtin_quiver(name), 10)
    assert rows and all(r.matches for r in rows)


@pytest.mark.parametrize("name", VARIANTS)
def test_atilde1_low_order(name):
    rows = series_report(builtin_quiver(name), 4, CONJECTURE_STABILITY)
    assert all(r.matches for r in rows), [r for r in rows if not r.matches]
    assert [r.exponent for r in rows[:3]] == [0, Fraction(1, 2), 1]
