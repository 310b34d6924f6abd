from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from sdquiver.quiver import (
    QuiverError, atilde1_quiver, bar_add, builtin_quiver, dual_class,
    enumerate_ordered_decompositions, enumerate_sd_decompositions, is_self_dual_class,
    load_quiver, loop_quiver, point_quiver, self_dual_classes, validate,
)


def test_point_quiver_classification():
    q = point_quiver(1)
    assert q.classification.Q0_plus == (0,)
    assert point_quiver(-1).classification.Q0_minus == (0,)


def test_atilde1_is_valid():
    q = atilde1_quiver(1, 1, 1)
    c = q.classification
    assert c.Q0_tri == (0,) and c.Q0_tri_dual == (1,)
    assert c.Q1_plus == (0, 1)


def test_one_loop_with_negative_sign():
    q = loop_quiver(1, [-1])
    assert q.classification.Q1_minus == (0,)
    assert str(q) == "1^+_{-}"


def test_violations_name_the_offender():
    raw = {"vertices": [{"id": "x", "dual": "y", "sign": 1}, {"id": "y", "dual": "x", "sign": -1}],
           "arrows": [{"id": "a", "src": "x", "tgt": "y", "dual": "a", "sign": 1}]}
    with pytest.raises(QuiverError) as err:
        validate(raw)
    text = " ".join(err.value.violations)
    assert "vertex x" in text and "arrow a" in text


def test_broken_sign_rule_is_reported():
    raw = {"vertices": [{"id": "p", "dual": "p", "sign": 1}],
           "arrows": [{"id": "a", "src": "p", "tgt": "p", "dual": "b", "sign": 1},
                      {"id": "b", "src": "p", "tgt": "p", "dual": "a", "sign": -1}]}
    with pytest.raises(QuiverError) as err:
        validate(raw)
    assert any("arrow a" in v for v in err.value.violations)


def test_involution_must_reverse_arrows():
    raw = {"vertices": [{"id": "1", "dual": "2", "sign": 1}, {"id": "2", "dual": "1", "sign": 1}],
           "arrows": [{"id": "a", "src": "1", "tgt": "1", "dual": "a", "sign": 1}]}
    with pytest.raises(QuiverError):
        validate(raw)


def test_builtin_syntax():
    assert builtin_quiver("loop:2:+:+-") == builtin_quiver("2^+_{+-}")
    assert str(builtin_quiver("atilde1:+,+-")) == "Atilde1^{+,+-}"
    assert builtin_quiver("a2:+,-").classification.Q1_minus == (0,)
    for bad in ("loop:2:+:+", "atilde1:+", "nope", "point:x"):
        with pytest.raises(ValueError):
            builtin_quiver(bad)


def test_json_round_trip(tmp_path):
    q = builtin_quiver("atilde1:-,+-")
    assert validate(json.dumps(q.to_json())) == q
    path = tmp_path / "q.json"
    path.write_text(json.dumps(q.to_json()))
    assert load_quiver(str(path)) == q


def test_dual_and_bar_add():
    p, a = point_quiver(1), atilde1_quiver()
    assert dual_class(p, (3,)) == (3,)
    assert dual_class(a, (2, 1)) == (1, 2)
    assert bar_add(p, (1,), (0,)) == (2,)
    assert bar_add(a, (1, 0), (1, 1)) == (2, 2)


@given(st.tuples(st.integers(0, 5), st.integers(0, 5)), st.integers(0, 4))
def test_bar_add_ignores_duality(alpha, t):
    a = atilde1_quiver()
    assert dual_class(a, dual_class(a, alpha)) == alpha
    assert bar_add(a, alpha, (t, t)) == bar_add(a, dual_class(a, alpha), (t, t))


def test_ordered_decompositions():
    assert set(enumerate_ordered_decompositions((2,))) == {((2,),), ((1,), (1,))}
    assert len(list(enumerate_ordered_decompositions((3,)))) == 4
    assert list(enumerate_ordered_decompositions((0, 1, 0))) == [((0, 1, 0),)]


def _brute_compositions(alpha):
    """Every ordered tuple of nonzero vectors summing to alpha, by recursion on the first part."""
    if not any(alpha):
        return [()]
    out = []
    import itertools
    for beta in itertools.product(*(range(a + 1) for a in alpha)):
        if any(beta):
            rest = tuple(a - b for a, b in zip(alpha, beta))
            out += [(beta,) + t for t in _brute_compositions(rest)]
    return out


@settings(max_examples=30, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 2)).filter(any))
def test_ordered_decompositions_match_brute_force(alpha):
    got = list(enumerate_ordered_decompositions(alpha))
    assert len(got) == len(set(got))
    assert set(got) == set(_brute_compositions(alpha))


def test_pruning_removes_prefixes():
    got = list(enumerate_ordered_decompositions((3,), lambda parts: parts[0] != (1,)))
    assert got == [((3,),), ((2,), (1,))]


def test_sd_decompositions():
    p = point_quiver(1)
    assert set(enumerate_sd_decompositions(p, (2,))) == {((), (2,)), (((1,),), (0,))}
    assert list(enumerate_sd_decompositions(p, (1,))) == [((), (1,))]
    assert list(enumerate_sd_decompositions(point_quiver(-1), (1,))) == []
    assert not is_self_dual_class(point_quiver(-1), (1,))


def test_self_dual_classes_of_atilde1():
    assert self_dual_classes(atilde1_quiver(), 4) == [(0, 0), (1, 1), (2, 2)]


def test_permuted_redeclaration_is_a_new_order():
    q = builtin_quiver("atilde1:+,+-")
    r = q.permuted([1, 0], [1, 0])
    assert r.vertex_ids == ("2", "1")
    assert r.classification.Q0_tri == (0,)
