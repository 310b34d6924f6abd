from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import factorial

from sdquiver.quiver import builtin_quiver
from sdquiver.stability import Stability, trivial_stability
from sdquiver.verify import random_sd_stability, small_quivers
from sdquiver.wallcross import binomial, coeff_S, coeff_S_sd, coeff_U, coeff_U_sd, compositions

A1 = builtin_quiver("atilde1:+,++")
TRIV = trivial_stability(A1)
TAU = Stability.of([1, -1])


def test_S_examples():
    assert coeff_S(((1, 0),), TRIV, TAU) == 1
    assert coeff_S(((1, 0), (0, 1)), TRIV, TAU) == -1
    assert coeff_S(((0, 1), (1, 0)), TRIV, TAU) == 0


def test_S_sd_examples():
    assert coeff_S_sd((), TRIV, TAU) == 1
    assert coeff_S_sd(((1, 0),), TRIV, TAU) == -1
    assert coeff_S_sd(((1, 0),), TAU, TRIV) == 1


def test_U_examples():
    assert coeff_U(((2, 1),), TAU, TAU) == 1
    assert coeff_U(((1, 0), (0, 1)), TRIV, TAU) == Fraction(-1, 2)
    assert coeff_U(((0, 1), (1, 0)), TRIV, TAU) == Fraction(1, 2)


def test_U_sd_examples():
    assert coeff_U_sd((), TRIV, TAU) == 1
    assert coeff_U_sd(((1, 0),), TRIV, TAU) == Fraction(-1, 2)
    assert coeff_U_sd(((1, 1),), TAU, TAU) == 0


def test_binomial_minus_half():
    assert binomial(Fraction(-1, 2), 1) == Fraction(-1, 2)
    assert binomial(Fraction(-1, 2), 2) == Fraction(3, 8)
    assert binomial(5, 7) == 0


def test_compositions_count():
    assert [len(list(compositions(n))) for n in range(6)] == [1, 1, 2, 4, 8, 16]


# Independent chain enumeration straight from the definitions: chains are
# strictly increasing index sets, blocks are read off the cut points.

def _chains(n, closed):
    """0 = c_0 < ... < c_m with c_m = n (closed) or c_m <= n."""
    out = []
    for m in range(0, n + 1):
        for cuts in combinations(range(1, n + 1), m):
            if closed and (not cuts or cuts[-1] != n):
                continue
            out.append((0,) + cuts)
    return out


def _add(vs):
    return tuple(map(sum, zip(*vs))) if vs else None


def _slope_eq(tau, a, b):
    return tau.compare(a, b) == 0


def u_oracle(x, tau, tilde):
    n, total, value = len(x), _add(x), Fraction(0)
    for a in _chains(n, closed=True):
        m = len(a) - 1
        if any(not _slope_eq(tau, x[j], x[a[i - 1]]) for i in range(1, m + 1) for j in range(a[i - 1], a[i])):
            continue
        beta = [_add(x[a[i - 1]:a[i]]) for i in range(1, m + 1)]
        fact = Fraction(1)
        for i in range(1, m + 1):
            fact /= factorial(a[i] - a[i - 1])
        for b in _chains(m, closed=True):
            l = len(b) - 1
            gammas = [_add(beta[b[i - 1]:b[i]]) for i in range(1, l + 1)]
            if any(tilde.compare(g, total) for g in gammas):
                continue
            term = Fraction((-1) ** (l - 1), l) * fact
            for i in range(1, l + 1):
                term *= coeff_S(tuple(beta[b[i - 1]:b[i]]), tau, tilde)
            value += term
    return value


def usd_oracle(x, tau, tilde):
    n, value = len(x), Fraction(0)
    for a in _chains(n, closed=False):
        m, am = len(a) - 1, a[-1]
        if any(tau.sign(x[j]) for j in range(am, n)):
            continue
        if any(not _slope_eq(tau, x[j], x[a[i - 1]]) for i in range(1, m + 1) for j in range(a[i - 1], a[i])):
            continue
        beta = [_add(x[a[i - 1]:a[i]]) for i in range(1, m + 1)]
        fact = Fraction(1, 2 ** (n - am) * factorial(n - am))
        for i in range(1, m + 1):
            fact /= factorial(a[i] - a[i - 1])
        for b in _chains(m, closed=False):
            l, bl = len(b) - 1, b[-1]
            gammas = [_add(beta[b[i - 1]:b[i]]) for i in range(1, l + 1)]
            if any(tilde.sign(g) for g in gammas):
                continue
            term = binomial(Fraction(-1, 2), l) * fact * coeff_S_sd(tuple(beta[bl:]), tau, tilde)
            for i in range(1, l + 1):
                term *= coeff_S(tuple(beta[b[i - 1]:b[i]]), tau, tilde)
            value += term
    return value


def test_U_and_U_sd_against_chain_oracle():
    rng = random.Random(11)
    pool = small_quivers()
    for _ in range(150):
        q = rng.choice(pool)
        tau, tilde = random_sd_stability(q, rng), random_sd_stability(q, rng)
        if rng.random() < 0.3:
            tau = trivial_stability(q)
        x = tuple(tuple(rng.randint(0, 2) for _ in range(q.n_vertices)) for _ in range(rng.randint(1, 4)))
        x = tuple(v if any(v) else (1,) + (0,) * (q.n_vertices - 1) for v in x)
        assert coeff_U(x, tau, tilde) == u_oracle(x, tau, tilde)
        assert coeff_U_sd(x, tau, tilde) == usd_oracle(x, tau, tilde)


def test_equal_slope_pair_collapses():
    # both classes share every slope, so the identity law forces zero
    x = ((1, 0), (2, 0))
    assert coeff_U(x, TAU, TAU) == 0
    assert coeff_U(x, TRIV, TAU) == u_oracle(x, TRIV, TAU)
