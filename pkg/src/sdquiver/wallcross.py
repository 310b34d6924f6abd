"""Combinatorial wall-crossing coefficients S, S^sd, U and U^sd.

Each coefficient takes an ordered tuple of nonzero classes and two stability
functions ``tau`` (the starting one) and ``tau_tilde`` (the target).  The
values depend only on slope comparisons of interval sums, so they are well
defined for any pair of stability functions; in the self-dual variants the
slopes are compared against zero as well.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator, Sequence

from .quiver import DimVector
from .stability import Stability

__all__ = [
    "binomial",
    "compositions",
    "coeff_S",
    "coeff_S_sd",
    "coeff_U",
    "coeff_U_sd",
]

Parts = tuple[DimVector, ...]


def binomial(x: Fraction | int, k: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-k+1)/k!."""
    if k < 0:
        return Fraction(0)
    value = Fraction(1)
    x = Fraction(x)
    for j in range(k):
        value *= (x - j)
    return value / factorial(k)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Block lengths of every way to cut 1..n into consecutive nonempty blocks."""
    if n == 0:
        yield ()
        return
    for m in range(1, n + 1):
        for cuts in combinations(range(1, n), m - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(m))


def _add(vectors: Sequence[DimVector]) -> DimVector:
    return tuple(map(sum, zip(*vectors)))


def _blocks(parts: Parts, lengths: Sequence[int]) -> list[Parts]:
    out, pos = [], 0
    for k in lengths:
        out.append(parts[pos:pos + k])
        pos += k
    return out


def _s_factor(tau_ab: int, tilde_ps: int) -> int:
    """Shared rule: tau_ab = sign of tau(a_i) - tau(a_{i+1}), tilde_ps = sign of
    tau_tilde(prefix) - tau_tilde(suffix)."""
    if tau_ab > 0 and tilde_ps <= 0:
        return 1
    if tau_ab <= 0 and tilde_ps > 0:
        return -1
    return 0


@lru_cache(maxsize=None)
def coeff_S(parts: Parts, tau: Stability, tau_tilde: Stability) -> int:
    parts = tuple(parts)
    if not parts:
        raise ValueError("S needs at least one class")
    total = _add(parts)
    prefix = (0,) * len(total)
    value = 1
    for i in range(len(parts) - 1):
        prefix = tuple(x + y for x, y in zip(prefix, parts[i]))
        suffix = tuple(x - y for x, y in zip(total, prefix))
        value *= _s_factor(tau.compare(parts[i], parts[i + 1]), tau_tilde.compare(prefix, suffix))
        if not value:
            return 0
    return value


@lru_cache(maxsize=None)
def coeff_S_sd(parts: Parts, tau: Stability, tau_tilde: Stability) -> int:
    """Self-dual S: the last class is compared with a phantom class of slope zero."""
    parts = tuple(parts)
    n = len(parts)
    if n == 0:
        return 1
    prefix = (0,) * len(parts[0])
    value = 1
    for i in range(n):
        prefix = tuple(x + y for x, y in zip(prefix, parts[i]))
        tau_ab = tau.compare(parts[i], parts[i + 1]) if i + 1 < n else tau.sign(parts[i])
        value *= _s_factor(tau_ab, tau_tilde.sign(prefix))
        if not value:
            return 0
    return value


def _same_slope_runs(parts: Parts, tau: Stability, lengths: Sequence[int]) -> bool:
    pos = 0
    for k in lengths:
        first = parts[pos]
        if any(tau.compare(first, parts[j]) for j in range(pos + 1, pos + k)):
            return False
        pos += k
    return True


def _inverse_factorials(lengths: Sequence[int]) -> Fraction:
    den = 1
    for k in lengths:
        den *= factorial(k)
    return Fraction(1, den)


@lru_cache(maxsize=None)
def coeff_U(parts: Parts, tau: Stability, tau_tilde: Stability) -> Fraction:
    parts = tuple(parts)
    n = len(parts)
    if n == 0:
        raise ValueError("U needs at least one class")
    total = _add(parts)
    value = Fraction(0)
    for a_lengths in compositions(n):
        if not _same_slope_runs(parts, tau, a_lengths):
            continue
        betas = tuple(_add(block) for block in _blocks(parts, a_lengths))
        weight_a = _inverse_factorials(a_lengths)
        for b_lengths in compositions(len(betas)):
            groups = _blocks(betas, b_lengths)
            if any(tau_tilde.compare(_add(g), total) for g in groups):
                continue
            l = len(groups)
            term = Fraction((-1) ** (l - 1), l)
            for g in groups:
                term *= coeff_S(g, tau, tau_tilde)
                if not term:
                    break
            value += term * weight_a
    return value


_MINUS_HALF = Fraction(-1, 2)


@lru_cache(maxsize=None)
def coeff_U_sd(parts: Parts, tau: Stability, tau_tilde: Stability) -> Fraction:
    """Self-dual U.  A trailing run of slope-zero classes may stay ungrouped;
    it contributes 1/(2^k k!)."""
    parts = tuple(parts)
    n = len(parts)
    value = Fraction(0)
    for head in range(n + 1):
        tail = n - head
        if any(tau.sign(parts[j]) for j in range(head, n)):
            continue
        tail_weight = Fraction(1, 2 ** tail * factorial(tail))
        head_parts = parts[:head]
        for a_lengths in compositions(head):
            if not _same_slope_runs(head_parts, tau, a_lengths):
                continue
            betas = tuple(_add(block) for block in _blocks(head_parts, a_lengths))
            weight_a = _inverse_factorials(a_lengths) * tail_weight
            m = len(betas)
            for grouped in range(m + 1):
                rest = betas[grouped:]
                s_rest = coeff_S_sd(rest, tau, tau_tilde)
                if not s_rest:
                    continue
                for b_lengths in compositions(grouped):
                    groups = _blocks(betas[:grouped], b_lengths)
                    if any(tau_tilde.sign(_add(g)) for g in groups):
                        continue
                    term = binomial(_MINUS_HALF, len(groups)) * s_rest
                    for g in groups:
                        term *= coeff_S(g, tau, tau_tilde)
                        if not term:
                            break
                    value += term * weight_a
    return value
