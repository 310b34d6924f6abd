"""Combinatorial identities behind the self-dual wall-crossing coefficients.

Two families are checked here.  The first is a set of polynomial identities
mixing binomial coefficients with Bernoulli polynomials.  The second counts
chains of surjections of finite sets, with and without an involution, where
the alternating sums produce the factorial and double-factorial weights.
Each closed form is paired with a brute-force count.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .ratfun import Polynomial

__all__ = [
    "bernoulli_numbers",
    "BernoulliPolynomial",
    "bernoulli_poly",
    "bernoulli_identity_sides",
    "check_bernoulli_identity",
    "check_alt_binom",
    "stirling2",
    "double_factorial",
    "Z2FinObject",
    "count_z2_surjections",
    "count_z2_surjections_brute",
    "count_surjections_brute",
    "chain_sum_z2",
    "chain_sum_z2_closed",
    "chain_sum_fin",
    "chain_sum_fin_closed",
    "double_factorial_identity",
]


# ---------------------------------------------------------------------------
# Bernoulli polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0, ..., B_n with the convention B_1 = -1/2."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        out.append(-sum(comb(m + 1, k) * out[k] for k in range(m)) / (m + 1))
    return tuple(out)


@dataclass(frozen=True)
class BernoulliPolynomial:
    k: int
    coeffs: Polynomial

    def __call__(self, x: Fraction | int) -> Fraction:
        return self.coeffs(x)


@lru_cache(maxsize=None)
def bernoulli_poly(k: int) -> BernoulliPolynomial:
    """B_k(x) = sum_j C(k, j) B_j x^{k-j}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    b = bernoulli_numbers(k)
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        coeffs[k - j] = comb(k, j) * b[j]
    return BernoulliPolynomial(k, Polynomial(coeffs))


def _B(k: int) -> Polynomial:
    return bernoulli_poly(k).coeffs


def _target(i: int, n: int) -> Polynomial:
    """C(n-1, i-1) x^{i-1} (1-x)^{n-i}."""
    x = Polynomial.x()
    return (x ** (i - 1)) * ((1 - x) ** (n - i)) * comb(n - 1, i - 1)


def _halved_difference(k: int) -> Polynomial:
    """B_k(x/2) - B_k((x+1)/2)."""
    half = Fraction(1, 2)
    return _B(k).compose_affine(half, 0) - _B(k).compose_affine(half, half)


def bernoulli_identity_sides(which: int, i: int, n: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of identity ``which`` (1, 2 or 3) as polynomials in x."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    fn1 = factorial(n - 1)
    half = Fraction(1, 2)
    lhs = Polynomial()
    if which == 1:
        for p in range(i):
            for q in range(n - i + 1):
                c = Fraction((-1) ** q * fn1, factorial(n - p - q) * factorial(p) * factorial(q))
                lhs = lhs + _B(p + q) * c
        return lhs, _target(i, n)
    if which not in (2, 3):
        raise ValueError("identity index must be 1, 2 or 3")
    for p in range(i):
        for q in range(n - i + 1):
            sign = (-1) ** q if which == 2 else (-1) ** p
            c = Fraction(sign * 2 ** (p + q) * fn1, 2 * factorial(n - p - q) * factorial(p) * factorial(q))
            lhs = lhs + _B(p + q).compose_affine(half, 0) * c
    for k in range(n - i + 1, n + 1):
        sign = (-1) ** (n - i + 1) if which == 2 else (-1) ** (i + k - n - 1)
        c = Fraction(sign * 2 ** (k - 1) * fn1,
                     k * factorial(n - k) * factorial(n - i) * factorial(i + k - n - 1))
        lhs = lhs + _halved_difference(k) * c
    return lhs, (_target(i, n) if which == 2 else Polynomial())


def check_bernoulli_identity(which: int, i: int, n: int) -> bool:
    lhs, rhs = bernoulli_identity_sides(which, i, n)
    return lhs == rhs


def check_alt_binom(i: int, k: int, n: int) -> bool:
    """Alternating sum of C(k, q) over 0 <= q <= n-i with 0 <= k-q <= i-1."""
    if not (1 <= i <= n and 1 <= k <= n - 1):
        raise ValueError("need 1 <= i <= n and 1 <= k <= n-1")
    lhs = sum((-1) ** q * comb(k, q) for q in range(n - i + 1) if 0 <= k - q <= i - 1)
    rhs = (-1) ** (i + k - 1) * comb(k - 1, i - 1) + (-1) ** (n - i) * comb(k - 1, n - i)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Finite sets with and without an involution
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks."""
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    value = 1
    while n > 1:
        value *= n
        n -= 2
    return value


@dataclass(frozen=True, order=True)
class Z2FinObject:
    """A set with r swapped pairs and s fixed points."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0:
            raise ValueError("counts must be nonnegative")

    @property
    def cardinality(self) -> int:
        return 2 * self.r + self.s


def count_z2_surjections(src: Z2FinObject, dst: Z2FinObject) -> int:
    """Equivariant surjections src -> dst up to automorphisms of dst.

    For at most one fixed target point this is the standard closed form.  In
    general k source pairs collapse onto fixed points, which together with
    the source fixed points cover the s' target fixed points; the other pairs
    cover the r' target pairs, each pair after the first in a block allowing
    two orientations.
    """
    r, s, r2, s2 = src.r, src.s, dst.r, dst.s
    if s2 == 0:
        return stirling2(r, r2) * 2 ** (r - r2) if s == 0 and r >= r2 else 0
    if s2 == 1:
        return sum(comb(r, k) * stirling2(r - k, r2) * 2 ** (r - r2 - k)
                   for k in range(max(0, 1 - s), r - r2 + 1))
    return sum(comb(r, k) * stirling2(k + s, s2) * stirling2(r - k, r2) * 2 ** (r - k - r2)
               for k in range(0, r - r2 + 1))


def _count_covering_maps(choices: list[list[int]], full: int) -> int:
    """Number of ways to pick one image mask per source element so that the
    union is ``full``.  Exact count over all maps, grouped by image set."""
    counts = {0: 1}
    for options in choices:
        nxt: dict[int, int] = {}
        for mask, c in counts.items():
            for bits in options:
                m = mask | bits
                nxt[m] = nxt.get(m, 0) + c
        counts = nxt
    return counts.get(full, 0)


@lru_cache(maxsize=None)
def count_z2_surjections_brute(src: Z2FinObject, dst: Z2FinObject) -> int:
    """Count every equivariant map with full image, then divide by the
    automorphism group of the target, which acts freely on surjections.

    A map is fixed by where one element of each source pair goes (any target
    element, its partner following) and where each source fixed point goes
    (a target fixed point)."""
    pair_masks = [3 << (2 * p) for p in range(dst.r) for _ in (0, 1)]
    fixed_masks = [1 << (2 * dst.r + j) for j in range(dst.s)]
    choices = [pair_masks + fixed_masks] * src.r + [fixed_masks] * src.s
    hits = _count_covering_maps(choices, (1 << dst.cardinality) - 1)
    aut = 2 ** dst.r * factorial(dst.r) * factorial(dst.s)
    if hits % aut:
        raise ArithmeticError("automorphisms do not act freely")
    return hits // aut


@lru_cache(maxsize=None)
def count_surjections_brute(n: int, k: int) -> int:
    """Surjections of an n-set onto a k-set, up to permuting the target."""
    hits = _count_covering_maps([[1 << j for j in range(k)]] * n, (1 << k) - 1)
    return hits // factorial(k)


@lru_cache(maxsize=None)
def chain_sum_z2(r: int, s: int) -> int:
    """Signed count of chains of non-bijective equivariant surjections out of
    (r, s) that end on a set with trivial action.  Surjection counts come from
    exhaustive enumeration."""
    if r + s < 1:
        raise ValueError("need a nonempty set")
    src = Z2FinObject(r, s)
    total = 1 if r == 0 else 0
    for r2 in range(r + 1):
        for s2 in range(r + s + 1):
            if (r2, s2) == (r, s) or 2 * r2 + s2 == 0:
                continue
            n = count_z2_surjections_brute(src, Z2FinObject(r2, s2))
            if n:
                total -= n * chain_sum_z2(r2, s2)
    return total


def chain_sum_z2_closed(r: int, s: int) -> int:
    return (-1) ** r * double_factorial(2 * r - 1) if s <= 1 else 0


@lru_cache(maxsize=None)
def chain_sum_fin(cardinality: int) -> int:
    """Signed count of chains of non-bijective surjections from an n-set down to a point."""
    if cardinality < 1:
        raise ValueError("need a nonempty set")
    total = 1 if cardinality == 1 else 0
    for k in range(1, cardinality):
        total -= count_surjections_brute(cardinality, k) * chain_sum_fin(k)
    return total


def chain_sum_fin_closed(cardinality: int) -> int:
    return (-1) ** (cardinality - 1) * factorial(cardinality - 1)


def double_factorial_identity(r: int) -> int:
    """The sum that must vanish for every r >= 1:
    sum_{r'} (-1)^{r'} (2r'-1)!! sum_k C(r, k) S(r-k, r') 2^{r-r'-k}."""
    return sum(
        (-1) ** r2 * double_factorial(2 * r2 - 1)
        * sum(comb(r, k) * stirling2(r - k, r2) * 2 ** (r - r2 - k) for k in range(r - r2 + 1))
        for r2 in range(r + 1)
    )
