"""Randomized and exhaustive verification suites.

Each suite returns a :class:`SuiteResult` counting the checks it ran and
recording every failure with enough data to reproduce it.  Randomness comes
from a ``random.Random`` seeded by the caller, so output is deterministic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import identities as ids
from .euler import multi_chi, multi_chi_sd
from .invariants import (
    I, Isd, J, Jsd, I_from_J, Isd_from_Jsd,
    wallcross_I, wallcross_Isd, wallcross_J, wallcross_Jsd,
)
from .lambda_ import (
    LambdaElement, LambdaSdElement, basis, basis_sd, bracket, diamond, heart, involution, star,
)
from .quiver import (
    DimVector, SelfDualQuiver, bar_add, builtin_quiver, dim_vectors, dual_class,
    self_dual_classes, validate,
)
from .ratfun import RationalFunction, lefschetz_power, parse
from .stability import Stability, trivial_stability
from .wallcross import coeff_S, coeff_S_sd, coeff_U, coeff_U_sd, compositions

__all__ = [
    "Failure",
    "SuiteResult",
    "SUITES",
    "run_suite",
    "small_quivers",
    "random_sd_stability",
    "composition_rhs",
    "composition_rhs_sd",
]


@dataclass(frozen=True)
class Failure:
    check: str
    data: str


@dataclass
class SuiteResult:
    name: str
    seed: int | None
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    def record(self, ok: bool, check: str, data: Callable[[], str] | str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(Failure(check, data() if callable(data) else data))

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        head = f"suite {self.name}"
        if self.seed is not None:
            head += f" seed={self.seed}"
        out = [f"{head}: {self.checks - len(self.failures)}/{self.checks} checks passed"]
        out += [f"  FAIL {f.check}: {f.data}" for f in self.failures]
        return out


# ---------------------------------------------------------------------------
# Random inputs
# ---------------------------------------------------------------------------


def _three_vertex(u_pair: int, u_mid: int, v: int) -> SelfDualQuiver:
    """Swapped pair 1, 3 around a fixed vertex 2, with arrows 1 -> 2 -> 3."""
    return validate({
        "vertices": [{"id": "1", "dual": "3", "sign": u_pair},
                     {"id": "2", "dual": "2", "sign": u_mid},
                     {"id": "3", "dual": "1", "sign": u_pair}],
        "arrows": [{"id": "a", "src": "1", "tgt": "2", "dual": "b", "sign": v},
                   {"id": "b", "src": "2", "tgt": "3", "dual": "a", "sign": v * u_pair * u_mid}],
    }, name="1<->3 via 2")


def small_quivers() -> list[SelfDualQuiver]:
    """Self-dual quivers with at most three vertices used by the random suites."""
    names = ["point:+", "point:-", "loop:1:+:-", "loop:2:-:+-", "atilde1:+,++", "atilde1:+,+-",
             "atilde1:-,+-", "a2:+,+", "a2:+,-"]
    return [builtin_quiver(n) for n in names] + [_three_vertex(1, 1, 1), _three_vertex(1, -1, 1)]


def _random_weight(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def random_sd_stability(q: SelfDualQuiver, rng: random.Random) -> Stability:
    weights = [Fraction(0)] * q.n_vertices
    for i, j in enumerate(q.sigma0):
        if i < j:
            w = _random_weight(rng)
            weights[i], weights[j] = w, -w
    return Stability(tuple(weights))


def _random_class(q: SelfDualQuiver, rng: random.Random, top: int = 2) -> DimVector:
    while True:
        alpha = tuple(rng.randint(0, top) for _ in range(q.n_vertices))
        if any(alpha):
            return alpha


def _random_tuple(q: SelfDualQuiver, rng: random.Random, lo: int, hi: int) -> tuple[DimVector, ...]:
    return tuple(_random_class(q, rng) for _ in range(rng.randint(lo, hi)))


# ---------------------------------------------------------------------------
# Composition laws for the coefficients
# ---------------------------------------------------------------------------


def _blocks(x: Sequence[DimVector], lengths: Sequence[int]) -> list[tuple[DimVector, ...]]:
    out, pos = [], 0
    for k in lengths:
        out.append(tuple(x[pos:pos + k]))
        pos += k
    return out


def _sum(vectors: Sequence[DimVector]) -> DimVector:
    return tuple(map(sum, zip(*vectors)))


def composition_rhs(coeff, x, tau, tau_hat, tau_tilde):
    """Sum over merges y of x of coeff(y; hat, tilde) * prod coeff(block; tau, hat)."""
    total = 0
    for lengths in compositions(len(x)):
        blocks = _blocks(x, lengths)
        term = coeff(tuple(_sum(b) for b in blocks), tau_hat, tau_tilde)
        for b in blocks:
            if not term:
                break
            term *= coeff(b, tau, tau_hat)
        total += term
    return total


def composition_rhs_sd(coeff_sd, coeff, x, tau, tau_hat, tau_tilde):
    """Self-dual version: merges of a prefix of x, the rest handled by coeff_sd."""
    total = 0
    n = len(x)
    for head in range(n + 1):
        tail = coeff_sd(tuple(x[head:]), tau, tau_hat)
        if not tail:
            continue
        for lengths in compositions(head):
            blocks = _blocks(x[:head], lengths)
            term = coeff_sd(tuple(_sum(b) for b in blocks), tau_hat, tau_tilde) * tail
            for b in blocks:
                if not term:
                    break
                term *= coeff(b, tau, tau_hat)
            total += term
    return total


def suite_wallcross(seed: int, cases: int) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("wallcross", seed)
    pool = small_quivers()
    for case in range(cases):
        q = rng.choice(pool)
        tau, hat, tilde = (random_sd_stability(q, rng) for _ in range(3))
        x = _random_tuple(q, rng, 1, 5)
        where = lambda: f"case={case} quiver={q} x={list(x)} tau={tau} hat={hat} tilde={tilde}"
        for name, c, csd in (("S", coeff_S, coeff_S_sd), ("U", coeff_U, coeff_U_sd)):
            res.record(c(x, tau, tilde) == composition_rhs(c, x, tau, hat, tilde),
                       f"{name} composition", where)
            res.record(csd(x, tau, tilde) == composition_rhs_sd(csd, c, x, tau, hat, tilde),
                       f"{name}sd composition", where)
            res.record(c(x, tau, tau) == (1 if len(x) == 1 else 0), f"{name} identity law", where)
            res.record(csd(x, tau, tau) == 0 and csd((), tau, tilde) == 1,
                       f"{name}sd identity law", where)
        rho = rng.choice([None] + self_dual_classes(q, 4)[1:])
        full = x + ((rho,) if rho else ()) + tuple(dual_class(q, a) for a in reversed(x))
        res.record((coeff_S_sd(x, tau, tilde) != 0) == (coeff_S(full, tau, tilde) != 0),
                   "Ssd vs S support", lambda: where() + f" rho={rho}")
    return res


# ---------------------------------------------------------------------------
# Lambda layer
# ---------------------------------------------------------------------------


def _random_scalar(rng: random.Random) -> RationalFunction:
    return lefschetz_power(rng.randint(-2, 2)) * rng.choice([1, -1, 2, Fraction(1, 2)])


def _random_element(q: SelfDualQuiver, rng: random.Random) -> LambdaElement:
    terms = [(_random_class(q, rng) if rng.random() < 0.9 else (0,) * q.n_vertices,
              _random_scalar(rng)) for _ in range(rng.randint(1, 2))]
    return LambdaElement(q, terms)


def _random_sd_element(q: SelfDualQuiver, rng: random.Random) -> LambdaSdElement:
    classes = self_dual_classes(q, 4)
    return LambdaSdElement(q, [(rng.choice(classes), _random_scalar(rng))
                               for _ in range(rng.randint(1, 2))])


def suite_lambda(seed: int, cases: int) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("lambda", seed)
    pool = small_quivers()
    for case in range(cases):
        q = rng.choice(pool)
        x, y, z = (_random_element(q, rng) for _ in range(3))
        m = _random_sd_element(q, rng)
        where = lambda: f"case={case} quiver={q} x={x} y={y} z={z} m={m}"
        res.record(star(star(x, y), z) == star(x, star(y, z)), "associativity", where)
        res.record(diamond(star(x, y), m) == diamond(x, diamond(y, m)), "module law", where)
        res.record(involution(star(x, y)) == star(involution(y), involution(x)),
                   "involution anti-homomorphism", where)
        lhs = heart(x, heart(y, m)) - heart(y, heart(x, m))
        rhs = heart(bracket(x, y), m) - heart(bracket(involution(x), y), m)
        res.record(lhs == rhs, "twisted Jacobi law", where)

        parts = _random_tuple(q, rng, 1, 5)
        rho = rng.choice(self_dual_classes(q, 4))
        where_p = lambda: f"case={case} quiver={q} parts={list(parts)} rho={rho}"
        prod = basis(q, parts[0])
        for a in parts[1:]:
            prod = star(prod, basis(q, a))
        res.record(prod == basis(q, _sum(parts), lefschetz_power(-multi_chi(q, parts))),
                   "product closed form", where_p)
        acted = basis_sd(q, rho)
        target = rho
        for a in reversed(parts):
            acted = diamond(basis(q, a), acted)
            target = bar_add(q, a, target)
        res.record(acted == basis_sd(q, target, lefschetz_power(-multi_chi_sd(q, parts, rho))),
                   "action closed form", where_p)
    return res


# ---------------------------------------------------------------------------
# Appendix identities
# ---------------------------------------------------------------------------


def suite_bernoulli(seed: int | None = None, cases: int | None = None, max_n: int = 8) -> SuiteResult:
    res = SuiteResult("bernoulli", None)
    for which in (1, 2, 3):
        for n in range(1, max_n + 1):
            for i in range(1, n + 1):
                res.record(ids.check_bernoulli_identity(which, i, n),
                           f"bernoulli identity {which}", f"i={i} n={n}")
    for n in range(2, 11):
        for i in range(1, n + 1):
            for k in range(1, n):
                res.record(ids.check_alt_binom(i, k, n), "alternating binomial", f"i={i} k={k} n={n}")
    return res


def suite_chains(seed: int | None = None, cases: int | None = None) -> SuiteResult:
    res = SuiteResult("chains", None)
    Z = ids.Z2FinObject
    for r in range(5):
        for s in range(9):
            if not 0 < 2 * r + s <= 8:
                continue
            for r2 in range(r + 1):
                for s2 in range(r + s + 1):
                    a, b = Z(r, s), Z(r2, s2)
                    res.record(ids.count_z2_surjections(a, b) == ids.count_z2_surjections_brute(a, b),
                               "surjection count", f"({r},{s}) -> ({r2},{s2})")
    for r in range(5):
        for s in range(4):
            if r + s:
                res.record(ids.chain_sum_z2(r, s) == ids.chain_sum_z2_closed(r, s),
                           "z2 chain sum", f"r={r} s={s}")
    for n in range(1, 7):
        res.record(ids.chain_sum_fin(n) == ids.chain_sum_fin_closed(n), "fin chain sum", f"|J|={n}")
    for r in range(1, 11):
        res.record(ids.double_factorial_identity(r) == 0, "double factorial identity", f"r={r}")
    return res


# ---------------------------------------------------------------------------
# Invariant round trips
# ---------------------------------------------------------------------------


def suite_roundtrip(seed: int, cases: int, max_total: int = 4) -> SuiteResult:
    """Random quivers and stabilities: inversion, wall-crossing from trivial and
    between two random stabilities, and printing then parsing each value."""
    rng = random.Random(seed)
    res = SuiteResult("roundtrip", seed)
    pool = small_quivers()
    for case in range(cases):
        q = rng.choice(pool)
        start = rng.choice([trivial_stability(q), random_sd_stability(q, rng)])
        tilde = random_sd_stability(q, rng)
        alpha = rng.choice(dim_vectors(q, max_total))
        where = f"case={case} quiver={q} tau={start} tilde={tilde}"
        i_val = I(q, alpha, tilde)
        res.record(I_from_J(q, alpha, tilde) == i_val, "I from J", f"{where} alpha={alpha}")
        res.record(wallcross_I(q, alpha, start, tilde) == i_val, "I wall-crossing", f"{where} alpha={alpha}")
        res.record(wallcross_J(q, alpha, start, tilde) == J(q, alpha, tilde),
                   "J wall-crossing", f"{where} alpha={alpha}")
        res.record(parse(str(i_val)) == i_val, "print/parse", f"{where} alpha={alpha}")
        theta = rng.choice(self_dual_classes(q, max_total))
        isd = Isd(q, theta, tilde)
        res.record(Isd_from_Jsd(q, theta, tilde) == isd, "Isd from Jsd", f"{where} theta={theta}")
        res.record(wallcross_Isd(q, theta, start, tilde) == isd,
                   "Isd wall-crossing", f"{where} theta={theta}")
        jsd = Jsd(q, theta, tilde)
        res.record(wallcross_Jsd(q, theta, start, tilde) == jsd,
                   "Jsd wall-crossing", f"{where} theta={theta}")
        res.record(parse(str(jsd)) == jsd, "print/parse", f"{where} theta={theta}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "wallcross": suite_wallcross,
    "bernoulli": suite_bernoulli,
    "chains": suite_chains,
    "lambda": suite_lambda,
    "roundtrip": suite_roundtrip,
}

DEFAULT_CASES = {"wallcross": 200, "lambda": 100, "roundtrip": 40}


def run_suite(name: str, seed: int = 0, cases: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](seed, DEFAULT_CASES.get(name, 0) if cases is None else cases)
