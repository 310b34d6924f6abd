"""Slope stability functions on dimension vectors.

A stability function assigns a rational weight to each vertex; the slope of
a nonzero class is the weighted average.  Comparisons are done on integer
weights by cross-multiplication, so they never touch floating point.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm
from typing import Mapping, Sequence

from .quiver import DimVector, SelfDualQuiver, dim_vectors

__all__ = ["Stability", "trivial_stability", "parse_stability", "dominates",
           "dominance_counterexample"]


@dataclass(frozen=True)
class Stability:
    """Slope function with per-vertex weights in vertex declaration order."""

    weights: tuple[Fraction, ...]
    _scaled: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        weights = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        scale = reduce(lcm, (w.denominator for w in weights), 1)
        object.__setattr__(self, "_scaled", tuple(int(w * scale) for w in weights))

    @classmethod
    def of(cls, weights: Sequence[int | Fraction | str]) -> Stability:
        return cls(tuple(Fraction(w) for w in weights))

    def is_trivial(self) -> bool:
        return len(set(self.weights)) <= 1

    def _pairing(self, alpha: DimVector) -> int:
        return sum(w * a for w, a in zip(self._scaled, alpha))

    def slope(self, alpha: DimVector) -> Fraction:
        """Exact slope of a nonzero class."""
        rank = sum(alpha)
        if rank == 0:
            raise ValueError("slope of the zero class")
        return sum((w * a for w, a in zip(self.weights, alpha)), Fraction(0)) / rank

    def compare(self, alpha: DimVector, beta: DimVector) -> int:
        """Sign of slope(alpha) - slope(beta)."""
        lhs = self._pairing(alpha) * sum(beta)
        rhs = self._pairing(beta) * sum(alpha)
        return (lhs > rhs) - (lhs < rhs)

    def sign(self, alpha: DimVector) -> int:
        """Sign of slope(alpha)."""
        p = self._pairing(alpha)
        return (p > 0) - (p < 0)

    def is_self_dual(self, quiver: SelfDualQuiver) -> bool:
        return all(self.weights[j] == -self.weights[i] for i, j in enumerate(quiver.sigma0))

    def to_json(self, quiver: SelfDualQuiver) -> dict[str, str]:
        return {vid: str(w) for vid, w in zip(quiver.vertex_ids, self.weights)}

    def __str__(self) -> str:
        if all(w == 0 for w in self.weights):
            return "trivial"
        return "(" + ", ".join(str(w) for w in self.weights) + ")"


def trivial_stability(quiver: SelfDualQuiver) -> Stability:
    return Stability((Fraction(0),) * quiver.n_vertices)


def parse_stability(text: str | Mapping[str, str] | None, quiver: SelfDualQuiver) -> Stability:
    """Read ``trivial``, a JSON mapping vertex id -> "p/q", a JSON file path,
    or a comma-separated list of weights in vertex order."""
    if text is None:
        return trivial_stability(quiver)
    if isinstance(text, Mapping):
        data = text
    else:
        raw = text.strip()
        if raw.lower() == "trivial":
            return trivial_stability(quiver)
        if raw.startswith("{"):
            data = json.loads(raw)
        elif "," in raw or _is_number(raw):
            parts = [p.strip() for p in raw.split(",")]
            if len(parts) != quiver.n_vertices:
                raise ValueError(f"expected {quiver.n_vertices} weights, got {len(parts)}")
            return Stability.of(parts)
        else:
            with open(raw, encoding="utf-8") as fh:
                loaded = json.load(fh)
            if loaded == "trivial":
                return trivial_stability(quiver)
            data = loaded
    if not isinstance(data, Mapping):
        raise ValueError("stability must map vertex ids to rationals")
    unknown = set(data) - set(quiver.vertex_ids)
    if unknown:
        raise ValueError(f"stability mentions unknown vertices {sorted(unknown)}")
    missing = [vid for vid in quiver.vertex_ids if vid not in data]
    if missing:
        raise ValueError(f"stability has no weight for vertices {missing}")
    return Stability.of([Fraction(str(data[vid])) for vid in quiver.vertex_ids])


def _is_number(text: str) -> bool:
    try:
        Fraction(text)
    except ValueError:
        return False
    return True


def dominance_counterexample(quiver: SelfDualQuiver, tau_tilde: Stability, tau: Stability,
                             box: int) -> tuple[DimVector, DimVector] | None:
    """A pair with tau(a) <= tau(b) but tau_tilde(a) > tau_tilde(b), if any exists
    among nonzero classes of total dimension at most ``box``."""
    classes = dim_vectors(quiver, box)
    for a, b in product(classes, repeat=2):
        if tau.compare(a, b) <= 0 and tau_tilde.compare(a, b) > 0:
            return a, b
    return None


def dominates(quiver: SelfDualQuiver, tau_tilde: Stability, tau: Stability, box: int) -> bool:
    """Whether tau_tilde dominates tau on the box of total dimension at most ``box``."""
    return dominance_counterexample(quiver, tau_tilde, tau, box) is None
