"""Self-dual quivers, dimension vectors and decomposition enumerators.

A dimension vector is a plain tuple of non-negative integers in vertex
declaration order.  A self-dual class is a dimension vector that is invariant
under the vertex involution and even at the symplectic fixed vertices.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

__all__ = [
    "Vertex",
    "Arrow",
    "SelfDualQuiver",
    "Classification",
    "QuiverError",
    "DimVector",
    "validate",
    "point_quiver",
    "loop_quiver",
    "atilde1_quiver",
    "a2_quiver",
    "builtin_quiver",
    "load_quiver",
    "dual_class",
    "bar_add",
    "is_self_dual_class",
    "enumerate_ordered_decompositions",
    "enumerate_sd_decompositions",
    "dim_vectors",
    "self_dual_classes",
]

DimVector = tuple[int, ...]


class QuiverError(ValueError):
    """Invalid quiver data; ``violations`` lists every failed check."""

    def __init__(self, violations: Sequence[str]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Vertex:
    id: str
    dual: str
    sign: int


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    tgt: str
    dual: str
    sign: int


@dataclass(frozen=True)
class Classification:
    """Vertex and arrow types; members listed as indices in declaration order."""

    Q0_plus: tuple[int, ...]
    Q0_minus: tuple[int, ...]
    Q0_tri: tuple[int, ...]
    Q0_tri_dual: tuple[int, ...]
    Q1_plus: tuple[int, ...]
    Q1_minus: tuple[int, ...]
    Q1_tri: tuple[int, ...]
    Q1_tri_dual: tuple[int, ...]


@dataclass(frozen=True)
class SelfDualQuiver:
    """A validated self-dual quiver.

    Use :func:`validate` or one of the builtin constructors rather than
    calling this directly.  Index-based views (``src``, ``tgt``, ``sigma0``
    and so on) are what the numerical code consumes.
    """

    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        vidx = {v.id: k for k, v in enumerate(self.vertices)}
        aidx = {a.id: k for k, a in enumerate(self.arrows)}
        object.__setattr__(self, "_vidx", vidx)
        object.__setattr__(self, "sigma0", tuple(vidx[v.dual] for v in self.vertices))
        object.__setattr__(self, "u", tuple(v.sign for v in self.vertices))
        object.__setattr__(self, "src", tuple(vidx[a.src] for a in self.arrows))
        object.__setattr__(self, "tgt", tuple(vidx[a.tgt] for a in self.arrows))
        object.__setattr__(self, "sigma1", tuple(aidx[a.dual] for a in self.arrows))
        object.__setattr__(self, "v", tuple(a.sign for a in self.arrows))
        object.__setattr__(self, "classification", _classify(self))

    # type hints for the derived attributes
    sigma0: tuple[int, ...] = field(init=False, repr=False, compare=False)
    sigma1: tuple[int, ...] = field(init=False, repr=False, compare=False)
    u: tuple[int, ...] = field(init=False, repr=False, compare=False)
    v: tuple[int, ...] = field(init=False, repr=False, compare=False)
    src: tuple[int, ...] = field(init=False, repr=False, compare=False)
    tgt: tuple[int, ...] = field(init=False, repr=False, compare=False)
    classification: Classification = field(init=False, repr=False, compare=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def vertex_index(self, vid: str) -> int:
        return self._vidx[vid]  # type: ignore[attr-defined]

    def dim_vector(self, entries: Mapping[str, int] | Sequence[int] | int) -> DimVector:
        """Coerce a mapping, sequence or (one-vertex) integer into a dimension vector."""
        if isinstance(entries, int):
            entries = (entries,)
        if isinstance(entries, Mapping):
            unknown = set(entries) - set(self.vertex_ids)
            if unknown:
                raise ValueError(f"unknown vertices {sorted(unknown)}")
            vec = tuple(int(entries.get(vid, 0)) for vid in self.vertex_ids)
        else:
            vec = tuple(int(x) for x in entries)
        if len(vec) != self.n_vertices:
            raise ValueError(f"expected {self.n_vertices} entries, got {len(vec)}")
        if any(x < 0 for x in vec):
            raise ValueError(f"dimension vector {vec} has a negative entry")
        return vec

    def self_dual_class(self, entries: Mapping[str, int] | Sequence[int] | int) -> DimVector:
        vec = self.dim_vector(entries)
        problem = self_dual_class_problem(self, vec)
        if problem:
            raise ValueError(problem)
        return vec

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v.id, "dual": v.dual, "sign": v.sign} for v in self.vertices],
            "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt, "dual": a.dual, "sign": a.sign}
                       for a in self.arrows],
        }

    def permuted(self, vertex_order: Sequence[int], arrow_order: Sequence[int]) -> SelfDualQuiver:
        """Same quiver with vertices and arrows redeclared in another order."""
        return SelfDualQuiver(tuple(self.vertices[k] for k in vertex_order),
                              tuple(self.arrows[k] for k in arrow_order), self.name)

    def __str__(self) -> str:
        return self.name or f"quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def _classify(q: SelfDualQuiver) -> Classification:
    q0p, q0m, q0t, q0td = [], [], [], []
    for i, j in enumerate(q.sigma0):
        if i == j:
            (q0p if q.u[i] == 1 else q0m).append(i)
        else:
            (q0t if i < j else q0td).append(i)
    q1p, q1m, q1t, q1td = [], [], [], []
    for a, b in enumerate(q.sigma1):
        if a == b:
            (q1p if q.u[q.tgt[a]] * q.v[a] == 1 else q1m).append(a)
        else:
            (q1t if a < b else q1td).append(a)
    return Classification(*(tuple(s) for s in (q0p, q0m, q0t, q0td, q1p, q1m, q1t, q1td)))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(raw: Mapping | str, name: str = "") -> SelfDualQuiver:
    """Check a JSON-style description and build the quiver.

    Raises :class:`QuiverError` listing every axiom violation found.
    """
    if isinstance(raw, str):
        raw = json.loads(raw)
    errors: list[str] = []
    if not isinstance(raw, Mapping):
        raise QuiverError(["quiver description must be a JSON object"])
    rv, ra = raw.get("vertices"), raw.get("arrows", [])
    if not isinstance(rv, list) or not isinstance(ra, list):
        raise QuiverError(["'vertices' and 'arrows' must be lists"])

    vertices: list[Vertex] = []
    for k, item in enumerate(rv):
        try:
            vertices.append(Vertex(str(item["id"]), str(item.get("dual", item["id"])), item["sign"]))
        except (KeyError, TypeError):
            errors.append(f"vertex #{k}: needs fields id, dual, sign")
    arrows: list[Arrow] = []
    for k, item in enumerate(ra):
        try:
            arrows.append(Arrow(str(item["id"]), str(item["src"]), str(item["tgt"]),
                                str(item.get("dual", item["id"])), item["sign"]))
        except (KeyError, TypeError):
            errors.append(f"arrow #{k}: needs fields id, src, tgt, dual, sign")
    if errors:
        raise QuiverError(errors)

    vmap = {v.id: v for v in vertices}
    amap = {a.id: a for a in arrows}
    if len(vmap) != len(vertices):
        errors.append("duplicate vertex ids")
    if len(amap) != len(arrows):
        errors.append("duplicate arrow ids")
    if not vertices:
        errors.append("a quiver needs at least one vertex")
    for v in vertices:
        if v.sign not in (1, -1) or isinstance(v.sign, bool):
            errors.append(f"vertex {v.id}: sign must be +1 or -1")
        if v.dual not in vmap:
            errors.append(f"vertex {v.id}: dual {v.dual!r} is not a vertex")
    for a in arrows:
        if a.sign not in (1, -1) or isinstance(a.sign, bool):
            errors.append(f"arrow {a.id}: sign must be +1 or -1")
        for label, end in (("src", a.src), ("tgt", a.tgt)):
            if end not in vmap:
                errors.append(f"arrow {a.id}: {label} {end!r} is not a vertex")
        if a.dual not in amap:
            errors.append(f"arrow {a.id}: dual {a.dual!r} is not an arrow")
    if errors:
        raise QuiverError(errors)

    for v in vertices:
        dv = vmap[v.dual]
        if dv.dual != v.id:
            errors.append(f"vertex {v.id}: vertex involution is not an involution")
        if dv.sign != v.sign:
            errors.append(f"vertex {v.id}: sign differs from its dual {dv.id}")
    for a in arrows:
        da = amap[a.dual]
        if da.dual != a.id:
            errors.append(f"arrow {a.id}: arrow involution is not an involution")
        if vmap[a.src].dual != da.tgt:
            errors.append(f"arrow {a.id}: dual of source is not the target of its dual arrow")
        if vmap[a.tgt].dual != da.src:
            errors.append(f"arrow {a.id}: dual of target is not the source of its dual arrow")
        if vmap[a.src].sign in (1, -1) and a.sign * da.sign != vmap[a.src].sign * vmap[a.tgt].sign:
            errors.append(f"arrow {a.id}: sign product with its dual must equal "
                          f"the product of the end-vertex signs")
    if errors:
        raise QuiverError(errors)
    return SelfDualQuiver(tuple(vertices), tuple(arrows), name)


# ---------------------------------------------------------------------------
# Builtin quivers
# ---------------------------------------------------------------------------


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def _parse_signs(text: str) -> list[int]:
    out = []
    for ch in text:
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ValueError(f"bad sign character {ch!r} in {text!r}")
    return out


def point_quiver(eps: int = 1) -> SelfDualQuiver:
    """One vertex with trivial involution; orthogonal for +1, symplectic for -1."""
    return validate({"vertices": [{"id": "pt", "dual": "pt", "sign": eps}], "arrows": []},
                    name=f"point^{_sign_char(eps)}")


def loop_quiver(u: int, v: Sequence[int]) -> SelfDualQuiver:
    """One vertex with ``len(v)`` loops, each self-dual with sign v_k."""
    arrows = [{"id": f"a{k + 1}", "src": "pt", "tgt": "pt", "dual": f"a{k + 1}", "sign": s}
              for k, s in enumerate(v)]
    m = len(v)
    name = f"{m}^{_sign_char(u)}_{{{''.join(_sign_char(s) for s in v)}}}"
    return validate({"vertices": [{"id": "pt", "dual": "pt", "sign": u}], "arrows": arrows},
                    name=name)


def atilde1_quiver(u: int = 1, v1: int = 1, v2: int = 1) -> SelfDualQuiver:
    """Two swapped vertices joined by two parallel self-dual arrows 1 -> 2."""
    return validate({
        "vertices": [{"id": "1", "dual": "2", "sign": u}, {"id": "2", "dual": "1", "sign": u}],
        "arrows": [{"id": "a", "src": "1", "tgt": "2", "dual": "a", "sign": v1},
                   {"id": "b", "src": "1", "tgt": "2", "dual": "b", "sign": v2}],
    }, name=f"Atilde1^{{{_sign_char(u)},{_sign_char(v1)}{_sign_char(v2)}}}")


def a2_quiver(u: int = 1, v: int = 1) -> SelfDualQuiver:
    """Two swapped vertices with a single self-dual arrow 1 -> 2."""
    return validate({
        "vertices": [{"id": "1", "dual": "2", "sign": u}, {"id": "2", "dual": "1", "sign": u}],
        "arrows": [{"id": "a", "src": "1", "tgt": "2", "dual": "a", "sign": v}],
    }, name=f"A2^{{{_sign_char(u)},{_sign_char(v)}}}")


_LOOP_NOTATION = re.compile(r"^(\d+)\^([+-])_\{?([+-]*)\}?$")


def builtin_quiver(text: str) -> SelfDualQuiver:
    """Parse a builtin quiver name.

    Accepted forms: ``point:+``, ``loop:2:+:+-`` (or ``2^+_{+-}``),
    ``atilde1:+,++`` and ``a2:+,+``.
    """
    text = text.strip()
    m = _LOOP_NOTATION.match(text)
    if m:
        signs = _parse_signs(m.group(3))
        if len(signs) != int(m.group(1)):
            raise ValueError(f"{text!r}: loop count does not match the number of signs")
        return loop_quiver(_parse_signs(m.group(2))[0], signs)
    kind, _, rest = text.partition(":")
    kind = kind.lower()
    try:
        if kind == "point":
            (eps,) = _parse_signs(rest or "+")
            return point_quiver(eps)
        if kind == "loop":
            count, u, v = rest.split(":") if rest.count(":") == 2 else (*rest.split(":"), "")
            signs = _parse_signs(v)
            if len(signs) != int(count):
                raise ValueError("loop count does not match the number of signs")
            (uu,) = _parse_signs(u)
            return loop_quiver(uu, signs)
        if kind == "atilde1":
            u, v = rest.split(",")
            (uu,) = _parse_signs(u)
            v1, v2 = _parse_signs(v)
            return atilde1_quiver(uu, v1, v2)
        if kind == "a2":
            u, v = rest.split(",")
            (uu,) = _parse_signs(u)
            (vv,) = _parse_signs(v)
            return a2_quiver(uu, vv)
    except ValueError as exc:
        raise ValueError(f"bad builtin quiver {text!r}: {exc}") from None
    raise ValueError(f"unknown builtin quiver {text!r}")


def load_quiver(text: str) -> SelfDualQuiver:
    """Builtin name, JSON file path or inline JSON."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return validate(stripped)
    try:
        return builtin_quiver(stripped)
    except ValueError as builtin_error:
        try:
            with open(stripped, encoding="utf-8") as fh:
                return validate(json.load(fh), name=stripped)
        except FileNotFoundError:
            raise builtin_error from None


# ---------------------------------------------------------------------------
# Class operations
# ---------------------------------------------------------------------------


def dual_class(quiver: SelfDualQuiver, alpha: DimVector) -> DimVector:
    """(alpha^dual)_i = alpha_{i^dual}."""
    return tuple(alpha[j] for j in quiver.sigma0)


def bar_add(quiver: SelfDualQuiver, alpha: DimVector, theta: DimVector) -> DimVector:
    """alpha + alpha^dual + theta."""
    return tuple(a + alpha[j] + t for a, j, t in zip(alpha, quiver.sigma0, theta))


def self_dual_class_problem(quiver: SelfDualQuiver, theta: DimVector) -> str | None:
    if len(theta) != quiver.n_vertices or any(x < 0 for x in theta):
        return f"{theta} is not a dimension vector"
    for i, j in enumerate(quiver.sigma0):
        if theta[i] != theta[j]:
            return f"{theta} is not invariant under the vertex involution"
        if i == j and quiver.u[i] == -1 and theta[i] % 2:
            return f"{theta} is odd at the symplectic vertex {quiver.vertices[i].id}"
    return None


def is_self_dual_class(quiver: SelfDualQuiver, theta: DimVector) -> bool:
    return self_dual_class_problem(quiver, theta) is None


def _boxes(bound: DimVector) -> Iterator[DimVector]:
    """Nonzero vectors below ``bound`` in lexicographic order."""
    it = itertools.product(*(range(b + 1) for b in bound))
    next(it)
    return it


def enumerate_ordered_decompositions(
    alpha: DimVector,
    accept: Callable[[tuple[DimVector, ...]], bool] | None = None,
) -> Iterator[tuple[DimVector, ...]]:
    """Ordered tuples of nonzero vectors summing to ``alpha``.

    Tuples come grouped by length, each group in lexicographic order.
    ``accept(parts)`` is called after every extension, including the last;
    returning False prunes every tuple with that prefix.
    """
    alpha = tuple(alpha)
    total = sum(alpha)
    if total == 0:
        raise ValueError("cannot decompose the zero class")

    def grow(rest: DimVector, left: int, parts: tuple[DimVector, ...]):
        if left == 1:
            new = parts + (rest,)
            if accept is None or accept(new):
                yield new
            return
        for beta in _boxes(rest):
            remainder = tuple(r - b for r, b in zip(rest, beta))
            if sum(remainder) < left - 1:
                continue
            new = parts + (beta,)
            if accept is not None and not accept(new):
                continue
            yield from grow(remainder, left - 1, new)

    for n in range(1, total + 1):
        yield from grow(alpha, n, ())


def enumerate_sd_decompositions(
    quiver: SelfDualQuiver,
    theta: DimVector,
    accept: Callable[[tuple[DimVector, ...]], bool] | None = None,
) -> Iterator[tuple[tuple[DimVector, ...], DimVector]]:
    """Pairs ``(parts, rho)`` with sum of (a + a^dual) over parts plus rho equal to theta.

    ``rho`` may be zero and ``n = 0`` is included.  An invalid ``theta``
    yields nothing.  ``accept(parts)`` is evaluated after each extension.
    """
    theta = tuple(theta)
    if not is_self_dual_class(quiver, theta):
        return
    sigma = quiver.sigma0

    def grow(rest: DimVector, left: int, parts: tuple[DimVector, ...]):
        if left == 0:
            yield parts, rest
            return
        for beta in _boxes(rest):
            used = tuple(b + beta[j] for b, j in zip(beta, sigma))
            if any(x > r for x, r in zip(used, rest)):
                continue
            remainder = tuple(r - x for r, x in zip(rest, used))
            if sum(remainder) < 2 * (left - 1):
                continue
            new = parts + (beta,)
            if accept is not None and not accept(new):
                continue
            yield from grow(remainder, left - 1, new)

    for n in range(0, sum(theta) // 2 + 1):
        yield from grow(theta, n, ())


def dim_vectors(quiver: SelfDualQuiver, max_total: int, include_zero: bool = False) -> list[DimVector]:
    """All dimension vectors with total dimension at most ``max_total``,
    ordered by total dimension then lexicographically."""
    out = [vec for vec in itertools.product(range(max_total + 1), repeat=quiver.n_vertices)
           if sum(vec) <= max_total and (include_zero or any(vec))]
    return sorted(out, key=lambda vec: (sum(vec), vec))


def self_dual_classes(quiver: SelfDualQuiver, max_total: int) -> list[DimVector]:
    """Self-dual classes (zero included) with total dimension at most ``max_total``."""
    return [vec for vec in dim_vectors(quiver, max_total, include_zero=True)
            if is_self_dual_class(quiver, vec)]
