"""Exact invariants of self-dual quiver representations.

Motives of (self-dual) moduli stacks, their logarithm-type invariants J and
Jsd, Euler-characteristic and naive DT specializations, wall-crossing between
stability functions, and the supporting combinatorics, all over exact
rationals and rational functions in L.
"""
from __future__ import annotations

from .invariants import (
    DT, DTsd, I, Isd, J, Jsd, chiJ, chiJsd, motive_classifying,
    wallcross_I, wallcross_Isd, wallcross_J, wallcross_Jsd,
)
from .quiver import (
    SelfDualQuiver, a2_quiver, atilde1_quiver, builtin_quiver, load_quiver, loop_quiver,
    point_quiver, validate,
)
from .ratfun import L, RationalFunction, evaluate, parse, pole_order_at_one
from .stability import Stability, parse_stability, trivial_stability

__version__ = "0.1.0"

__all__ = [
    "DT", "DTsd", "I", "Isd", "J", "Jsd", "chiJ", "chiJsd", "motive_classifying",
    "wallcross_I", "wallcross_Isd", "wallcross_J", "wallcross_Jsd",
    "SelfDualQuiver", "a2_quiver", "atilde1_quiver", "builtin_quiver", "load_quiver",
    "loop_quiver", "point_quiver", "validate",
    "L", "RationalFunction", "evaluate", "parse", "pole_order_at_one",
    "Stability", "parse_stability", "trivial_stability",
]
