"""Move the A2 invariants from trivial stability across the wall to (-1, 1)
and back, checking against direct computation at each end.

Run: python demos/wall_crossing.py
"""
from __future__ import annotations

from sdquiver import Jsd, builtin_quiver, wallcross_Jsd
from sdquiver.quiver import self_dual_classes
from sdquiver.stability import Stability, trivial_stability

q = builtin_quiver("a2:+,+")
triv, tau = trivial_stability(q), Stability.of([-1, 1])

for theta in self_dual_classes(q, 6):
    there = wallcross_Jsd(q, theta, triv, tau)
    back = wallcross_Jsd(q, theta, tau, triv)
    ok = there == Jsd(q, theta, tau) and back == Jsd(q, theta, triv)
    print(f"{str(theta):<8} {'ok' if ok else 'MISMATCH':<9} trivial: {Jsd(q, theta, triv)}")
    print(f"{'':<18}(-1, 1): {there}")
