"""Print the orthogonal and symplectic point-quiver invariants side by side.

Run: python demos/point_table.py
"""
from __future__ import annotations

from sdquiver import DTsd, Jsd, builtin_quiver, chiJsd

orth = builtin_quiver("point:+")
symp = builtin_quiver("point:-")

print(f"{'d':>2}  {'chiJsd':>8}  {'DTsd':>8}  Jsd")
for d in range(8):
    print(f"{d:>2}  {str(chiJsd(orth, (d,))):>8}  {str(DTsd(orth, (d,))):>8}  {Jsd(orth, (d,))}")

print("\nSymplectic dimension 2n against orthogonal dimension 2n+1:")
for n in range(5):
    same = Jsd(symp, (2 * n,)) == Jsd(orth, (2 * n + 1,))
    print(f"  n={n}: {'equal' if same else 'different'}")
