"""Compare the Atilde1 generating series with their conjectured closed forms,
at the stability where they hold and at the trivial one, where they do not.

Run: python demos/atilde1_series.py [max_n]
"""
from __future__ import annotations

import sys

from sdquiver import builtin_quiver
from sdquiver.series import CONJECTURE_STABILITY, series_report

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4

for name in ("atilde1:+,++", "atilde1:+,+-", "atilde1:+,--"):
    q = builtin_quiver(name)
    for tau in (CONJECTURE_STABILITY, None):
        rows = series_report(q, max_n, tau)
        bad = [r for r in rows if not r.matches]
        label = str(tau) if tau else "trivial"
        print(f"{q} at {label}: {len(rows) - len(bad)}/{len(rows)} coefficients match")
        for r in bad[:3]:
            print(f"    {r.kind} class {r.cls}: computed {r.computed}, closed form {r.expected}")
