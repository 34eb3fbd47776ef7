"""A curve whose discriminant has a root that is not a branch point.

``y0^2 = x^2 (x+1)(x+4)`` has a node over x = 0: the discriminant vanishes
there to order 2, yet both sheets pass through unramified.  The analyzer
records the extra root, its branch orders and their separation index, and the
certificate gains the corresponding unknowns and equations.
"""

from __future__ import annotations

from pathlib import Path

from covercert.cover import analyze
from covercert.io import load_curve
from covercert.pipeline import build_model, run_verify

ci = load_curve(Path(__file__).with_name("nodal.json"))
rep = analyze(build_model(ci), ci.declared)
print("f =", rep.model.f)
print("d =", rep.d)
for bt in rep.betas:
    print(f"extra root beta = {bt.beta}: tau = {bt.tau}, kappas = {bt.kappas}, "
          f"separation = {bt.data.separation}")
    for b in bt.data.branches:
        print("   branch", b.branch, "  segment", b.segment)
print("Omega =", rep.omega)

out = run_verify(ci)
print("verify:", "passed" if out.passed else f"failed at {out.failures[0][0]}")
