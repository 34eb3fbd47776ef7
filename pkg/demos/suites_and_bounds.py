"""Randomized checks of the height inequalities, and a deliberately broken bound.

The suites are seeded; the same seed always draws the same instances.
"""

from __future__ import annotations

from covercert.heights import LogValue, bound_product
from covercert.suites import run_suites

for r in run_suites(seed=0, count=50):
    print(f"{r.name:9s} {r.passed:3d}/{r.count} passed, {r.skipped} skipped")

# drop the log(n+1) term from the product inequality: the harness finds and shrinks a counterexample
broken = run_suites(seed=0, count=200, names=["product"],
                    overrides={"product": lambda fs: bound_product(fs, log_np1=LogValue.zero())})[0]
print("broken product bound ->", broken.counterexample)
