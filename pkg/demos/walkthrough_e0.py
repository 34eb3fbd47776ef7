"""Step through the certificate for the conic y0^2 = x^2 - 1 by hand.

Run with ``python3 demos/walkthrough_e0.py``.
"""

from __future__ import annotations

from covercert.bounds import MainBounds, theorem_check
from covercert.cover import analyze, eliminate, normalize_at_infinity
from covercert.heights import height_poly
from covercert.io import parse_bivariate, parse_expr
from covercert.pipeline import h_of_points
from covercert.vset import audit, build_V, build_W, verify_membership

F0 = parse_bivariate("y0^2 - (x^2 - 1)", None, "Y0")

# 1. pick y with a single pole of order m at infinity and c_0 = 0
y_expr, norm = normalize_at_infinity(F0, parse_expr("y0 + x"))
print("y =", y_expr, " (seed had c_-m =", norm.c_minus_m, ", c_0 =", norm.c_0, ")")

# 2. the plane model f(x, y) = 0
model = eliminate(F0, y_expr)
print("f =", model.f, " h(f) =", height_poly(model.f))

# 3. discriminant, branch points, branches at infinity
rep = analyze(model, [1, -1])
print("d =", rep.d, " mu =", rep.mu, " nu =", rep.nu, " kappa_inf =", rep.kappa_inf, " Omega =", rep.omega)

# 4. the point phi lies in V and outside W
V, W = build_V(rep), build_W(rep)
mem = verify_membership(V, W, rep.phi())
print(f"{len(V)} equations in {V.atlas.total} unknowns; phi in V \\ W: {mem.passed}")
for e in V.equations:
    print(f"  [{e.tag:9s}] {e.poly} = 0")

# 5. degree/height audit of the equations and the final height bound
h = h_of_points([a for a, _ in rep.alphas])
au = audit(V, h)
print("max degree", au.max_degree, "<=", au.degree_cap, "; max height", au.max_height, "<=", au.height_cap)
tc = theorem_check(rep, model.f, h)
mb = MainBounds.of(rep.m, rep.n, rep.omega)
print("h(f) <= Lambda'(h+1):", tc.prime_ok, " Lambda' =", mb.LambdaPrime, "= 8^21:", mb.LambdaPrime == 8**21)
