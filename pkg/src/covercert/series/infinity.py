"""Expansions of the branches of ``f(x, y) = 0`` at ``x = infinity``.

With ``t = 1/x`` the finite branches are roots of ``g(T, Y) = T^m f(1/T, Y)``.
The pole branch ``y_1 = t^(-m) u`` is handled through
``h(T, Y) = T^(m(n+1)) f(1/T, T^(-m) Y) = T^m * h~(T, Y)`` where
``h~(0, Y) = Y^(n-1) (Y + theta_{m,n-1})``, so ``u(0) = -theta_{m,n-1}`` is a
simple root and ``kappa_1 = ord h'_Y(t, u) = m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.bpoly import BPoly
from ..core.resultant import resultant_y
from ..errors import InputError, InsufficientPrecision, RamifiedAtInfinity, WrongPoleShape
from .branches import PREC_CAP, branch_order_key, infer_field, power_series_roots
from .hensel import BranchData, check_segment, branch_kappa, eval_series, hensel_lift, separation_index
from .series import Series


def g_poly(f: BPoly, m: int) -> BPoly:
    return f.reverse_x(m)


def h_poly(f: BPoly, m: int, n: int) -> BPoly:
    """``T^(m(n+1)) f(1/T, T^(-m) Y)``."""
    return BPoly._raw({(m * (n + 1) - i - m * j, j): c for (i, j), c in f.terms.items()})


def h_reduced(f: BPoly, m: int, n: int) -> BPoly:
    """``h / T^m``."""
    return BPoly._raw({(m * n - i - m * j, j): c for (i, j), c in f.terms.items()})


@dataclass
class InfinityData:
    m: int
    n: int
    branches: list  # BranchData; index 0 is the pole branch (Laurent, offset -m)
    kappas: list
    c_minus_m: object
    c_0: object
    normalized: bool
    g_order_pole: int  # ord_t g'_Y(t, y_inf1)
    separation: dict

    @property
    def chain_rule_holds(self) -> bool:
        return self.kappas[0] == self.m * (self.n - 1) + self.g_order_pole

    @property
    def mn_variant_holds(self) -> bool:
        return self.kappas[0] == self.m * self.n + self.g_order_pole

    def to_json(self) -> dict:
        from ..core.scalars import fmt_scalar

        return {
            "kappas": self.kappas,
            "branches": [b.to_json() for b in self.branches],
            "c_minus_m": fmt_scalar(self.c_minus_m),
            "c_0": fmt_scalar(self.c_0),
            "normalized": self.normalized,
            "ord_g_prime_pole": self.g_order_pole,
            "kappa_pole_identity": {
                "m(n-1)+ord": self.chain_rule_holds,
                "mn+ord": self.mn_variant_holds,
            },
            "lambda": {f"{a},{b}": v for (a, b), v in sorted(self.separation.items())},
        }


def expansions_at_infinity(f: BPoly, m: int | None = None, n: int | None = None,
                           field=None, prec: int | None = None, cap: int = PREC_CAP) -> InfinityData:
    if not f.monic_in_y():
        raise InputError("f must be monic in Y")
    m = f.deg_x if m is None else m
    n = f.deg_y if n is None else n
    if f.deg_x != m or f.deg_y != n:
        raise InputError("stated degrees are not attained")
    field = field or infer_field(f)
    theta = f.coeff(m, n - 1)
    if not theta:
        raise WrongPoleShape(f"coefficient of X^{m} Y^{n - 1} vanishes: no branch with pole of order exactly {m}")
    g = g_poly(f, m)
    gy = g.diff_y()

    # finite branches through g
    rg = resultant_y(g, gy)
    if rg.is_zero():
        raise InputError("g is not squarefree")
    depth = int(rg.ord0()) + 2
    start = max(depth + 2, prec or 0, 4)
    while True:
        res = power_series_roots(g, field, depth, start)
        if not res.complete or len(res.branches) != n - 1:
            raise RamifiedAtInfinity(f"found {len(res.branches)} unramified finite branches at infinity, need {n - 1}")
        try:
            finite = [branch_kappa(g, y) for y in res.branches]
            break
        except InsufficientPrecision:
            if start >= cap:
                raise
            start *= 2
    finite.sort(key=branch_order_key)

    # pole branch through h~
    ht = h_reduced(f, m, n)
    N = max(start, 2 * m + 2)
    u = hensel_lift(ht, -theta, 0, N)
    hy = h_poly(f, m, n).diff_y()
    kappa1 = eval_series(hy, u).ord()
    seg_u = u.truncate(kappa1 + 1)
    bad = check_segment(h_poly(f, m, n), seg_u.to_upoly(), kappa1)
    if bad:
        raise AssertionError(f"pole segment fails its certificate: {bad}")
    y1 = u.shift(-m)
    pole = BranchData(y1, kappa1, seg_u.shift(-m))
    gpole = eval_series(gy, y1).ord()

    branches = [pole] + finite
    sep = {}
    for a in range(1, len(branches)):
        for b in range(a + 1, len(branches)):
            sep[(a + 1, b + 1)] = separation_index(branches[a].segment, branches[b].segment)
    c_mm = y1.coeff(-m)
    c0 = y1.coeff(0)
    return InfinityData(
        m=m, n=n, branches=branches, kappas=[b.kappa for b in branches],
        c_minus_m=c_mm, c_0=c0, normalized=(c_mm == 1 and not c0),
        g_order_pole=int(gpole), separation=sep,
    )
