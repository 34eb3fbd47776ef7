"""Power-series branches of a plane curve above a point, and the splitting test.

Branches are found by a Newton-Puiseux style descent restricted to integer
exponents.  At a node with prefix ``p(Z)`` of length ``k`` we form
``Q(Z, W) = P(Z, p(Z) + Z^k W) / Z^v`` with ``Q(0, W) != 0``:

* a simple root ``w`` of ``Q(0, W)`` gives exactly one power-series branch, lifted by Hensel;
* a root of multiplicity ``r`` is refined one coefficient deeper;
* if the child's ``Q(0, W)`` has degree below ``r`` some of those roots carry
  fractional exponents and the point is ramified.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ..core.bpoly import BPoly
from ..core.roots import roots_in_field
from ..core.resultant import discriminant_y, resultant_y
from ..core.scalars import scalar_key
from ..core.upoly import UPoly
from ..errors import InputError, InsufficientPrecision, RootsOutsideField
from .hensel import BranchData, branch_kappa, hensel_lift
from .series import Series

PREC_CAP = 1 << 12


def _substitute_prefix(P: BPoly, prefix: UPoly, k: int) -> BPoly:
    """``P(Z, prefix(Z) + Z^k W)`` as a polynomial in ``(Z, W)``."""
    yexpr = BPoly.from_upoly(prefix) + BPoly._raw({(k, 1): Fraction(1)})
    acc = BPoly()
    for c in reversed(P.ycoeffs()):
        acc = acc * yexpr + BPoly.from_upoly(c)
    return acc


def _divide_z(S: BPoly) -> tuple[BPoly, int]:
    v = min(i for i, _ in S.terms)
    return BPoly._raw({(i - v, j): c for (i, j), c in S.terms.items()}), v


@dataclass
class SearchResult:
    branches: list  # list of Series (power-series roots, each to some precision)
    complete: bool  # every root of P(0, Y) (with multiplicity) accounted for
    missing: int = 0


def power_series_roots(P: BPoly, field, depth_cap: int, prec: int) -> SearchResult:
    """All roots of ``P(Z, Y)`` in ``K[[Z]]`` extending roots of ``P(0, Y)`` in ``K``."""
    out: list = []
    missing = 0

    def visit(prefix: UPoly, k: int, Q: BPoly, expected: int | None):
        nonlocal missing
        q0 = Q.eval_x(Fraction(0))
        if expected is not None and q0.degree < expected:
            missing += expected - max(q0.degree, 0)
        if q0.degree <= 0:
            return
        roots, cof = roots_in_field(q0, field)
        if cof.degree > 0:
            raise RootsOutsideField(f"roots of {cof} (in the branch variable) lie outside the field", cof)
        for w, mult in roots:
            if mult == 1:
                W = hensel_lift(Q, w, 0, prec)
                y = Series.from_upoly(prefix) + W.shift(k)
                out.append(y.truncate(prec + 1))
            else:
                if k >= depth_cap:
                    raise InputError("branch separation exceeds the discriminant order; is f squarefree?")
                child = prefix + UPoly._raw([Fraction(0)] * k + [w])
                S = _substitute_prefix(P, child, k + 1)
                Qc, _ = _divide_z(S)
                visit(child, k + 1, Qc, mult)

    Q0 = P
    visit(UPoly(), 0, Q0, None)
    return SearchResult(out, missing == 0, missing)


@dataclass
class BranchesAt:
    beta: object
    split: bool
    branches: list  # BranchData, sorted
    ord_d: int
    kappa_sum: int
    separation: dict = dc_field(default_factory=dict)  # (j1, j2) -> lambda, 1-based

    @property
    def ramified(self) -> bool:
        return not self.split

    @property
    def kappas(self) -> list[int]:
        return [b.kappa for b in self.branches]

    def to_json(self) -> dict:
        return {
            "split": self.split,
            "ord_d": self.ord_d,
            "kappas": self.kappas,
            "branches": [b.to_json() for b in self.branches],
            "lambda": {f"{a},{b}": v for (a, b), v in sorted(self.separation.items())},
        }


def branch_order_key(b: BranchData):
    return (-b.kappa, tuple(scalar_key(c) for c in b.gammas))


def infer_field(*items):
    for it in items:
        f = getattr(it, "field", None)
        if f is not None:
            return f
        for c in getattr(it, "terms", {}).values():
            if getattr(c, "field", None) is not None:
                return c.field
    return None


def _lift_with_kappa(P: BPoly, field, depth_cap: int, start: int, cap: int = PREC_CAP) -> tuple[SearchResult, list]:
    prec = start
    while True:
        res = power_series_roots(P, field, depth_cap, prec)
        try:
            data = [branch_kappa(P, y) for y in res.branches]
            return res, data
        except InsufficientPrecision:
            if prec >= cap:
                raise
            prec *= 2


def all_branches_at(f: BPoly, beta, field=None, prec: int | None = None, cap: int = PREC_CAP) -> BranchesAt:
    """Branches of ``f`` above ``X = beta``; split iff ``sum kappa = ord_beta d``."""
    if not f.monic_in_y():
        raise InputError("f must be monic in Y")
    field = field or infer_field(beta, f)
    d = discriminant_y(f)
    if d.is_zero():
        raise InputError("f is not squarefree in Y")
    ord_d = int(d.shift(beta).ord0())
    P = f.shift_x(beta)
    start = max(ord_d + 2, prec or 0, 4)
    res, data = _lift_with_kappa(P, field, ord_d + 2, start, cap)
    data.sort(key=branch_order_key)
    ksum = sum(b.kappa for b in data)
    split = len(data) == f.deg_y
    if split != (ksum == ord_d):
        raise AssertionError(f"splitting criterion disagrees with the branch count at {beta}")
    sep = {}
    if split:
        for a in range(len(data)):
            for b in range(a + 1, len(data)):
                sep[(a + 1, b + 1)] = _lambda(data[a], data[b])
    return BranchesAt(beta, split, data, ord_d, ksum, sep)


def _lambda(b1: BranchData, b2: BranchData) -> int:
    from .hensel import separation_index

    return separation_index(b1.segment, b2.segment)
