"""Calculators for the height inequalities on sums, products, compositions,
determinants and the rho-transform, plus arithmetic Bezout bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..core.bpoly import BPoly
from ..core.linalg import det
from ..core.mpoly import MPoly
from ..core.resultant import resultant_y
from ..core.roots import rational_roots
from ..core.upoly import UPoly, poly_gcd
from ..errors import DegenerateSubstitution, InputError, PositiveDimensional, TooFewEquations, ZeroDeterminant
from .heights import height_poly, height_rational_vector, height_system
from .logvalue import LogValue


class BoundCheck(NamedTuple):
    lhs: LogValue
    rhs: LogValue

    def holds(self) -> bool:
        return self.lhs <= self.rhs


def _arity(polys) -> int:
    names = set()
    for p in polys:
        names |= p.variables()
    return len(names)


def bound_product(f_list, n: int | None = None, log_np1: LogValue | None = None) -> BoundCheck:
    """``h(prod f_i) <= sum h(f_i) + log(n+1) * sum_{i<s} deg f_i``.

    ``log_np1`` overrides the ``log(n+1)`` constant (used to self-test the suites).
    """
    fs = [MPoly.coerce(f) for f in f_list]
    if not fs or any(f.is_zero() for f in fs):
        raise InputError("bound_product needs nonzero factors")
    n = _arity(fs) if n is None else n
    prod = MPoly.const(1)
    for f in fs:
        prod = prod * f
    lhs = height_poly(prod)
    c = LogValue.log(n + 1) if log_np1 is None else log_np1
    rhs = LogValue.zero()
    for f in fs:
        rhs = rhs + height_poly(f)
    rhs = rhs + c * sum(f.total_degree for f in fs[:-1])
    return BoundCheck(lhs, rhs)


def bound_compose(g, f_list, ys=None, n: int | None = None) -> BoundCheck:
    """``h(g(f_1..f_s, T)) <= h(g) + (h + log(s+1) + d log(n+1)) deg_Y g``.

    ``ys`` names the indeterminates of ``g`` being substituted (default
    ``Y1..Ys``); any other indeterminate of ``g`` passes through untouched.
    """
    g = MPoly.coerce(g)
    fs = [MPoly.coerce(f) for f in f_list]
    s = len(fs)
    ys = [f"Y{i + 1}" for i in range(s)] if ys is None else list(ys)
    if len(ys) != s:
        raise InputError("need one name per substituted polynomial")
    if g.is_zero() or any(f.is_zero() for f in fs):
        raise InputError("bound_compose needs nonzero polynomials")
    comp = g.subs(dict(zip(ys, fs)))
    if comp.is_zero():
        raise DegenerateSubstitution("composition vanishes identically")
    n = _arity(fs) if n is None else n
    d = max(f.total_degree for f in fs)
    h = height_system(fs)
    yset = set(ys)
    deg_y = max(sum(e for v, e in m if v in yset) for m in g.terms)
    lhs = height_poly(comp)
    rhs = height_poly(g) + (h + LogValue.log(s + 1) + LogValue.log(n + 1) * d) * deg_y
    return BoundCheck(lhs, rhs)


def bound_det(matrix, n: int | None = None) -> BoundCheck:
    """``h(det) <= s (h + log s + d log(n+1))`` for an s-by-s polynomial matrix."""
    rows = [[MPoly.coerce(e) for e in row] for row in matrix]
    s = len(rows)
    if s == 0 or any(len(r) != s for r in rows):
        raise InputError("bound_det needs a nonempty square matrix")
    entries = [e for r in rows for e in r if not e.is_zero()]
    dm = det(rows, MPoly.zero(), MPoly.const(1))
    if dm.is_zero():
        raise ZeroDeterminant("determinant vanishes identically")
    n = _arity(entries) if n is None else n
    d = max((e.total_degree for e in entries), default=0)
    h = LogValue.zero()
    for e in entries:
        he = height_poly(e)
        if he > h:
            h = he
    lhs = height_poly(dm)
    rhs = (h + LogValue.log(s) + LogValue.log(n + 1) * d) * s
    return BoundCheck(lhs, rhs)


class RhoTransform(NamedTuple):
    f: BPoly
    lhs: LogValue
    rhs: LogValue

    def holds(self) -> bool:
        return self.lhs <= self.rhs


def transform_rho(g: BPoly, m: int, rho) -> RhoTransform:
    """``f = (X - rho)^m g(1/(X - rho), Y)`` with ``h(f) <= h(g) + m h(rho) + 2m log 2``."""
    rho = Fraction(rho)
    if g.deg_x > m:
        raise InputError(f"X-degree {g.deg_x} exceeds m = {m}")
    lin = UPoly([-rho, 1])
    powers = [UPoly.const(1)]
    for _ in range(m):
        powers.append(powers[-1] * lin)
    f = BPoly()
    for (i, j), c in g.terms.items():
        f = f + BPoly._raw({(k, j): c * a for k, a in enumerate(powers[m - i].coeffs)})
    lhs = height_poly(f) if not f.is_zero() else LogValue.zero()
    hg = height_poly(g) if not g.is_zero() else LogValue.zero()
    rhs = hg + height_rational_vector([rho]) * m + LogValue.log(2) * (2 * m)
    return RhoTransform(f, lhs, rhs)


def inverse_transform_rho(f: BPoly, m: int, rho) -> BPoly:
    """Undo :func:`transform_rho`: ``g = X^m f(rho + 1/X, Y)``."""
    rho = Fraction(rho)
    if f.deg_x > m:
        raise InputError(f"X-degree {f.deg_x} exceeds m = {m}")
    lin = UPoly([1, rho])  # rho*X + 1
    powers = [UPoly.const(1)]
    for _ in range(m):
        powers.append(powers[-1] * lin)
    g = BPoly()
    for (i, j), c in f.terms.items():
        # X^(m-i) (rho X + 1)^i
        g = g + BPoly._raw({(k + m - i, j): c * a for k, a in enumerate(powers[i].coeffs)})
    return g


# discriminants of fields ------------------------------------------------------

def silverman_bound(h_alpha: LogValue, deg_lk: int, deg_lq: int | None = None) -> LogValue:
    """``2([L:K] - 1) h(alpha) + log [L:K]``."""
    if deg_lk < 1:
        raise InputError("[L:K] must be >= 1")
    return h_alpha * (2 * (deg_lk - 1)) + LogValue.log(deg_lk)


def quadratic_field_discriminant(d: int) -> int:
    """Discriminant of ``Q(sqrt d)`` for squarefree ``d != 0, 1``."""
    if d in (0, 1) or not _squarefree(d):
        raise InputError("need a squarefree integer other than 0 and 1")
    return d if d % 4 == 1 else 4 * d


def _squarefree(d: int) -> bool:
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def silverman_check(disc_norm: int, h_alpha: LogValue, deg_lk: int, deg_lq: int) -> BoundCheck:
    """Compare ``log |N(D_{L/K})| / [L:Q]`` with the bound."""
    lhs = LogValue.log(abs(disc_norm)) / deg_lq if disc_norm else LogValue.zero()
    return BoundCheck(lhs, silverman_bound(h_alpha, deg_lk, deg_lq))


# arithmetic Bezout -------------------------------------------------------------

@dataclass(frozen=True)
class KPSBound:
    nabla: int
    sigma: Fraction
    height_bound: LogValue
    degree_bound: int
    disc_bound: LogValue
    N: int
    h: LogValue

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "nabla": str(self.nabla),
            "sigma": str(self.sigma),
            "h": self.h.to_json(),
            "height_bound": self.height_bound.to_json(),
            "degree_bound": str(self.degree_bound),
            "disc_bound": self.disc_bound.to_json(),
        }


def nabla_sigma(degrees, N: int) -> tuple[int, Fraction]:
    degs = sorted((int(d) for d in degrees), reverse=True)
    if len(degs) < N:
        raise TooFewEquations(f"{len(degs)} equations cannot cut out an isolated point in dimension {N}")
    if any(d < 1 for d in degs[:N]):
        raise InputError("degrees must be >= 1")
    nabla = 1
    sigma = Fraction(0)
    for d in degs[:N]:
        nabla *= d
        sigma += Fraction(1, d)
    return nabla, sigma


def kps_bound(degrees, h: LogValue, N: int) -> KPSBound:
    nabla, sigma = nabla_sigma(degrees, N)
    lognp1 = LogValue.log(N + 1)
    return KPSBound(
        nabla=nabla,
        sigma=sigma,
        height_bound=h * (nabla * sigma) + lognp1 * (2 * nabla * N),
        degree_bound=nabla,
        disc_bound=h * (2 * nabla * sigma) + lognp1 * (5 * nabla * N),
        N=N,
        h=h,
    )


def _content_y(p: BPoly) -> UPoly:
    g = UPoly()
    for c in p.ycoeffs():
        g = poly_gcd(g, c) if g else c.monic()
    return g


def solve_bivariate(p: BPoly, q: BPoly) -> list[tuple[Fraction, Fraction]]:
    """All intersection points of ``p = q = 0`` with both coordinates rational."""
    if p.is_zero() or q.is_zero():
        raise PositiveDimensional("zero polynomial")
    rx = resultant_y(p, q)
    ry = resultant_y(p.swap(), q.swap())
    if rx.is_zero() or ry.is_zero():
        raise PositiveDimensional("common factor of positive degree")
    if _content_y(p).degree > 0 and _content_y(q).degree > 0 and poly_gcd(_content_y(p), _content_y(q)).degree > 0:
        raise PositiveDimensional("common factor in X")
    ps, qs = p.swap(), q.swap()
    if _content_y(ps).degree > 0 and _content_y(qs).degree > 0 and poly_gcd(_content_y(ps), _content_y(qs)).degree > 0:
        raise PositiveDimensional("common factor in Y")
    xs = [r for r, _ in rational_roots(rx)[0]] if rx.degree > 0 else []
    ys = [r for r, _ in rational_roots(ry)[0]] if ry.degree > 0 else []
    out = []
    for x in xs:
        for y in ys:
            if not p(x, y) and not q(x, y):
                out.append((x, y))
    return out
