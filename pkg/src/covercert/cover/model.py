"""Plane models, elimination and normalization at infinity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.bpoly import BPoly
from ..core.linalg import det
from ..core.mpoly import MPoly
from ..core.resultant import discriminant_y, sylvester_matrix
from ..core.scalars import fmt_scalar
from ..errors import InputError, NotSquarefreeAfterReduction, RamifiedAtInfinity, WrongPoleOrder
from ..series.branches import infer_field, power_series_roots
from ..series.series import Series


@dataclass(frozen=True)
class PlaneModel:
    f: BPoly
    field: object = None

    def __post_init__(self):
        if not self.f.monic_in_y():
            raise InputError("plane model must be monic in Y")
        if self.n < 2:
            raise InputError("need deg_Y f >= 2")
        if self.m < 1:
            raise InputError("need deg_X f >= 1")

    @property
    def m(self) -> int:
        return self.f.deg_x

    @property
    def n(self) -> int:
        return self.f.deg_y

    def theta(self) -> list[list]:
        """``theta[i][j]`` = coefficient of ``X^i Y^j`` for ``0 <= i <= m``, ``0 <= j < n``."""
        return [[self.f.coeff(i, j) for j in range(self.n)] for i in range(self.m + 1)]

    def to_json(self) -> dict:
        return {
            "f": [[fmt_scalar(c) for c in row] for row in self.f.to_matrix()],
            "m": self.m,
            "n": self.n,
            "field": self.field.descriptor() if self.field is not None else None,
        }


def _as_mpoly(expr, xname="X", yname="Y0") -> MPoly:
    if isinstance(expr, MPoly):
        return expr
    if isinstance(expr, BPoly):
        return MPoly.from_bpoly(expr, xname, yname)
    return MPoly.coerce(expr)


def _mpoly_to_bpoly(p: MPoly, xname="X", yname="Y") -> BPoly:
    terms = {}
    for mono, c in p.terms.items():
        d = dict(mono)
        extra = set(d) - {xname, yname}
        if extra:
            raise InputError(f"unexpected indeterminates {sorted(extra)}")
        terms[(d.get(xname, 0), d.get(yname, 0))] = c
    return BPoly._raw(terms)


def _kth_root_monic(R: BPoly, k: int) -> BPoly | None:
    """``P`` monic in Y with ``P^k = R``, or None."""
    N = R.deg_y
    if N % k:
        return None
    n = N // k
    s = list(reversed(R.ycoeffs()))  # s[0] = 1, s[i] = coefficient of Y^(N-i)
    # q = s^(1/k) as a series in 1/Y: i q_i = sum_{j=1}^{i} ((1/k + 1) j - i) s_j q_{i-j}
    alpha = Fraction(1, k)
    q = [s[0]]
    for i in range(1, n + 1):
        acc = s[0] * 0
        for j in range(1, i + 1):
            if j < len(s) and s[j]:
                acc = acc + s[j] * q[i - j] * ((alpha + 1) * j - i)
        q.append(acc / i)
    P = BPoly.from_ycoeffs(list(reversed(q)))
    return P if P ** k == R else None


def eliminate(F0: BPoly, y_expr, field=None) -> PlaneModel:
    """Minimal polynomial of ``y = y_expr(x, y0)`` over ``Q(x)`` where ``F0(x, y0) = 0``.

    Computed as ``Res_{Y0}(F0(X, Y0), Y - y_expr(X, Y0))`` by a Sylvester
    determinant over ``Q[X, Y]``, then normalized monic in Y.
    """
    u = _as_mpoly(y_expr)
    if u.variables() - {"X", "Y0"}:
        raise InputError("y_expr may only involve x and y0")
    a = [MPoly.from_upoly(c, "X") for c in F0.ycoeffs()]
    b_poly = MPoly.var("Y") - u
    bc = b_poly.coeffs_in("Y0")
    db = max(bc)
    if db < 1:
        raise InputError("y_expr must involve y0")
    b = [bc.get(k, MPoly.zero()) for k in range(db + 1)]
    mat = sylvester_matrix(a, b, MPoly.zero())
    res = det(mat, MPoly.zero(), MPoly.const(1))
    R = _mpoly_to_bpoly(res)
    lc = R.lc_y()
    if lc.degree != 0:
        raise InputError("y is not integral over Q[x]: leading coefficient depends on X")
    R = R / lc.coeffs[0]
    field = field or infer_field(F0)
    if discriminant_y(R).is_zero():
        N = R.deg_y
        for k in range(N, 1, -1):
            P = _kth_root_monic(R, k)
            if P is not None and not discriminant_y(P).is_zero():
                raise NotSquarefreeAfterReduction(
                    f"eliminant is the {k}-th power of a degree {P.deg_y} polynomial; y generates a proper subfield",
                    model=P, power=k)
        raise InputError("eliminant is not squarefree and no power structure was found")
    return PlaneModel(R, field)


@dataclass
class NormalizationReport:
    m: int
    c_minus_m: object
    c_0: object
    pole_branch: int
    y_expr: MPoly
    expansions: list

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "seed_c_minus_m": fmt_scalar(self.c_minus_m),
            "seed_c_0": fmt_scalar(self.c_0),
            "pole_branch_index": self.pole_branch,
            "y_expr": self.y_expr.to_json(),
            "seed_expansions": [s.to_json() for s in self.expansions],
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def branches_at_infinity_raw(F0: BPoly, field=None, prec: int = 16) -> list[Series]:
    """Laurent expansions in ``t = 1/x`` of all roots ``y0`` of ``F0``; the cover must be unramified at infinity."""
    if not F0.monic_in_y():
        raise InputError("F0 must be monic in Y0")
    n0 = F0.deg_y
    cols = F0.ycoeffs()
    e = max([_ceil_div(max(c.degree, 0), n0 - j) for j, c in enumerate(cols[:-1]) if c] + [0])
    E = e * n0
    G = BPoly._raw({(E - i - e * j, j): c for (i, j), c in F0.terms.items()})
    from ..core.resultant import resultant_y

    rg = resultant_y(G, G.diff_y())
    if rg.is_zero():
        raise InputError("F0 is not squarefree")
    res = power_series_roots(G, field, int(rg.ord0()) + 2, prec)
    if not res.complete or len(res.branches) != n0:
        raise RamifiedAtInfinity("the cover defined by F0 is ramified above infinity")
    return [w.shift(-e) for w in res.branches]


def _eval_laurent(u: MPoly, ys: Series) -> Series:
    x = Series._raw([Fraction(1)], -1, None)
    acc = Series.zero()
    for mono, c in u.terms.items():
        d = dict(mono)
        term = Series.const(c) * (x ** d.get("X", 0)) * (ys ** d.get("Y0", 0))
        acc = acc + term
    return acc


def normalize_at_infinity(F0: BPoly, seed_u, m: int | None = None, field=None) -> tuple[MPoly, NormalizationReport]:
    """Rescale ``u`` so its expansion at the designated pole reads ``t^-m + 0*t^0 + ...``.

    With ``m=None`` the pole order of the seed is taken as ``m``.
    """
    u = _as_mpoly(seed_u)
    field = field or infer_field(F0)
    prec = 8 + 2 * (m or F0.deg_x) + u.total_degree * 4
    while True:
        ys = branches_at_infinity_raw(F0, field, prec)
        exps = [_eval_laurent(u, y) for y in ys]
        if all(s.prec is None or s.prec > 0 for s in exps):
            break
        prec *= 2
    poles = [i for i, s in enumerate(exps) if s.val() < 0]
    if len(poles) != 1:
        raise WrongPoleOrder(f"seed has poles along {len(poles)} branches at infinity, need exactly one")
    k = poles[0]
    s = exps[k]
    if m is None:
        m = -s.ord()
    if s.ord() != -m:
        raise WrongPoleOrder(f"seed has a pole of order {-s.ord()}, expected {m}")
    cm, c0 = s.coeff(-m), s.coeff(0)
    y_expr = (u - c0) * (1 / cm)
    return y_expr, NormalizationReport(m, cm, c0, k, y_expr, exps)
