"""Resultants and discriminants with respect to Y.

The main path is the subresultant pseudo-remainder sequence over ``K[X]``;
the Sylvester determinant is kept as an independent cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from .bpoly import BPoly
from .linalg import det
from .upoly import UPoly


def _strip(cs: list) -> list:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b``."""
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        c = r[-1]
        r = [x * lb for x in r]
        for i, bi in enumerate(b):
            r[i + dr - db] = r[i + dr - db] - c * bi
        r = _strip(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [x * f for x in r]
    return r


def _exquo(a, b):
    if isinstance(a, UPoly):
        return a.exquo(b if isinstance(b, UPoly) else UPoly([b]))
    return a / b


def resultant_lists(a: list, b: list, one):
    """Resultant of two polynomials given as coefficient lists (lowest first)
    over an integral domain supporting exact division (Collins' subresultant PRS)."""
    a, b = _strip(list(a)), _strip(list(b))
    if not a or not b:
        return one * 0
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -s
    if db == 0:
        return (b[0] ** da) * s
    g = one
    h = one
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        a = b
        da = db
        if not r:
            return one * 0
        den = g * h ** delta
        b = [_exquo(x, den) for x in r]
        db = len(b) - 1
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exquo(g ** delta, h ** (delta - 1))
        if db == 0:
            if da == 0:
                res = one
            elif da == 1:
                res = b[0]
            else:
                res = _exquo(b[0] ** da, h ** (da - 1))
            return res * s


def resultant_y(p: BPoly, q: BPoly) -> UPoly:
    """``Res_Y(p, q)`` as a polynomial in X."""
    one = UPoly.const(1)
    res = resultant_lists(p.ycoeffs(), q.ycoeffs(), one)
    return res if isinstance(res, UPoly) else UPoly([res])


def resultant(p: UPoly, q: UPoly):
    """Resultant of two univariate polynomials."""
    return resultant_lists(list(p.coeffs), list(q.coeffs), Fraction(1))


def sylvester_matrix(a: list, b: list, zero) -> list[list]:
    """Sylvester matrix of coefficient lists (lowest first)."""
    da, db = len(a) - 1, len(b) - 1
    size = da + db
    rows = []
    for k in range(db):
        row = [zero] * size
        for i, c in enumerate(reversed(a)):
            row[k + i] = c
        rows.append(row)
    for k in range(da):
        row = [zero] * size
        for i, c in enumerate(reversed(b)):
            row[k + i] = c
        rows.append(row)
    return rows


def resultant_y_sylvester(p: BPoly, q: BPoly) -> UPoly:
    a, b = p.ycoeffs(), q.ycoeffs()
    if not a or not b:
        return UPoly()
    m = sylvester_matrix(a, b, UPoly())
    return det(m, UPoly(), UPoly.const(1))


def discriminant_y(f: BPoly) -> UPoly:
    """``(-1)^(n(n-1)/2) Res_Y(f, f'_Y) / lc_Y(f)``."""
    n = f.deg_y
    if n < 1:
        raise ValueError("discriminant needs positive Y-degree")
    r = resultant_y(f, f.diff_y())
    d = r.exquo(f.lc_y())
    return -d if (n * (n - 1) // 2) % 2 else d


def discriminant(p: UPoly):
    n = p.degree
    r = resultant(p, p.diff())
    d = r / p.lc
    return -d if (n * (n - 1) // 2) % 2 else d
