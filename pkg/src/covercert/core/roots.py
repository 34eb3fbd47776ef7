"""Root extraction: rational roots, roots in a number field, certified complex boxes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from ..errors import PrecisionExhausted
from .scalars import as_rational, scalar_key
from .upoly import UPoly, poly_gcd, squarefree_part

DEFAULT_PRECISION_CAP = 4096


@dataclass(frozen=True)
class ComplexBox:
    """Axis-parallel box with dyadic endpoints, certified to contain one root."""

    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction
    precision: int

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def mid(self) -> tuple[Fraction, Fraction]:
        return (self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2

    def contains(self, re, im=0) -> bool:
        return self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi

    def may_be_real(self) -> bool:
        return self.im_lo <= 0 <= self.im_hi

    def abs2_bounds(self) -> tuple[Fraction, Fraction]:
        """Bounds ``(lo, hi)`` on ``|z|^2`` over the box."""
        def near(lo, hi):
            if lo <= 0 <= hi:
                return Fraction(0)
            return min(abs(lo), abs(hi))

        lo = near(self.re_lo, self.re_hi) ** 2 + near(self.im_lo, self.im_hi) ** 2
        hi = max(abs(self.re_lo), abs(self.re_hi)) ** 2 + max(abs(self.im_lo), abs(self.im_hi)) ** 2
        return lo, hi

    def to_json(self) -> dict:
        return {
            "re": [str(self.re_lo), str(self.re_hi)],
            "im": [str(self.im_lo), str(self.im_hi)],
            "precision": self.precision,
        }


def _rational_coeffs(p: UPoly) -> UPoly:
    cs = []
    for c in p.coeffs:
        q = as_rational(c)
        if q is None:
            raise TypeError("polynomial has irrational coefficients")
        cs.append(q)
    return UPoly._raw(cs)


def _multiplicity(p: UPoly, r) -> tuple[int, UPoly]:
    lin = UPoly._raw([-r, Fraction(1)])
    k = 0
    while True:
        q, rem = divmod(p, lin)
        if rem:
            return k, p
        p = q
        k += 1


def rational_roots(p: UPoly) -> tuple[list[tuple[Fraction, int]], UPoly]:
    """All rational roots with multiplicity, plus the cofactor with no rational roots."""
    p = _rational_coeffs(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    found = []
    k = int(p.ord0()) if p.degree > 0 else 0
    if k:
        found.append((Fraction(0), k))
        p = UPoly._raw(p.coeffs[k:])
    for r in _rational_root_candidates(squarefree_part(p)):
        mult, p = _multiplicity(p, r)
        if mult:
            found.append((r, mult))
    found.sort(key=lambda t: t[0])
    return found, p


def _rational_root_candidates(s: UPoly) -> list[Fraction]:
    d = s.degree
    if d <= 0:
        return []
    if d == 1:
        return [-s.coeffs[0] / s.coeffs[1]]
    if d == 2:
        c, b, a = s.coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        rn, rd = isqrt(disc.numerator), isqrt(disc.denominator)
        if rn * rn != disc.numerator or rd * rd != disc.denominator:
            return []
        sq = Fraction(rn, rd)
        return [(-b - sq) / (2 * a), (-b + sq) / (2 * a)]
    ints = s.primitive_integer()
    lead = abs(ints[-1])
    prim = UPoly(ints)
    bits = lead.bit_length() + 8
    out = []
    for box in _certified_boxes(prim, bits, DEFAULT_PRECISION_CAP):
        if not box.may_be_real():
            continue
        lo = box.re_lo * lead
        hi = box.re_hi * lead
        k = lo.numerator // lo.denominator
        while k <= hi:
            r = Fraction(k, lead)
            if r >= box.re_lo and not prim(r):
                out.append(r)
            k += 1
    return out


def complex_roots(p: UPoly, precision: int = 53, cap: int = DEFAULT_PRECISION_CAP) -> list[ComplexBox]:
    """Pairwise disjoint boxes of width <= 2^-precision, one per root of ``p``.

    ``p`` must be squarefree with rational coefficients.  Approximations come
    from mpmath; the enclosure is certified exactly with Gerschgorin discs of
    the Weierstrass correction matrix.
    """
    p = _rational_coeffs(p)
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if poly_gcd(p, p.diff()).degree > 0:
        raise ValueError("polynomial is not squarefree")
    if p.degree == 1:
        r = -p.coeffs[0] / p.coeffs[1]
        return [ComplexBox(r, r, Fraction(0), Fraction(0), precision)]
    return _certified_boxes(p, precision, cap)


def _certified_boxes(p: UPoly, precision: int, cap: int) -> list[ComplexBox]:
    bits = max(precision + 16, 64)
    while bits <= cap + 64:
        boxes = _try_certify(p, precision, bits)
        if boxes is not None:
            boxes.sort(key=lambda b: (b.mid[0], b.mid[1]))
            return boxes
        bits *= 2
    raise PrecisionExhausted(f"could not isolate the roots of {p} within {cap} bits")


def _approximate(p: UPoly, bits: int) -> list[tuple[Fraction, Fraction]] | None:
    dps = int(bits * 0.30103) + 20
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        try:
            zs = mpmath.polyroots(coeffs, maxsteps=50 + 4 * p.degree + bits // 4, extraprec=2 * bits)
        except mpmath.libmp.NoConvergence:
            return None
        scale = 1 << (bits + 8)
        out = []
        for z in zs:
            z = mpmath.mpc(z)
            out.append((Fraction(int(mpmath.nint(z.real * scale)), scale),
                        Fraction(int(mpmath.nint(z.imag * scale)), scale)))
        return out


def _cmul(a, b):
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _sqrt_up(x: Fraction, s: int) -> Fraction:
    scale = 1 << (2 * s)
    v = x * scale
    n = -(-v.numerator // v.denominator)
    return Fraction(isqrt(n) + 1, 1 << s)


def _try_certify(p: UPoly, precision: int, bits: int) -> list[ComplexBox] | None:
    zs = _approximate(p, bits)
    if zs is None:
        return None
    d = p.degree
    lc = p.lc
    boxes = []
    target = Fraction(1, 1 << precision)
    for i, z in enumerate(zs):
        val = (Fraction(0), Fraction(0))
        for c in reversed(p.coeffs):
            val = _cmul(val, z)
            val = (val[0] + c, val[1])
        den = (lc, Fraction(0))
        for j, w in enumerate(zs):
            if j != i:
                den = _cmul(den, (z[0] - w[0], z[1] - w[1]))
        n2 = den[0] ** 2 + den[1] ** 2
        if not n2:
            return None
        w2 = (val[0] ** 2 + val[1] ** 2) / n2
        radius = d * _sqrt_up(w2, bits + 8)
        if 2 * radius > target:
            return None
        boxes.append(ComplexBox(z[0] - radius, z[0] + radius, z[1] - radius, z[1] + radius, precision))
    for a, b in itertools.combinations(boxes, 2):
        if not (a.re_hi < b.re_lo or b.re_hi < a.re_lo or a.im_hi < b.im_lo or b.im_hi < a.im_lo):
            return None
    return boxes


# roots inside a number field

def nf_roots(p: UPoly, field) -> tuple[list, UPoly]:
    """Roots of a rational polynomial lying in ``field`` (exact, with multiplicity).

    Candidates come from a numerical solve of the conjugate system
    ``sum_k c_k a_l^k = z_l`` over all assignments of roots to embeddings; every
    reported root is verified exactly.  Returns ``(roots, cofactor over field)``.
    """
    if field is None or field.degree == 1:
        rr, cof = rational_roots(p)
        if field is None:
            return rr, cof
        return [(field(r), m) for r, m in rr], cof.__class__._raw([field(c) for c in cof.coeffs])
    p = _rational_coeffs(p)
    rr, cof = rational_roots(p)
    found = [(field(r), m) for r, m in rr]
    s = squarefree_part(cof)
    if s.degree >= 1:
        for r in _nf_candidates(s, field):
            if not _eval_in_field(s, r):
                found.append((r, None))
    result = []
    rem = UPoly._raw([field(c) for c in p.coeffs])
    for r, _ in found:
        mult, rem = _multiplicity(rem, r)
        if mult:
            result.append((r, mult))
    result.sort(key=lambda t: scalar_key(t[0]))
    return result, rem


def _eval_in_field(p: UPoly, r):
    acc = r.field.zero()
    for c in reversed(p.coeffs):
        acc = acc * r + c
    return acc


def _nf_candidates(s: UPoly, field, dps: int = 80) -> list:
    D = field.degree
    with mpmath.workdps(dps):
        zs = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(s.coeffs)],
                              maxsteps=400, extraprec=4 * dps)
        ths = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(field.minpoly.coeffs)],
                               maxsteps=400, extraprec=4 * dps)
        vand = mpmath.matrix([[t ** k for k in range(D)] for t in ths])
        inv = mpmath.inverse(vand)
        tol = mpmath.mpf(10) ** (-dps // 2)
        out, seen = [], set()
        for combo in itertools.product(range(len(zs)), repeat=D):
            rhs = mpmath.matrix([zs[i] for i in combo])
            c = inv * rhs
            if any(abs(mpmath.im(c[k])) > tol * (1 + abs(c[k])) for k in range(D)):
                continue
            coords = [Fraction(mpmath.nstr(mpmath.re(c[k]), dps - 5)).limit_denominator(10 ** 30) for k in range(D)]
            key = tuple(coords)
            if key in seen:
                continue
            seen.add(key)
            out.append(field(coords))
        return out


def roots_in_field(q: UPoly, field) -> tuple[list, UPoly]:
    """Roots of ``q`` (coefficients rational or in ``field``) lying in ``field``."""
    rational = all(as_rational(c) is not None for c in q.coeffs)
    if field is None:
        return rational_roots(q)
    if rational:
        return nf_roots(_rational_coeffs(q), field)
    norm = field_norm(q, field)
    cands, _ = nf_roots(norm, field)
    result = []
    rem = UPoly._raw([field(c) for c in q.coeffs])
    for r, _ in cands:
        mult, rem = _multiplicity(rem, r)
        if mult:
            result.append((r, mult))
    result.sort(key=lambda t: scalar_key(t[0]))
    return result, rem


def field_norm(q: UPoly, field) -> UPoly:
    """``N(q) = Res_t(minpoly(t), q(X, t))`` in ``Q[X]``."""
    from .bpoly import BPoly
    from .resultant import resultant_y

    terms = {}
    for i, c in enumerate(q.coeffs):
        coords = getattr(c, "coords", None) or (Fraction(c),)
        for k, v in enumerate(coords):
            if v:
                terms[(i, k)] = v
    lifted = BPoly(terms)
    mu = BPoly({(0, k): c for k, c in enumerate(field.minpoly.coeffs)})
    return resultant_y(mu, lifted)
