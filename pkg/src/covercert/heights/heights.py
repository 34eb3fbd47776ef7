"""Absolute logarithmic heights of rational vectors, algebraic numbers and polynomials."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..core.linalg import charpoly_berkowitz
from ..core.mpoly import MPoly
from ..core.numberfield import multiplication_matrix
from ..core.roots import complex_roots, rational_roots
from ..core.scalars import as_rational
from ..core.upoly import UPoly, poly_gcd, squarefree_part
from ..errors import InputError
from .logvalue import LogValue, log_bounds


def height_rational_vector(v) -> LogValue:
    """``log max(|a_1|, ..., |a_N|, b)`` for ``v = (a_i / b)`` in lowest terms."""
    v = [Fraction(x) for x in v]
    if not v:
        raise InputError("height of an empty vector")
    b = lcm(*(x.denominator for x in v))
    top = max(max(abs(x.numerator) * (b // x.denominator) for x in v), b)
    return LogValue.log(top)


def height_algebraic(minpoly) -> LogValue:
    """``(1/d) log M(p)`` for the primitive integer form of the minimal polynomial.

    Exact when every root is rational; otherwise a certified refinable enclosure
    driven by root boxes of shrinking width.
    """
    p = minpoly if isinstance(minpoly, UPoly) else UPoly(minpoly)
    if p.degree < 1:
        raise InputError("minimal polynomial must have degree >= 1")
    if poly_gcd(p, p.diff()).degree > 0:
        raise InputError("minimal polynomial must be squarefree")
    ints = p.primitive_integer()
    d = p.degree
    prim = UPoly(ints)
    roots, cof = rational_roots(prim)
    exact = LogValue.log(abs(ints[-1])) if cof.degree <= 0 else LogValue.zero()
    if cof.degree <= 0:
        for r, _ in roots:
            if abs(r) > 1:
                exact = exact + LogValue.log(abs(r))
        return exact / d
    lead = abs(ints[-1])

    def enclose(bits: int):
        boxes = complex_roots(prim, bits + 8)
        lo = hi = Fraction(0)
        llo, lhi = log_bounds(lead, bits + 8)
        lo, hi = lo + llo, hi + lhi
        for box in boxes:
            a2, b2 = box.abs2_bounds()
            if b2 > 1:
                l1 = log_bounds(a2, bits + 8)[0] / 2 if a2 > 1 else Fraction(0)
                l2 = log_bounds(b2, bits + 8)[1] / 2
                lo, hi = lo + l1, hi + l2
        return lo / d, hi / d

    return LogValue.refinable(enclose, label=f"h(root of {p})")


def element_minpoly(a) -> UPoly:
    """Minimal polynomial over Q of a scalar (rational or number-field element)."""
    q = as_rational(a)
    if q is not None:
        return UPoly([-q, 1])
    mat = multiplication_matrix(a)
    cp = charpoly_berkowitz(mat, Fraction(0), Fraction(1))
    return squarefree_part(UPoly(list(reversed(cp))))


def height_element(a) -> LogValue:
    q = as_rational(a)
    if q is not None:
        return height_rational_vector([q])
    return height_algebraic(element_minpoly(a))


def height_vector(v) -> LogValue:
    """Height of a vector of scalars.

    Rational vectors are exact.  With irrational field coordinates the result is
    the enclosure ``[max_i h(a_i), sum_i h(a_i)]`` (not refinable).
    """
    v = list(v)
    rats = [as_rational(x) for x in v]
    if all(r is not None for r in rats):
        return height_rational_vector(rats)
    hs = [height_element(x) for x in v]
    bits = 96
    los, his = zip(*(h.enclose(bits) for h in hs))
    return LogValue.interval(max(los), sum(his))


def poly_coefficients(f) -> list:
    if isinstance(f, MPoly):
        return f.coefficients()
    if isinstance(f, UPoly):
        return [c for c in f.coeffs if c]
    if hasattr(f, "terms"):
        return [f.terms[k] for k in sorted(f.terms)]
    if isinstance(f, (list, tuple)):
        return [c for c in f if c]
    return [f]


def height_poly(f) -> LogValue:
    """Height of the vector of nonzero coefficients."""
    cs = poly_coefficients(f)
    if not cs:
        raise InputError("height of the zero polynomial")
    return height_vector(cs)


def height_system(polys) -> LogValue:
    """Joint height of all nonzero coefficients of several polynomials."""
    cs = [c for f in polys for c in poly_coefficients(f)]
    if not cs:
        raise InputError("height of an empty system")
    return height_vector(cs)


def total_degree(f) -> int:
    if isinstance(f, MPoly):
        return f.total_degree
    if isinstance(f, UPoly):
        return f.degree
    return f.total_degree
