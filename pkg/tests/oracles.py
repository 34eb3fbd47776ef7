"""Independent reference computations used by the tests (sympy and brute force)."""

from __future__ import annotations

from fractions import Fraction

import sympy

from covercert.core.bpoly import BPoly
from covercert.core.upoly import UPoly

sx, sy = sympy.symbols("x y")


def place_height_argument(v) -> Fraction:
    """``exp h(v)`` as the product over all places of ``max(1, |v_1|_v, ...)``."""
    v = [Fraction(a) for a in v]
    total = Fraction(max([1] + [abs(a) for a in v]))  # archimedean place
    primes = set()
    for a in v:
        if a:
            primes |= set(sympy.factorint(abs(a.numerator))) | set(sympy.factorint(a.denominator))
    for p in primes:
        worst = 0  # max over i of -v_p(a_i), clipped below at 0
        for a in v:
            if not a:
                continue
            vp = sympy.multiplicity(p, a.numerator) - sympy.multiplicity(p, a.denominator)
            worst = max(worst, -vp)
        total *= Fraction(p) ** worst
    return total


def to_sympy_u(p: UPoly, var=sx):
    return sum((sympy.Rational(c.numerator, c.denominator) * var**k for k, c in enumerate(p.coeffs)),
               sympy.Integer(0))


def to_sympy_b(f: BPoly):
    return sum((sympy.Rational(c.numerator, c.denominator) * sx**i * sy**j for (i, j), c in f.terms.items()),
               sympy.Integer(0))


def from_sympy_u(expr, var=sx) -> UPoly:
    poly = sympy.Poly(sympy.expand(expr), var)
    cs = list(reversed(poly.all_coeffs()))
    return UPoly([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in cs])
