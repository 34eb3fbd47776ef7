"""Number fields Q[t]/(minpoly) and their elements."""

from __future__ import annotations

from fractions import Fraction

from ..errors import InputError, ReducibleField, ZeroInverse
from .scalars import to_scalar
from .upoly import UPoly, ext_gcd, poly_gcd


class NumberField:
    """``Q(a)`` with ``a`` a root of a monic squarefree rational polynomial.

    Irreducibility is proved (absence of rational roots) for degree <= 3; above
    that it is recorded as ``asserted`` and a reducible modulus surfaces later
    as :class:`ReducibleField` from :func:`nf_inverse`.
    """

    def __init__(self, minpoly, name: str = "a"):
        p = minpoly if isinstance(minpoly, UPoly) else UPoly(minpoly)
        if p.degree < 1:
            raise InputError("minimal polynomial must have degree >= 1")
        if not all(isinstance(c, Fraction) for c in p.coeffs):
            raise InputError("minimal polynomial must have rational coefficients")
        if p.lc != 1:
            raise InputError("minimal polynomial must be monic")
        if poly_gcd(p, p.diff()).degree > 0:
            raise InputError("minimal polynomial must be squarefree")
        self.minpoly = p
        self.name = name
        self.degree = p.degree
        if self.degree == 1:
            self.irreducibility = "proved"
        elif self.degree <= 3:
            from .roots import rational_roots

            roots, _ = rational_roots(p)
            if roots:
                raise ReducibleField(f"{p} has the rational root {roots[0][0]}", UPoly([-roots[0][0], 1]))
            self.irreducibility = "proved"
        else:
            self.irreducibility = "asserted"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberField({self.minpoly})"

    @property
    def gen(self) -> "NFElem":
        return self([0, 1]) if self.degree > 1 else self([-self.minpoly.coeffs[0]])

    def __call__(self, coords) -> "NFElem":
        if isinstance(coords, NFElem):
            return coords
        if not isinstance(coords, (list, tuple)):
            return NFElem(self, [to_scalar(coords)])
        return NFElem(self, [to_scalar(c) for c in coords])

    def zero(self) -> "NFElem":
        return NFElem(self, [])

    def one(self) -> "NFElem":
        return NFElem(self, [Fraction(1)])

    def descriptor(self) -> dict:
        return {"minpoly": [str(c) for c in self.minpoly.coeffs], "name": self.name}


class NFElem:
    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        d = field.degree
        cs = [Fraction(c) if not isinstance(c, Fraction) else c for c in coords]
        if len(cs) > d:
            cs = list((UPoly._raw(cs) % field.minpoly).coeffs)
        cs = cs + [Fraction(0)] * (d - len(cs))
        self.field = field
        self.coords = tuple(cs)

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field is not self.field and other.field != self.field:
                raise TypeError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return NFElem(self.field, [other])
        return None

    def poly(self) -> UPoly:
        return UPoly._raw(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElem(self.field, [a - b for a, b in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return NFElem(self.field, [a * other for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = self.poly() * o.poly()
        return NFElem(self.field, (prod % self.field.minpoly).coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroInverse("division by zero")
            return NFElem(self.field, [a / other for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * nf_inverse(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * nf_inverse(self)

    def __pow__(self, e: int):
        if e < 0:
            return nf_inverse(self) ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, bool) else None
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        if all(c == 0 for c in self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __repr__(self):
        return f"NFElem({self})"

    def __str__(self):
        from .upoly import format_univariate

        return format_univariate(_strip_zeros(self.coords), self.field.name)


def _strip_zeros(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def nf_inverse(a: NFElem) -> NFElem:
    """Inverse by the extended Euclidean algorithm on the representative and the modulus."""
    if not a:
        raise ZeroInverse("zero has no inverse")
    g, s, _ = ext_gcd(a.poly(), a.field.minpoly)
    if g.degree > 0:
        raise ReducibleField(f"minimal polynomial {a.field.minpoly} has the factor {g}", g)
    return NFElem(a.field, (s % a.field.minpoly).coeffs)


def multiplication_matrix(a: NFElem) -> list[list[Fraction]]:
    """Matrix of ``x -> a*x`` in the power basis (columns are images of basis vectors)."""
    d = a.field.degree
    cols = []
    for k in range(d):
        basis = NFElem(a.field, [0] * k + [1])
        cols.append((a * basis).coords)
    return [[cols[j][i] for j in range(d)] for i in range(d)]
