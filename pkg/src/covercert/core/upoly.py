"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first and may be ``Fraction`` or
``NFElem``.  The zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm, gcd

from .scalars import to_scalar


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([to_scalar(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs) -> "UPoly":
        p = cls.__new__(cls)
        p.coeffs = _strip(list(coeffs))
        return p

    @classmethod
    def x(cls) -> "UPoly":
        return cls._raw([Fraction(0), Fraction(1)])

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> "UPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls._raw([-r, Fraction(1)])
        return p

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def ord0(self) -> float | int:
        """Order of vanishing at 0 (``inf`` for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return float("inf")

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly._raw([to_scalar(other)])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly._raw([to_scalar(other)])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            other = to_scalar(other)
            if not other:
                return UPoly._raw([])
            return UPoly._raw([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly._raw([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return UPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = UPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "UPoly"):
        if not isinstance(other, UPoly):
            other = UPoly._raw([to_scalar(other)])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lc
        if len(r) - 1 < db:
            return UPoly._raw([]), self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    r[k + i] = r[k + i] - c * b
        return UPoly._raw(q), UPoly._raw(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other) -> "UPoly":
        """Exact division; raises ``ArithmeticError`` when a remainder is left."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other):
        if isinstance(other, UPoly):
            return self.exquo(other)
        inv = 1 / to_scalar(other)
        return UPoly._raw([c * inv for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UPoly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # calculus and evaluation
    def diff(self) -> "UPoly":
        return UPoly._raw([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def compose(self, q: "UPoly") -> "UPoly":
        acc = UPoly._raw([])
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, a) -> "UPoly":
        """``p(X + a)``."""
        return self.compose(UPoly._raw([to_scalar(a), Fraction(1)]))

    def reverse(self, n: int | None = None) -> "UPoly":
        """``X^n p(1/X)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return UPoly._raw(cs[::-1])

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self / self.lc

    def primitive_integer(self) -> tuple[int, ...]:
        """Integer coefficients of the primitive multiple with positive leading coefficient."""
        if not all(isinstance(c, Fraction) for c in self.coeffs):
            raise TypeError("integer form needs rational coefficients")
        den = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        g = g or 1
        if ints and ints[-1] < 0:
            g = -g
        return tuple(v // g for v in ints)

    def __repr__(self):
        return f"UPoly({self})"

    def __str__(self):
        return format_univariate(self.coeffs, "X")


def format_univariate(coeffs, var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        parts.append(_term(c, mono))
    return _join(parts)


def _term(c, mono: str) -> str:
    if isinstance(c, Fraction):
        if not mono:
            return str(c)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"
    return f"({c})*{mono}" if mono else f"({c})"


def _join(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd over the coefficient field."""
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = UPoly.const(1), UPoly._raw([])
    t0, t1 = UPoly._raw([]), UPoly.const(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(p: UPoly) -> UPoly:
    if p.degree <= 0:
        return p.monic()
    return (p // poly_gcd(p, p.diff())).monic()
