"""Exact truncated Laurent series in one variable."""

from __future__ import annotations

from fractions import Fraction

from ..core.scalars import fmt_scalar, to_scalar
from ..core.upoly import UPoly
from ..errors import IndeterminateOrder, InsufficientPrecision

INF = float("inf")


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Series:
    """``sum_k coeffs[k] t^(offset + k) + O(t^prec)``; ``prec=None`` means exact."""

    __slots__ = ("offset", "coeffs", "prec")

    def __init__(self, coeffs=(), offset: int = 0, prec: int | None = None):
        cs = [to_scalar(c) for c in coeffs]
        self._set(cs, offset, prec)

    def _set(self, cs, offset, prec):
        if prec is not None:
            cs = cs[: max(0, prec - offset)]
        lo = 0
        while lo < len(cs) and not cs[lo]:
            lo += 1
        hi = len(cs)
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        self.coeffs = tuple(cs[lo:hi])
        self.offset = offset + lo if self.coeffs else 0
        self.prec = prec

    @classmethod
    def _raw(cls, cs, offset, prec) -> "Series":
        s = cls.__new__(cls)
        s._set(list(cs), offset, prec)
        return s

    @classmethod
    def from_upoly(cls, p: UPoly, prec: int | None = None) -> "Series":
        return cls._raw(p.coeffs, 0, prec)

    @classmethod
    def const(cls, c, prec: int | None = None) -> "Series":
        return cls([c], 0, prec)

    @classmethod
    def zero(cls, prec: int | None = None) -> "Series":
        return cls._raw([], 0, prec)

    # queries
    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def val(self):
        """Certified lower bound on the order."""
        if self.coeffs:
            return self.offset
        return INF if self.prec is None else self.prec

    def ord(self):
        if self.coeffs:
            return self.offset
        if self.prec is None:
            return INF
        raise IndeterminateOrder(f"all coefficients below t^{self.prec} vanish")

    def coeff(self, k: int):
        if self.prec is not None and k >= self.prec:
            raise InsufficientPrecision(f"coefficient {k} is beyond precision {self.prec}")
        i = k - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def coefficients(self, lo: int, hi: int) -> list:
        """Coefficients of ``t^lo .. t^hi`` inclusive."""
        return [self.coeff(k) for k in range(lo, hi + 1)]

    def degree(self) -> int:
        return self.offset + len(self.coeffs) - 1 if self.coeffs else -1

    def truncate(self, prec: int) -> "Series":
        return Series._raw(self.coeffs, self.offset, _min_prec(self.prec, prec))

    def shift(self, k: int) -> "Series":
        """Multiply by ``t^k``."""
        return Series._raw(self.coeffs, self.offset + k, None if self.prec is None else self.prec + k)

    def to_upoly(self) -> UPoly:
        if self.coeffs and self.offset < 0:
            raise ValueError("negative exponents")
        return UPoly._raw([Fraction(0)] * self.offset + list(self.coeffs)) if self.coeffs else UPoly()

    # arithmetic
    @staticmethod
    def _lift(x) -> "Series":
        if isinstance(x, Series):
            return x
        if isinstance(x, UPoly):
            return Series.from_upoly(x)
        return Series._raw([to_scalar(x)], 0, None)

    def __add__(self, other):
        other = self._lift(other)
        prec = _min_prec(self.prec, other.prec)
        if not self.coeffs:
            return other.truncate(prec) if prec is not None else other
        if not other.coeffs:
            return self.truncate(prec) if prec is not None else self
        lo = min(self.offset, other.offset)
        hi = max(self.degree(), other.degree())
        out = [Fraction(0)] * (hi - lo + 1)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.offset + i - lo
                out[k] = out[k] + c
        return Series._raw(out, lo, prec)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw([-c for c in self.coeffs], self.offset, self.prec)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Series, UPoly)):
            c = to_scalar(other)
            return Series._raw([x * c for x in self.coeffs], self.offset, self.prec)
        other = self._lift(other)
        precs = []
        if self.prec is not None:
            precs.append(self.prec + other.val())
        if other.prec is not None:
            precs.append(other.prec + self.val())
        prec = min(precs) if precs else None
        if prec == INF:
            prec = None
        if not self.coeffs or not other.coeffs:
            return Series._raw([], 0, prec if prec is None else int(prec))
        off = self.offset + other.offset
        n = len(self.coeffs) + len(other.coeffs) - 1
        if prec is not None:
            n = min(n, max(0, int(prec) - off))
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + a * b
        return Series._raw(out, off, None if prec is None else int(prec))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = Series.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.offset, self.coeffs, self.prec) == (other.offset, other.coeffs, other.prec)

    def __hash__(self):
        return hash((self.offset, self.coeffs, self.prec))

    def agrees_with(self, other: "Series") -> bool:
        """Coefficient-wise agreement up to the smaller precision."""
        d = self - other
        return not d.coeffs

    def to_json(self) -> dict:
        return {
            "offset": self.offset,
            "coeffs": [fmt_scalar(c) for c in self.coeffs],
            "prec": self.prec,
        }

    def __repr__(self):
        return f"Series({self})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            k = self.offset + i
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            cs = str(c) if isinstance(c, Fraction) else f"({c})"
            parts.append(cs if not mono else (mono if c == 1 else f"{cs}*{mono}"))
        body = " + ".join(parts) if parts else "0"
        return body if self.prec is None else f"{body} + O(t^{self.prec})"


def ord(obj):
    """Order of vanishing at 0 of a series, a polynomial, or a scalar."""
    if isinstance(obj, Series):
        return obj.ord()
    if isinstance(obj, UPoly):
        return obj.ord0()
    if hasattr(obj, "ycoeffs"):  # bivariate: order in X
        return min((i for i, _ in obj.terms), default=INF)
    return INF if not obj else 0
