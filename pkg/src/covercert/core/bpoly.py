"""Sparse bivariate polynomials ``sum c_ij X^i Y^j``."""

from __future__ import annotations

from fractions import Fraction

from .scalars import to_scalar
from .upoly import UPoly, _join, _term


class BPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = to_scalar(c)
            if c:
                out[(i, j)] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms: dict) -> "BPoly":
        p = cls.__new__(cls)
        p.terms = {k: v for k, v in terms.items() if v}
        return p

    @classmethod
    def from_matrix(cls, rows) -> "BPoly":
        """``rows[i][j]`` is the coefficient of ``X^i Y^j``."""
        return cls({(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row)})

    @classmethod
    def from_ycoeffs(cls, cols) -> "BPoly":
        """Build from ``cols[j]`` = coefficient of ``Y^j`` as a UPoly in X."""
        return cls._raw({(i, j): c for j, p in enumerate(cols) for i, c in enumerate(p.coeffs)})

    @classmethod
    def x(cls) -> "BPoly":
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "BPoly":
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def const(cls, c) -> "BPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_upoly(cls, p: UPoly, var: str = "X") -> "BPoly":
        if var == "X":
            return cls._raw({(i, 0): c for i, c in enumerate(p.coeffs)})
        return cls._raw({(0, j): c for j, c in enumerate(p.coeffs)})

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), Fraction(0))

    def lc_y(self) -> UPoly:
        return self.ycoeffs()[-1] if self.terms else UPoly()

    def monic_in_y(self) -> bool:
        n = self.deg_y
        return n >= 0 and self.lc_y() == UPoly([1])

    def ycoeffs(self) -> list[UPoly]:
        """Coefficients of ``Y^0..Y^n`` as polynomials in X."""
        n = self.deg_y
        rows = [dict() for _ in range(n + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        out = []
        for r in rows:
            top = max(r, default=-1)
            out.append(UPoly._raw([r.get(i, Fraction(0)) for i in range(top + 1)]))
        return out

    def xcoeffs(self) -> list[UPoly]:
        """Coefficients of ``X^0..X^m`` as polynomials in Y."""
        return self.swap().ycoeffs()

    def to_matrix(self) -> list[list]:
        m, n = self.deg_x, self.deg_y
        return [[self.coeff(i, j) for j in range(n + 1)] for i in range(m + 1)]

    def coefficients(self) -> list:
        return [self.terms[k] for k in sorted(self.terms)]

    # arithmetic
    def _lift(self, other):
        if isinstance(other, BPoly):
            return other
        if isinstance(other, UPoly):
            return BPoly.from_upoly(other)
        return BPoly._raw({(0, 0): to_scalar(other)})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return BPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (BPoly, UPoly)):
            c = to_scalar(other)
            return BPoly._raw({k: v * c for k, v in self.terms.items()})
        other = self._lift(other)
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out[k] + a * b if k in out else a * b
        return BPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        inv = 1 / to_scalar(other)
        return self * inv

    def __pow__(self, e: int):
        result, base = BPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, BPoly):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # transformations
    def diff_y(self) -> "BPoly":
        return BPoly._raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def diff_x(self) -> "BPoly":
        return BPoly._raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def swap(self) -> "BPoly":
        return BPoly._raw({(j, i): c for (i, j), c in self.terms.items()})

    def shift_x(self, a) -> "BPoly":
        """``f(X + a, Y)``."""
        a = to_scalar(a)
        if not a:
            return self
        return BPoly.from_ycoeffs([p.shift(a) for p in self.ycoeffs()])

    def shift_y(self, a) -> "BPoly":
        return self.swap().shift_x(a).swap()

    def reverse_x(self, m: int | None = None) -> "BPoly":
        """``X^m f(1/X, Y)``."""
        m = self.deg_x if m is None else m
        if m < self.deg_x:
            raise ValueError("reversal degree below X-degree")
        return BPoly._raw({(m - i, j): c for (i, j), c in self.terms.items()})

    def eval_x(self, a) -> UPoly:
        """Specialize X to a scalar, giving a polynomial in Y."""
        return UPoly._raw([p(a) for p in self.ycoeffs()])

    def eval_y(self, a) -> UPoly:
        return self.swap().eval_x(a)

    def __call__(self, x, y):
        """Evaluate at ring elements (scalars, series, polynomials)."""
        acc = None
        for p in reversed(self.ycoeffs()):
            px = p(x)
            acc = px if acc is None else acc * y + px
        return Fraction(0) if acc is None else acc

    def map_coeffs(self, fn) -> "BPoly":
        return BPoly._raw({k: fn(c) for k, c in self.terms.items()})

    def __repr__(self):
        return f"BPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[1], -k[0])):
            mono = "*".join(
                s for s in (_pw("X", i), _pw("Y", j)) if s
            )
            parts.append(_term(self.terms[(i, j)], mono))
        return _join(parts)


def _pw(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")
