"""Sparse multivariate polynomials over named indeterminates.

A monomial is a sorted tuple of ``(name, exponent)`` pairs, so polynomials in
different variable sets combine without any alignment step.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import fmt_scalar, to_scalar

Monomial = tuple  # tuple[tuple[str, int], ...]

ONE_MONO: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for mono, c in (terms or {}).items():
            c = to_scalar(c)
            if c:
                key = tuple(sorted((v, e) for v, e in mono if e))
                out[key] = out[key] + c if key in out else c
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.terms = {k: v for k, v in terms.items() if v}
        return p

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls._raw({ONE_MONO: to_scalar(c)})

    @classmethod
    def zero(cls) -> "MPoly":
        return cls._raw({})

    @classmethod
    def from_upoly(cls, p, name: str = "X") -> "MPoly":
        return cls._raw({(((name, k),) if k else ()): c for k, c in enumerate(p.coeffs)})

    @classmethod
    def from_bpoly(cls, p, xname: str = "X", yname: str = "Y") -> "MPoly":
        terms = {}
        for (i, j), c in p.terms.items():
            mono = []
            if i:
                mono.append((xname, i))
            if j:
                mono.append((yname, j))
            terms[tuple(sorted(mono))] = c
        return cls._raw(terms)

    @classmethod
    def coerce(cls, x) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        from .bpoly import BPoly
        from .upoly import UPoly

        if isinstance(x, BPoly):
            return cls.from_bpoly(x)
        if isinstance(x, UPoly):
            return cls.from_upoly(x)
        return cls.const(x)

    # queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(not m for m in self.terms)

    def const_value(self):
        return self.terms.get(ONE_MONO, Fraction(0))

    @property
    def total_degree(self) -> int:
        return max((_mono_deg(m) for m in self.terms), default=-1)

    def degree(self, name: str) -> int:
        if not self.terms:
            return -1
        return max(dict(m).get(name, 0) for m in self.terms)

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def coefficients(self) -> list:
        return [self.terms[m] for m in sorted(self.terms)]

    def coeffs_in(self, name: str) -> dict[int, "MPoly"]:
        """Split as ``sum_k c_k * name^k``; returns ``{k: c_k}``."""
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            d = dict(m)
            k = d.pop(name, 0)
            out.setdefault(k, {})[tuple(sorted(d.items()))] = c
        return {k: MPoly._raw(v) for k, v in out.items()}

    def coeff_of(self, name: str, k: int) -> "MPoly":
        return self.coeffs_in(name).get(k, MPoly.zero())

    # arithmetic
    def __add__(self, other):
        other = MPoly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other):
        return MPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            try:
                c = to_scalar(other)
            except TypeError:
                other = MPoly.coerce(other)
            else:
                return MPoly._raw({m: v * c for m, v in self.terms.items()})
        out: dict = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out[m] + a * b if m in out else a * b
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        inv = 1 / to_scalar(other)
        return self * inv

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = MPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # substitution and evaluation
    def subs(self, mapping: dict) -> "MPoly":
        """Substitute polynomials (or scalars) for some indeterminates."""
        mapping = {k: MPoly.coerce(v) for k, v in mapping.items()}
        cache: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                cache[key] = mapping[v] ** e
            return cache[key]

        acc = MPoly.zero()
        for m, c in self.terms.items():
            kept = []
            term = None
            for v, e in m:
                if v in mapping:
                    term = power(v, e) if term is None else term * power(v, e)
                else:
                    kept.append((v, e))
            mono = MPoly._raw({tuple(kept): c})
            acc = acc + (mono if term is None else mono * term)
        return acc

    def evaluate(self, point: dict):
        """Evaluate at a full assignment of scalars (missing names raise KeyError)."""
        acc = None
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t = t * point[v] ** e
            acc = t if acc is None else acc + t
        return Fraction(0) if acc is None else acc

    def to_json(self) -> list:
        """Sparse monomial list ``[[coefficient, {name: exponent}], ...]``."""
        return [[fmt_scalar(self.terms[m]), dict(m)] for m in sorted(self.terms)]

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        from .upoly import _join, _term

        parts = []
        for m in sorted(self.terms, key=lambda m: (-_mono_deg(m), m)):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            parts.append(_term(self.terms[m], mono))
        return _join(parts)
