"""Exact logarithmic quantities and their certified comparison.

A :class:`LogValue` is ``sum_b c_b log b + const + sum_k w_k * I_k`` where the
bases ``b`` are pairwise coprime integers > 1 (kept that way by factor
refinement), ``c_b`` and ``const`` are rationals, and each ``I_k`` is a real
number known only through certified enclosures.  Coprime bases are
multiplicatively independent, so the logarithmic part vanishes exactly when it
has no terms; otherwise it is a nonzero linear form in logarithms and interval
refinement is guaranteed to separate it from any rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import PrecisionExhausted

MAX_BITS = 1 << 15


# certified logarithms -------------------------------------------------------

def _atanh_fixed(a: int, b: int, p: int) -> tuple[int, int]:
    """Bounds ``(lo, hi)`` on ``atanh(a/b) * 2^p`` for ``0 <= a/b <= 1/3``."""
    if a == 0:
        return 0, 0
    a2, b2 = a * a, b * b
    t_lo = (a << p) // b
    t_hi = -((-a << p) // b)
    lo = hi = 0
    j = 0
    while True:
        lo += t_lo // (2 * j + 1)
        hi += -(-t_hi // (2 * j + 1))
        if t_hi <= 1:
            hi += 2
            break
        t_lo = t_lo * a2 // b2
        t_hi = -(-t_hi * a2 // b2)
        j += 1
    return lo, hi


@lru_cache(maxsize=64)
def _log2_fixed(p: int) -> tuple[int, int]:
    lo, hi = _atanh_fixed(1, 3, p)
    return 2 * lo, 2 * hi


def log_bounds(r, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Certified ``lo <= log r <= hi`` with ``hi - lo`` about ``2^-bits`` relative to ``log r``."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("logarithm of a non-positive number")
    if r == 1:
        return Fraction(0), Fraction(0)
    num, den = r.numerator, r.denominator
    k = num.bit_length() - den.bit_length()
    # normalize x = r / 2^k into [1, 2)
    if k >= 0:
        a0, b0 = num, den << k
    else:
        a0, b0 = num << -k, den
    if a0 < b0:
        k -= 1
        a0 <<= 1
    elif a0 >= 2 * b0:
        k += 1
        b0 <<= 1
    p = bits + 8 + abs(k).bit_length()
    l2lo, l2hi = _log2_fixed(p)
    slo, shi = _atanh_fixed(a0 - b0, a0 + b0, p)
    if k >= 0:
        lo, hi = k * l2lo + 2 * slo, k * l2hi + 2 * shi
    else:
        lo, hi = k * l2hi + 2 * slo, k * l2lo + 2 * shi
    scale = 1 << p
    return Fraction(lo, scale), Fraction(hi, scale)


# coprime factor refinement --------------------------------------------------

def _refine(pairs: dict[int, Fraction]) -> dict[int, Fraction]:
    """Rewrite ``sum c_b log b`` over a pairwise coprime base set."""
    items = {b: c for b, c in pairs.items() if b > 1 and c}
    changed = True
    while changed:
        changed = False
        keys = sorted(items)
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                a, b = keys[i], keys[j]
                g = gcd(a, b)
                if g == 1:
                    continue
                ca, cb = items.pop(a), items.pop(b)
                for base, coef in ((g, ca + cb), (a // g, ca), (b // g, cb)):
                    if base > 1 and coef:
                        items[base] = items.get(base, Fraction(0)) + coef
                items = {k: v for k, v in items.items() if v}
                changed = True
                break
            if changed:
                break
    out: dict[int, Fraction] = {}
    for b, c in items.items():
        r, e = _perfect_power(b)
        out[r] = out.get(r, Fraction(0)) + c * e
    return {b: c for b, c in out.items() if c}


def _iroot(n: int, e: int) -> int:
    """Floor of the e-th root of a positive integer."""
    x = 1 << -(-n.bit_length() // e)
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def _perfect_power(b: int) -> tuple[int, int]:
    """Write ``b = r^e`` with ``e`` maximal."""
    best = (b, 1)
    for e in range(2, b.bit_length() + 1):
        r = _iroot(b, e)
        if r < 2:
            break
        if r ** e == b:
            best = (r, e)
    if best[1] > 1:
        r, e = _perfect_power(best[0])
        return r, e * best[1]
    return best


# interval sources -----------------------------------------------------------

class FixedEnclosure:
    """A real known only to lie in ``[lo, hi]`` (cannot be refined)."""

    def __init__(self, lo, hi):
        self.lo, self.hi = Fraction(lo), Fraction(hi)
        if self.lo > self.hi:
            raise ValueError("empty enclosure")

    def enclose(self, bits: int) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi


class RefinableEnclosure:
    """A real given by a callback ``bits -> (lo, hi)`` with shrinking width."""

    def __init__(self, fn, label: str = ""):
        self.fn = fn
        self.label = label
        self._cache: dict[int, tuple[Fraction, Fraction]] = {}

    def enclose(self, bits: int) -> tuple[Fraction, Fraction]:
        if bits not in self._cache:
            self._cache[bits] = self.fn(bits)
        return self._cache[bits]


class LogValue:
    __slots__ = ("logs", "const", "sources")

    def __init__(self, logs=None, const=0, sources=()):
        self.logs = _refine({int(b): Fraction(c) for b, c in (logs or {}).items()})
        self.const = Fraction(const)
        self.sources = tuple((Fraction(w), s) for w, s in sources if w)

    # constructors
    @classmethod
    def log(cls, r) -> "LogValue":
        r = Fraction(r)
        if r <= 0:
            raise ValueError("log of a non-positive number")
        logs = {}
        if r.numerator > 1:
            logs[r.numerator] = Fraction(1)
        if r.denominator > 1:
            logs[r.denominator] = Fraction(-1)
        return cls(logs)

    @classmethod
    def zero(cls) -> "LogValue":
        return cls()

    @classmethod
    def rational(cls, c) -> "LogValue":
        return cls(const=c)

    @classmethod
    def interval(cls, lo, hi) -> "LogValue":
        if Fraction(lo) == Fraction(hi):
            return cls(const=lo)
        return cls(sources=[(1, FixedEnclosure(lo, hi))])

    @classmethod
    def refinable(cls, fn, label: str = "") -> "LogValue":
        return cls(sources=[(1, RefinableEnclosure(fn, label))])

    # structure
    @property
    def is_exact(self) -> bool:
        return not self.sources

    def is_zero(self) -> bool:
        return self.is_exact and not self.logs and not self.const

    def log_argument(self) -> Fraction | None:
        """``e^self`` as a rational when it is one (integer coefficients, no constant)."""
        if not self.is_exact or self.const:
            return None
        out = Fraction(1)
        for b, c in self.logs.items():
            if c.denominator != 1:
                return None
            out *= Fraction(b) ** int(c)
        return out

    # arithmetic
    @staticmethod
    def _lift(x) -> "LogValue":
        if isinstance(x, LogValue):
            return x
        return LogValue(const=Fraction(x))

    def __add__(self, other):
        other = self._lift(other)
        logs = dict(self.logs)
        for b, c in other.logs.items():
            logs[b] = logs.get(b, Fraction(0)) + c
        return LogValue(logs, self.const + other.const, self.sources + other.sources)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, k):
        if isinstance(k, LogValue):
            if k.is_exact and not k.logs:
                k = k.const
            elif self.is_exact and not self.logs:
                return k * self.const
            else:
                return NotImplemented
        k = Fraction(k)
        return LogValue({b: c * k for b, c in self.logs.items()}, self.const * k,
                        [(w * k, s) for w, s in self.sources])

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / Fraction(k))

    # enclosure and comparison
    def enclose(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        lo = hi = self.const
        for b, c in self.logs.items():
            bl, bh = log_bounds(b, bits + max(0, abs(c.numerator).bit_length() - c.denominator.bit_length()))
            if c > 0:
                lo, hi = lo + c * bl, hi + c * bh
            else:
                lo, hi = lo + c * bh, hi + c * bl
        for w, s in self.sources:
            sl, sh = s.enclose(bits)
            if w > 0:
                lo, hi = lo + w * sl, hi + w * sh
            else:
                lo, hi = lo + w * sh, hi + w * sl
        return lo, hi

    def sign(self, max_bits: int = MAX_BITS) -> int:
        if self.is_exact and not self.logs:
            return (self.const > 0) - (self.const < 0)
        bits = 64
        while bits <= max_bits:
            lo, hi = self.enclose(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise PrecisionExhausted(f"could not decide the sign of {self} within {max_bits} bits")

    def compare(self, other) -> int:
        return (self - self._lift(other)).sign()

    def __le__(self, other):
        return self.compare(other) <= 0

    def __lt__(self, other):
        return self.compare(other) < 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __eq__(self, other):
        if not isinstance(other, (LogValue, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        if self.is_exact and other.is_exact:
            return self.logs == other.logs and self.const == other.const
        return self.compare(other) == 0

    def __hash__(self):
        return hash((frozenset(self.logs.items()), self.const, self.sources))

    def __float__(self):
        lo, hi = self.enclose(64)
        return float((lo + hi) / 2)

    def width(self, bits: int = 64) -> Fraction:
        lo, hi = self.enclose(bits)
        return hi - lo

    # serialization
    def to_json(self, bits: int = 64) -> dict:
        if not self.is_exact:
            lo, hi = self.enclose(bits)
            return {"interval": [str(lo), str(hi)]}
        arg = self.log_argument()
        if arg is not None:
            return {"log_of": str(arg)}
        return {
            "log_sum": [[str(c), str(b)] for b, c in sorted(self.logs.items())],
            "const": str(self.const),
        }

    def __repr__(self):
        return f"LogValue({self})"

    def __str__(self):
        if not self.is_exact:
            lo, hi = self.enclose(64)
            return f"[{float(lo):.12g}, {float(hi):.12g}]"
        parts = []
        for b, c in sorted(self.logs.items()):
            parts.append(f"log {b}" if c == 1 else f"{c}*log {b}")
        if self.const or not parts:
            parts.append(str(self.const))
        return " + ".join(parts)


def lmax(values) -> LogValue:
    """Maximum of exact values (comparison is exact); intervals use endpoint hulls."""
    values = list(values)
    best = values[0]
    for v in values[1:]:
        if v > best:
            best = v
    return best
