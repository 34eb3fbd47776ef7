"""Helpers shared by every scalar type (``Fraction`` and ``NFElem``)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def to_scalar(x):
    """Coerce ints, rational strings and Fractions to ``Fraction``; pass field elements through."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "field") and hasattr(x, "coords"):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def as_rational(x) -> Fraction | None:
    """Return ``x`` as a Fraction if it is rational (including rational field elements)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    coords = getattr(x, "coords", None)
    if coords is not None and all(c == 0 for c in coords[1:]):
        return coords[0]
    return None


def scalar_key(x) -> tuple:
    """Total order used for deterministic tie-breaking (lexicographic on coordinates)."""
    coords = getattr(x, "coords", None)
    t = tuple(coords) if coords is not None else (Fraction(x),)
    while len(t) > 1 and t[-1] == 0:
        t = t[:-1]
    return t


def fmt_scalar(x) -> str | list[str]:
    """Exact serialization: ``"p/q"`` for rationals, coordinate list for field elements."""
    coords = getattr(x, "coords", None)
    if coords is not None:
        return [str(c) for c in coords]
    return str(Fraction(x))
