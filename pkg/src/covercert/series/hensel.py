"""Hensel lifting of power-series roots of ``f(X, Y)`` and kappa extraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.bpoly import BPoly
from ..core.upoly import UPoly
from ..errors import HypothesisFailed, IndeterminateOrder, InsufficientPrecision, PrefixCoincidence
from .series import INF, Series


def _trunc(p: UPoly, n: int) -> UPoly:
    return UPoly._raw(p.coeffs[:n]) if len(p.coeffs) > n else p


def eval_trunc(f: BPoly, y: UPoly, n: int | None = None) -> UPoly:
    """``f(X, y(X))`` modulo ``X^n`` (exactly when ``n`` is None)."""
    acc = UPoly()
    for c in reversed(f.ycoeffs()):
        acc = acc * y + c
        if n is not None:
            acc = _trunc(acc, n)
    return acc


def _inverse(b: UPoly, n: int) -> UPoly:
    """Inverse of a unit power series modulo ``X^n``."""
    inv0 = 1 / b.coeff(0)
    out = [inv0]
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, min(k, b.degree) + 1):
            s = s + b.coeffs[i] * out[k - i]
        out.append(-s * inv0)
    return UPoly._raw(out)


def _as_upoly(y0) -> UPoly:
    if isinstance(y0, UPoly):
        return y0
    if isinstance(y0, Series):
        return y0.to_upoly()
    return UPoly([y0])


def check_segment(f: BPoly, seg: UPoly, kappa: int) -> str | None:
    """Return ``None`` if ``ord f(X,seg) > 2kappa`` and ``ord f'_Y(X,seg) = kappa``,
    otherwise the name of the broken condition."""
    r = eval_trunc(f, seg, 2 * kappa + 1)
    if r:
        return f"ord f(X, y0) = {r.ord0()} is not > 2*kappa = {2 * kappa}"
    d = eval_trunc(f.diff_y(), seg, kappa + 1)
    if d.ord0() != kappa:
        return f"ord f'_Y(X, y0) = {d.ord0()} differs from kappa = {kappa}"
    return None


def hensel_lift(f: BPoly, y0, kappa: int, target_prec: int) -> Series:
    """The unique root ``y`` of ``f`` with ``y0`` as kappa-initial segment, modulo ``X^(N+1)``.

    Newton iteration: if ``y`` is correct through degree ``e >= kappa`` then one
    step makes it correct through ``2e + 1 - kappa``.
    """
    y = _as_upoly(y0)
    bad = check_segment(f, y, kappa)
    if bad:
        raise HypothesisFailed(bad)
    N = target_prec
    fy = f.diff_y()
    r = eval_trunc(f, y)
    if r.is_zero():
        return Series.from_upoly(_trunc(y, N + 1), N + 1)
    # y agrees with the root through degree e >= kappa; drop anything beyond
    e = r.ord0() - kappa - 1
    y = _trunc(y, e + 1)
    while e < N:
        e_new = 2 * e + 1 - kappa
        n = e_new + kappa + 1
        a = eval_trunc(f, y, n)
        b = eval_trunc(fy, y, n)
        a = UPoly._raw(a.coeffs[kappa:])
        b = UPoly._raw(b.coeffs[kappa:])
        q = _trunc(a * _inverse(b, e_new + 1), e_new + 1)
        y = _trunc(y - q, e_new + 1)
        e = e_new
    return Series.from_upoly(_trunc(y, N + 1), N + 1)


@dataclass(frozen=True)
class BranchData:
    branch: Series
    kappa: int
    segment: Series

    @property
    def gammas(self) -> list:
        """Coefficients ``gamma_0 .. gamma_kappa`` of the segment."""
        return self.segment.coefficients(self.segment_start, self.segment_start + self.kappa)

    @property
    def segment_start(self) -> int:
        return 0 if self.segment.prec is None else self.segment.prec - self.kappa - 1

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "segment": self.segment.to_json(),
            "branch": self.branch.to_json(),
        }


def branch_kappa(f: BPoly, y: Series) -> BranchData:
    """kappa = ord f'_Y(X, y) and the verified kappa-initial segment of ``y``."""
    d = eval_series(f.diff_y(), y)
    try:
        kappa = d.ord()
    except IndeterminateOrder as exc:
        raise InsufficientPrecision(f"cannot certify kappa at precision {y.prec}") from exc
    if kappa == INF:
        raise HypothesisFailed("f'_Y vanishes identically along the branch")
    if y.prec is not None and y.prec <= kappa:
        raise InsufficientPrecision(f"precision {y.prec} does not exceed kappa = {kappa}")
    seg = y.truncate(kappa + 1)
    bad = check_segment(f, seg.to_upoly(), kappa)
    if bad:
        raise HypothesisFailed(bad)
    return BranchData(y, kappa, seg)


def eval_series(f: BPoly, y: Series) -> Series:
    """``f(t, y(t))`` for a (Laurent) series ``y``; X becomes the series variable."""
    acc = Series.zero()
    for c in reversed(f.ycoeffs()):
        acc = acc * y + Series.from_upoly(c)
    return acc


def separation_index(s1: Series, s2: Series) -> int:
    """Least index at which two segments differ."""
    if s1.prec is None and s2.prec is None:
        hi = max(s1.degree(), s2.degree())
    else:
        hi = min(p for p in (s1.prec, s2.prec) if p is not None) - 1
    lo = min(s1.offset if s1.coeffs else 0, s2.offset if s2.coeffs else 0, 0)
    for k in range(lo, hi + 1):
        if s1.coeff(k) != s2.coeff(k):
            return k
    raise PrefixCoincidence("one segment is an initial segment of the other")
