from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from covercert.core.bpoly import BPoly
from covercert.core.mpoly import MPoly
from covercert.core.upoly import UPoly
from covercert.errors import (
    DegenerateSubstitution,
    PositiveDimensional,
    TooFewEquations,
    ZeroDeterminant,
)
from covercert.heights import (
    LogValue,
    bound_compose,
    bound_det,
    bound_product,
    height_algebraic,
    height_poly,
    height_rational_vector,
    inverse_transform_rho,
    kps_bound,
    log_bounds,
    nabla_sigma,
    quadratic_field_discriminant,
    silverman_bound,
    silverman_check,
    solve_bivariate,
    transform_rho,
)

from oracles import place_height_argument

X, Y = BPoly.x(), BPoly.y()
L2, L3 = LogValue.log(2), LogValue.log(3)

rat = st.fractions(max_denominator=10**4).filter(lambda q: abs(q) < 10**6)
vectors = st.lists(rat, min_size=1, max_size=6)


# LogValue ------------------------------------------------------------------------


def test_logvalue_exact_arithmetic():
    assert L2 + L2 == LogValue.log(4)
    assert L2 * 3 == LogValue.log(8)
    assert LogValue.log(8) / 2 == L2 * Fraction(3, 2)
    assert L2 < L3 and not L3 <= L2
    assert LogValue.log(1).is_zero()
    assert LogValue.log(Fraction(3, 2)).log_argument() == Fraction(3, 2)
    assert (L2 + 1).log_argument() is None  # rational part makes it non-log-exact


def test_logvalue_enclosure_is_certified():
    lo, hi = log_bounds(3, 80)
    assert lo <= Fraction(math.log(3)) + Fraction(1, 10**15) and hi >= Fraction(math.log(3)) - Fraction(1, 10**15)
    assert hi - lo < Fraction(1, 2**70)


def test_logvalue_serialization():
    assert LogValue.log(Fraction(3, 2)).to_json() == {"log_of": "3/2"}
    iv = LogValue.interval(Fraction(1), Fraction(2)).to_json()
    assert set(iv) >= {"interval"}


def test_logvalue_interval_vs_exact():
    h = height_algebraic(UPoly([-2, 0, 1]))  # (1/2) log 2 as an enclosure
    assert h < L2 and h > LogValue.log(Fraction(7, 5)) / 2


# heights -------------------------------------------------------------------------


def test_height_rational_vector_examples():
    assert height_rational_vector([1]) == LogValue.zero()
    assert height_rational_vector([2, Fraction(1, 2)]) == LogValue.log(4)
    assert height_rational_vector([Fraction(3, 2)]) == LogValue.log(3)


@settings(max_examples=200, deadline=None)
@given(vectors)
def test_height_matches_place_sum(v):
    assert height_rational_vector(v) == LogValue.log(place_height_argument(v))


@settings(max_examples=100, deadline=None)
@given(vectors, st.randoms(use_true_random=False))
def test_height_symmetries(v, rnd):
    w = list(v)
    rnd.shuffle(w)
    assert height_rational_vector(w) == height_rational_vector(v)
    assert height_rational_vector([-a for a in v]) == height_rational_vector(v)


@settings(max_examples=100, deadline=None)
@given(vectors)
def test_height_sandwich(v):
    hv = height_rational_vector(v)
    parts = [height_rational_vector([a]) for a in v]
    assert max(parts) <= hv
    total = LogValue.zero()
    for p in parts:
        total = total + p
    assert hv <= total


def test_height_algebraic_examples():
    assert height_algebraic(UPoly([-1, 1])) == LogValue.zero()
    for mp, truth in ((UPoly([-2, 0, 1]), math.log(2) / 2),
                      (UPoly([-1, -1, 1]), math.log((1 + math.sqrt(5)) / 2) / 2)):
        lo, hi = height_algebraic(mp).enclose(64)
        assert float(lo) - 1e-15 <= truth <= float(hi) + 1e-15
        assert hi - lo < Fraction(1, 10**12)


def test_height_algebraic_rational_root_is_exact():
    h = height_algebraic(UPoly([-3, 2]))  # 2X - 3, root 3/2
    assert h.is_exact and h == LogValue.log(3)


def test_height_poly_examples():
    assert height_poly(Y**2 - X * Y + Fraction(1, 4)) == LogValue.log(4)
    e1 = Y**2 - (X**2 + Fraction(5, 2)) * Y + Fraction(5, 2) * X**2 + Fraction(9, 16)
    assert height_poly(e1) == LogValue.log(40)
    assert height_poly(X + 1) == LogValue.zero()


# height inequalities ---------------------------------------------------------------


def test_bound_product_examples():
    bc = bound_product([X + 1, X + 1])
    assert bc.lhs == L2 == bc.rhs
    bc = bound_product([X, X])
    assert bc.lhs == LogValue.zero() and bc.rhs == L2


def test_bound_product_random():
    rng = random.Random(21)
    for _ in range(100):
        fs = [BPoly({(rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-7, 7) or 1, rng.randint(1, 4))
                     for _ in range(rng.randint(1, 3))}) for _ in range(2)]
        assert bound_product(fs).holds()


def test_bound_compose_examples():
    g = MPoly.var("Y1") ** 2
    bc = bound_compose(g, [MPoly.from_bpoly(X + 1)])
    assert bc.lhs == L2 and bc.rhs == L2 * 4
    f = MPoly.from_bpoly(Y**2 - X * Y + Fraction(1, 4))
    bc = bound_compose(MPoly.var("Y1"), [f])
    assert bc.lhs == height_poly(f) and bc.holds()


def test_bound_compose_passthrough_and_degenerate():
    g = MPoly.var("Y1") * MPoly.var("T") + 3
    bc = bound_compose(g, [MPoly.from_bpoly(X - 2)])
    assert bc.holds()
    z = MPoly.var("Y1") - MPoly.var("Y2")
    with pytest.raises(DegenerateSubstitution):
        bound_compose(z, [MPoly.from_bpoly(X), MPoly.from_bpoly(X)])


def test_bound_det_examples():
    one, zero = MPoly.const(1), MPoly.zero()
    bc = bound_det([[one, zero], [zero, one]])
    assert bc.lhs == LogValue.zero() and bc.rhs == L2 * 2
    x = MPoly.var("X")
    bc = bound_det([[x, one], [one, x]])
    assert bc.lhs == LogValue.zero() and bc.rhs == L2 * 4
    with pytest.raises(ZeroDeterminant):
        bound_det([[x, x], [x, x]])


def test_transform_rho_examples():
    rt = transform_rho(Y - X, 1, 1)
    assert rt.f == X * Y - Y - 1
    assert rt.lhs == LogValue.zero() and rt.rhs == L2 * 2
    rt = transform_rho(Y, 0, 5)
    assert rt.f == Y and rt.lhs == LogValue.zero()
    rt = transform_rho(Y - X, 1, 0)
    assert rt.f == X * Y - 1
    assert transform_rho(rt.f, 1, 0).f == Y - X  # rho = 0 is an involution


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(-6, 6),
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-5, 5)), min_size=1, max_size=6))
def test_transform_rho_bound_and_inverse(m, rho, terms):
    g = BPoly({(min(i, m), j): Fraction(c) for i, j, c in terms})
    if g.is_zero():
        return
    rt = transform_rho(g, m, rho)
    assert rt.holds()
    assert inverse_transform_rho(rt.f, m, rho) == g


def test_silverman_examples():
    h2 = height_algebraic(UPoly([-2, 0, 1]))
    assert quadratic_field_discriminant(2) == 8
    assert quadratic_field_discriminant(5) == 5
    assert silverman_check(8, h2, 2, 2).holds()
    assert silverman_bound(LogValue.zero(), 1, 1) == LogValue.zero()
    phi = height_algebraic(UPoly([-1, -1, 1]))
    sc = silverman_check(5, phi, 2, 2)
    assert sc.lhs == LogValue.log(5) / 2 and sc.holds()


def test_kps_examples():
    kb = kps_bound([2, 2], L3, 2)
    assert (kb.nabla, kb.sigma) == (4, 1)
    assert kb.height_bound == L3 * 4 + L3 * 16
    assert kb.degree_bound == 4 and kb.disc_bound == L3 * 8 + L3 * 40
    kb = kps_bound([1], LogValue.zero(), 1)
    assert (kb.nabla, kb.sigma) == (1, 1)
    assert kb.height_bound == L2 * 2  # 2 * nabla * N * log(N + 1)
    with pytest.raises(TooFewEquations):
        kps_bound([2], L3, 2)
    assert nabla_sigma([3, 1, 2], 2) == (6, Fraction(5, 6))


def test_solve_bivariate_examples():
    assert sorted(solve_bivariate(X**2 + Y**2 - 2, X - Y)) == [(-1, -1), (1, 1)]
    assert solve_bivariate(X, Y) == [(0, 0)]
    assert solve_bivariate(X**2 - 2, Y) == []
    with pytest.raises(PositiveDimensional):
        solve_bivariate((X - Y) * (X + 1), (X - Y) * Y)
