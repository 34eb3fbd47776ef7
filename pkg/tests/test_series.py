from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from covercert.core.bpoly import BPoly
from covercert.core.numberfield import NumberField
from covercert.core.resultant import discriminant_y
from covercert.core.upoly import UPoly
from covercert.errors import HypothesisFailed, IndeterminateOrder, PrefixCoincidence, RootsOutsideField
from covercert.series import (
    Series,
    all_branches_at,
    branch_kappa,
    check_segment,
    eval_trunc,
    expansions_at_infinity,
    g_poly,
    h_poly,
    hensel_lift,
    ord,
    separation_index,
)

X, Y = BPoly.x(), BPoly.y()
QUARTER = Fraction(1, 4)
E0_F = Y**2 - X * Y + QUARTER
E1_F = Y**2 - (X**2 + Fraction(5, 2)) * Y + Fraction(5, 2) * X**2 + Fraction(9, 16)


def binom_sqrt_coeffs(n):
    """Coefficients of sqrt(1 + X) from the generalized binomial theorem."""
    return [Fraction(math.prod(Fraction(1, 2) - i for i in range(k)), math.factorial(k)) for k in range(n + 1)]


# series arithmetic ----------------------------------------------------------------


def test_ord_examples():
    assert ord(UPoly([0, 0, 1, 1])) == 2
    assert ord(UPoly()) == math.inf
    with pytest.raises(IndeterminateOrder):
        ord(Series([0, 0], prec=2))


def test_ord_of_e0_pole_segment_through_h():
    # along the pole branch at infinity the segment t^-1 satisfies ord h(t, t^m y) = 3 > 2 kappa = 2
    h = h_poly(E0_F, 1, 2)
    assert h == X * Y**2 - X * Y + QUARTER * X**3
    assert ord(h.eval_y(1)) == 3


def test_series_arithmetic_tracks_precision():
    a = Series([1, 1], prec=5)
    b = Series([1, -1])  # exact 1 - t
    assert (a * b).prec == 5
    assert (a * b).coeff(1) == 0
    assert Series([0, 1], offset=-1).ord() == 0


# Hensel lifting -----------------------------------------------------------------


def test_hensel_examples():
    y = hensel_lift(Y**2 - (1 + X), 1, 0, 3)
    assert y.coefficients(0, 3) == binom_sqrt_coeffs(3) == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]
    assert hensel_lift(Y - X, UPoly([0, 1]), 0, 5).to_upoly() == UPoly([0, 1])
    y = hensel_lift(Y**2 - X**2 * (1 + X), UPoly([0, 1]), 1, 4)
    assert y.coefficients(0, 4) == [0] + binom_sqrt_coeffs(3)
    # a seed longer than kappa is accepted; only its certified part is kept
    y = hensel_lift(Y**2 - (1 + X), UPoly([1, Fraction(1, 2), 5]), 0, 6)
    assert y.coefficients(0, 6) == binom_sqrt_coeffs(6)


def test_hensel_rejects_wrong_kappa():
    with pytest.raises(HypothesisFailed):
        hensel_lift(Y**2 - X**2 * (1 + X), UPoly([0, 1]), 0, 4)
    with pytest.raises(HypothesisFailed):
        hensel_lift(Y**2 - (1 + X), 2, 0, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=3, unique=True),
       st.integers(1, 50), st.integers(-3, 3))
def test_hensel_residual_and_uniqueness(consts, N, pert):
    # f = prod (Y - c_k - X) + X^3 * pert: every branch is unramified with kappa = 0
    f = BPoly.const(1)
    for c in consts:
        f = f * (Y - c - X)
    f = f + BPoly({(3, 0): Fraction(pert)})
    y = hensel_lift(f, consts[0], 0, N)
    assert eval_trunc(f, y.to_upoly(), N + 1).is_zero()
    deeper = hensel_lift(f, consts[0], 0, N + 5)
    assert deeper.truncate(N + 1).to_upoly() == y.to_upoly()


# branch data ------------------------------------------------------------------


def test_branch_kappa_examples():
    f = (Y - X**2) * (Y - 2 * X**2)
    bd = branch_kappa(f, Series([0, 0, 1], prec=12))
    assert bd.kappa == 2  # ord (2Y - 3X^2) at Y = X^2
    y = hensel_lift(Y**2 - (1 + X), 1, 0, 8)
    assert branch_kappa(Y**2 - (1 + X), y).kappa == 0
    bd = branch_kappa(Y * (Y - X), Series.zero(prec=10))
    assert bd.kappa == 1 and bd.segment.to_upoly().is_zero()


def test_separation_index_examples():
    assert separation_index(Series([1, 1]), Series([1, 2])) == 1
    assert separation_index(Series([0], prec=2), Series([0, 1], prec=2)) == 1
    assert separation_index(Series([1, 2, 3, 4, 5]), Series([1, 2, 3, 4, 6])) == 4
    with pytest.raises(PrefixCoincidence):
        separation_index(Series([1, 2], prec=2), Series([1, 2, 3], prec=3))


def test_all_branches_e0_at_zero_needs_gaussian_field():
    with pytest.raises(RootsOutsideField):
        all_branches_at(E0_F, 0)
    Qi = NumberField([1, 0, 1], "i")
    res = all_branches_at(E0_F, 0, Qi)
    assert res.split and res.kappas == [0, 0] and res.ord_d == 0
    consts = sorted(str(b.branch.coeff(0)) for b in res.branches)
    assert consts == sorted([str(Qi.gen / 2), str(-Qi.gen / 2)])


def test_all_branches_examples():
    assert all_branches_at(E0_F, 1).ramified
    res = all_branches_at((Y - X) * (Y - X**2), 0)
    assert res.split and res.kappas == [1, 1] and res.kappa_sum == res.ord_d == 2


def test_split_criterion_random_products():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 3)
        ps = set()
        while len(ps) < n:
            ps.add(UPoly([Fraction(rng.randint(-2, 2)) for _ in range(rng.randint(1, 3))]))
        f = BPoly.const(1)
        for p in ps:
            f = f * (Y - BPoly.from_upoly(p))
        beta = Fraction(rng.randint(-2, 2))
        res = all_branches_at(f, beta)
        assert res.split
        assert res.kappa_sum == res.ord_d == discriminant_y(f).shift(beta).ord0()
        for b in res.branches:  # every emitted segment satisfies the lifting hypotheses
            assert check_segment(f.shift_x(beta), b.segment.to_upoly(), b.kappa) is None


def test_ramified_verdict_on_odd_valuation():
    for odd in (1, 3):
        f = (Y - 1) ** 2 - BPoly({(odd, 0): Fraction(2)})
        assert all_branches_at(f, 0).ramified
    assert all_branches_at((Y - 1) ** 2 - BPoly({(2, 0): Fraction(1)}), 0).split


# infinity -----------------------------------------------------------------------


def test_infinity_e0():
    inf = expansions_at_infinity(E0_F)
    pole, fin = inf.branches
    assert inf.kappas == [1, 0]
    assert pole.branch.coefficients(-1, 1) == [1, 0, -QUARTER]
    assert fin.branch.coefficients(0, 1) == [0, QUARTER]
    assert (inf.c_minus_m, inf.c_0, inf.normalized) == (1, 0, True)
    assert g_poly(E0_F, 1) == X * Y**2 - Y + QUARTER * X


def test_infinity_e1():
    inf = expansions_at_infinity(E1_F)
    assert inf.kappas == [2, 0]
    assert (inf.c_minus_m, inf.c_0) == (1, 0)
    pole = inf.branches[0].branch
    assert pole.offset == -2 and pole.coeff(-2) == 1 and pole.coeff(0) == 0


def test_infinity_shift_breaks_normalization():
    inf = expansions_at_infinity(E0_F.shift_y(-1))  # f(X, Y - 1): every branch moves up by one
    assert (inf.c_minus_m, inf.c_0, inf.normalized) == (1, 1, False)


@pytest.mark.parametrize("f", [E0_F, E1_F])
def test_infinity_chain_rule(f):
    inf = expansions_at_infinity(f)
    assert inf.chain_rule_holds and not inf.mn_variant_holds
    assert sum(inf.kappas) <= inf.m * inf.n + discriminant_y(f).degree
