from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from covercert.core.bpoly import BPoly
from covercert.core.linalg import det, det_bareiss
from covercert.core.numberfield import NumberField, nf_inverse
from covercert.core.resultant import (
    discriminant,
    discriminant_y,
    resultant,
    resultant_y,
    resultant_y_sylvester,
)
from covercert.core.roots import complex_roots, nf_roots, rational_roots
from covercert.core.upoly import UPoly, poly_gcd, squarefree_part
from covercert.errors import ReducibleField, ZeroInverse

from oracles import from_sympy_u, sx, sy, to_sympy_b, to_sympy_u

X, Y = BPoly.x(), BPoly.y()
Q2 = NumberField([-2, 0, 1], "s")

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def rand_bpoly(rng, dx=2, dy=2, density=0.6):
    return BPoly({(i, j): Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))
                  for i in range(dx + 1) for j in range(dy + 1) if rng.random() < density})


# number fields -------------------------------------------------------------------


def test_nf_inverse_examples():
    s = Q2.gen
    assert nf_inverse(s) == s / 2 == Q2([0, Fraction(1, 2)])
    assert nf_inverse(Q2.one()) == Q2.one()
    assert nf_inverse(1 + s) == s - 1


def test_nf_inverse_errors():
    with pytest.raises(ZeroInverse):
        nf_inverse(Q2.zero())
    K = NumberField([4, 0, 0, 0, 1])  # X^4 + 4 = (X^2+2X+2)(X^2-2X+2): asserted, not proved
    assert K.irreducibility == "asserted"
    with pytest.raises(ReducibleField):
        nf_inverse(K([2, 2, 1, 0]))


def test_low_degree_irreducibility_is_proved():
    assert Q2.irreducibility == "proved"
    with pytest.raises(ReducibleField):
        NumberField([-1, 0, 1])


def test_nf_inverse_random_500():
    rng = random.Random(11)
    K = NumberField([-2, -1, 0, 1], "t")  # X^3 - X - 2, no rational roots
    for _ in range(500):
        a = K([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)])
        if not a:
            continue
        assert a * nf_inverse(a) == K.one()


# resultants and discriminants ------------------------------------------------------


def test_resultant_examples():
    # Sylvester determinant [[1,0,-X],[2,0,0],[0,2,0]] is -4X
    assert resultant_y(Y**2 - X, 2 * Y) == UPoly([0, -4])
    assert resultant_y(Y - X, Y + X) == UPoly([0, 2])
    assert resultant_y(Y, Y).is_zero()


def test_discriminant_examples():
    assert discriminant_y(Y**2 - X) == UPoly([0, 4])
    assert discriminant_y(Y**2 - X * Y + Fraction(1, 4)) == UPoly([-1, 0, 1])
    assert discriminant_y(Y**2 - 1) == UPoly([4])


def test_resultant_against_sympy_and_sylvester():
    rng = random.Random(5)
    for _ in range(60):
        p, q = rand_bpoly(rng), rand_bpoly(rng)
        if p.deg_y < 1 or q.deg_y < 1:
            continue
        ours = resultant_y(p, q)
        assert ours == resultant_y_sylvester(p, q)
        ref = sympy.resultant(to_sympy_b(p), to_sympy_b(q), sy)
        assert ours == from_sympy_u(ref)


def test_resultant_vanishes_iff_common_factor():
    rng = random.Random(6)
    for _ in range(200):
        p, q = rand_bpoly(rng, 1, 2), rand_bpoly(rng, 1, 2)
        if rng.random() < 0.4:
            c = rand_bpoly(rng, 1, 1)
            p, q = p * c, q * c
        if p.deg_y < 1 or q.deg_y < 1:
            continue
        g = sympy.gcd(to_sympy_b(p), to_sympy_b(q))
        shares = sympy.degree(g, sy) > 0
        assert resultant_y(p, q).is_zero() == shares


def test_discriminant_zero_iff_repeated_factor():
    rng = random.Random(7)
    for _ in range(100):
        f = rand_bpoly(rng, 1, 2)
        if rng.random() < 0.4:
            f = f * rand_bpoly(rng, 1, 1) ** 2
        if f.deg_y < 1:
            continue
        fs = to_sympy_b(f)
        shares = sympy.degree(sympy.gcd(fs, sympy.diff(fs, sy)), sy) > 0
        assert discriminant_y(f).is_zero() == shares


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=2, max_size=5))
def test_univariate_discriminant_matches_sympy(cs):
    p = UPoly(cs)
    if p.degree < 2:
        return
    ref = sympy.discriminant(to_sympy_u(p), sx)
    assert discriminant(p) == Fraction(int(sympy.fraction(ref)[0]), int(sympy.fraction(ref)[1]))


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=4))
def test_univariate_resultant_is_product_formula(ra, rb):
    # Res(prod (X - a), prod (X - b)) = prod (a - b)
    expected = Fraction(1)
    for a in ra:
        for b in rb:
            expected *= a - b
    assert resultant(UPoly.from_roots(ra), UPoly.from_roots(rb)) == expected


def test_bareiss_and_berkowitz_agree():
    rng = random.Random(8)
    for _ in range(50):
        s = rng.randint(1, 5)
        a = [[Fraction(rng.randint(-5, 5)) for _ in range(s)] for _ in range(s)]
        assert det(a, Fraction(0), Fraction(1)) == det_bareiss(a, lambda x, y: x / y)
        assert det(a, Fraction(0), Fraction(1)) == Fraction(int(sympy.Matrix(a).det()))


# roots -----------------------------------------------------------------------------


def test_rational_roots_examples():
    roots, cof = rational_roots(UPoly([4, 0, -5, 0, 1]))
    assert sorted(r for r, _ in roots) == [-2, -1, 1, 2] and cof == UPoly([1])
    assert rational_roots(UPoly([1, -2, 1]))[0] == [(Fraction(1), 2)]
    roots, cof = rational_roots(UPoly([-2, 0, 1]))
    assert roots == [] and cof == UPoly([-2, 0, 1])


@settings(max_examples=80, deadline=None)
@given(st.lists(small, min_size=0, max_size=4), st.lists(small, min_size=1, max_size=3))
def test_rational_roots_reconstruct(roots, extra):
    # a root-free quadratic factor keeps the cofactor nontrivial
    p = UPoly.from_roots(roots) * UPoly([extra[0] ** 2 + 1, 0, 1])
    found, cof = rational_roots(p)
    rebuilt = cof
    for r, k in found:
        rebuilt = rebuilt * UPoly.from_roots([r] * k)
    assert rebuilt.monic() == p.monic()
    assert sorted(r for r, k in found for _ in range(k)) == sorted(roots)


def test_nf_roots_examples():
    roots, cof = nf_roots(UPoly([-2, 0, 1]), Q2)
    assert sorted(str(r) for r, _ in roots) == sorted([str(Q2.gen), str(-Q2.gen)]) and cof.degree == 0
    roots, _ = nf_roots(UPoly([-3, 1]), Q2)
    assert roots == [(Q2(3), 1)]
    roots, cof = nf_roots(UPoly([1, 0, 1]), Q2)
    assert roots == [] and cof.degree == 2


def test_nf_roots_evaluate_to_zero():
    K = NumberField([-5, 0, 1], "r")
    p = UPoly([-1, -1, 1]) * UPoly([-5, 0, 1])  # golden-ratio polynomial times X^2 - 5
    roots, cof = nf_roots(p, K)
    assert len(roots) == 4 and cof.degree == 0
    for r, _ in roots:
        acc = K.zero()
        for c in reversed(p.coeffs):
            acc = acc * r + c
        assert not acc


def test_complex_roots_examples():
    boxes = complex_roots(UPoly([-2, 0, 1]), 40)
    assert len(boxes) == 2 and all(b.width <= Fraction(1, 2**40) for b in boxes)
    assert boxes[0].re_hi < 0 < boxes[1].re_lo
    for b in boxes:
        assert b.re_lo ** 2 <= 2 <= b.re_hi ** 2 or b.re_hi ** 2 <= 2 <= b.re_lo ** 2
    (one,) = complex_roots(UPoly([-1, 1]), 40)
    assert one.contains(1) and one.width == 0
    i_boxes = complex_roots(UPoly([1, 0, 1]), 40)
    assert sorted(round(float(b.mid[1])) for b in i_boxes) == [-1, 1]


def test_complex_roots_reexpand_within_slack():
    rng = random.Random(9)
    for _ in range(20):
        p = squarefree_part(UPoly([Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(2, 5))] + [1]))
        if p.degree < 1:
            continue
        boxes = complex_roots(p, 60)
        assert len(boxes) == p.degree
        mids = [complex(float(b.mid[0]), float(b.mid[1])) for b in boxes]
        prod = [complex(1)]
        for z in mids:
            prod = [a - z * b for a, b in zip([0j] + prod, prod + [0j])]
        lc = p.lc
        for k, c in enumerate(p.coeffs):
            assert abs(prod[k] * float(lc) - float(c)) < 1e-6


def test_poly_gcd_and_squarefree():
    a = UPoly.from_roots([1, 2, 2])
    b = UPoly.from_roots([2, 3])
    assert poly_gcd(a, b).monic() == UPoly.from_roots([2])
    assert squarefree_part(a).monic() == UPoly.from_roots([1, 2])
