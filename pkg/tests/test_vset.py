from __future__ import annotations

from fractions import Fraction

import pytest

from covercert.core.mpoly import MPoly
from covercert.core.resultant import discriminant_y
from covercert.cover import analyze
from covercert.errors import DimensionMismatch
from covercert.heights import LogValue
from covercert.io import load_curve
from covercert.pipeline import build_model
from covercert.vset import (
    audit,
    build_atlas,
    build_V,
    build_W,
    expected_equation_count,
    generic_discriminant,
    verify_membership,
)

from test_cover import NODAL

v = MPoly.var


@pytest.fixture(scope="module")
def nodal():
    ci = load_curve(NODAL)
    return analyze(build_model(ci), ci.declared)


def test_atlas_blocks(e0_report, e1_report, nodal):
    assert build_atlas(e0_report).block_sizes() == {"Theta": 4, "Alpha": 2, "Beta": 0, "Gamma": 3, "Delta": 1}
    assert build_atlas(e1_report).block_sizes() == {"Theta": 6, "Alpha": 4, "Beta": 0, "Gamma": 4, "Delta": 1}
    a = build_atlas(nodal)
    assert a.total == nodal.omega == 18
    assert a.gamma_fin(1, 1) == ["G_1_1_0", "G_1_1_1"]
    assert a.gamma_inf(1) == ["Ginf_1_-2", "Ginf_1_-1", "Ginf_1_0"]


def test_generic_discriminant_quadratic():
    # (1, 2): D(X) = (Th_1_1 X + Th_0_1)^2 - 4 (Th_1_0 X + Th_0_0)
    Xv = v("X")
    b = v("Th_1_1") * Xv + v("Th_0_1")
    c = v("Th_1_0") * Xv + v("Th_0_0")
    assert generic_discriminant(1, 2) == b * b - 4 * c


def test_e0_disc_equations(e0_report):
    V = build_V(e0_report)
    disc = {str(e.poly) for e in V.equations if e.tag == "disc"}
    D, A1, A2 = v("D"), v("A_1"), v("A_2")
    t = {k: v(f"Th_{k}") for k in ("0_0", "0_1", "1_0", "1_1")}
    expected = {
        t["1_1"] ** 2 - D,
        (A1 + A2) * D + 2 * t["0_1"] * t["1_1"] - 4 * t["1_0"],
        -(A1 * A2) * D + t["0_1"] ** 2 - 4 * t["0_0"],
    }
    assert disc == {str(p) for p in expected}


def test_uni_equations(e0_report):
    V = build_V(e0_report)
    uni = [e.poly for e in V.equations if e.tag == "uni"]
    assert uni == [v("Ginf_1_-1") - 1, v("Ginf_1_0")]


def test_specialized_discriminant_matches(e0_report, e1_report, nodal):
    for r in (e0_report, e1_report, nodal):
        point = build_atlas(r).assignment(r.phi())
        D = generic_discriminant(r.m, r.n).subs({k: MPoly.const(c) for k, c in point.items() if k.startswith("Th_")})
        d = discriminant_y(r.model.f)
        assert all(D.coeff_of("X", k).const_value() == d.coeff(k) for k in range(d.degree + 1))
        assert D.degree("X") == d.degree


def test_equation_counts(e0_report, e1_report, nodal):
    for r, total in ((e0_report, 10), (e1_report, 15), (nodal, 21)):
        V = build_V(r)
        assert len(V) == expected_equation_count(r) == total


def test_membership_fixtures(e0_report, e1_report, nodal):
    for r in (e0_report, e1_report, nodal):
        mem = verify_membership(build_V(r), build_W(r), r.phi())
        assert mem.passed, (mem.v_failures, mem.w_fired)


def test_w_families_shape(e0_report, nodal):
    fams = build_W(e0_report).families()
    assert fams["W2"] == [] and fams["W3"] == [] and fams["W5"] == []
    assert [c.label for c in build_W(nodal).families()["W5"]] == ["beta1: branches 1,2 agree at 1"]


def test_delta_zero_fails_disc_and_fires_w1(e0_report):
    r = e0_report
    phi = r.phi()
    phi.delta = 0
    mem = verify_membership(build_V(r), build_W(r), phi)
    assert {t for t, _, _ in mem.v_failures} == {"disc"}
    assert mem.w_fired == ["W1"]
    phi.delta = r.delta


def _point(r):
    return build_atlas(r).assignment(r.phi())


def test_w_predicates_fire_on_engineered_points(e0_report, nodal):
    W = build_W(nodal)
    pt = _point(nodal)
    pt["B_1"] = pt["A_1"]
    assert any(c.contains(pt) for c in W.families()["W2"])
    pt = _point(nodal)
    pt["G_1_2_1"] = pt["G_1_1_1"]
    assert any(c.contains(pt) for c in W.families()["W5"])
    pt = _point(e0_report)
    pt["Th_1_1"] = Fraction(0)  # G'_Y at t = 0 along the finite branch at infinity is Th_1_1
    assert [c.label for c in build_W(e0_report).families()["W4"] if c.contains(pt)] == \
        ["inf2: G'_Y vanishes beyond order 0"]


def test_dimension_mismatch(e0_report):
    with pytest.raises(DimensionMismatch):
        build_atlas(e0_report).assignment([0] * 9)


def test_audit(e0_report, e1_report):
    au = audit(build_V(e0_report), LogValue.zero())
    assert au.max_degree <= 8 and au.degree_ok
    assert au.height_cap == LogValue.rational(96) and au.height_ok
    V = build_V(e0_report)
    for e in V.equations:
        if e.tag == "uni":
            assert e.poly.total_degree == 1
    au = audit(build_V(e1_report), LogValue.zero())
    assert au.degree_cap == 16 and au.degree_ok and au.height_ok


def _floats(obj):
    if isinstance(obj, float):
        yield obj
    elif isinstance(obj, dict):
        for x in obj.values():
            yield from _floats(x)
    elif isinstance(obj, list):
        for x in obj:
            yield from _floats(x)


def test_v_json_is_exact(e0_report):
    data = build_V(e0_report).to_json()
    assert len(data["equations"]) == 10
    assert not list(_floats(data))
    first = data["equations"][0]
    assert first == {"tag": "ram", "label": "A_1", "poly": [["-1", {}], ["1", {"A_1": 1}]]}
