"""Seeded randomized checks of the height inequalities and the branch machinery.

Every suite draws instances from ``random.Random(seed)`` and checks one
inequality or verdict exactly.  Bound functions are injectable so the harness
can be tested against a deliberately broken constant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from .core.bpoly import BPoly
from .core.mpoly import MPoly
from .core.resultant import discriminant_y
from .core.scalars import fmt_scalar
from .core.upoly import UPoly
from .errors import CovercertError, DegenerateSubstitution, ZeroDeterminant
from .heights import (
    bound_compose,
    bound_det,
    bound_product,
    height_rational_vector,
    inverse_transform_rho,
    kps_bound,
    solve_bivariate,
    transform_rho,
)
from .heights.logvalue import LogValue
from .series.branches import all_branches_at
from .series.hensel import eval_trunc, hensel_lift

# random instances -----------------------------------------------------------------


def rand_rat(rng: random.Random, size: int = 9) -> Fraction:
    num = rng.randint(-size, size)
    den = rng.choice((1, 1, 1, 2, 3, 4, 5, 6))
    return Fraction(num, den)


def rand_mpoly(rng: random.Random, names, max_deg: int = 3, max_terms: int = 4) -> MPoly:
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            mono = []
            budget = rng.randint(0, max_deg)
            for v in names:
                e = rng.randint(0, budget)
                budget -= e
                if e:
                    mono.append((v, e))
            c = rand_rat(rng)
            if c:
                terms[tuple(sorted(mono))] = c
        p = MPoly(terms)
        if not p.is_zero():
            return p


def rand_upoly(rng: random.Random, deg: int, size: int = 5) -> UPoly:
    return UPoly([Fraction(rng.randint(-size, size)) for _ in range(deg + 1)])


# suite plumbing ---------------------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    count: int
    passed: int = 0
    skipped: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "count": self.count,
            "passed": self.passed,
            "skipped": self.skipped,
            "ok": self.ok,
            "counterexample": self.counterexample,
        }


@dataclass
class Suite:
    name: str
    generate: Callable  # rng -> instance
    check: Callable  # (instance, bound) -> (ok, detail)
    describe: Callable  # instance -> json
    bound: Callable | None = None
    shrink: Callable = dc_field(default=lambda inst: iter(()))

    def run(self, seed: int, count: int, bound=None) -> SuiteResult:
        bound = bound or self.bound
        rng = random.Random(f"{self.name}:{seed}")
        res = SuiteResult(self.name, count)
        for _ in range(count):
            inst = self.generate(rng)
            try:
                ok, detail = self.check(inst, bound)
            except (DegenerateSubstitution, ZeroDeterminant):
                res.skipped += 1
                continue
            if ok:
                res.passed += 1
                continue
            inst, detail = self._minimize(inst, detail, bound)
            res.counterexample = {"instance": self.describe(inst), "detail": detail}
            break
        return res

    def _minimize(self, inst, detail, bound):
        improved = True
        while improved:
            improved = False
            for cand in self.shrink(inst):
                try:
                    ok, d = self.check(cand, bound)
                except CovercertError:
                    continue
                if not ok:
                    inst, detail, improved = cand, d, True
                    break
        return inst, detail


def _drop_terms(polys: list) -> list:
    """Variants with one term removed from one polynomial."""
    out = []
    for i, p in enumerate(polys):
        if len(p.terms) < 2:
            continue
        for mono in sorted(p.terms):
            terms = dict(p.terms)
            del terms[mono]
            out.append(polys[:i] + [MPoly(terms)] + polys[i + 1:])
    return out


def _bc_detail(bc) -> dict:
    return {"lhs": bc.lhs.to_json(), "rhs": bc.rhs.to_json()}


def _polys_json(ps) -> list:
    return [str(p) for p in ps]


# height inequalities ------------------------------------------------------------------

VARS = ("X1", "X2", "X3")


def _gen_product(rng):
    k = rng.randint(2, 3)
    names = VARS[: rng.randint(1, 3)]
    return [rand_mpoly(rng, names) for _ in range(k)]


def _check_product(fs, bound):
    bc = bound(fs)
    return bc.holds(), _bc_detail(bc)


def _gen_compose(rng):
    s = rng.randint(1, 2)
    ys = [f"Y{i + 1}" for i in range(s)]
    g = rand_mpoly(rng, ys + ["T"], max_deg=3)
    fs = [rand_mpoly(rng, VARS[:2], max_deg=2, max_terms=3) for _ in range(s)]
    return g, fs


def _check_compose(inst, bound):
    g, fs = inst
    bc = bound(g, fs)
    return bc.holds(), _bc_detail(bc)


def _gen_det(rng):
    s = rng.randint(2, 3)
    return [[rand_mpoly(rng, VARS[:2], max_deg=2, max_terms=2) if rng.random() < 0.8 else MPoly.zero()
             for _ in range(s)] for _ in range(s)]


def _check_det(mat, bound):
    bc = bound(mat)
    return bc.holds(), _bc_detail(bc)


def _gen_rho(rng):
    m = rng.randint(1, 3)
    n = rng.randint(1, 3)
    g = BPoly({(i, j): rand_rat(rng) for i in range(m + 1) for j in range(n + 1) if rng.random() < 0.6})
    if g.is_zero():
        g = BPoly({(0, n): Fraction(1)})
    rho = rand_rat(rng, 6) if rng.random() < 0.3 else Fraction(rng.randint(-8, 8))
    return g, m, rho


def _check_rho(inst, bound):
    g, m, rho = inst
    rt = bound(g, m, rho)
    back = inverse_transform_rho(rt.f, m, rho)
    return rt.holds() and back == g, {"lhs": rt.lhs.to_json(), "rhs": rt.rhs.to_json(),
                                      "round_trip": back == g}


# branches ---------------------------------------------------------------------------


def _gen_hensel(rng):
    """``f = prod (Y - p_k) + X^e r`` with the first branch's segment known in advance.

    The ``p_k`` agree below degree ``shared`` and differ there, so the first
    branch has ``kappa = shared (n - 1)``; with ``e > 2 kappa`` the perturbation
    leaves its kappa-initial segment unchanged.
    """
    n = rng.randint(2, 3)
    shared = rng.randint(0, 2)
    base = [Fraction(rng.randint(-5, 5)) for _ in range(shared)]
    vals = rng.sample(range(-6, 7), n)
    ps = [UPoly(base + [Fraction(v)] + [Fraction(rng.randint(-5, 5)) for _ in range(2)]) for v in vals]
    f = BPoly.const(1)
    for p in ps:
        f = f * (BPoly.y() - BPoly.from_upoly(p))
    kappa = shared * (n - 1)
    e = 2 * kappa + 1 + rng.randint(0, 2)
    if rng.random() < 0.7:
        f = f + BPoly({(e, rng.randint(0, n - 1)): rand_rat(rng, 3) or Fraction(1)})
    seg = UPoly(ps[0].coeffs[: kappa + 1])
    N = rng.randint(max(kappa, 1), 50)
    return f, seg, kappa, N


def _check_hensel(inst, bound=None):
    f, seg, kappa, N = inst
    y = hensel_lift(f, seg, kappa, N).to_upoly()
    r = eval_trunc(f, y, N + 1)
    y2 = hensel_lift(f, seg, kappa, N + 7).to_upoly()
    agree = UPoly._raw(y2.coeffs[: N + 1]) == y
    return (r.is_zero() and agree), {"N": N, "kappa": kappa, "residual_vanishes": r.is_zero(), "unique": agree}


def _gen_split(rng):
    """Engineered split or ramified configurations above a random rational point."""
    beta = Fraction(rng.randint(-3, 3))
    kind = rng.choice(("split", "split", "ramified"))
    if kind == "split":
        n = rng.randint(2, 4)
        while True:
            ps = [rand_upoly(rng, rng.randint(0, 3), 3) for _ in range(n)]
            if len(set(ps)) == n:
                break
        f = BPoly.const(1)
        for p in ps:
            f = f * (BPoly.y() - BPoly.from_upoly(p))
    else:
        c = Fraction(rng.randint(-3, 3))
        odd = rng.choice((1, 3, 5))
        u = Fraction(rng.choice((1, 2, 3, -1, -2)))
        f = (BPoly.y() - c) ** 2 - BPoly({(odd, 0): u})
        if rng.random() < 0.5:
            f = f * (BPoly.y() - BPoly.from_upoly(rand_upoly(rng, 2, 3)))
            if discriminant_y(f).is_zero():
                f = (BPoly.y() - c) ** 2 - BPoly({(odd, 0): u})
    f = f.shift_x(-beta)  # the configuration now sits above X = beta
    return f, beta, kind == "split"


def _check_split(inst, bound=None):
    f, beta, expect = inst
    res = all_branches_at(f, beta)
    ok = res.split == expect and (not res.split or res.kappa_sum == res.ord_d)
    return ok, {"expected_split": expect, "split": res.split, "kappa_sum": res.kappa_sum, "ord_d": res.ord_d}


# arithmetic Bezout ----------------------------------------------------------------


def _gen_kps(rng):
    a = rng.sample(range(-5, 6), 2)
    b = rng.sample(range(-5, 6), 2)
    qa = BPoly({(2, 0): 1, (1, 0): -(a[0] + a[1]), (0, 0): a[0] * a[1]})
    qb = BPoly({(0, 2): 1, (0, 1): -(b[0] + b[1]), (0, 0): b[0] * b[1]})
    while True:
        l1, m1, l2, m2 = (rand_rat(rng, 4) for _ in range(4))
        if l1 * m2 - l2 * m1:
            break
    p, q = qa * l1 + qb * m1, qa * l2 + qb * m2
    pts = sorted((Fraction(x), Fraction(y)) for x in a for y in b)
    return p, q, pts


def _check_kps(inst, bound=None):
    p, q, pts = inst
    sols = sorted(solve_bivariate(p, q))
    hs = LogValue.zero()
    for x, y in sols:
        hs = hs + height_rational_vector([x, y])
    h = max(height_rational_vector(p.coefficients()), height_rational_vector(q.coefficients()))
    kb = (bound or kps_bound)([2, 2], h, 2)
    ok = sols == pts and hs <= kb.height_bound
    return ok, {"solutions": [[str(x), str(y)] for x, y in sols], "sum_heights": hs.to_json(),
                "bound": kb.height_bound.to_json()}


def _bpoly_json(f) -> str:
    return str(f)


SUITES: dict[str, Suite] = {
    "product": Suite("product", _gen_product, _check_product, _polys_json, bound_product, _drop_terms),
    "compose": Suite("compose", _gen_compose, _check_compose,
                     lambda i: {"g": str(i[0]), "f": _polys_json(i[1])}, bound_compose,
                     lambda i: [(g[0], g[1:]) for g in _drop_terms([i[0]] + i[1])]),
    "det": Suite("det", _gen_det, _check_det, lambda m: [_polys_json(r) for r in m], bound_det),
    "rho": Suite("rho", _gen_rho, _check_rho,
                 lambda i: {"g": str(i[0]), "m": i[1], "rho": fmt_scalar(i[2])}, transform_rho),
    "hensel": Suite("hensel", _gen_hensel, _check_hensel,
                    lambda i: {"f": str(i[0]), "segment": str(i[1]), "kappa": i[2], "N": i[3]}),
    "branches": Suite("branches", _gen_split, _check_split,
                      lambda i: {"f": str(i[0]), "beta": fmt_scalar(i[1]), "expected_split": i[2]}),
    "kps": Suite("kps", _gen_kps, _check_kps, lambda i: {"p": str(i[0]), "q": str(i[1])}, kps_bound),
}


def run_suites(seed: int = 0, count: int = 500, names=None, overrides: dict | None = None) -> list[SuiteResult]:
    overrides = overrides or {}
    out = []
    for name in names or SUITES:
        out.append(SUITES[name].run(seed, count, overrides.get(name)))
    return out
