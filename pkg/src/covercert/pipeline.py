"""End-to-end certification of a curve: model, analysis, V/W membership, audits, bounds."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bounds import MainBounds, chain_check, system_nabla_sigma, theorem_check
from .cover import PlaneModel, analyze, eliminate, general_case_transform, normalize_at_infinity
from .errors import (
    CovercertError,
    DeclaredPointNotRoot,
    InputError,
    RamifiedAtDeclaredBeta,
    RamifiedAtInfinity,
    UnclassifiedDiscriminantRoot,
    WrongPoleOrder,
    WrongPoleShape,
)
from .heights import height_poly, height_vector
from .heights.logvalue import LogValue, lmax
from .series.branches import PREC_CAP
from .vset import audit, build_V, build_W, expected_equation_count, verify_membership

# failures raised inside the pipeline, mapped to the clause they violate
_CLAUSES = {
    DeclaredPointNotRoot: ("V:disc", "discriminant factorization over the declared branch points"),
    UnclassifiedDiscriminantRoot: ("V:disc", "discriminant roots outside the working field"),
    RamifiedAtDeclaredBeta: ("analyze:beta", "x must be unramified above every undeclared root of d"),
    RamifiedAtInfinity: ("analyze:infinity", "x must be unramified above infinity"),
    WrongPoleShape: ("analyze:infinity", "pole of exact order m at infinity"),
    WrongPoleOrder: ("model:normalization", "seed function must have a single pole of order m"),
}

_TAG_CLAUSE = {
    "ram": "branch points equal the declared values",
    "disc": "discriminant factorization",
    "ser": "initial segments above the extra discriminant roots",
    "ser_inf_g": "initial segments of the finite branches at infinity",
    "ser_inf_h": "initial segment of the pole branch at infinity",
    "uni": "normalization at infinity",
}


@dataclass
class Outcome:
    sections: dict = dc_field(default_factory=dict)
    checks: list = dc_field(default_factory=list)  # (name, ok, clause)

    def check(self, name: str, ok: bool, clause: str):
        self.checks.append((name, bool(ok), clause))

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        fails = self.failures
        out = dict(self.sections)
        out["checks"] = [{"name": n, "ok": ok, "clause": c} for n, ok, c in self.checks]
        out["passed"] = self.passed
        out["first_failure"] = {"name": fails[0][0], "clause": fails[0][2]} if fails else None
        return out


def h_of_points(points) -> LogValue:
    """``max_i h(alpha_i)``."""
    return lmax([height_vector([a]) for a in points]) if points else LogValue.zero()


def build_model(ci, out: Outcome | None = None) -> PlaneModel:
    if ci.F0 is None:
        return PlaneModel(ci.f, ci.field)
    y_expr = ci.y_expr
    if y_expr is None:
        y_expr, norm = normalize_at_infinity(ci.F0, ci.seed_u, ci.m, ci.field)
        if out is not None:
            out.sections["normalization"] = norm.to_json()
    model = eliminate(ci.F0, y_expr, ci.field)
    if out is not None and ci.f is not None:
        out.check("model:f", model.f == ci.f, "eliminant agrees with the stated model")
    return model


def run_analyze(ci, cap: int = PREC_CAP) -> Outcome:
    out = Outcome()
    model = build_model(ci, out)
    out.sections["model"] = model.to_json()
    rep = analyze(model, ci.declared, cap)
    out.sections["report"] = rep.to_json()
    return out


def run_verify(ci, cap: int = PREC_CAP, with_equations: bool = False) -> Outcome:
    out = Outcome()
    try:
        model = build_model(ci, out)
        out.sections["model"] = model.to_json()
        rep = analyze(model, ci.declared, cap)
    except InputError:
        raise
    except CovercertError as exc:
        name, clause = _CLAUSES.get(type(exc), ("pipeline", type(exc).__name__))
        out.check(name, False, f"{clause}: {exc}")
        return out
    out.sections["report"] = rep.to_json()
    for key, ok in sorted(rep.audit.items()):
        if key == "kappa_inf1_mn_variant":
            continue  # informational: the chain rule gives m(n-1), not mn
        out.check(f"audit:{key}", ok, "dimension and branch-count inequalities")

    V, W = build_V(rep), build_W(rep)
    out.sections["V"] = {
        "count": len(V),
        "expected_count": expected_equation_count(rep),
        "count_by_tag": V.count_by_tag(),
        "identically_zero_dropped": V.dropped,
        "variables": V.atlas.names,
    }
    if with_equations:
        out.sections["V"]["equations"] = [e.to_json() for e in V.equations]
    out.check("V:count", len(V) == expected_equation_count(rep), "equation count matches the report shapes")
    mem = verify_membership(V, W, rep.phi())
    out.sections["membership"] = mem.to_json()
    for tag, label, value in mem.v_results:
        out.check(f"V:{tag}", not value, f"{_TAG_CLAUSE[tag]} ({label})")
    for fam, hits in sorted(mem.w_results.items()):
        out.check(f"W:{fam}", not hits, f"phi must avoid {fam}" + (f": {hits}" if hits else ""))

    h_alpha = h_of_points([a for a, _ in rep.alphas])
    au = audit(V, h_alpha)
    out.sections["audit"] = au.to_json()
    out.check("audit:degree", au.degree_ok, "equation degrees at most 2mn^2")
    out.check("audit:height", au.height_ok, "equation heights at most h + 12(mn)^3")

    tc = theorem_check(rep, model.f, h_alpha)
    out.sections["theorem"] = tc.to_json()
    out.check("theorem:deg_x", tc.deg_x_ok, "deg_X f = g + 1")
    out.check("theorem:deg_y", tc.deg_y_ok, "deg_Y f = n")
    out.check("theorem:Lambda_prime", tc.prime_ok, "h(f) <= Lambda'(h+1)")
    out.check("theorem:Lambda", tc.main_ok, "h(f) <= Lambda(h+1)")

    sb = system_nabla_sigma(V, rep.omega, au.height_cap)
    chain_check(height_poly(model.f), sb)
    out.sections["system_bounds"] = sb.to_json()
    out.sections["bounds"] = MainBounds.of(rep.m, rep.n, rep.omega).to_json()
    out.check("bounds:nabla", sb.nabla_ok, "nabla <= (2mn^2)^Omega")
    out.check("bounds:sigma", sb.sigma_ok, "Sigma <= Omega")
    out.check("bounds:chain", sb.chain_ok, "h(f) within the arithmetic Bezout bound for V")

    if ci.bad_xs or ci.rho is not None:
        gc = general_case_transform(model.f, rep.m, [a for a, _ in rep.alphas], ci.bad_xs, ci.rho)
        out.sections["general_case"] = gc.to_json()
        out.check("general_case:height", gc.holds, "branch-point height after the shift")
        out.check("general_case:round_trip", gc.round_trip, "shift is invertible")
    return out

