"""Discriminant classification, branch tables and the dimension count of a plane model."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ..core.resultant import discriminant_y
from ..core.roots import roots_in_field
from ..core.scalars import fmt_scalar, scalar_key
from ..core.upoly import UPoly
from ..errors import (
    DeclaredPointNotRoot,
    InputError,
    NoAdmissibleShift,
    RamifiedAtDeclaredBeta,
    RootsOutsideField,
    UnclassifiedDiscriminantRoot,
)
from ..series.branches import PREC_CAP, BranchesAt, all_branches_at
from ..series.infinity import InfinityData, expansions_at_infinity
from .model import PlaneModel


def _multiplicity(p: UPoly, a) -> tuple[int, UPoly]:
    """Largest ``k`` with ``(X - a)^k | p`` and the quotient."""
    k = 0
    lin = UPoly([-a, 1])
    while p.degree > 0:
        q, r = divmod(p, lin)
        if r:
            break
        p, k = q, k + 1
    return k, p


def omega_closed_form(m: int, n: int, mu: int, nu: int, finite_kappas, inf_kappas) -> int:
    """``(m+1)n + mu + nu + sum_{i, j<=l_i} (kappa_ij + 1) + sum_j (kappa_inf,j + 1) + 1``."""
    fin = sum(k + 1 for ks in finite_kappas for k in ks if k > 0)
    inf = sum(k + 1 for k in inf_kappas)
    return (m + 1) * n + mu + nu + fin + inf + 1


@dataclass
class BetaTable:
    beta: object
    tau: int
    data: BranchesAt

    @property
    def ell(self) -> int:
        return sum(1 for k in self.data.kappas if k > 0)

    @property
    def kappas(self) -> list[int]:
        return self.data.kappas

    def to_json(self) -> dict:
        out = self.data.to_json()
        out.update({"beta": fmt_scalar(self.beta), "tau": self.tau, "ell": self.ell})
        return out


@dataclass
class PhiVector:
    theta: list  # theta[i][j], 0 <= i <= m, 0 <= j < n
    alpha: list
    beta: list
    gamma: dict  # ("fin", i, j) or ("inf", j) -> {k: value}
    delta: object

    def flat(self) -> list:
        out = [c for row in self.theta for c in row]
        out += list(self.alpha) + list(self.beta)
        for key in sorted(self.gamma, key=_gamma_key):
            block = self.gamma[key]
            out += [block[k] for k in sorted(block)]
        out.append(self.delta)
        return out

    def __len__(self):
        return len(self.flat())


def _gamma_key(key):
    return (0, key[1], key[2]) if key[0] == "fin" else (1, key[1], 0)


@dataclass
class CoverReport:
    model: PlaneModel
    d: UPoly
    delta: object
    alphas: list  # (alpha, sigma)
    betas: list  # BetaTable
    alpha_status: list  # "ramified" / "unramified" / "undetermined"
    infinity: InfinityData
    omega: int
    audit: dict = dc_field(default_factory=dict)

    @property
    def m(self) -> int:
        return self.model.m

    @property
    def n(self) -> int:
        return self.model.n

    @property
    def mu(self) -> int:
        return len(self.alphas)

    @property
    def nu(self) -> int:
        return len(self.betas)

    @property
    def kappa_inf(self) -> list[int]:
        return list(self.infinity.kappas)

    def phi(self) -> PhiVector:
        gamma = {}
        for i, bt in enumerate(self.betas, 1):
            for j, b in enumerate(bt.data.branches[: bt.ell], 1):
                gamma[("fin", i, j)] = dict(enumerate(b.gammas))
        m = self.m
        for j, b in enumerate(self.infinity.branches, 1):
            lo = -m if j == 1 else 0
            gamma[("inf", j)] = {k: b.segment.coeff(k) for k in range(lo, lo + b.kappa + 1)}
        return PhiVector(
            theta=self.model.theta(),
            alpha=[a for a, _ in self.alphas],
            beta=[bt.beta for bt in self.betas],
            gamma=gamma,
            delta=self.delta,
        )

    def to_json(self) -> dict:
        return {
            "model": self.model.to_json(),
            "d": [fmt_scalar(c) for c in self.d.coeffs],
            "delta": fmt_scalar(self.delta),
            "alphas": [{"alpha": fmt_scalar(a), "sigma": s, "status": st}
                       for (a, s), st in zip(self.alphas, self.alpha_status)],
            "betas": [bt.to_json() for bt in self.betas],
            "infinity": self.infinity.to_json(),
            "mu": self.mu,
            "nu": self.nu,
            "omega": self.omega,
            "audit": self.audit,
        }


def _alpha_status(f, a, field) -> str:
    try:
        return "ramified" if all_branches_at(f, a, field).ramified else "unramified"
    except RootsOutsideField:
        return "undetermined"


def analyze(model: PlaneModel, declared_alphas, cap: int = PREC_CAP) -> CoverReport:
    """Classify the roots of ``d`` against the declared branch points and tabulate branches.

    ``cap`` bounds the number of series terms computed while certifying kappas.
    """
    f, field = model.f, model.field
    m, n = model.m, model.n
    alphas_in = [field(a) if field is not None and not hasattr(a, "coords") else a for a in declared_alphas]
    if field is None:
        alphas_in = [Fraction(a) for a in alphas_in]
    if len(set(alphas_in)) != len(alphas_in):
        raise InputError("declared branch points must be pairwise distinct")

    d = discriminant_y(f)
    if d.is_zero():
        raise InputError("f is not squarefree in Y")
    delta = d.lc
    rest = d
    alphas = []
    for a in alphas_in:
        s, rest = _multiplicity(rest, a)
        if s == 0:
            raise DeclaredPointNotRoot(f"declared branch point {a} is not a root of d(X) = {d}")
        alphas.append((a, s))

    roots, cof = roots_in_field(rest, field)
    if cof.degree > 0:
        raise UnclassifiedDiscriminantRoot(
            f"d(X) has the factor {cof} with no roots in the working field; extend the field", cof)

    betas = []
    for b, tau in roots:
        data = all_branches_at(f, b, field, cap=cap)
        if data.ramified:
            raise RamifiedAtDeclaredBeta(f"x is ramified above the undeclared root {b} of d(X)", b)
        if data.kappa_sum != tau:
            raise AssertionError(f"sum of kappas {data.kappa_sum} differs from tau = {tau} at {b}")
        betas.append(BetaTable(b, tau, data))
    betas.sort(key=lambda t: scalar_key(t.beta))

    inf = expansions_at_infinity(f, m, n, field, cap=cap)
    status = [_alpha_status(f, a, field) for a, _ in alphas]
    omega = omega_closed_form(m, n, len(alphas), len(betas), [bt.kappas for bt in betas], inf.kappas)
    report = CoverReport(model, d, delta, alphas, betas, status, inf, omega)
    report.audit = audit_inequalities(report)
    return report


def audit_inequalities(r: CoverReport) -> dict:
    m, n, dd = r.m, r.n, r.d.degree
    recon = UPoly.const(r.delta)
    for a, s in r.alphas:
        recon = recon * UPoly([-a, 1]) ** s
    for bt in r.betas:
        recon = recon * UPoly([-bt.beta, 1]) ** bt.tau
    fin = sum(k + 1 for bt in r.betas for k in bt.kappas[: bt.ell])
    ki = r.kappa_inf
    inf = r.infinity
    return {
        "d_reconstruction": recon == r.d,
        "delta_nonzero": bool(r.delta),
        "kappa_sums_equal_tau": all(sum(bt.kappas) == bt.tau for bt in r.betas),
        "finite_kappa_bound": fin <= 2 * dd,
        "infinity_kappa_sum": sum(ki) <= m * n + dd,
        "infinity_kappa_plus_one": sum(k + 1 for k in ki) <= (m + 1) * n + dd,
        "omega_bound": r.omega <= 2 * (m + 1) * n + 4 * dd + 1 and r.omega <= 10 * m * n + 2 * n - 8 * m + 1,
        "mu_nu_deg_d": r.mu + r.nu <= dd <= 2 * m * (n - 1),
        "kappa_inf1_chain_rule": inf.chain_rule_holds,
        "kappa_inf1_mn_variant": inf.mn_variant_holds,
        "normalized_at_infinity": inf.normalized,
    }


# the good fibre shift -------------------------------------------------------------


def find_rho(bad_xs, m: int) -> int:
    """Smallest ``|rho| <= m^3`` (positive first on ties) avoiding ``bad_xs``."""
    bad = set()
    for b in bad_xs:
        r = b if isinstance(b, Fraction) else (Fraction(b) if isinstance(b, (int, str)) else None)
        if r is None:
            coords = getattr(b, "coords", None)
            if coords is not None and all(c == 0 for c in coords[1:]):
                r = coords[0]
        if r is not None and r.denominator == 1:
            bad.add(int(r))
    cap = m ** 3
    for k in range(cap + 1):
        for rho in ((k,) if k == 0 else (k, -k)):
            if rho not in bad:
                return rho
    raise NoAdmissibleShift(f"every integer in [-{cap}, {cap}] is a bad x-value")


@dataclass
class GeneralCase:
    rho: int
    shifted: object  # BPoly relation in the new coordinate (not monic in general)
    alphas: list
    h_shifted: object  # LogValue
    h_bound: object
    h_bound_intermediate: object
    round_trip: bool

    @property
    def holds(self) -> bool:
        return self.h_shifted <= self.h_bound_intermediate and self.h_bound_intermediate <= self.h_bound

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "shifted_alphas": [fmt_scalar(a) for a in self.alphas],
            "h_shifted": self.h_shifted.to_json(),
            "h_bound": self.h_bound.to_json(),
            "round_trip": self.round_trip,
            "holds": self.holds,
        }


def general_case_transform(f, m: int, alphas, bad_xs=(), rho: int | None = None) -> GeneralCase:
    """Move to ``x' = (x - rho)^(-1)``; branch points follow.

    ``rho`` defaults to :func:`find_rho` over ``bad_xs`` together with the branch points.
    """
    from ..heights import height_vector, inverse_transform_rho, transform_rho
    from ..heights.logvalue import LogValue, lmax

    if rho is None:
        rho = find_rho(list(bad_xs) + list(alphas), m)
    elif any(a == rho for a in alphas):
        raise InputError(f"rho = {rho} is a branch point")
    shifted = inverse_transform_rho(f, m, rho)
    back = transform_rho(shifted, m, rho)
    new_alphas = [1 / (a - rho) for a in alphas]
    h = lmax([height_vector([a]) for a in alphas]) if alphas else LogValue.zero()
    h_new = lmax([height_vector([a]) for a in new_alphas]) if alphas else LogValue.zero()
    inter = h + LogValue.log(2 * max(1, abs(rho)))
    bound = h + LogValue.log(2 * m) * 3
    return GeneralCase(rho, shifted, new_alphas, h_new, bound, inter, back.f == f)

