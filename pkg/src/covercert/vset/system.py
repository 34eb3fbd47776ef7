"""The algebraic set V and the exceptional predicates W1..W5 over the variable atlas.

Variables are named ``Th_i_j`` (coefficients of ``F``), ``A_i``, ``B_i``,
``G_i_j_k`` (finite branch segments), ``Ginf_j_k`` (segments at infinity) and
``D`` for the leading coefficient of the discriminant.  ``X``, ``Y``, ``Z``
and ``T`` are auxiliary and eliminated by coefficient extraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..core.linalg import det
from ..core.mpoly import MPoly
from ..core.resultant import sylvester_matrix
from ..core.scalars import fmt_scalar
from ..errors import DimensionMismatch
from ..heights import height_poly
from ..heights.logvalue import LogValue, lmax

X, Y, Z, T = (MPoly.var(v) for v in "XYZT")
ZERO, ONE = MPoly.zero(), MPoly.const(1)


# atlas --------------------------------------------------------------------------


@dataclass
class VarAtlas:
    m: int
    n: int
    mu: int
    nu: int
    finite: dict  # (i, j) -> kappa for j <= ell_i
    inf: list  # kappa_inf,j
    blocks: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        m, n = self.m, self.n
        self.blocks = {
            "Theta": [th(i, j) for i in range(m + 1) for j in range(n)],
            "Alpha": [f"A_{i}" for i in range(1, self.mu + 1)],
            "Beta": [f"B_{i}" for i in range(1, self.nu + 1)],
            "Gamma": [g for key in sorted(self.finite) for g in self.gamma_fin(*key)]
            + [g for j in range(1, n + 1) for g in self.gamma_inf(j)],
            "Delta": ["D"],
        }

    def gamma_fin(self, i: int, j: int) -> list[str]:
        return [f"G_{i}_{j}_{k}" for k in range(self.finite[(i, j)] + 1)]

    def gamma_inf(self, j: int) -> list[str]:
        lo = -self.m if j == 1 else 0
        return [f"Ginf_{j}_{k}" for k in range(lo, lo + self.inf[j - 1] + 1)]

    @property
    def names(self) -> list[str]:
        return [v for b in ("Theta", "Alpha", "Beta", "Gamma", "Delta") for v in self.blocks[b]]

    @property
    def total(self) -> int:
        return len(self.names)

    def block_sizes(self) -> dict:
        return {k: len(v) for k, v in self.blocks.items()}

    def assignment(self, phi) -> dict:
        vals = phi.flat() if hasattr(phi, "flat") else list(phi)
        if len(vals) != self.total:
            raise DimensionMismatch(f"point has {len(vals)} coordinates, the atlas has {self.total}")
        return dict(zip(self.names, vals))


def th(i: int, j: int) -> str:
    return f"Th_{i}_{j}"


def build_atlas(report) -> VarAtlas:
    finite = {}
    for i, bt in enumerate(report.betas, 1):
        for j in range(1, bt.ell + 1):
            finite[(i, j)] = bt.kappas[j - 1]
    atlas = VarAtlas(report.m, report.n, report.mu, report.nu, finite, report.kappa_inf)
    if atlas.total != report.omega:
        raise AssertionError(f"atlas size {atlas.total} differs from omega = {report.omega}")
    return atlas


# symbolic pieces ----------------------------------------------------------------


def generic_F(m: int, n: int) -> MPoly:
    """``Y^n + sum Th_i_j X^i Y^j``."""
    F = Y ** n
    for i in range(m + 1):
        for j in range(n):
            F = F + MPoly.var(th(i, j)) * X ** i * Y ** j
    return F


def generic_discriminant(m: int, n: int) -> MPoly:
    """``(-1)^(n(n-1)/2) Res_Y(F, F'_Y)`` as a polynomial in ``X`` and the ``Th`` variables."""
    F = generic_F(m, n)
    a = [F.coeff_of("Y", k) for k in range(n + 1)]
    b = [a[k + 1] * (k + 1) for k in range(n)]
    r = det(sylvester_matrix(a, b, ZERO), ZERO, ONE)
    return -r if (n * (n - 1) // 2) % 2 else r


def _G(m: int, n: int) -> MPoly:
    """``T^m F(1/T, Y)``."""
    G = T ** m * Y ** n
    for i in range(m + 1):
        for j in range(n):
            G = G + MPoly.var(th(i, j)) * T ** (m - i) * Y ** j
    return G


def _H(m: int, n: int) -> MPoly:
    """``T^(m(n+1)) F(1/T, T^(-m) Y)``."""
    H = T ** m * Y ** n
    for i in range(m + 1):
        for j in range(n):
            H = H + MPoly.var(th(i, j)) * T ** (m * (n + 1) - i - m * j) * Y ** j
    return H


def _d_y(P: MPoly) -> MPoly:
    out = ZERO
    for k, c in P.coeffs_in("Y").items():
        if k:
            out = out + c * Y ** (k - 1) * k
    return out


def _coeffs(P: MPoly, var: str, upto: int) -> list[MPoly]:
    cs = P.coeffs_in(var)
    return [cs.get(k, ZERO) for k in range(upto + 1)]


# systems --------------------------------------------------------------------------


@dataclass
class Equation:
    poly: MPoly
    tag: str  # ram, disc, ser, ser_inf_g, ser_inf_h, uni
    label: str

    def to_json(self) -> dict:
        return {"tag": self.tag, "label": self.label, "poly": self.poly.to_json()}


@dataclass
class VSystem:
    atlas: VarAtlas
    equations: list
    dropped: dict  # tag -> number of identically vanishing coefficient equations

    def __len__(self):
        return len(self.equations)

    def count_by_tag(self) -> dict:
        out: dict = {}
        for e in self.equations:
            out[e.tag] = out.get(e.tag, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "variables": self.atlas.names,
            "equations": [e.to_json() for e in self.equations],
            "count_by_tag": self.count_by_tag(),
        }


@dataclass
class WComponent:
    family: str  # W1..W5
    label: str
    polys: list  # point lies in the component iff all vanish

    def contains(self, point: dict) -> bool:
        return all(not p.evaluate(point) for p in self.polys)


@dataclass
class WSystem:
    atlas: VarAtlas
    components: list

    def families(self) -> dict:
        out = {f"W{k}": [] for k in range(1, 6)}
        for c in self.components:
            out[c.family].append(c)
        return out


class _Builder:
    def __init__(self):
        self.eqs: list = []
        self.dropped: dict = {}

    def add(self, poly: MPoly, tag: str, label: str):
        if poly.is_zero():
            self.dropped[tag] = self.dropped.get(tag, 0) + 1
            return
        self.eqs.append(Equation(poly, tag, label))


def _finite_substitution(F: MPoly, i: int, names: list[str]):
    """``F(B_i + Z, sum_k G_k Z^k)``."""
    ytil = ZERO
    for k, g in enumerate(names):
        ytil = ytil + MPoly.var(g) * Z ** k
    return F.subs({"X": MPoly.var(f"B_{i}") + Z, "Y": ytil})


def _inf_substitution(P: MPoly, names: list[str], shift: int):
    ytil = ZERO
    for name in names:
        k = int(name.rsplit("_", 1)[1])
        ytil = ytil + MPoly.var(name) * T ** (k + shift)
    return P.subs({"Y": ytil})


def build_V(report, atlas: VarAtlas | None = None) -> VSystem:
    atlas = atlas or build_atlas(report)
    m, n = atlas.m, atlas.n
    b = _Builder()

    for i, (a, _) in enumerate(report.alphas, 1):
        b.add(MPoly.var(f"A_{i}") - a, "ram", f"A_{i}")

    D = generic_discriminant(m, n)
    rhs = MPoly.var("D")
    for i, (_, s) in enumerate(report.alphas, 1):
        rhs = rhs * (X - MPoly.var(f"A_{i}")) ** s
    for i, bt in enumerate(report.betas, 1):
        rhs = rhs * (X - MPoly.var(f"B_{i}")) ** bt.tau
    diff = D - rhs
    top = max(diff.degree("X"), 0)
    for k, c in enumerate(_coeffs(diff, "X", top)):
        b.add(c, "disc", f"X^{k}")

    F = generic_F(m, n)
    Fy = _d_y(F)
    for (i, j), kappa in sorted(atlas.finite.items()):
        names = atlas.gamma_fin(i, j)
        for k, c in enumerate(_coeffs(_finite_substitution(F, i, names), "Z", 2 * kappa)):
            b.add(c, "ser", f"beta{i},branch{j}: F Z^{k}")
        for k, c in enumerate(_coeffs(_finite_substitution(Fy, i, names), "Z", kappa - 1)):
            b.add(c, "ser", f"beta{i},branch{j}: F'_Y Z^{k}")

    G, H = _G(m, n), _H(m, n)
    Gy, Hy = _d_y(G), _d_y(H)
    for j in range(2, n + 1):
        kappa = atlas.inf[j - 1]
        names = atlas.gamma_inf(j)
        for k, c in enumerate(_coeffs(_inf_substitution(G, names, 0), "T", 2 * kappa)):
            b.add(c, "ser_inf_g", f"inf{j}: G T^{k}")
        for k, c in enumerate(_coeffs(_inf_substitution(Gy, names, 0), "T", kappa - 1)):
            b.add(c, "ser_inf_g", f"inf{j}: G'_Y T^{k}")
    kappa = atlas.inf[0]
    names = atlas.gamma_inf(1)
    for k, c in enumerate(_coeffs(_inf_substitution(H, names, m), "T", 2 * kappa)):
        b.add(c, "ser_inf_h", f"inf1: H T^{k}")
    for k, c in enumerate(_coeffs(_inf_substitution(Hy, names, m), "T", kappa - 1)):
        b.add(c, "ser_inf_h", f"inf1: H'_Y T^{k}")

    b.add(MPoly.var(f"Ginf_1_{-m}") - 1, "uni", "leading coefficient at the pole")
    b.add(MPoly.var("Ginf_1_0"), "uni", "constant term at the pole")
    return VSystem(atlas, b.eqs, b.dropped)


def expected_equation_count(report) -> int:
    """Closed-form size of V once identically vanishing coefficients are discarded.

    ``mu + (2m(n-1) + 1) + sum_finite (3 kappa + 1) + sum_{j>=2} (3 kappa_inf,j + 1)
    + (2 kappa_inf,1 + 1 - m) + (kappa_inf,1 - min(kappa_inf,1, m)) + 2``.
    The last two brackets discount the ``m`` lowest coefficients, which vanish
    identically because every monomial of ``H`` carries ``T^m``.
    """
    m, n = report.m, report.n
    fin = sum(3 * k + 1 for bt in report.betas for k in bt.kappas[: bt.ell])
    ki = report.kappa_inf
    infg = sum(3 * k + 1 for k in ki[1:])
    infh = (2 * ki[0] + 1 - m) + (ki[0] - min(ki[0], m))
    return report.mu + 2 * m * (n - 1) + 1 + fin + infg + infh + 2


def build_W(report, atlas: VarAtlas | None = None) -> WSystem:
    atlas = atlas or build_atlas(report)
    m, n = atlas.m, atlas.n
    comps = [WComponent("W1", "D = 0", [MPoly.var("D")])]
    for i in range(1, atlas.mu + 1):
        for j in range(1, atlas.nu + 1):
            comps.append(WComponent("W2", f"A_{i} = B_{j}", [MPoly.var(f"A_{i}") - MPoly.var(f"B_{j}")]))
    for i in range(1, atlas.nu + 1):
        for j in range(i + 1, atlas.nu + 1):
            comps.append(WComponent("W3", f"B_{i} = B_{j}", [MPoly.var(f"B_{i}") - MPoly.var(f"B_{j}")]))

    F = generic_F(m, n)
    Fy = _d_y(F)
    for (i, j), kappa in sorted(atlas.finite.items()):
        names = atlas.gamma_fin(i, j)
        polys = _coeffs(_finite_substitution(Fy, i, names), "Z", kappa)
        comps.append(WComponent("W4", f"beta{i},branch{j}: F'_Y vanishes beyond order {kappa}", polys))
    G, H = _G(m, n), _H(m, n)
    Gy, Hy = _d_y(G), _d_y(H)
    kappa = atlas.inf[0]
    polys = [p for p in _coeffs(_inf_substitution(Hy, atlas.gamma_inf(1), m), "T", kappa) if p]
    comps.append(WComponent("W4", f"inf1: H'_Y vanishes beyond order {kappa}", polys))
    for j in range(2, n + 1):
        kappa = atlas.inf[j - 1]
        polys = _coeffs(_inf_substitution(Gy, atlas.gamma_inf(j), 0), "T", kappa)
        comps.append(WComponent("W4", f"inf{j}: G'_Y vanishes beyond order {kappa}", polys))

    for i, bt in enumerate(report.betas, 1):
        for (j1, j2), lam in sorted(bt.data.separation.items()):
            if j2 <= bt.ell:
                p = MPoly.var(f"G_{i}_{j1}_{lam}") - MPoly.var(f"G_{i}_{j2}_{lam}")
                comps.append(WComponent("W5", f"beta{i}: branches {j1},{j2} agree at {lam}", [p]))
    for (j1, j2), lam in sorted(report.infinity.separation.items()):
        p = MPoly.var(f"Ginf_{j1}_{lam}") - MPoly.var(f"Ginf_{j2}_{lam}")
        comps.append(WComponent("W5", f"inf: branches {j1},{j2} agree at {lam}", [p]))
    return WSystem(atlas, comps)


# membership and audit ---------------------------------------------------------


@dataclass
class MembershipReport:
    v_results: list  # (tag, label, value)
    w_results: dict  # family -> list of component labels containing the point

    @property
    def v_failures(self) -> list:
        return [r for r in self.v_results if r[2]]

    @property
    def w_fired(self) -> list[str]:
        return [k for k, v in sorted(self.w_results.items()) if v]

    @property
    def passed(self) -> bool:
        return not self.v_failures and not self.w_fired

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "V": [{"tag": t, "label": l, "value": fmt_scalar(v), "ok": not v} for t, l, v in self.v_results],
            "W": {k: v for k, v in sorted(self.w_results.items())},
        }


def verify_membership(V: VSystem, W: WSystem, phi) -> MembershipReport:
    point = V.atlas.assignment(phi)
    vres = [(e.tag, e.label, e.poly.evaluate(point)) for e in V.equations]
    wres = {fam: [c.label for c in comps if c.contains(point)] for fam, comps in W.families().items()}
    return MembershipReport(vres, wres)


@dataclass
class AuditReport:
    max_degree: int
    degree_cap: int
    max_height: LogValue
    height_cap: LogValue
    worst_degree: str
    worst_height: str

    @property
    def degree_ok(self) -> bool:
        return self.max_degree <= self.degree_cap

    @property
    def height_ok(self) -> bool:
        return self.max_height <= self.height_cap

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "degree_cap": self.degree_cap,
            "degree_ok": self.degree_ok,
            "max_height": self.max_height.to_json(),
            "height_cap": self.height_cap.to_json(),
            "height_ok": self.height_ok,
            "worst_degree": self.worst_degree,
            "worst_height": self.worst_height,
        }


def audit(V: VSystem, h_alpha: LogValue) -> AuditReport:
    """Degree cap ``2 m n^2`` and height cap ``h + 12 (mn)^3``."""
    m, n = V.atlas.m, V.atlas.n
    degs = [(e.poly.total_degree, f"{e.tag}:{e.label}") for e in V.equations]
    hs = [(height_poly(e.poly), f"{e.tag}:{e.label}") for e in V.equations]
    dmax = max(degs, key=lambda t: t[0])
    hmax = lmax([h for h, _ in hs])
    worst_h = next(lbl for h, lbl in hs if h == hmax) if hmax.is_exact else max(hs, key=lambda t: float(t[0]))[1]
    return AuditReport(dmax[0], 2 * m * n * n, hmax, h_alpha + 12 * (m * n) ** 3, dmax[1], worst_h)
