"""Closed-form height bounds and their end-to-end checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from ..errors import InputError
from ..heights import height_poly, kps_bound, nabla_sigma
from ..heights.logvalue import LogValue, log_bounds


def lambda_main(g: int, n: int) -> int:
    """``(2(g+1)n^2)^(10gn + 12n)``."""
    if g < 0 or n < 2:
        raise InputError("need g >= 0 and n >= 2")
    return (2 * (g + 1) * n * n) ** (10 * g * n + 12 * n)


def lambda_prime(m: int, n: int) -> int:
    """``(2mn^2)^(10mn + 2n - 3)``."""
    if m < 1 or n < 2:
        raise InputError("need m >= 1 and n >= 2")
    return (2 * m * n * n) ** (10 * m * n + 2 * n - 3)


def nabla_cap(m: int, n: int, omega: int) -> int:
    return (2 * m * n * n) ** omega


def lambda_prime_dominated(m: int, n: int) -> bool:
    """``Lambda'(m, n) <= Lambda(m - 1, n)``."""
    return lambda_prime(m, n) <= lambda_main(m - 1, n)


@dataclass(frozen=True)
class MainBounds:
    Lambda: int
    LambdaPrime: int
    nabla_cap: int
    omega: int
    sigma_cap: int

    @classmethod
    def of(cls, m: int, n: int, omega: int) -> "MainBounds":
        return cls(lambda_main(m - 1, n), lambda_prime(m, n), nabla_cap(m, n, omega), omega, omega)

    def to_json(self) -> dict:
        return {
            "Lambda": str(self.Lambda),
            "LambdaPrime": str(self.LambdaPrime),
            "nabla_cap": str(self.nabla_cap),
            "omega": self.omega,
            "sigma_cap": self.sigma_cap,
        }


# exp-free comparison ---------------------------------------------------------------


def log_le(value: LogValue, bound: LogValue) -> tuple[bool, str]:
    """Decide ``value <= bound``; returns the verdict and the method used.

    When ``value = log M`` with ``M`` rational the bit length of ``ceil(M)`` is
    compared against ``B_lo / log2_hi`` where ``B_lo`` is a certified lower
    bound of the right side: ``M < 2^bits <= 2^(B_lo/log2_hi) <= e^B``.
    """
    M = value.log_argument()
    if M is not None and M >= 1:
        B_lo, _ = bound.enclose(64)
        _, l2_hi = log_bounds(2, 64)
        if B_lo > 0:
            bits = ceil(M).bit_length()
            if bits <= floor(B_lo / l2_hi):
                return True, "bit-length"
    return value <= bound, "log-compare"


@dataclass
class CheckReport:
    m: int
    n: int
    deg_x_ok: bool
    deg_y_ok: bool
    h_f: LogValue
    h_alpha: LogValue
    bound_prime: LogValue
    bound_main: LogValue
    prime_ok: bool
    main_ok: bool
    methods: tuple

    @property
    def passed(self) -> bool:
        return self.deg_x_ok and self.deg_y_ok and self.prime_ok and self.main_ok

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "deg_x": self.m,
            "deg_y": self.n,
            "deg_x_ok": self.deg_x_ok,
            "deg_y_ok": self.deg_y_ok,
            "h_f": self.h_f.to_json(),
            "h_alpha": self.h_alpha.to_json(),
            "LambdaPrime": str(lambda_prime(self.m, self.n)),
            "Lambda": str(lambda_main(self.m - 1, self.n)),
            "h_f_le_LambdaPrime_h_plus_1": self.prime_ok,
            "h_f_le_Lambda_h_plus_1": self.main_ok,
            "methods": list(self.methods),
        }


def theorem_check(report, f, h_alpha: LogValue) -> CheckReport:
    """Degrees ``(m, n)`` and ``h(f) <= Lambda'(h+1) <= Lambda(h+1)`` with ``g = m - 1``."""
    m, n = report.m, report.n
    hf = height_poly(f)
    hp1 = h_alpha + 1
    bp = hp1 * lambda_prime(m, n)
    bm = hp1 * lambda_main(m - 1, n)
    ok_p, meth_p = log_le(hf, bp)
    ok_m, meth_m = log_le(hf, bm)
    return CheckReport(m, n, f.deg_x == m, f.deg_y == n, hf, h_alpha, bp, bm, ok_p, ok_m, (meth_p, meth_m))


@dataclass
class SystemBounds:
    nabla: int
    sigma: Fraction
    omega: int
    nabla_ok: bool
    sigma_ok: bool
    kps: object
    chain_ok: bool | None = None

    def to_json(self) -> dict:
        return {
            "nabla": str(self.nabla),
            "sigma": str(self.sigma),
            "omega": self.omega,
            "nabla_le_cap": self.nabla_ok,
            "sigma_le_omega": self.sigma_ok,
            "kps": self.kps.to_json(),
            "h_f_le_kps_bound": self.chain_ok,
        }


def system_nabla_sigma(V, N: int, h: LogValue | None = None) -> SystemBounds:
    """Degree data of the ``N`` largest equations and the arithmetic Bezout bound for V.

    ``h`` defaults to the cap ``h_alpha + 12 (mn)^3`` only when supplied by the
    caller; otherwise the audited maximal equation height is used.
    """
    from ..vset import audit as _audit  # local: vset depends on heights only

    degs = [e.poly.total_degree for e in V.equations]
    nabla, sigma = nabla_sigma(degs, N)
    if h is None:
        h = _audit(V, LogValue.zero()).max_height
    kb = kps_bound(degs, h, N)
    m, n = V.atlas.m, V.atlas.n
    return SystemBounds(nabla, sigma, N, nabla <= nabla_cap(m, n, N), sigma <= N, kb)


def chain_check(hf: LogValue, sb: SystemBounds) -> bool:
    ok, _ = log_le(hf, sb.kps.height_bound)
    sb.chain_ok = ok
    return ok
