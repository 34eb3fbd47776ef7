"""Closed-form bounds and the end-to-end theorem check."""

from .bounds import (
    CheckReport,
    MainBounds,
    SystemBounds,
    chain_check,
    lambda_main,
    lambda_prime,
    lambda_prime_dominated,
    log_le,
    nabla_cap,
    system_nabla_sigma,
    theorem_check,
)

__all__ = [
    "CheckReport",
    "MainBounds",
    "SystemBounds",
    "chain_check",
    "lambda_main",
    "lambda_prime",
    "lambda_prime_dominated",
    "log_le",
    "nabla_cap",
    "system_nabla_sigma",
    "theorem_check",
]
