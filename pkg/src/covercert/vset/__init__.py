"""Defining equations of V, the predicates W1..W5, membership and audit."""

from .system import (
    AuditReport,
    Equation,
    MembershipReport,
    VarAtlas,
    VSystem,
    WComponent,
    WSystem,
    audit,
    build_atlas,
    build_V,
    build_W,
    expected_equation_count,
    generic_discriminant,
    generic_F,
    verify_membership,
)

__all__ = [
    "AuditReport",
    "Equation",
    "MembershipReport",
    "VarAtlas",
    "VSystem",
    "WComponent",
    "WSystem",
    "audit",
    "build_atlas",
    "build_V",
    "build_W",
    "expected_equation_count",
    "generic_discriminant",
    "generic_F",
    "verify_membership",
]
