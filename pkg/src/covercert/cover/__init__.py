"""Plane-model analysis: discriminant classification, branches, canonical models."""

from .analyze import (
    BetaTable,
    CoverReport,
    GeneralCase,
    PhiVector,
    analyze,
    find_rho,
    general_case_transform,
    omega_closed_form,
)
from .model import NormalizationReport, PlaneModel, eliminate, normalize_at_infinity

__all__ = [
    "BetaTable",
    "CoverReport",
    "GeneralCase",
    "NormalizationReport",
    "PhiVector",
    "PlaneModel",
    "analyze",
    "eliminate",
    "find_rho",
    "general_case_transform",
    "normalize_at_infinity",
    "omega_closed_form",
]
