"""Exact certification of height bounds for plane models of algebraic curves."""

from __future__ import annotations

__version__ = "0.1.0"

from .cover import PlaneModel, analyze, eliminate, normalize_at_infinity  # noqa: E402

__all__ = ["PlaneModel", "analyze", "eliminate", "normalize_at_infinity", "__version__"]
