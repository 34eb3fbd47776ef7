"""Heights of rational vectors, algebraic numbers and polynomials, and the
height inequalities used throughout the construction."""

from .heights import (
    element_minpoly,
    height_algebraic,
    height_element,
    height_poly,
    height_rational_vector,
    height_system,
    height_vector,
)
from .lemmas import (
    BoundCheck,
    KPSBound,
    bound_compose,
    bound_det,
    bound_product,
    inverse_transform_rho,
    kps_bound,
    nabla_sigma,
    quadratic_field_discriminant,
    silverman_bound,
    silverman_check,
    solve_bivariate,
    transform_rho,
)
from .logvalue import LogValue, log_bounds
