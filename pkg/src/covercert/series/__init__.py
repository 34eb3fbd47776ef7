"""Truncated Laurent series, Hensel lifting and branch analysis."""

from .branches import BranchesAt, all_branches_at, power_series_roots
from .hensel import BranchData, branch_kappa, check_segment, eval_series, eval_trunc, hensel_lift, separation_index
from .infinity import InfinityData, expansions_at_infinity, g_poly, h_poly
from .series import Series, ord
