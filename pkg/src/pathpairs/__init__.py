"""Exact enumeration of generalized k-path pairs and (k, epsilon)-Catalan triangles."""

from pathpairs.errors import DomainError, RangeError, SplitError
from pathpairs.exact_math import (
    EpsilonSplit,
    StrictQuery,
    binomial,
    raney_coefficient,
    strict_count_formula,
    strict_count_general,
)
from pathpairs.lattice import (
    LatticePath,
    PathPair,
    enumerate_strict,
    enumerate_weak,
    gamma2_blocks_valid,
    return_count,
    weakly_above,
)
from pathpairs.report import VerificationReport
from pathpairs.series import (
    RiordanSpec,
    TruncatedSeries,
    Triangle,
    az_polynomials,
    check_az_recurrence,
    check_fundamental_identities,
    kcatalan_series,
    riordan_triangle,
    series_power,
)
from pathpairs.triangles import (
    irreducible_count,
    triangle_closed_form,
    triangle_recursive,
    triangle_riordan,
    weak_count_formula,
)

__version__ = "0.1.0"
