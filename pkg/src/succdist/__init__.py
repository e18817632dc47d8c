"""Exact distributions, generating functions, and moments of increasing
successions in random permutations of arbitrary multisets."""

from .dist import (
    A000255_KNOWN,
    Specification,
    SuccessionDistribution,
    closed_form_k2,
    closed_form_k3,
    distribution,
    extend_by_recurrence,
    family_polynomials,
    family_specs,
    multinomial,
    no_succession_counts,
    recurrence_order,
    verify_p_recurrence,
    verify_s_recurrence,
)
from .genfun import (
    GenFunInput,
    GHPair,
    build_gh_explicit,
    build_gh_recursive,
    succession_denominator,
    succession_polynomial,
    succession_polynomial_restricted,
    unrestricted_denominator,
    unrestricted_input,
)
from .matrixform import SeriesMatrix, build_m, det_m, det_m_closed, gh_via_solve
from .moments import (
    MomentReport,
    factorial_moment_dm,
    factorial_moments_dm,
    mean_closed,
    moment_report,
    moments_from_polynomial,
    second_factorial_closed,
    variance_closed,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    count_successions,
    enumerate_distribution,
    iter_permutations,
)
from .series import DegreeCaps, NonUnitError, TruncSeries
from .wpoly import Rational, WPoly

__version__ = "0.1.0"

__all__ = [
    "A000255_KNOWN",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "DegreeCaps",
    "GHPair",
    "GenFunInput",
    "MomentReport",
    "NonUnitError",
    "Rational",
    "SeriesMatrix",
    "Specification",
    "SuccessionDistribution",
    "TruncSeries",
    "WPoly",
    "build_gh_explicit",
    "build_gh_recursive",
    "build_m",
    "closed_form_k2",
    "closed_form_k3",
    "count_successions",
    "det_m",
    "det_m_closed",
    "distribution",
    "enumerate_distribution",
    "extend_by_recurrence",
    "factorial_moment_dm",
    "factorial_moments_dm",
    "family_polynomials",
    "family_specs",
    "gh_via_solve",
    "iter_permutations",
    "mean_closed",
    "moment_report",
    "moments_from_polynomial",
    "multinomial",
    "no_succession_counts",
    "recurrence_order",
    "second_factorial_closed",
    "succession_denominator",
    "succession_polynomial",
    "succession_polynomial_restricted",
    "unrestricted_denominator",
    "unrestricted_input",
    "variance_closed",
    "verify_p_recurrence",
    "verify_s_recurrence",
]
