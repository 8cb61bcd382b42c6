"""Minimum almost covers of finite point sets by affine hyperplanes."""

from ._core import (
    AlmostCoverError,
    Field,
    GroebnerBasis,
    InvariantViolation,
    PointSet,
    ac_numbers,
    binomial_inequalities_hold,
    certificate_lower_bound,
    counting_lower_bound,
    cube_counting_lower_bound,
    min_almost_cover,
    verify_cover,
    verify_suite,
    verify_suites,
)

__version__ = "0.1.0"

__all__ = [
    "AlmostCoverError",
    "Field",
    "GroebnerBasis",
    "InvariantViolation",
    "PointSet",
    "ac_numbers",
    "binomial_inequalities_hold",
    "certificate_lower_bound",
    "counting_lower_bound",
    "cube_counting_lower_bound",
    "min_almost_cover",
    "verify_cover",
    "verify_suite",
    "verify_suites",
]
