"""Special and Ulrich maximal Cohen-Macaulay modules over cyclic quotient
surface singularities 1/n(1,a), with a brute-force monomial cross-check."""

from .hj import (
    DualGraph,
    GroupError,
    GroupParams,
    HJData,
    NonCoprime,
    OutOfRange,
    dual_graph,
    group_from_alphas,
    hj_expand,
    multiplicity,
    validate_group,
)

__version__ = "0.1.0"

__all__ = [
    "DualGraph",
    "GroupError",
    "GroupParams",
    "HJData",
    "NonCoprime",
    "OutOfRange",
    "dual_graph",
    "group_from_alphas",
    "hj_expand",
    "multiplicity",
    "validate_group",
]
