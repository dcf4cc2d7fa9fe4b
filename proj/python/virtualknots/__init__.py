"""Gauss-diagram computation engine for virtual knots and links."""

from ._vkcore import (
    GaussDiagram,
    affine_index_polynomial,
    ell,
    family,
    greedy_simplify,
    index,
    index_by_linking,
    invariants,
    is_trivial,
    isomorphic,
    lower_bound,
    minimal_crossing_check,
    parse,
    search,
    serialize,
    span,
    verify_theorem,
    writhe_vector,
)

__all__ = [
    "GaussDiagram",
    "affine_index_polynomial",
    "ell",
    "family",
    "greedy_simplify",
    "index",
    "index_by_linking",
    "invariants",
    "is_trivial",
    "isomorphic",
    "lower_bound",
    "minimal_crossing_check",
    "parse",
    "search",
    "serialize",
    "span",
    "verify_theorem",
    "writhe_vector",
]
