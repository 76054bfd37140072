"""Milnor-fiber invariants of f(x,y) + z*g(x,y) computed from the common
embedded resolution of the plane curve pair (f, g)."""

from ._core import (
    InputError,
    InternalError,
    branches_json,
    check_pair,
    chi,
    classify,
    intersection_multiplicity,
    invariants,
    milnor_number,
    parse_poly,
    resolve,
    zeta,
    __version__,
)

__all__ = [
    "InputError",
    "InternalError",
    "branches_json",
    "check_pair",
    "chi",
    "classify",
    "intersection_multiplicity",
    "invariants",
    "milnor_number",
    "parse_poly",
    "resolve",
    "zeta",
    "__version__",
]
