"""Chung-Feller theorems for (n,m)-lattice paths, checked by exhaustive enumeration."""

from .core import (
    LatticePath,
    PathPoint,
    Step,
    cyclic_permutation,
    non_positive_set,
    npl,
    parse_path,
    path_order,
    prefix_points,
    rightmost_minimum,
    rml,
    sigma,
    validate,
)
from .pointed import (
    ClassMember,
    PointedLatticePath,
    canonical_base,
    equivalence_class,
    gamma,
    gamma_index,
    pnpl,
    pointed_class,
    prml,
    theta,
    theta_index,
)

__version__ = "0.1.0"
