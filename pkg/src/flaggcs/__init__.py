"""Exact computations with invariant generalized complex structures on maximal flag manifolds."""

from .errors import FlagGCSError
from .integrability import build_from_theta, classify_triple, gcs_type, is_integrable
from .roots import RootSystem, WeylElement, build_root_system, root_system, theta_closure, weyl_group
from .structures import BTransform, Complex, InvariantGCS, NonComplex, b_transform, is_gacs, normal_form

__all__ = [
    "BTransform",
    "Complex",
    "FlagGCSError",
    "InvariantGCS",
    "NonComplex",
    "RootSystem",
    "WeylElement",
    "b_transform",
    "build_from_theta",
    "build_root_system",
    "classify_triple",
    "gcs_type",
    "is_gacs",
    "is_integrable",
    "normal_form",
    "root_system",
    "theta_closure",
    "weyl_group",
]
