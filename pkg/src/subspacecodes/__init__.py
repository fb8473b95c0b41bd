"""Multishot subspace codes: projective spaces, bounds and a multilevel construction."""

from .galois import FieldSpec, field_new, field_of_order
from .multishot import MultishotCode, SubspaceTuple, embed, extended_distance, minimum_distance, puncture, rate
from .subspace import (
    ProjectiveSpace,
    Subspace,
    enumerate_space,
    gaussian_binomial,
    hasse_neighbors,
    intersect,
    projective_space,
    rref,
    subspace_distance,
    sum_,
)

__version__ = "0.1.0"
