"""Finite 2-group invariants and TQFT matrices of cut cellular surfaces."""

from .crossed import (
    CrossedModule,
    build_crossed_module,
    fixture,
    from_central_extension,
    identity_module,
    trivial_h_module,
)
from .groups import FiniteGroup, build_group, make_cyclic, make_direct_product, make_symmetric
from .invariant import closed_form, count_colourings, invariant
from .scalar import ExactScalar
from .surface import SurfaceComplex, glue, validate
from .tqft import TqftMatrix, compose, matrix_of

__all__ = [
    "CrossedModule", "ExactScalar", "FiniteGroup", "SurfaceComplex", "TqftMatrix",
    "build_crossed_module", "build_group", "closed_form", "compose", "count_colourings",
    "fixture", "from_central_extension", "glue", "identity_module", "invariant",
    "make_cyclic", "make_direct_product", "make_symmetric", "matrix_of",
    "trivial_h_module", "validate",
]
