"""Exact Lie algebra cohomology, derivations, tori and filiform families over Q."""

from ._backend import BACKEND
from .algebra import (
    CharacteristicSequence,
    LieAlgebra,
    Subspace,
    ad_matrix,
    bracket,
    center,
    characteristic_sequence_at,
    first_betti,
    is_filiform,
    is_nilpotent,
    jacobi_check,
    lower_central_series_dims,
)
from .cohomology import Cochain, CohomologyDims, cohomology_dims, delta_matrix, is_coboundary, is_cocycle
from .derivations import (
    CompletenessVerdict,
    TorusBasis,
    derivation_basis,
    diagonal_torus,
    inner_basis,
    is_complete,
    rank_certificate,
    weight_system,
)
from .families import FamilySpec, build_family, deformation_cocycle, heisenberg, r2, semidirect
from .io import parse_algebra, parse_family_spec, serialize_algebra
from .linalg import MatrixQ

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CharacteristicSequence", "Cochain", "CohomologyDims", "CompletenessVerdict", "FamilySpec",
    "LieAlgebra", "MatrixQ", "Subspace", "TorusBasis", "ad_matrix", "bracket", "build_family", "center",
    "characteristic_sequence_at", "cohomology_dims", "deformation_cocycle", "delta_matrix", "derivation_basis",
    "diagonal_torus", "first_betti", "heisenberg", "inner_basis", "is_coboundary", "is_cocycle", "is_complete",
    "is_filiform", "is_nilpotent", "jacobi_check", "lower_central_series_dims", "parse_algebra",
    "parse_family_spec", "r2", "rank_certificate", "semidirect", "serialize_algebra", "weight_system",
]
