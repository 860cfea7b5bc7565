"""Numerical search and classification of Weyl-Heisenberg SIC fiducial vectors.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (
    __version__,
    applicable_symmetries,
    classify,
    displacement_matrix,
    pec_order,
    realize,
    refine,
    search,
    sl2_group_order,
    symmetry_basis,
    verify_sic,
    welch_functional,
    welch_gradient,
    zauner_matrix,
    zauner_subspace_dims,
)

__all__ = [
    "__version__",
    "applicable_symmetries",
    "classify",
    "displacement_matrix",
    "pec_order",
    "realize",
    "refine",
    "search",
    "sl2_group_order",
    "symmetry_basis",
    "verify_sic",
    "welch_functional",
    "welch_gradient",
    "zauner_matrix",
    "zauner_subspace_dims",
]
