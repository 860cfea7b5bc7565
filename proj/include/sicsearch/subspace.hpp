#pragma once

#include <optional>

#include "sicsearch/symmetry.hpp"

namespace sic {

/// Orthonormal basis of a symmetry-restricted search space. For a unitary
/// symmetry the columns span an eigenspace (complex coordinates); for an
/// anti-unitary symmetry they span the fixed-point set, which is a real-linear
/// space (real coordinates, orthonormal under Re<x,y>).
struct SubspaceBasis {
    Dim dim;
    Matrix vectors;            // d x r, columns are basis vectors
    bool antiunitary_mode = false;
    std::optional<SymmetryKind> source_kind;
    Int eigenvalue_index = 0;  // m, meaningful for unitary sources
    Int order = 0;             // n, the symmetry's projective order

    Int size() const { return vectors.cols(); }
    /// Number of real parameters for the reduced search.
    Int real_dim() const { return antiunitary_mode ? size() : 2 * size(); }
};

/// P = (1/n) sum_j e^{-2 pi i j m / n} U^j for a unitary U with U^n = I
/// (checked to 1e-10).
Matrix eigenspace_projector(const Matrix& U, Int n, Int m);

/// Orthonormal basis of the range of a Hermitian projector; the column count
/// is round(trace P), which must be within 1e-6 of an integer.
Matrix orthonormal_basis(const Matrix& P);

/// Coneigenvector construction: given unitary U with (conj(U) U)^n = I and any
/// phi, returns normalized psi with conj(U psi) = psi. Throws
/// std::underflow_error when the image degenerates (caller retries).
Vector coneigen_candidate(const Matrix& U, Int n, const Vector& phi);

/// Lift reduced coordinates back to C^d. Complex coords for eigenspaces,
/// real coords for anti-unitary fixed sets.
Vector lift_coordinates(const SubspaceBasis& basis, const Vector& coords);

/// Rescale a realized unitary so its n-th power is exactly the identity
/// (n-th root correction of the scalar U^n).
Matrix phase_correct_to_order(const Matrix& U, Int n);

/// Projective order of a unitary matrix: smallest n >= 1 with U^n = phase * I.
Int projective_order(const Matrix& U, Int cap = 4096);

/// Full search-basis construction for a symmetry:
///  - unitary kinds: eigenspace of the phase-corrected realization, sector m
///    (Fz uses the exactly order-3 Zauner matrix);
///  - anti-unitary kinds: real-orthonormal basis of the fixed-point set built
///    through the coneigenvector map (m must be 0).
SubspaceBasis make_search_basis(const SymmetrySpec& sym, Int m);

}  // namespace sic
