#pragma once

#include "sicsearch/clifford.hpp"
#include "sicsearch/objective.hpp"

namespace sic {

inline constexpr Int kClassifyDimCap = 12;
inline constexpr double kOrbitOverlapTol = 1e-7;

/// One extended-Clifford orbit of fiducial vectors.
struct OrbitRecord {
    Dim dim;
    FiducialCandidate representative;
    std::vector<CliffordElement> stabiliser_generators;
    Int stabiliser_order = 1;
    Int orbit_size = 0;
    std::string label;
    std::vector<Int> member_indices;  // positions in the classified input list
};

/// Sorted multiset of displacement-overlap magnitudes; invariant under the
/// extended Clifford action, used as a cheap orbit-inequality certificate.
std::vector<double> displacement_fingerprint(const Vector& phi);

/// Finds g in PEC(d) with |<phi| E_g |psi>| >= 1 - tol, scanning exhaustively
/// with early exit. Capacity-guarded at kClassifyDimCap.
std::optional<CliffordElement> same_orbit(const Vector& phi, const Vector& psi, const Dim& dim,
                                          double tol = kOrbitOverlapTol);

struct StabiliserInfo {
    std::vector<CliffordElement> elements;    // canonical representatives, sorted
    std::vector<CliffordElement> generators;  // minimal generating set found
    Int order = 1;
};

/// All projective stabiliser elements of a verified fiducial, with the group
/// closure validated at the working tolerance.
StabiliserInfo stabiliser(const Vector& phi, const Dim& dim, double tol = kOrbitOverlapTol);

/// Partition candidates into extended-Clifford orbits with deterministic
/// labels a, b, c, ... ordered by (stabiliser order desc, fingerprint).
std::vector<OrbitRecord> classify_all(const std::vector<FiducialCandidate>& candidates,
                                      const Dim& dim, double tol = kOrbitOverlapTol);

}  // namespace sic
