#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sicsearch/heisenberg.hpp"

namespace sic {

/// A candidate fiducial vector with its bookkeeping.
struct FiducialCandidate {
    Dim dim;
    Vector components;
    double norm_gap = 0.0;       // | ||phi|| - 1 | before normalization
    double objective_gap = 0.0;  // Welch functional value (>= 0 up to roundoff)
    std::uint64_t seed = 0;
    std::optional<std::string> subspace_tag;
};

/// Welch-bound functional
///   f(phi) = sum_{j,k} |sum_l conj(u_{j+l}) u_l conj(u_{k+l}) u_{j+k+l}|^2 - 2/(d+1)
/// with u = phi/||phi|| and all indices mod d. Zero exactly on SIC fiducials.
double welch_functional(const Vector& phi);

/// Gradient of welch_functional composed with normalization, with respect to
/// the real and imaginary parts of phi: layout [dRe_0..dRe_{d-1}, dIm_0..dIm_{d-1}].
Eigen::VectorXd welch_gradient(const Vector& phi);

/// Value and gradient in one pass (the optimizer's entry point).
double welch_value_gradient(const Vector& phi, Vector& wirtinger_grad);

struct SicReport {
    double max_dev = 0.0;   // max over p != 0 of | |<phi|D_p|phi>|^2 - 1/(d+1) |
    double norm_dev = 0.0;  // | <phi|phi> - 1 |
    bool pass = false;
};

/// Equiangularity residuals e_p = |<u|D_p|u>|^2 - 1/(d+1) over p != 0 in
/// Z_d^2, with u = phi/||phi||. The functional equals (1/d) sum e_p^2.
Eigen::VectorXd sic_residuals(const Vector& phi);

/// Residuals plus their Jacobian with respect to [Re phi, Im phi].
void sic_residual_jacobian(const Vector& phi, Eigen::VectorXd& e, Eigen::MatrixXd& J);

/// Levenberg-Marquardt descent on the residual system. Quadratic convergence
/// onto the (possibly curved) solution set, far past the point where the
/// quartic functional drowns in roundoff. Returns a unit vector; the input is
/// returned unchanged if no improvement is possible.
Vector equiangularity_polish(const Vector& phi, int max_iters = 40);

inline constexpr double kDefaultSicTol = 1e-8;

/// Direct equiangularity check over all nonzero displacements.
SicReport verify_sic(const Vector& phi, double tol = kDefaultSicTol);

}  // namespace sic
