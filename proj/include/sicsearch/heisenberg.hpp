#pragma once

#include <complex>
#include <Eigen/Dense>

#include "sicsearch/zmod.hpp"

namespace sic {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// tau = exp(i*pi*(d+1)/d) and omega = tau^2. Powers are evaluated from the
/// exact exponent reduced mod 2d, never by repeated multiplication.
struct PhaseConstants {
    Dim dim;

    static PhaseConstants of(const Dim& dim) { return PhaseConstants{dim}; }

    Complex tau() const { return tau_power(1); }
    Complex omega() const { return tau_power(2); }

    Complex tau_power(Int e) const {
        // tau^e = exp(i*pi*((d+1)e mod 2d)/d)
        const Int two_d = 2 * dim.d;
        Int r = mod_reduce(mod_reduce(dim.d + 1, two_d) * mod_reduce(e, two_d), two_d);
        return std::polar(1.0, M_PI * static_cast<double>(r) / static_cast<double>(dim.d));
    }

    Complex omega_power(Int e) const { return tau_power(mod_reduce(2 * e, 2 * dim.d)); }
};

/// Index p = (p1, p2) of a displacement operator, canonical in [0, dbar)^2.
struct DisplacementIndex {
    Int p1, p2;

    static DisplacementIndex reduce(Int p1, Int p2, const Dim& dim) {
        return DisplacementIndex{mod_reduce(p1, dim.dbar), mod_reduce(p2, dim.dbar)};
    }

    DisplacementIndex negated(const Dim& dim) const { return reduce(-p1, -p2, dim); }

    bool operator==(const DisplacementIndex& o) const { return p1 == o.p1 && p2 == o.p2; }
};

/// Symplectic form <p,q> = p2*q1 - p1*q2 (plain integer; callers reduce as needed).
inline Int symplectic_form(const DisplacementIndex& p, const DisplacementIndex& q) {
    return p.p2 * q.p1 - p.p1 * q.p2;
}

/// Dense d x d matrix of D_p = tau^{p1 p2} V^{p1} U^{p2}.
Matrix displacement_matrix(const DisplacementIndex& p, const Dim& dim);

/// Matrix-free action D_p * v in O(d).
Vector apply_displacement(const DisplacementIndex& p, const Vector& v, const Dim& dim);

}  // namespace sic
