#include "sicsearch/heisenberg.hpp"

namespace sic {

Matrix displacement_matrix(const DisplacementIndex& p, const Dim& dim) {
    const PhaseConstants ph = PhaseConstants::of(dim);
    Matrix m = Matrix::Zero(dim.d, dim.d);
    for (Int k = 0; k < dim.d; ++k) {
        // entry tau^{p1 p2 + 2 k p2} at row (k + p1 mod d), column k
        Int row = mod_reduce(k + p.p1, dim.d);
        m(row, k) = ph.tau_power(p.p1 * p.p2 + 2 * k * p.p2);
    }
    return m;
}

Vector apply_displacement(const DisplacementIndex& p, const Vector& v, const Dim& dim) {
    if (v.size() != dim.d) throw std::invalid_argument("apply_displacement: size mismatch");
    const PhaseConstants ph = PhaseConstants::of(dim);
    Vector w(dim.d);
    for (Int k = 0; k < dim.d; ++k) {
        Int row = mod_reduce(k + p.p1, dim.d);
        w(row) = ph.tau_power(p.p1 * p.p2 + 2 * k * p.p2) * v(k);
    }
    return w;
}

}  // namespace sic
