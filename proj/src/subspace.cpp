#include "sicsearch/subspace.hpp"

#include <cmath>

namespace sic {

namespace {

bool is_scalar_multiple_of_identity(const Matrix& M, Complex& scalar, double tol = 1e-10) {
    const Int d = M.rows();
    scalar = M.trace() / static_cast<double>(d);
    return (M - scalar * Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tol &&
           std::abs(std::abs(scalar) - 1.0) <= tol;
}

}  // namespace

Int projective_order(const Matrix& U, Int cap) {
    Matrix p = U;
    Complex scalar;
    for (Int n = 1; n <= cap; ++n) {
        if (is_scalar_multiple_of_identity(p, scalar)) return n;
        p = p * U;
        if (n % 16 == 0) {
            // re-unitarize occasionally to stop drift in long power chains
            Eigen::JacobiSVD<Matrix> svd(p, Eigen::ComputeThinU | Eigen::ComputeThinV);
            p = svd.matrixU() * svd.matrixV().adjoint();
        }
    }
    throw std::domain_error("projective_order: no order found below cap");
}

Matrix phase_correct_to_order(const Matrix& U, Int n) {
    const Int d = U.rows();
    Matrix p = Matrix::Identity(d, d);
    for (Int j = 0; j < n; ++j) p = p * U;
    Complex scalar;
    if (!is_scalar_multiple_of_identity(p, scalar))
        throw std::domain_error("phase_correct_to_order: U^n is not a scalar");
    double theta = std::arg(scalar);
    return std::polar(1.0, -theta / static_cast<double>(n)) * U;
}

Matrix eigenspace_projector(const Matrix& U, Int n, Int m) {
    const Int d = U.rows();
    if (n < 1) throw std::invalid_argument("eigenspace_projector: order must be >= 1");
    Matrix power = Matrix::Identity(d, d);
    Matrix P = Matrix::Zero(d, d);
    for (Int j = 0; j < n; ++j) {
        P += std::polar(1.0, -2.0 * M_PI * static_cast<double>(j * m) / static_cast<double>(n)) *
             power;
        power = power * U;
    }
    // by here power = U^n; the formula assumes it is the identity
    if ((power - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("eigenspace_projector: U^n deviates from the identity");
    P /= static_cast<double>(n);
    return P;
}

Matrix orthonormal_basis(const Matrix& P) {
    const Int d = P.rows();
    if ((P - P.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
        (P * P - P).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("orthonormal_basis: input is not a Hermitian projector");
    const double tr = P.trace().real();
    const Int r = static_cast<Int>(std::llround(tr));
    if (std::abs(tr - static_cast<double>(r)) > 1e-6)
        throw std::domain_error("orthonormal_basis: projector trace is not near an integer");
    if (r == 0) return Matrix(d, 0);
    Eigen::ColPivHouseholderQR<Matrix> qr(P);
    Matrix Q = qr.householderQ() * Matrix::Identity(d, r);
    return Q;
}

Vector coneigen_candidate(const Matrix& U, Int n, const Vector& phi) {
    const Int d = U.rows();
    if (phi.size() != d) throw std::invalid_argument("coneigen_candidate: size mismatch");
    Matrix W = U.conjugate() * U;  // (J U)^2
    Matrix Q = Matrix::Zero(d, d);
    Matrix power = Matrix::Identity(d, d);
    for (Int j = 0; j < n; ++j) {
        Q += power;
        power = power * W;
    }
    if ((power - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("coneigen_candidate: (conj(U) U)^n deviates from the identity");
    Q /= static_cast<double>(n);
    Vector psi = U.conjugate() * (Q.conjugate() * phi.conjugate()) + Q * phi;
    double norm = psi.norm();
    if (norm < 1e-8) throw std::underflow_error("coneigen_candidate: degenerate input");
    return psi / norm;
}

Vector lift_coordinates(const SubspaceBasis& basis, const Vector& coords) {
    if (coords.size() != basis.size())
        throw std::invalid_argument("lift_coordinates: coefficient count mismatch");
    return basis.vectors * coords;
}

namespace {

// Real-linear Gram-Schmidt under Re<x,y>, with pivoting on residual norm.
Matrix real_orthonormalize(const Matrix& candidates, Int expected_rank) {
    const Int d = candidates.rows();
    std::vector<Vector> pool;
    for (Int c = 0; c < candidates.cols(); ++c) pool.push_back(candidates.col(c));
    Matrix out(d, expected_rank);
    Int got = 0;
    while (got < expected_rank) {
        // pick the residual with the largest norm
        Int best = -1;
        double best_norm = 1e-8;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            double nn = pool[i].norm();
            if (nn > best_norm) { best_norm = nn; best = static_cast<Int>(i); }
        }
        if (best < 0)
            throw std::domain_error("coneigen basis: spanning set degenerated before full rank");
        Vector b = pool[best] / pool[best].norm();
        out.col(got++) = b;
        for (auto& v : pool) v -= b * b.dot(v).real();  // Re<b,v> projection
    }
    return out;
}

}  // namespace

SubspaceBasis make_search_basis(const SymmetrySpec& sym, Int m) {
    SubspaceBasis basis;
    basis.dim = sym.dim;
    basis.source_kind = sym.kind;

    if (!sym.antiunitary()) {
        RealizedOperator op = realize(sym.element(), sym.dim);
        Matrix U = sym.kind == SymmetryKind::Fz ? zauner_matrix(sym.dim)
                                                : phase_correct_to_order(op.matrix, sym.order);
        if (m < 0 || m >= sym.order)
            throw std::invalid_argument("eigenvalue index out of range for symmetry order");
        Matrix P = eigenspace_projector(U, sym.order, m);
        basis.vectors = orthonormal_basis(P);
        basis.antiunitary_mode = false;
        basis.eigenvalue_index = m;
        basis.order = sym.order;
        return basis;
    }

    if (m != 0)
        throw std::invalid_argument("anti-unitary sectors carry no eigenvalue index (use 0)");
    RealizedOperator op = realize(sym.element(), sym.dim);
    // op acts as v -> M conj(v) = conj(U v) with U = conj(M)
    Matrix U = op.matrix.conjugate();
    Matrix W = U.conjugate() * U;
    Int n = projective_order(W);
    // (A^2)^n is forced to be +-I for an anti-unitary A; fold the sign into n
    Matrix Wn = Matrix::Identity(sym.dim.d, sym.dim.d);
    for (Int j = 0; j < n; ++j) Wn = Wn * W;
    if ((Wn + Matrix::Identity(sym.dim.d, sym.dim.d)).cwiseAbs().maxCoeff() < 1e-8) n *= 2;

    // span the fixed-point set with coneigen images of the standard frame
    const Int d = sym.dim.d;
    Matrix candidates(d, 2 * d);
    Int col = 0;
    for (Int k = 0; k < d; ++k) {
        for (Complex scale : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
            Vector e = Vector::Zero(d);
            e(k) = scale;
            try {
                candidates.col(col++) = coneigen_candidate(U, n, e);
            } catch (const std::underflow_error&) {
                candidates.col(col++) = Vector::Zero(d);
            }
        }
    }

    // expected real dimension = rank of the eigenvalue-1 projector of conj(U) U
    Matrix Q = Matrix::Zero(d, d);
    Matrix power = Matrix::Identity(d, d);
    for (Int j = 0; j < n; ++j) { Q += power; power = power * W; }
    Q /= static_cast<double>(n);
    Int rank = static_cast<Int>(std::llround(Q.trace().real()));
    if (rank == 0) throw std::domain_error("anti-unitary sector is empty in this dimension");

    basis.vectors = real_orthonormalize(candidates, rank);
    basis.antiunitary_mode = true;
    basis.eigenvalue_index = 0;
    basis.order = n;
    return basis;
}

}  // namespace sic
