#include "sicsearch/objective.hpp"

namespace sic {

namespace {

// T(j,k) = sum_l conj(x_{j+l}) x_l conj(x_{k+l}) x_{j+k+l}; homogeneous of
// bidegree (2,2) in (x, conj x), so F_raw = sum |T|^2 scales as ||x||^8.
double raw_value(const Vector& x, Matrix& T) {
    const Int d = x.size();
    T.resize(d, d);
    double total = 0.0;
    for (Int j = 0; j < d; ++j) {
        for (Int k = 0; k < d; ++k) {
            Complex t(0.0, 0.0);
            for (Int l = 0; l < d; ++l) {
                Int jl = j + l; if (jl >= d) jl -= d;
                Int kl = k + l; if (kl >= d) kl -= d;
                Int jkl = jl + k; if (jkl >= d) jkl -= d;
                t += std::conj(x(jl)) * x(l) * std::conj(x(kl)) * x(jkl);
            }
            T(j, k) = t;
            total += std::norm(t);
        }
    }
    return total;
}

// Wirtinger gradient dF_raw/dx_m of the unnormalized quartic sum.
Vector raw_wirtinger(const Vector& x, const Matrix& T) {
    const Int d = x.size();
    Vector w = Vector::Zero(d);
    for (Int j = 0; j < d; ++j) {
        for (Int k = 0; k < d; ++k) {
            const Complex tbar = std::conj(T(j, k));
            const Complex t = T(j, k);
            for (Int m = 0; m < d; ++m) {
                Int jm = j + m; if (jm >= d) jm -= d;
                Int km = k + m; if (km >= d) km -= d;
                Int jkm = jm + k; if (jkm >= d) jkm -= d;
                Int mj = m - j; if (mj < 0) mj += d;
                Int mk = m - k; if (mk < 0) mk += d;
                Int mjk = mj - k; if (mjk < 0) mjk += d;
                // dT/dx_m
                Complex a = std::conj(x(jm)) * std::conj(x(km)) * x(jkm) +
                            std::conj(x(mk)) * std::conj(x(mj)) * x(mjk);
                // dT/d(conj x_m)
                Complex b = x(mj) * std::conj(x(km - j >= 0 ? km - j : km - j + d)) * x(km) +
                            std::conj(x(jm - k >= 0 ? jm - k : jm - k + d)) * x(mk) * x(jm);
                w(m) += tbar * a + t * std::conj(b);
            }
        }
    }
    return w;
}

}  // namespace

double welch_value_gradient(const Vector& phi, Vector& wirtinger_grad) {
    const Int d = phi.size();
    if (d < 2) throw std::invalid_argument("welch objective needs dimension >= 2");
    const double r2 = phi.squaredNorm();
    if (!(r2 > 1e-24)) throw std::domain_error("welch objective: zero vector");
    Matrix T;
    const double raw = raw_value(phi, T);
    Vector w = raw_wirtinger(phi, T);
    const double r8 = r2 * r2 * r2 * r2;
    // g = F_raw * r^-8; dg/dx_m = W_m r^-8 - 4 F_raw conj(x_m) r^-10
    wirtinger_grad = (w / r8) - (4.0 * raw / (r8 * r2)) * phi.conjugate();
    return raw / r8 - 2.0 / static_cast<double>(d + 1);
}

double welch_functional(const Vector& phi) {
    const Int d = phi.size();
    if (d < 2) throw std::invalid_argument("welch objective needs dimension >= 2");
    const double r2 = phi.squaredNorm();
    if (!(r2 > 1e-24)) throw std::domain_error("welch objective: zero vector");
    Matrix T;
    const double raw = raw_value(phi, T);
    return raw / (r2 * r2 * r2 * r2) - 2.0 / static_cast<double>(d + 1);
}

Eigen::VectorXd welch_gradient(const Vector& phi) {
    Vector w;
    welch_value_gradient(phi, w);
    const Int d = phi.size();
    Eigen::VectorXd g(2 * d);
    for (Int m = 0; m < d; ++m) {
        g(m) = 2.0 * w(m).real();
        g(d + m) = -2.0 * w(m).imag();
    }
    return g;
}

Eigen::VectorXd sic_residuals(const Vector& phi) {
    const Dim dim = Dim::of(phi.size());
    Vector u = phi / phi.norm();
    Eigen::VectorXd e(dim.d * dim.d - 1);
    const double target = 1.0 / static_cast<double>(dim.d + 1);
    Int idx = 0;
    for (Int p1 = 0; p1 < dim.d; ++p1) {
        for (Int p2 = 0; p2 < dim.d; ++p2) {
            if (p1 == 0 && p2 == 0) continue;
            Vector w = apply_displacement(DisplacementIndex{p1, p2}, u, dim);
            e(idx++) = std::norm(u.dot(w)) - target;
        }
    }
    return e;
}

void sic_residual_jacobian(const Vector& phi, Eigen::VectorXd& e, Eigen::MatrixXd& J) {
    const Dim dim = Dim::of(phi.size());
    const Int d = dim.d;
    const double n2 = phi.squaredNorm();
    if (!(n2 > 1e-24)) throw std::domain_error("sic_residual_jacobian: zero vector");
    const double target = 1.0 / static_cast<double>(d + 1);
    e.resize(d * d - 1);
    J.resize(d * d - 1, 2 * d);
    Int idx = 0;
    for (Int p1 = 0; p1 < d; ++p1) {
        for (Int p2 = 0; p2 < d; ++p2) {
            if (p1 == 0 && p2 == 0) continue;
            DisplacementIndex p{p1, p2};
            Vector w = apply_displacement(p, phi, dim);                             // D_p x
            Vector wd = apply_displacement(p.negated(dim), phi, dim);               // D_p^dag x
            Complex z = phi.dot(w) / n2;
            e(idx) = std::norm(z) - target;
            // Wirtinger derivative of |z|^2 with z = <x|D_p|x>/<x|x>
            for (Int m = 0; m < d; ++m) {
                Complex dz_dx = (std::conj(wd(m)) - z * std::conj(phi(m))) / n2;
                Complex dzbar_dx = std::conj((w(m) - z * phi(m)) / n2);
                Complex dc = std::conj(z) * dz_dx + z * dzbar_dx;
                J(idx, m) = 2.0 * dc.real();
                J(idx, d + m) = -2.0 * dc.imag();
            }
            ++idx;
        }
    }
}

Vector equiangularity_polish(const Vector& phi, int max_iters) {
    const Int d = phi.size();
    Vector x = phi / phi.norm();
    Eigen::VectorXd e;
    Eigen::MatrixXd J;
    sic_residual_jacobian(x, e, J);
    double best = e.squaredNorm();
    double mu = 1e-6;

    for (int it = 0; it < max_iters; ++it) {
        if (best < 1e-30) break;
        Eigen::MatrixXd JtJ = J.transpose() * J;
        Eigen::VectorXd Jte = J.transpose() * e;
        bool stepped = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            Eigen::MatrixXd A = JtJ;
            A.diagonal().array() += mu;
            Eigen::VectorXd delta = A.ldlt().solve(-Jte);
            Vector x_try = x;
            for (Int m = 0; m < d; ++m) x_try(m) += Complex(delta(m), delta(d + m));
            x_try /= x_try.norm();
            Eigen::VectorXd e_try = sic_residuals(x_try);
            double val = e_try.squaredNorm();
            if (val < best) {
                x = std::move(x_try);
                best = val;
                mu = std::max(mu * 0.3, 1e-12);
                stepped = true;
                break;
            }
            mu *= 8.0;
        }
        if (!stepped) break;
        sic_residual_jacobian(x, e, J);
    }
    // only report the polished point if it actually beats the input
    Eigen::VectorXd e_in = sic_residuals(phi / phi.norm());
    if (best < e_in.squaredNorm()) return x;
    return phi / phi.norm();
}

SicReport verify_sic(const Vector& phi, double tol) {
    const Dim dim = Dim::of(phi.size());
    SicReport rep;
    rep.norm_dev = std::abs(phi.squaredNorm() - 1.0);
    const double target = 1.0 / static_cast<double>(dim.d + 1);
    for (Int p1 = 0; p1 < dim.d; ++p1) {
        for (Int p2 = 0; p2 < dim.d; ++p2) {
            if (p1 == 0 && p2 == 0) continue;
            Vector w = apply_displacement(DisplacementIndex{p1, p2}, phi, dim);
            double overlap = std::norm(phi.dot(w));
            rep.max_dev = std::max(rep.max_dev, std::abs(overlap - target));
        }
    }
    rep.pass = rep.max_dev <= tol && rep.norm_dev <= 1e-12;
    return rep;
}

}  // namespace sic
