#include "sicsearch/clifford.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace sic {

CliffordElement clifford_identity() { return CliffordElement{sl2_identity(), 0, 0}; }

CliffordElement clifford_reduce(const CliffordElement& g, const Dim& dim) {
    CliffordElement r;
    r.F = mat_reduce(g.F, dim.dbar);
    r.p1 = mod_reduce(g.p1, dim.dbar);
    r.p2 = mod_reduce(g.p2, dim.dbar);
    return r;
}

CliffordElement clifford_mul(const CliffordElement& g, const CliffordElement& h, const Dim& dim) {
    CliffordElement r;
    r.F = mat_mul(g.F, h.F, dim.dbar);
    r.p1 = mod_reduce(g.p1 + g.F.a * h.p1 + g.F.b * h.p2, dim.dbar);
    r.p2 = mod_reduce(g.p2 + g.F.c * h.p1 + g.F.e * h.p2, dim.dbar);
    return r;
}

CliffordElement clifford_inverse(const CliffordElement& g, const Dim& dim) {
    CliffordElement r;
    r.F = mat_inverse(g.F, dim.dbar);
    r.p1 = mod_reduce(-(r.F.a * g.p1 + r.F.b * g.p2), dim.dbar);
    r.p2 = mod_reduce(-(r.F.c * g.p1 + r.F.e * g.p2), dim.dbar);
    return r;
}

RealizedOperator compose(const RealizedOperator& A, const RealizedOperator& B) {
    RealizedOperator r;
    r.matrix = A.conjugate_first ? Matrix(A.matrix * B.matrix.conjugate())
                                 : Matrix(A.matrix * B.matrix);
    r.conjugate_first = A.conjugate_first != B.conjugate_first;
    return r;
}

RealizedOperator operator_inverse(const RealizedOperator& A) {
    if (A.conjugate_first) return RealizedOperator{A.matrix.transpose(), true};
    return RealizedOperator{A.matrix.adjoint(), false};
}

bool projective_equal(const RealizedOperator& A, const RealizedOperator& B) {
    if (A.dim() != B.dim())
        throw std::invalid_argument("projective_equal: dimension mismatch");
    if (A.conjugate_first != B.conjugate_first) return false;
    double d = static_cast<double>(A.dim());
    double t = std::abs((A.matrix.adjoint() * B.matrix).trace());
    return std::abs(t - d) <= 1e-9 * d;
}

namespace {

Matrix metaplectic_direct(const SymplecticExt& F, Int beta_inv, const Dim& dim) {
    const PhaseConstants ph = PhaseConstants::of(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim.d));
    Matrix m(dim.d, dim.d);
    for (Int j = 0; j < dim.d; ++j)
        for (Int k = 0; k < dim.d; ++k)
            m(j, k) = scale * ph.tau_power(beta_inv * (F.a * k * k - 2 * j * k + F.e * j * j));
    return m;
}

}  // namespace

RealizedOperator metaplectic(const SymplecticExt& F_in, const Dim& dim) {
    SymplecticExt F = mat_reduce(F_in, dim.dbar);
    if (F.det_sign != +1)
        throw std::invalid_argument("metaplectic: determinant must be +1 mod dbar");
    if (F == mat_reduce(sl2_identity(), dim.dbar))
        return RealizedOperator{Matrix::Identity(dim.d, dim.d), false};

    if (auto inv = inverse_mod(F.b, dim.dbar)) {
        return RealizedOperator{metaplectic_direct(F, *inv, dim), false};
    }

    // F = F1 F2 with F1 = [[0,-1],[1,x]] and F2 = [[c+xa, e+xb],[-a,-b]],
    // x the smallest value making e + x b invertible mod dbar.
    for (Int x = 0; x < dim.dbar; ++x) {
        auto inv2 = inverse_mod(F.e + x * F.b, dim.dbar);
        if (!inv2) continue;
        SymplecticExt F1 = make_symplectic(0, -1, 1, x, dim.dbar);
        SymplecticExt F2 = make_symplectic(F.c + x * F.a, F.e + x * F.b, -F.a, -F.b, dim.dbar);
        Int inv1 = *inverse_mod(F1.b, dim.dbar);
        Matrix m = metaplectic_direct(F1, inv1, dim) * metaplectic_direct(F2, *inv2, dim);
        return RealizedOperator{std::move(m), false};
    }
    throw std::logic_error("metaplectic: no valid decomposition exponent below dbar");
}

RealizedOperator realize(const CliffordElement& g_in, const Dim& dim) {
    CliffordElement g = clifford_reduce(g_in, dim);
    if (!g.antiunitary()) {
        Matrix d_p = displacement_matrix(DisplacementIndex{g.p1, g.p2}, dim);
        return RealizedOperator{d_p * metaplectic(g.F, dim).matrix, false};
    }
    // E_(F|p) = J_hat C_(JF|Jp); as an operator v -> conj(C v).
    SymplecticExt jf = make_symplectic(g.F.a, g.F.b, -g.F.c, -g.F.e, dim.dbar);
    DisplacementIndex jp = DisplacementIndex::reduce(g.p1, -g.p2, dim);
    Matrix c = displacement_matrix(jp, dim) * metaplectic(jf, dim).matrix;
    return RealizedOperator{c.conjugate(), true};
}

Matrix zauner_matrix(const Dim& dim) {
    const PhaseConstants ph = PhaseConstants::of(dim);
    const Complex phase = std::polar(1.0, M_PI * static_cast<double>(dim.d - 1) / 12.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim.d));
    Matrix m(dim.d, dim.d);
    for (Int j = 0; j < dim.d; ++j)
        for (Int k = 0; k < dim.d; ++k)
            m(j, k) = phase * scale * ph.tau_power(2 * j * k + j * j);
    return m;
}

const std::vector<CliffordElement>& kernel_cosets(const Dim& dim) {
    static std::map<Int, std::vector<CliffordElement>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(dim.d);
    if (it != cache.end()) return it->second;

    std::vector<CliffordElement> out;
    if (dim.d % 2 == 1) {
        out.push_back(clifford_identity());
    } else {
        const Int d = dim.d, m = dim.dbar;
        std::vector<CliffordElement> gens = {
            CliffordElement{make_symplectic(1 + d, 0, 0, 1 + d, m), 0, 0},
            CliffordElement{make_symplectic(1, d, 0, 1, m), d / 2, 0},
            CliffordElement{make_symplectic(1, 0, d, 1, m), 0, d / 2},
        };
        std::set<CliffordElement> closure = {clifford_identity()};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<CliffordElement> snapshot(closure.begin(), closure.end());
            for (const auto& x : snapshot)
                for (const auto& g : gens)
                    if (closure.insert(clifford_mul(x, g, dim)).second) grew = true;
        }
        out.assign(closure.begin(), closure.end());
    }
    return cache.emplace(dim.d, std::move(out)).first->second;
}

CliffordElement pec_canonical(const CliffordElement& g_in, const Dim& dim) {
    CliffordElement g = clifford_reduce(g_in, dim);
    const auto& kernel = kernel_cosets(dim);
    if (kernel.size() == 1) return g;
    CliffordElement best = g;
    for (const auto& k : kernel) {
        CliffordElement cand = clifford_mul(g, k, dim);
        if (cand < best) best = cand;
    }
    return best;
}

Int pec_element_order(const CliffordElement& g_in, const Dim& dim) {
    const auto& kernel = kernel_cosets(dim);
    std::set<CliffordElement> kset(kernel.begin(), kernel.end());
    CliffordElement g = clifford_reduce(g_in, dim);
    CliffordElement p = g;
    Int cap = 2 * pec_order(dim);
    for (Int n = 1; n <= cap; ++n) {
        if (kset.count(p)) return n;
        p = clifford_mul(p, g, dim);
    }
    throw std::logic_error("pec_element_order: cap exceeded");
}

Int pec_order(const Dim& dim) {
    Int order = 2 * dim.d * dim.d * dim.d * dim.d * dim.d;
    Int m = dim.d;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            order = order / (p * p) * (p * p - 1);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) order = order / (m * m) * (m * m - 1);
    return order;
}

const std::vector<SymplecticExt>& esl2_elements(Int modulus) {
    static std::map<Int, std::vector<SymplecticExt>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(modulus);
    if (it != cache.end()) return it->second;
    std::vector<SymplecticExt> out = sl2_elements(modulus);
    out.reserve(2 * out.size());
    for (const SymplecticExt& f : sl2_elements(modulus))
        out.push_back(make_symplectic(f.a, f.b, -f.c, -f.e, modulus));
    return cache.emplace(modulus, std::move(out)).first->second;
}

std::vector<CliffordElement> enumerate_pec(const Dim& dim) {
    if (dim.d > kEnumerationDimCap)
        throw std::length_error("enumerate_pec: dimension exceeds enumeration cap");
    std::vector<CliffordElement> out;
    out.reserve(static_cast<std::size_t>(pec_order(dim)));
    for (const SymplecticExt& f : esl2_elements(dim.dbar)) {
        for (Int p1 = 0; p1 < dim.dbar; ++p1) {
            for (Int p2 = 0; p2 < dim.dbar; ++p2) {
                CliffordElement g{f, p1, p2};
                if (pec_canonical(g, dim) == g) out.push_back(g);
            }
        }
    }
    return out;
}

}  // namespace sic
