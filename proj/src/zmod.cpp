#include "sicsearch/zmod.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace sic {

SymplecticExt make_symplectic(Int a, Int b, Int c, Int e, Int modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    a = mod_reduce(a, modulus);
    b = mod_reduce(b, modulus);
    c = mod_reduce(c, modulus);
    e = mod_reduce(e, modulus);
    Int det = mod_reduce(a * e - b * c, modulus);
    if (det == mod_reduce(1, modulus)) return SymplecticExt{a, b, c, e, +1};
    if (det == mod_reduce(-1, modulus)) return SymplecticExt{a, b, c, e, -1};
    throw std::invalid_argument("matrix determinant is not +-1 mod modulus");
}

SymplecticExt mat_reduce(const SymplecticExt& F, Int modulus) {
    return make_symplectic(F.a, F.b, F.c, F.e, modulus);
}

SymplecticExt mat_mul(const SymplecticExt& F, const SymplecticExt& G, Int modulus) {
    SymplecticExt r;
    r.a = mod_reduce(F.a * G.a + F.b * G.c, modulus);
    r.b = mod_reduce(F.a * G.b + F.b * G.e, modulus);
    r.c = mod_reduce(F.c * G.a + F.e * G.c, modulus);
    r.e = mod_reduce(F.c * G.b + F.e * G.e, modulus);
    r.det_sign = F.det_sign * G.det_sign;
    return r;
}

SymplecticExt mat_inverse(const SymplecticExt& F, Int modulus) {
    // det = s with s^2 = 1, so F^-1 = s * adj(F).
    Int s = F.det_sign;
    SymplecticExt r;
    r.a = mod_reduce(s * F.e, modulus);
    r.b = mod_reduce(-s * F.b, modulus);
    r.c = mod_reduce(-s * F.c, modulus);
    r.e = mod_reduce(s * F.a, modulus);
    r.det_sign = F.det_sign;
    return r;
}

Int mat_order(const SymplecticExt& F, Int modulus) {
    const SymplecticExt id = mat_reduce(sl2_identity(), modulus);
    SymplecticExt p = mat_reduce(F, modulus);
    Int cap = 2 * sl2_group_order(modulus);
    for (Int n = 1; n <= cap; ++n) {
        if (p == id) return n;
        p = mat_mul(p, F, modulus);
    }
    throw std::logic_error("mat_order: cap exceeded; matrix is not invertible mod modulus");
}

std::optional<Int> inverse_mod(Int x, Int m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    // Extended Euclid.
    Int r0 = m, r1 = mod_reduce(x, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) return std::nullopt;
    return mod_reduce(t0, m);
}

Int sl2_group_order(Int modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    Int order = modulus * modulus * modulus;
    Int m = modulus;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            order = order / (p * p) * (p * p - 1);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) order = order / (m * m) * (m * m - 1);
    return order;
}

const std::vector<SymplecticExt>& sl2_elements(Int modulus) {
    static std::map<Int, std::vector<SymplecticExt>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(modulus);
    if (it != cache.end()) return it->second;
    std::vector<SymplecticExt> out;
    out.reserve(static_cast<std::size_t>(sl2_group_order(modulus)));
    for (Int a = 0; a < modulus; ++a)
        for (Int b = 0; b < modulus; ++b)
            for (Int c = 0; c < modulus; ++c)
                for (Int e = 0; e < modulus; ++e)
                    if (mod_reduce(a * e - b * c, modulus) == 1)
                        out.push_back(SymplecticExt{a, b, c, e, +1});
    return cache.emplace(modulus, std::move(out)).first->second;
}

std::optional<SymplecticExt> is_conjugate(const SymplecticExt& F, const SymplecticExt& G,
                                          Int modulus) {
    if (modulus > kConjugacyModulusCap)
        throw std::length_error("is_conjugate: modulus exceeds exhaustive-search cap");
    SymplecticExt f = mat_reduce(F, modulus);
    SymplecticExt g = mat_reduce(G, modulus);
    for (const SymplecticExt& h : sl2_elements(modulus)) {
        if (mat_mul(h, f, modulus) == mat_mul(g, h, modulus)) return h;
    }
    return std::nullopt;
}

}  // namespace sic
