#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sic {

using Int = std::int64_t;

// Euclidean remainder, always in [0, m).
inline Int mod_reduce(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

/// Dimension together with the extended modulus dbar (= d for odd d, 2d for even d).
struct Dim {
    Int d;
    Int dbar;

    static Dim of(Int d) {
        if (d < 2) throw std::invalid_argument("dimension must be >= 2");
        return Dim{d, d % 2 == 0 ? 2 * d : d};
    }
};

/// 2x2 integer matrix [[a,b],[c,e]] with det = +-1 mod dbar, entries reduced to [0, dbar).
/// det_sign = -1 marks the anti-symplectic branch.
struct SymplecticExt {
    Int a, b, c, e;
    int det_sign;

    bool operator==(const SymplecticExt& o) const {
        return a == o.a && b == o.b && c == o.c && e == o.e && det_sign == o.det_sign;
    }
};

/// Validating constructor: reduces entries mod `modulus` and checks det = +-1.
SymplecticExt make_symplectic(Int a, Int b, Int c, Int e, Int modulus);

inline SymplecticExt sl2_identity() { return SymplecticExt{1, 0, 0, 1, +1}; }

/// Entrywise product mod `modulus`; det signs multiply.
SymplecticExt mat_mul(const SymplecticExt& F, const SymplecticExt& G, Int modulus);

/// Inverse mod `modulus` (adjugate times det sign).
SymplecticExt mat_inverse(const SymplecticExt& F, Int modulus);

/// Reduce an already-valid matrix into canonical range mod `modulus`.
SymplecticExt mat_reduce(const SymplecticExt& F, Int modulus);

/// Smallest n >= 1 with F^n = I mod `modulus`. Capped at 2*|SL2(Z_m)|.
Int mat_order(const SymplecticExt& F, Int modulus);

/// Modular inverse of x mod m, or nullopt when gcd(x, m) != 1.
std::optional<Int> inverse_mod(Int x, Int m);

/// |SL2(Z_m)| = m^3 * prod_{p | m} (1 - p^-2), exact.
Int sl2_group_order(Int modulus);

/// All of SL2(Z_m), cached per modulus. Only sensible for small m.
const std::vector<SymplecticExt>& sl2_elements(Int modulus);

inline constexpr Int kConjugacyModulusCap = 24;

/// Exhaustive search for H in SL2(Z_m) with H*F = G*H. Throws above the modulus cap.
std::optional<SymplecticExt> is_conjugate(const SymplecticExt& F, const SymplecticExt& G,
                                          Int modulus);

}  // namespace sic
