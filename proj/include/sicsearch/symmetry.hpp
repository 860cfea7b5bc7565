#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sicsearch/clifford.hpp"

namespace sic {

enum class SymmetryKind { Fz, Fa, Fb, Fc, Fd, Fe, Fep, J };

std::string to_string(SymmetryKind k);
std::optional<SymmetryKind> symmetry_kind_from_string(const std::string& name);

/// A known symmetry series member in a given dimension: the symplectic matrix,
/// its derived series parameters, and the realized projective order.
struct SymmetrySpec {
    SymmetryKind kind;
    Dim dim;
    SymplecticExt matrix;      // reduced mod dbar
    Int order = 0;             // projective order of the realized operator
    // Series parameters, when applicable.
    Int k = 0;                 // Fa/Fb/Fc/Fd/Fe parameter
    Int l = 0;                 // Fep parameter (d = l^2 + 3)
    Int kappa = 0;             // Fc parameter
    int sign_branch = 0;       // Fc: +1 for l = 3k+1, -1 for l = 3k-1

    bool antiunitary() const { return matrix.det_sign < 0; }
    CliffordElement element() const { return CliffordElement{matrix, 0, 0}; }
};

/// All symmetry series applicable in dimension d, Fz first.
std::vector<SymmetrySpec> applicable_symmetries(const Dim& dim);

/// Construct one series member; throws std::domain_error when the kind does
/// not apply in this dimension.
SymmetrySpec build_symmetry(SymmetryKind kind, const Dim& dim);

bool symmetry_applicable(SymmetryKind kind, const Dim& dim);

/// One conjugacy identity checked by exact modular arithmetic with the
/// explicit witness matrix.
struct ConjugacyCheck {
    std::string name;          // e.g. "G*Fa = Fe^2*G"
    SymplecticExt witness;
    bool holds_mod_d = false;
    bool holds_mod_dbar = false;
};

struct ConjugacyReport {
    Dim dim;
    std::vector<ConjugacyCheck> checks;
    bool all_hold_mod_d() const;
};

/// Verifies the witnessed identities between Fa, Fe, Fc, Fz, Fep and J that
/// apply in this dimension. Empty report when none apply.
ConjugacyReport verify_conjugacies(const Dim& dim);

}  // namespace sic
