#pragma once

#include <array>
#include <vector>

#include "sicsearch/heisenberg.hpp"
#include "sicsearch/zmod.hpp"

namespace sic {

/// Group element (F|p) of ESL2(Z_dbar) x Z_dbar^2. The anti-unitary branch is
/// exactly the det = -1 branch of F.
struct CliffordElement {
    SymplecticExt F;
    Int p1 = 0, p2 = 0;

    bool antiunitary() const { return F.det_sign < 0; }

    std::array<Int, 7> key() const {
        return {F.det_sign, F.a, F.b, F.c, F.e, p1, p2};
    }
    bool operator==(const CliffordElement& o) const { return key() == o.key(); }
    bool operator<(const CliffordElement& o) const { return key() < o.key(); }
};

CliffordElement clifford_identity();
CliffordElement clifford_reduce(const CliffordElement& g, const Dim& dim);
/// (F|p)(G|q) = (FG | p + Fq), all mod dbar.
CliffordElement clifford_mul(const CliffordElement& g, const CliffordElement& h, const Dim& dim);
CliffordElement clifford_inverse(const CliffordElement& g, const Dim& dim);

/// A unitary matrix, optionally preceded by complex conjugation of the input:
/// action is matrix * v, or matrix * conj(v) when conjugate_first is set.
struct RealizedOperator {
    Matrix matrix;
    bool conjugate_first = false;

    Int dim() const { return matrix.rows(); }
    Vector apply(const Vector& v) const {
        return conjugate_first ? Vector(matrix * v.conjugate()) : Vector(matrix * v);
    }
};

/// Operator product A*B (apply B first).
RealizedOperator compose(const RealizedOperator& A, const RealizedOperator& B);
RealizedOperator operator_inverse(const RealizedOperator& A);

/// True iff A = e^{i xi} B for some real xi; anti-unitaries compare against
/// anti-unitaries only (mixed flags are never projectively equal).
bool projective_equal(const RealizedOperator& A, const RealizedOperator& B);

/// Metaplectic unitary V_F for det F = +1 mod dbar. Uses the direct quadratic
/// Gauss-sum formula when the upper-right entry is invertible mod dbar, and
/// the two-factor decomposition otherwise.
RealizedOperator metaplectic(const SymplecticExt& F, const Dim& dim);

/// Full realization: D_p V_F on the unitary branch, conjugation composed with
/// the J-twisted unitary on the anti-unitary branch.
RealizedOperator realize(const CliffordElement& g, const Dim& dim);

/// Zauner's matrix with the global phase that makes it order 3 exactly:
/// S(j,k) = e^{i pi (d-1)/12} tau^{2jk+j^2} / sqrt(d).
Matrix zauner_matrix(const Dim& dim);

/// ker of the realization map: {identity} for odd d, the 32-element subgroup
/// for even d. Sorted, deterministic.
const std::vector<CliffordElement>& kernel_cosets(const Dim& dim);

/// Canonical coset representative of g modulo the realization kernel.
CliffordElement pec_canonical(const CliffordElement& g, const Dim& dim);

/// Order of [g] in PEC(d): smallest n with g^n in the kernel.
Int pec_element_order(const CliffordElement& g, const Dim& dim);

/// |PEC(d)| = 2 d^5 prod_{p|d} (1 - p^-2), exact.
Int pec_order(const Dim& dim);

/// SL2(Z_m) followed by its J-translate (det = -1 branch). Cached.
const std::vector<SymplecticExt>& esl2_elements(Int modulus);

inline constexpr Int kEnumerationDimCap = 12;

/// All projectively distinct elements of PEC(d) as canonical representatives.
/// Capacity-guarded: throws for d > kEnumerationDimCap.
std::vector<CliffordElement> enumerate_pec(const Dim& dim);

}  // namespace sic
