#include "sicsearch/symmetry.hpp"

#include <cmath>

namespace sic {

std::string to_string(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Fz: return "fz";
        case SymmetryKind::Fa: return "fa";
        case SymmetryKind::Fb: return "fb";
        case SymmetryKind::Fc: return "fc";
        case SymmetryKind::Fd: return "fd";
        case SymmetryKind::Fe: return "fe";
        case SymmetryKind::Fep: return "fep";
        case SymmetryKind::J: return "j";
    }
    return "?";
}

std::optional<SymmetryKind> symmetry_kind_from_string(const std::string& name) {
    for (SymmetryKind k : {SymmetryKind::Fz, SymmetryKind::Fa, SymmetryKind::Fb,
                           SymmetryKind::Fc, SymmetryKind::Fd, SymmetryKind::Fe,
                           SymmetryKind::Fep, SymmetryKind::J})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

namespace {

Int isqrt(Int n) {
    if (n < 0) return -1;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct SeriesParams {
    bool ok = false;
    Int k = 0, l = 0, kappa = 0;
    int sign_branch = 0;
};

SeriesParams series_params(SymmetryKind kind, Int d) {
    SeriesParams p;
    switch (kind) {
        case SymmetryKind::Fz:
        case SymmetryKind::J:
            p.ok = true;
            break;
        case SymmetryKind::Fa:
            if (d % 9 == 3 && d > 3) { p.ok = true; p.k = (d - 3) / 9; }
            break;
        case SymmetryKind::Fb: {
            Int k = isqrt(d + 1);
            if (k >= 3 && k * k == d + 1) { p.ok = true; p.k = k; }
            break;
        }
        case SymmetryKind::Fc: {
            Int l = isqrt(d - 3);
            if (l >= 1 && l * l == d - 3 && l % 3 != 0) {
                p.ok = true;
                p.l = l;
                if (l % 3 == 1) { p.sign_branch = +1; p.k = (l - 1) / 3; }
                else            { p.sign_branch = -1; p.k = (l + 1) / 3; }
                p.kappa = 3 * p.k * p.k + p.sign_branch * p.k + 1;
            }
            break;
        }
        case SymmetryKind::Fd:
            for (Int k = 2; (k + 3) * k * k - 1 <= d; ++k)
                if ((k + 3) * k * k - 1 == d) { p.ok = true; p.k = k; break; }
            break;
        case SymmetryKind::Fe: {
            if ((d - 3) % 9 == 0) {
                Int k = isqrt((d - 3) / 9);
                if (k >= 1 && 9 * k * k + 3 == d) { p.ok = true; p.k = k; }
            }
            break;
        }
        case SymmetryKind::Fep: {
            Int l = isqrt(d - 3);
            if (l >= 1 && l * l == d - 3) { p.ok = true; p.l = l; }
            break;
        }
    }
    return p;
}

SymplecticExt series_matrix(SymmetryKind kind, const SeriesParams& p, const Dim& dim) {
    const Int d = dim.d, m = dim.dbar;
    switch (kind) {
        case SymmetryKind::Fz: return make_symplectic(0, d - 1, d + 1, d - 1, m);
        case SymmetryKind::Fa: return make_symplectic(1, d + 3, d + 3 * p.k, d - 2, m);
        case SymmetryKind::Fb: return make_symplectic(-p.k, d, d, d - p.k, m);
        case SymmetryKind::Fc:
            return make_symplectic(p.kappa, d - 2 * p.kappa, d + 2 * p.kappa, d - p.kappa, m);
        case SymmetryKind::Fd: return make_symplectic(0, 1, -1, -(p.k + 3) * p.k, m);
        case SymmetryKind::Fe: return make_symplectic(0, 1, 1, d + 3 * p.k, m);
        case SymmetryKind::Fep:
            return (p.l + 1) % 3 == 0 ? make_symplectic(0, 1, 1, d - p.l, m)
                                      : make_symplectic(0, 1, 1, d + p.l, m);
        case SymmetryKind::J: return make_symplectic(1, 0, 0, -1, m);
    }
    throw std::logic_error("series_matrix: unreachable");
}

}  // namespace

bool symmetry_applicable(SymmetryKind kind, const Dim& dim) {
    return series_params(kind, dim.d).ok;
}

SymmetrySpec build_symmetry(SymmetryKind kind, const Dim& dim) {
    SeriesParams p = series_params(kind, dim.d);
    if (!p.ok)
        throw std::domain_error("symmetry " + to_string(kind) + " is not applicable in dimension " +
                                std::to_string(dim.d));
    SymmetrySpec s;
    s.kind = kind;
    s.dim = dim;
    s.matrix = series_matrix(kind, p, dim);
    s.k = p.k;
    s.l = p.l;
    s.kappa = p.kappa;
    s.sign_branch = p.sign_branch;
    s.order = pec_element_order(s.element(), dim);
    return s;
}

std::vector<SymmetrySpec> applicable_symmetries(const Dim& dim) {
    std::vector<SymmetrySpec> out;
    for (SymmetryKind k : {SymmetryKind::Fz, SymmetryKind::Fa, SymmetryKind::Fb,
                           SymmetryKind::Fc, SymmetryKind::Fd, SymmetryKind::Fe,
                           SymmetryKind::Fep})
        if (symmetry_applicable(k, dim)) out.push_back(build_symmetry(k, dim));
    return out;
}

bool ConjugacyReport::all_hold_mod_d() const {
    for (const auto& c : checks)
        if (!c.holds_mod_d) return false;
    return true;
}

namespace {

bool identity_holds(const SymplecticExt& G, const SymplecticExt& lhs, const SymplecticExt& rhs,
                    Int modulus) {
    // G*lhs == rhs*G mod modulus
    return mat_mul(mat_reduce(G, modulus), mat_reduce(lhs, modulus), modulus) ==
           mat_mul(mat_reduce(rhs, modulus), mat_reduce(G, modulus), modulus);
}

ConjugacyCheck make_check(const std::string& name, const SymplecticExt& G,
                          const SymplecticExt& lhs, const SymplecticExt& rhs, const Dim& dim) {
    ConjugacyCheck c;
    c.name = name;
    c.witness = mat_reduce(G, dim.dbar);
    c.holds_mod_d = identity_holds(G, lhs, rhs, dim.d);
    c.holds_mod_dbar = identity_holds(G, lhs, rhs, dim.dbar);
    return c;
}

}  // namespace

ConjugacyReport verify_conjugacies(const Dim& dim) {
    ConjugacyReport report;
    report.dim = dim;
    const Int m = dim.dbar;

    if (symmetry_applicable(SymmetryKind::Fe, dim) && symmetry_applicable(SymmetryKind::Fa, dim)) {
        SymmetrySpec fe = build_symmetry(SymmetryKind::Fe, dim);
        SymmetrySpec fa = build_symmetry(SymmetryKind::Fa, dim);
        SymplecticExt G = make_symplectic(fe.k + 1, 1, fe.k, 1, m);
        SymplecticExt fe2 = mat_mul(fe.matrix, fe.matrix, m);
        report.checks.push_back(make_check("G*Fa = Fe^2*G", G, fa.matrix, fe2, dim));
    }

    if (symmetry_applicable(SymmetryKind::Fc, dim) && symmetry_applicable(SymmetryKind::Fep, dim)) {
        SymmetrySpec fc = build_symmetry(SymmetryKind::Fc, dim);
        SymmetrySpec fz = build_symmetry(SymmetryKind::Fz, dim);
        SymmetrySpec fep = build_symmetry(SymmetryKind::Fep, dim);
        SymplecticExt G = make_symplectic(fc.kappa, fc.kappa - 1, fc.kappa + 1, fc.kappa, m);
        SymplecticExt fcfz = mat_mul(fc.matrix, fz.matrix, m);
        report.checks.push_back(make_check("G*Fc*Fz = Fep*G", G, fcfz, fep.matrix, dim));
    }

    if (symmetry_applicable(SymmetryKind::Fep, dim)) {
        SymmetrySpec fep = build_symmetry(SymmetryKind::Fep, dim);
        if (fep.l % 3 == 0 && symmetry_applicable(SymmetryKind::Fe, dim)) {
            SymmetrySpec fe = build_symmetry(SymmetryKind::Fe, dim);
            ConjugacyCheck c;
            c.name = "Fep = Fe (3 | l)";
            c.witness = mat_reduce(sl2_identity(), m);
            c.holds_mod_d = mat_reduce(fep.matrix, dim.d) == mat_reduce(fe.matrix, dim.d);
            c.holds_mod_dbar = fep.matrix == fe.matrix;
            report.checks.push_back(c);
        }
        if (fep.l % 2 == 0) {
            // odd dimensions d = 4m^2 + 3: Fep^3 is conjugate to J
            Int mm = fep.l / 2;
            SymplecticExt G =
                (2 * mm + 1) % 3 == 0
                    ? make_symplectic(mm * (2 * mm - 1) + 2, -mm * (2 * mm - 1) - 1, -1, 1, m)
                    : make_symplectic(mm * (2 * mm + 1) + 2, -mm * (2 * mm + 1) - 1, -1, 1, m);
            SymplecticExt fep3 = mat_mul(mat_mul(fep.matrix, fep.matrix, m), fep.matrix, m);
            SymplecticExt J = make_symplectic(1, 0, 0, -1, m);
            report.checks.push_back(make_check("G*J = Fep^3*G", G, J, fep3, dim));
        }
    }
    return report;
}

}  // namespace sic
