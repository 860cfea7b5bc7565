#include "sicsearch/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sic {

namespace {

void check_capacity(const Dim& dim) {
    if (dim.d > kClassifyDimCap)
        throw std::length_error("orbit/stabiliser enumeration is capped at d <= " +
                                std::to_string(kClassifyDimCap));
}

// Table of tau^e for e in [0, 2d); displacement phases are tau^{p1 p2 + 2 k p2}.
std::vector<Complex> tau_table(const Dim& dim) {
    const PhaseConstants ph = PhaseConstants::of(dim);
    std::vector<Complex> t(static_cast<std::size_t>(2 * dim.d));
    for (Int e = 0; e < 2 * dim.d; ++e) t[static_cast<std::size_t>(e)] = ph.tau_power(e);
    return t;
}

// Visits every (F|p) with |<phi| E_(F|p) |target>| >= 1 - tol. The visitor
// returns true to stop the scan.
void scan_overlaps(const Vector& phi, const Vector& target, const Dim& dim, double tol,
                   const std::function<bool(const CliffordElement&)>& visit) {
    const Int d = dim.d, m = dim.dbar;
    const auto tau = tau_table(dim);
    const Vector phi_conj = phi.conjugate();
    const double threshold = 1.0 - tol;

    for (const SymplecticExt& F : esl2_elements(m)) {
        // E_(F|p) x = D_p V_F x on the unitary branch and D_p conj(V_{JF} x)
        // on the anti-unitary branch, so the p-loop is uniform in w.
        Vector w;
        if (F.det_sign > 0) {
            w = metaplectic(F, dim).matrix * target;
        } else {
            SymplecticExt jf = make_symplectic(F.a, F.b, -F.c, -F.e, m);
            w = (metaplectic(jf, dim).matrix * target).conjugate();
        }
        for (Int p1 = 0; p1 < m; ++p1) {
            for (Int p2 = 0; p2 < m; ++p2) {
                Complex overlap(0.0, 0.0);
                for (Int k = 0; k < d; ++k) {
                    Int row = k + p1 >= d ? (k + p1) % d : k + p1;
                    Int e = static_cast<Int>((p1 * p2 + 2 * k * p2) % (2 * d));
                    overlap += phi_conj(row) * tau[static_cast<std::size_t>(e)] * w(k);
                }
                if (std::abs(overlap) >= threshold) {
                    if (visit(CliffordElement{F, p1, p2})) return;
                }
            }
        }
    }
}

}  // namespace

std::vector<double> displacement_fingerprint(const Vector& phi) {
    const Dim dim = Dim::of(phi.size());
    std::vector<double> fp;
    fp.reserve(static_cast<std::size_t>(dim.d * dim.d));
    for (Int p1 = 0; p1 < dim.d; ++p1)
        for (Int p2 = 0; p2 < dim.d; ++p2)
            fp.push_back(std::abs(phi.dot(apply_displacement(DisplacementIndex{p1, p2}, phi, dim))));
    std::sort(fp.begin(), fp.end());
    return fp;
}

std::optional<CliffordElement> same_orbit(const Vector& phi, const Vector& psi, const Dim& dim,
                                          double tol) {
    check_capacity(dim);
    // cheap certificate first: fingerprints of orbit mates agree
    std::vector<double> fa = displacement_fingerprint(phi);
    std::vector<double> fb = displacement_fingerprint(psi);
    double fp_gap = 0.0;
    for (std::size_t i = 0; i < fa.size(); ++i) fp_gap = std::max(fp_gap, std::abs(fa[i] - fb[i]));
    if (fp_gap > std::max(1e-5, 10.0 * tol)) return std::nullopt;

    std::optional<CliffordElement> found;
    scan_overlaps(phi, psi, dim, tol, [&](const CliffordElement& g) {
        found = pec_canonical(g, dim);
        return true;
    });
    return found;
}

StabiliserInfo stabiliser(const Vector& phi, const Dim& dim, double tol) {
    check_capacity(dim);
    std::set<CliffordElement> hits;
    scan_overlaps(phi, phi, dim, tol, [&](const CliffordElement& g) {
        hits.insert(pec_canonical(g, dim));
        return false;
    });

    // group closure at the working tolerance
    for (const auto& g : hits) {
        for (const auto& h : hits) {
            if (!hits.count(pec_canonical(clifford_mul(g, h, dim), dim)))
                throw std::runtime_error(
                    "stabiliser closure failed; overlap tolerance is too loose or too tight");
        }
        if (!hits.count(pec_canonical(clifford_inverse(g, dim), dim)))
            throw std::runtime_error("stabiliser is not inverse-closed at this tolerance");
    }

    StabiliserInfo info;
    info.elements.assign(hits.begin(), hits.end());
    info.order = static_cast<Int>(info.elements.size());

    // prefer a single generator (stabilisers are cyclic in practice)
    for (const auto& g : info.elements) {
        if (pec_element_order(g, dim) == info.order) {
            info.generators = {g};
            break;
        }
    }
    if (info.generators.empty()) {
        std::set<CliffordElement> span = {pec_canonical(clifford_identity(), dim)};
        for (const auto& g : info.elements) {
            if (span.count(g)) continue;
            info.generators.push_back(g);
            // regenerate the closure of the current generator set
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<CliffordElement> snapshot(span.begin(), span.end());
                for (const auto& x : snapshot)
                    for (const auto& h : info.generators)
                        if (span.insert(pec_canonical(clifford_mul(x, h, dim), dim)).second)
                            grew = true;
            }
            if (static_cast<Int>(span.size()) == info.order) break;
        }
    }
    return info;
}

std::vector<OrbitRecord> classify_all(const std::vector<FiducialCandidate>& candidates,
                                      const Dim& dim, double tol) {
    check_capacity(dim);
    std::vector<OrbitRecord> orbits;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Vector& phi = candidates[i].components;
        bool placed = false;
        for (auto& orbit : orbits) {
            if (same_orbit(orbit.representative.components, phi, dim, tol)) {
                orbit.member_indices.push_back(static_cast<Int>(i));
                placed = true;
                break;
            }
        }
        if (placed) continue;
        OrbitRecord rec;
        rec.dim = dim;
        rec.representative = candidates[i];
        rec.member_indices = {static_cast<Int>(i)};
        StabiliserInfo st = stabiliser(phi, dim, tol);
        rec.stabiliser_generators = st.generators;
        rec.stabiliser_order = st.order;
        rec.orbit_size = pec_order(dim) / st.order;
        if (rec.orbit_size * st.order != pec_order(dim))
            throw std::logic_error("stabiliser order does not divide |PEC(d)|");
        orbits.push_back(std::move(rec));
    }

    std::vector<std::vector<double>> prints(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i)
        prints[i] = displacement_fingerprint(orbits[i].representative.components);
    std::vector<std::size_t> order(orbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (orbits[x].stabiliser_order != orbits[y].stabiliser_order)
            return orbits[x].stabiliser_order > orbits[y].stabiliser_order;
        return prints[x] < prints[y];
    });

    std::vector<OrbitRecord> out;
    out.reserve(orbits.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        OrbitRecord rec = std::move(orbits[order[rank]]);
        rec.label = std::string(1, static_cast<char>('a' + (rank % 26)));
        if (rank >= 26) rec.label += std::to_string(rank / 26);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace sic
