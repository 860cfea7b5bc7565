// Acceptance suite: one test case and one printed PASS/FAIL line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "sicsearch/classify.hpp"
#include "sicsearch/search.hpp"

using namespace sic;

namespace {

void report(int number, const std::string& name, bool pass) {
    std::cout << "[acceptance] " << (number < 10 ? "0" : "") << number << " " << name << ": "
              << (pass ? "PASS" : "FAIL") << std::endl;
}

// Documented acceptance seeds: every search below runs from master seed 1 with
// the per-dimension trial budgets given here.
constexpr std::uint64_t kSeed = 1;
constexpr Int kFullSpaceTrials = 60;
constexpr Int kSectorTrials = 60;

const std::vector<SearchResult>& search_results(Int d) {
    static std::map<Int, std::vector<SearchResult>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    SearchConfig config;
    config.dim = Dim::of(d);
    config.master_seed = kSeed;
    if (d <= 7) {
        config.trials = kFullSpaceTrials;
    } else {
        config.symmetry = SymmetryKind::Fz;
        config.trials = kSectorTrials;
    }
    return cache.emplace(d, multi_start_search(config)).first->second;
}

std::vector<const SearchResult*> fiducials_of(const std::vector<SearchResult>& results) {
    std::vector<const SearchResult*> out;
    for (const auto& r : results)
        if (r.converged_to == Convergence::Fiducial) out.push_back(&r);
    return out;
}

// Phase-normalized fingerprint of a realized operator, for projective
// distinctness counting.
std::string operator_fingerprint(const RealizedOperator& op) {
    const Int d = op.dim();
    Complex anchor(0.0, 0.0);
    for (Int j = 0; j < d && std::abs(anchor) < 1e-6; ++j)
        for (Int k = 0; k < d && std::abs(anchor) < 1e-6; ++k) anchor = op.matrix(j, k);
    Complex rot = std::conj(anchor) / std::abs(anchor);
    std::ostringstream ss;
    ss << (op.conjugate_first ? "A" : "U");
    for (Int j = 0; j < d; ++j)
        for (Int k = 0; k < d; ++k) {
            Complex z = op.matrix(j, k) * rot;
            ss << "," << std::llround(z.real() * 1e8) << "," << std::llround(z.imag() * 1e8);
        }
    return ss.str();
}

}  // namespace

TEST_CASE("criterion 1: group structure for d = 2..5") {
    bool pass = true;
    for (Int d = 2; d <= 5; ++d) {
        Dim dim = Dim::of(d);
        PhaseConstants ph = PhaseConstants::of(dim);
        auto elements = enumerate_pec(dim);
        pass = pass && static_cast<Int>(elements.size()) == pec_order(dim);

        std::set<std::string> fingerprints;
        std::vector<DisplacementIndex> probes = {{1, 0}, {0, 1}, {1, 1}, {2 % d, (d - 1) % d}};
        for (const auto& g : elements) {
            RealizedOperator E = realize(g, dim);
            fingerprints.insert(operator_fingerprint(E));
            RealizedOperator Einv = operator_inverse(E);
            for (const auto& q : probes) {
                RealizedOperator lhs =
                    compose(compose(E, RealizedOperator{displacement_matrix(q, dim), false}),
                            Einv);
                DisplacementIndex fq = DisplacementIndex::reduce(
                    g.F.a * q.p1 + g.F.b * q.p2, g.F.c * q.p1 + g.F.e * q.p2, dim);
                Matrix rhs = ph.omega_power(mod_reduce(g.p2 * fq.p1 - g.p1 * fq.p2, d)) *
                             displacement_matrix(fq, dim);
                if (lhs.conjugate_first ||
                    (lhs.matrix - rhs).cwiseAbs().maxCoeff() > 1e-11) {
                    pass = false;
                }
            }
        }
        pass = pass && static_cast<Int>(fingerprints.size()) == pec_order(dim);
    }
    report(1, "group-structure", pass);
    CHECK(pass);
}

TEST_CASE("criterion 2: Zauner matrix order for d <= 50") {
    bool pass = true;
    for (Int d = 2; d <= 50; ++d) {
        Matrix S = zauner_matrix(Dim::of(d));
        double dev = ((S * S * S) - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
        if (dev > 1e-12) pass = false;
    }
    report(2, "zauner-order-3", pass);
    CHECK(pass);
}

TEST_CASE("criterion 3: Zauner eigenspace dimensions for d <= 30") {
    bool pass = true;
    for (Int d = 2; d <= 30; ++d) {
        Matrix S = zauner_matrix(Dim::of(d));
        for (Int k = 0; k < 3; ++k) {
            Matrix P = eigenspace_projector(S, 3, k);
            Int rank = static_cast<Int>(std::llround(P.trace().real()));
            if (rank != (d + 3 - 2 * k) / 3) pass = false;
        }
    }
    report(3, "zauner-eigenspace-dims", pass);
    CHECK(pass);
}

TEST_CASE("criterion 4: analytic fiducials verify") {
    Vector phi2(2);
    double r = 1.0 / std::sqrt(3.0);
    phi2(0) = std::sqrt((1.0 + r) / 2.0);
    phi2(1) = std::polar(std::sqrt((1.0 - r) / 2.0), M_PI / 4.0);
    Vector phi3(3);
    phi3 << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);

    bool pass = welch_functional(phi2) < 1e-14 && welch_functional(phi3) < 1e-14 &&
                verify_sic(phi2, 1e-13).max_dev < 1e-13 && verify_sic(phi3, 1e-13).max_dev < 1e-13;
    report(4, "known-fiducials", pass);
    CHECK(pass);
}

TEST_CASE("criterion 5: search finds fiducials for d = 2..16") {
    bool pass = true;
    for (Int d = 2; d <= 16; ++d) {
        auto hits = fiducials_of(search_results(d));
        bool found = false;
        for (const auto* h : hits) {
            if (h->candidate.objective_gap < 1e-13 &&
                verify_sic(h->candidate.components, 1e-8).pass) {
                found = true;
                break;
            }
        }
        if (!found) {
            pass = false;
            std::cout << "[acceptance]   no verified fiducial for d=" << d << std::endl;
        }
    }
    report(5, "search-existence", pass);
    CHECK(pass);
}

TEST_CASE("criterion 6: symmetry-restricted searches") {
    bool pass8 = false;
    {
        Dim dim = Dim::of(8);
        SearchConfig config;
        config.dim = dim;
        config.symmetry = SymmetryKind::Fb;
        config.trials = kSectorTrials;
        config.master_seed = kSeed;
        auto results = multi_start_search(config);
        auto hits = fiducials_of(results);
        if (!hits.empty()) {
            StabiliserInfo st = stabiliser(hits[0]->candidate.components, dim);
            SymplecticExt fb = build_symmetry(SymmetryKind::Fb, dim).matrix;
            for (const auto& g : st.elements) {
                if (g.antiunitary() || pec_element_order(g, dim) != 2) continue;
                if (is_conjugate(g.F, fb, dim.d).has_value() ||
                    is_conjugate(g.F, fb, dim.dbar).has_value()) {
                    pass8 = true;
                    break;
                }
            }
        }
    }

    bool pass12 = false;
    {
        Dim dim = Dim::of(12);
        SearchConfig config;
        config.dim = dim;
        config.symmetry = SymmetryKind::Fe;
        config.trials = kSectorTrials;
        config.master_seed = kSeed;
        auto results = multi_start_search(config);
        auto hits = fiducials_of(results);
        if (!hits.empty()) {
            StabiliserInfo st = stabiliser(hits[0]->candidate.components, dim);
            for (const auto& g : st.elements) {
                if (g.antiunitary() && pec_element_order(g, dim) == 6) {
                    pass12 = true;
                    break;
                }
            }
        }
    }
    report(6, "symmetry-restricted-hits", pass8 && pass12);
    CHECK(pass8);
    CHECK(pass12);
}

TEST_CASE("criterion 7: stabiliser law for d = 4..8") {
    bool pass = true;
    for (Int d = 4; d <= 8; ++d) {
        Dim dim = Dim::of(d);
        auto hits = fiducials_of(search_results(d));
        if (hits.empty()) {
            pass = false;
            continue;
        }
        std::size_t checked = 0;
        for (const auto* h : hits) {
            if (checked >= 2) break;
            StabiliserInfo st = stabiliser(h->candidate.components, dim);
            Int orbit = pec_order(dim) / st.order;
            if (orbit * st.order != pec_order(dim)) pass = false;
            if (st.order % 3 != 0) pass = false;
            ++checked;
        }
    }
    report(7, "stabiliser-law", pass);
    CHECK(pass);
}

TEST_CASE("criterion 8: gradient against finite differences") {
    bool pass = true;
    RandomStream rng(2718, 0);
    for (Int d = 2; d <= 10; ++d) {
        for (int trial = 0; trial < 100; ++trial) {
            Vector phi(d);
            for (Int k = 0; k < d; ++k) phi(k) = rng.next_complex_normal();
            Eigen::VectorXd g = welch_gradient(phi);
            Eigen::VectorXd fd(2 * d);
            const double h = 1e-5;
            for (Int i = 0; i < 2 * d; ++i) {
                Vector plus = phi, minus = phi;
                Complex delta = i < d ? Complex(h, 0.0) : Complex(0.0, h);
                plus(i % d) += delta;
                minus(i % d) -= delta;
                fd(i) = (welch_functional(plus) - welch_functional(minus)) / (2.0 * h);
            }
            if ((g - fd).norm() > 1e-6 * std::max(fd.norm(), 1e-6)) pass = false;
        }
    }
    report(8, "gradient-correctness", pass);
    CHECK(pass);
}

TEST_CASE("criterion 9: witnessed conjugacy identities") {
    bool pass = true;
    // d = 12: G*Fa = Fe^2*G
    {
        ConjugacyReport rep = verify_conjugacies(Dim::of(12));
        bool found = false;
        for (const auto& c : rep.checks)
            if (c.name == "G*Fa = Fe^2*G") found = c.holds_mod_d;
        pass = pass && found;
    }
    // d = 7 and d = 19: the Fep identities with the displayed witnesses
    for (Int d : {7, 19}) {
        ConjugacyReport rep = verify_conjugacies(Dim::of(d));
        bool have_fcfz = false, have_j = false;
        for (const auto& c : rep.checks) {
            if (c.name == "G*Fc*Fz = Fep*G") have_fcfz = c.holds_mod_d;
            if (c.name == "G*J = Fep^3*G") have_j = c.holds_mod_d;
        }
        pass = pass && have_fcfz && have_j;
    }
    report(9, "conjugacy-identities", pass);
    CHECK(pass);
}

TEST_CASE("criterion 10: Welch bound on Haar-random states") {
    bool pass = true;
    RandomStream rng(31415, 0);
    const int per_dim = 667;  // ~1e4 total across d = 2..16
    for (Int d = 2; d <= 16; ++d) {
        for (int i = 0; i < per_dim; ++i) {
            if (welch_functional(haar_random_state(d, rng)) < -1e-14) pass = false;
        }
    }
    report(10, "welch-bound", pass);
    CHECK(pass);
}

TEST_CASE("criterion 11: real fiducial in d = 7") {
    SearchConfig config;
    config.dim = Dim::of(7);
    config.symmetry = SymmetryKind::J;
    config.trials = kSectorTrials;
    config.master_seed = kSeed;
    auto results = multi_start_search(config);
    auto hits = fiducials_of(results);
    bool pass = false;
    for (const auto* h : hits) {
        // fixed vectors of the conjugation symmetry are real up to the
        // operator's own phase convention; here realize((J|0)) is exactly
        // conjugation, so components must be real
        double imag_norm = h->candidate.components.imag().norm();
        if (imag_norm < 1e-9 && verify_sic(h->candidate.components, 1e-8).pass) pass = true;
    }
    report(11, "real-fiducial-d7", pass);
    CHECK(pass);
}
