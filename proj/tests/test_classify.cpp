#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sicsearch/classify.hpp"
#include "sicsearch/search.hpp"

using namespace sic;

namespace {

std::vector<FiducialCandidate> find_fiducials(Int d, std::optional<SymmetryKind> symmetry,
                                              std::optional<Int> sector, Int trials,
                                              std::uint64_t seed, std::size_t want) {
    SearchConfig config;
    config.dim = Dim::of(d);
    config.symmetry = symmetry;
    config.eigenvalue = sector;
    config.trials = trials;
    config.master_seed = seed;
    std::vector<FiducialCandidate> out;
    for (const auto& r : multi_start_search(config)) {
        if (r.converged_to != Convergence::Fiducial) continue;
        out.push_back(r.candidate);
        if (out.size() >= want) break;
    }
    return out;
}

}  // namespace

TEST_CASE("same orbit: translates and conjugates of a fiducial") {
    auto found = find_fiducials(4, SymmetryKind::Fz, 0, 30, 11, 1);
    REQUIRE(!found.empty());
    const Vector phi = found[0].components;
    Dim dim = Dim::of(4);

    SUBCASE("itself") {
        auto g = same_orbit(phi, phi, dim);
        REQUIRE(g.has_value());
    }
    SUBCASE("displacement translate") {
        Vector moved = apply_displacement({1, 0}, phi, dim);
        auto g = same_orbit(phi, moved, dim);
        REQUIRE(g.has_value());
        RealizedOperator E = realize(*g, dim);
        CHECK(std::abs(phi.dot(E.apply(moved))) > 1.0 - 1e-7);
    }
    SUBCASE("complex conjugate") {
        Vector conj = phi.conjugate();
        auto g = same_orbit(phi, conj, dim);
        REQUIRE(g.has_value());
    }
    SUBCASE("random group translate") {
        auto elements = enumerate_pec(dim);
        Vector moved = realize(elements[721 % elements.size()], dim).apply(phi);
        CHECK(same_orbit(phi, moved, dim).has_value());
    }
    SUBCASE("capacity guard") {
        Vector big = Vector::Ones(13) / std::sqrt(13.0);
        CHECK_THROWS_AS((void)same_orbit(big, big, Dim::of(13)), std::length_error);
    }
}

TEST_CASE("stabiliser of a d = 5 fiducial") {
    auto found = find_fiducials(5, SymmetryKind::Fz, 0, 40, 1, 1);
    REQUIRE(!found.empty());
    Dim dim = Dim::of(5);
    StabiliserInfo st = stabiliser(found[0].components, dim);
    CHECK(st.order == 3);
    CHECK(pec_order(dim) % st.order == 0);
    REQUIRE(st.generators.size() == 1);
    // the generator's matrix part is conjugate to the order-3 Zauner matrix
    SymplecticExt fz = build_symmetry(SymmetryKind::Fz, dim).matrix;
    CHECK(pec_element_order(st.generators[0], dim) == 3);
    SymplecticExt gen = st.generators[0].F;
    bool conj_fwd = is_conjugate(gen, fz, 5).has_value();
    bool conj_sq = is_conjugate(mat_mul(gen, gen, 5), fz, 5).has_value();
    CHECK((conj_fwd || conj_sq));
}

TEST_CASE("stabiliser of a d = 4 fiducial has the Fc structure") {
    auto found = find_fiducials(4, SymmetryKind::Fz, 0, 40, 5, 1);
    REQUIRE(!found.empty());
    Dim dim = Dim::of(4);
    StabiliserInfo st = stabiliser(found[0].components, dim);
    // series 4(a): an order-3 unitary together with an order-2 anti-unitary
    bool has_order3_unitary = false, has_order2_anti = false;
    for (const auto& g : st.elements) {
        Int n = pec_element_order(g, dim);
        if (n == 3 && !g.antiunitary()) has_order3_unitary = true;
        if (n == 2 && g.antiunitary()) has_order2_anti = true;
    }
    CHECK(has_order3_unitary);
    CHECK(has_order2_anti);
    CHECK(st.order % 3 == 0);
    CHECK(pec_order(dim) % st.order == 0);
}

TEST_CASE("classification groups translates into one orbit") {
    auto found = find_fiducials(5, SymmetryKind::Fz, 0, 40, 1, 1);
    REQUIRE(!found.empty());
    Dim dim = Dim::of(5);
    const Vector& phi = found[0].components;

    std::vector<FiducialCandidate> batch;
    auto push = [&](Vector v) {
        FiducialCandidate c;
        c.dim = dim;
        c.components = std::move(v);
        c.objective_gap = welch_functional(c.components);
        batch.push_back(std::move(c));
    };
    push(phi);
    push(apply_displacement({2, 3}, phi, dim));
    push(phi.conjugate());
    push(realize(enumerate_pec(dim)[1234], dim).apply(phi));

    auto orbits = classify_all(batch, dim);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].label == "a");
    CHECK(orbits[0].member_indices.size() == 4);
    CHECK(orbits[0].orbit_size * orbits[0].stabiliser_order == pec_order(dim));
}

TEST_CASE("distinct d = 7 orbits get distinct labels") {
    // the Zauner sector tends to find the plain orbit; the real sector finds
    // the one with the order-6 stabiliser
    auto zauner = find_fiducials(7, SymmetryKind::Fz, 0, 60, 2, 1);
    auto real_sector = find_fiducials(7, SymmetryKind::J, std::nullopt, 60, 2, 1);
    REQUIRE(!zauner.empty());
    REQUIRE(!real_sector.empty());
    Dim dim = Dim::of(7);

    std::vector<FiducialCandidate> batch = {zauner[0], real_sector[0]};
    auto orbits = classify_all(batch, dim);
    for (const auto& orbit : orbits) {
        CHECK(orbit.orbit_size * orbit.stabiliser_order == pec_order(dim));
        CHECK(orbit.stabiliser_order % 3 == 0);
    }
    if (orbits.size() == 2) {
        CHECK(orbits[0].label == "a");
        CHECK(orbits[1].label == "b");
        CHECK(orbits[0].stabiliser_order >= orbits[1].stabiliser_order);
    }
}
