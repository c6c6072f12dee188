#include "doctest.h"
#include "tqi/model.hpp"

using namespace tqi;

TEST_CASE("toric model terms commute and have the expected rank") {
    TorusLattice lat(4, 4);
    StabilizerModel m = toric_model(lat);
    CHECK(m.n_qubits == 32);
    CHECK(m.terms.size() == 32);
    GroupCheck c = check_group(m.terms);
    CHECK(c.all_hermitian);
    CHECK(c.all_commuting);
    CHECK(!c.contains_minus_identity);
    // one relation among all stars and one among all plaquettes
    CHECK(c.rank == 30);

    // the two global products are the identity with a plus sign
    PauliWord all_stars = PauliWord::identity(m.n_qubits);
    PauliWord all_plaqs = PauliWord::identity(m.n_qubits);
    for (size_t i = 0; i < 16; ++i) all_stars = all_stars * m.terms[i];
    for (size_t i = 16; i < 32; ++i) all_plaqs = all_plaqs * m.terms[i];
    CHECK(all_stars.is_identity());
    CHECK(all_stars.identity_sign() == 1);
    CHECK(all_plaqs.is_identity());
    CHECK(all_plaqs.identity_sign() == 1);
}

TEST_CASE("toric ground state choices complete the group to full rank") {
    for (auto [lx, ly] : {std::pair{4, 4}, std::pair{6, 4}, std::pair{8, 8}}) {
        TorusLattice lat(lx, ly);
        StabilizerModel m = toric_model(lat);
        auto gens = state_group(m, toric_loop_choice(lat));
        CHECK(gens.size() == m.terms.size() + 2);
        CHECK(group_rank(gens) == m.n_qubits);
        auto gens2 = state_group(m, toric_dual_loop_choice(lat));
        CHECK(group_rank(gens2) == m.n_qubits);
    }
}

TEST_CASE("state group validation rejects bad choices") {
    TorusLattice lat(4, 4);
    StabilizerModel m = toric_model(lat);
    GroundStateChoice empty{"none", {}};
    CHECK_THROWS_WITH_AS(state_group(m, empty), doctest::Contains("rank"), std::invalid_argument);
    GroundStateChoice anti{"anti", {PauliWord::single(m.n_qubits, 'Z', lat.h_edge(0, 0))}};
    CHECK_THROWS_WITH_AS(state_group(m, anti), doctest::Contains("commute"), std::invalid_argument);
}

TEST_CASE("trivial model is a full-rank product state on its own") {
    TorusLattice lat(6, 6);
    StabilizerModel m = trivial_model(lat);
    CHECK(m.terms.size() == m.n_qubits);
    CHECK(group_rank(m.terms) == m.n_qubits);
    auto gens = state_group(m, GroundStateChoice{"none", {}});
    CHECK(gens.size() == m.n_qubits);
}

TEST_CASE("fatten by terms grows a region to everything its terms touch") {
    TorusLattice lat(8, 8);
    StabilizerModel m = toric_model(lat);
    BitVec seed(m.n_qubits);
    seed.set(lat.h_edge(3, 3), true);
    BitVec grown = fatten_by_terms(m.terms, seed, 1);
    // the edge sits in 2 stars and 2 plaquettes; their union has 9 edges
    BitVec expect(m.n_qubits);
    for (auto [x, y] : {std::pair{3, 3}, std::pair{4, 3}})
        for (int e : lat.star_edges(x, y)) expect.set(e, true);
    for (auto [x, y] : {std::pair{3, 3}, std::pair{3, 2}})
        for (int e : lat.plaquette_edges(x, y)) expect.set(e, true);
    CHECK(expect.popcount() == 9);
    CHECK(grown == expect);
    BitVec grown0 = fatten_by_terms(m.terms, seed, 0);
    CHECK(grown0 == seed);
    // growing twice reaches further than once
    CHECK(fatten_by_terms(m.terms, seed, 2).popcount() > grown.popcount());
}

TEST_CASE("ring fragment geometry and term structure") {
    for (auto [n, rings] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
        RingFragment f = make_ring_fragment(n, rings);
        CHECK(f.model.n_qubits == size_t(n * (2 * rings + 3)));
        CHECK(f.model.terms.size() == size_t(n * (2 * rings + 1)));
        GroupCheck c = check_group(f.model.terms);
        CHECK(c.all_commuting);
        CHECK(c.all_hermitian);
        CHECK(!c.contains_minus_identity);
        // fragment terms are independent: ground space dim 2^(2n)
        CHECK(c.rank == f.model.terms.size());
        CHECK(f.annulus_region().popcount() == size_t(3 * n));
    }
    CHECK_THROWS_AS(make_ring_fragment(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_ring_fragment(4, 3), std::invalid_argument);
}

TEST_CASE("fragment ground state choices reach full rank") {
    RingFragment f31 = make_ring_fragment(3, 1);
    CHECK(group_rank(state_group(f31.model, fragment_pinned_choice(f31))) == 15);
    CHECK(group_rank(state_group(f31.model, fragment_pinned_choice_variant(f31))) == 15);
    CHECK(group_rank(state_group(f31.model, fragment_entangled_choice(f31))) == 15);

    RingFragment f22 = make_ring_fragment(2, 2);
    CHECK(group_rank(state_group(f22.model, fragment_pinned_choice(f22))) == 14);
    CHECK(group_rank(state_group(f22.model, fragment_pinned_choice_variant(f22))) == 14);
    CHECK_THROWS_AS(fragment_entangled_choice(f22), std::invalid_argument);

    RingFragment f41 = make_ring_fragment(4, 1);
    CHECK(group_rank(state_group(f41.model, fragment_entangled_choice(f41))) == 20);
}

TEST_CASE("fragment tripartition needs circumference 4") {
    RingFragment f3 = make_ring_fragment(3, 1);
    CHECK_THROWS_WITH_AS(f3.tripartition(), doctest::Contains("circumference"),
                         std::invalid_argument);
    RingFragment f4 = make_ring_fragment(4, 1);
    Tripartition t = f4.tripartition();
    CHECK(t.x.popcount() == 3);
    CHECK(t.y.popcount() == 6);
    CHECK(t.z.popcount() == 3);
    for (size_t q = 0; q < f4.model.n_qubits; ++q)
        CHECK(t.x.get(q) + t.y.get(q) + t.z.get(q) <= 1);
}
