#include "tqi/sectors.hpp"

#include <doctest.h>

#include <set>

#include "tqi/gf2.hpp"
#include "tqi/lattice.hpp"
#include "tqi/model.hpp"
#include "tqi/pauli.hpp"

using namespace tqi;

namespace {

RectAnnulus standard_annulus(const TorusLattice& lat, int ax, int ay) {
    return make_rect_annulus(lat, ax, ay, 5, 5, 2);
}

}  // namespace

TEST_CASE("toric annulus carries a two-bit invariant") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);
    GroundStateChoice choice = toric_loop_choice(lat);
    RectAnnulus a = standard_annulus(lat, 0, 0);

    // The fattened neighborhood and the terms it contains (32 stars and 40
    // faces; the anchor hugs the wrap, so some faces reach around the torus).
    BitVec plus = region_plus(model, a.edges);
    CHECK(plus.popcount() == 100);
    CHECK(surrounding_terms(model, a.edges).size() == 72);

    // Stabilizers of the state inside A versus surrounding-term products.
    auto state = state_group(model, choice);
    CHECK(subgroup_supported_in(state, a.edges).size() == 6);
    CHECK(subgroup_supported_in(surrounding_terms(model, a.edges), a.edges).size() == 4);

    CHECK(invariant_bits(model, choice, a.edges) == 2);
    CHECK(region_entropy_bits(model, choice, a.edges) == 30);

    // The same value with the dual loop completion: the invariant belongs to
    // the phase, not to the chosen ground state.
    CHECK(invariant_bits(model, toric_dual_loop_choice(lat), a.edges) == 2);
}

TEST_CASE("toric annulus invariant is translation invariant") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);
    GroundStateChoice choice = toric_loop_choice(lat);
    for (int ay = 0; ay < lat.ly; ++ay)
        for (int ax = 0; ax < lat.lx; ++ax) {
            RectAnnulus a = standard_annulus(lat, ax, ay);
            CAPTURE(ax);
            CAPTURE(ay);
            CHECK(invariant_bits(model, choice, a.edges) == 2);
        }
}

TEST_CASE("annulus logical algebra on the torus") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);
    RectAnnulus a = standard_annulus(lat, 1, 3);

    LogicalAlgebra la = logical_algebra(model, a.edges);
    CHECK(la.commutant_rank == 6);
    CHECK(la.trivial_rank == 4);
    CHECK(la.class_rank == 2);
    CHECK(la.abelian);
    REQUIRE(la.class_reps.size() == 2);
    for (const auto& rep : la.class_reps) {
        CHECK(rep.supported_in(a.edges));
        for (const auto& h : model.terms) CHECK(rep.commutes_with(h));
    }
    // Representatives of distinct classes are not products of each other and
    // the trivial subgroup; spans were already checked in construction, so
    // just confirm the two reps differ in type (one flips each loop family).
    CHECK_FALSE(la.class_reps[0] == la.class_reps[1]);
}

TEST_CASE("annulus sectors split the surrounding ground space evenly") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);
    RectAnnulus a = standard_annulus(lat, 0, 0);

    SectorDecomposition d = sector_decomposition(model, a.edges);
    CHECK(d.class_rank == 2);
    CHECK(d.log2_total_dim == 28);
    CHECK(d.equal_dims_certified);
    CHECK(d.log2_sector_dim == 26);
    REQUIRE(d.sector_movers.size() == 2);
    // Movers were verified against terms and representatives inside the
    // builder; re-check the headline algebra here.
    for (size_t i = 0; i < 2; ++i) {
        CHECK_FALSE(d.sector_movers[i].commutes_with(d.class_reps[i]));
        CHECK(d.sector_movers[i].commutes_with(d.class_reps[1 - i]));
    }
}

TEST_CASE("small torus leaves no room between hole and wrap") {
    TorusLattice lat(6, 6);
    StabilizerModel model = toric_model(lat);
    // The annulus itself is valid, but its fattened neighborhood wraps the
    // torus, so the quantity stops being a function of the phase: the hole
    // loops become products of surrounding terms (a Z completion then sees
    // nothing) while whole non-contractible dual cycles fit inside the band
    // (an X completion sees those instead). The value depends on the chosen
    // ground state, which certifies that this size violates the geometry
    // the invariance statement needs.
    for (int ax : {0, 3}) {
        RectAnnulus a = standard_annulus(lat, ax, 2);
        CAPTURE(ax);
        CHECK(invariant_bits(model, toric_loop_choice(lat), a.edges) == 0);
        CHECK(invariant_bits(model, toric_dual_loop_choice(lat), a.edges) == 2);
        // The two surviving classes come from the global dual cycles: every
        // purely-Z commutant element is already a surrounding product here,
        // so nontrivial representatives must carry X content.
        LogicalAlgebra la = logical_algebra(model, a.edges);
        CHECK(la.class_rank == 2);
        for (const auto& rep : la.class_reps) CHECK(rep.x().any());
    }
}

TEST_CASE("oversized width drowns the invariant on the eight torus") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);
    RectAnnulus wide = make_rect_annulus(lat, 0, 0, 7, 7, 3);
    CHECK(invariant_bits(model, toric_loop_choice(lat), wide.edges) == 0);
}

TEST_CASE("invariant is uniform across widths on a roomy torus") {
    TorusLattice lat(12, 12);
    StabilizerModel model = toric_model(lat);
    GroundStateChoice choice = toric_loop_choice(lat);
    UniformityScan scan = uniformity_scan(lat, model, choice, 6, 6, 2, 4);
    REQUIRE(scan.values.size() == 3);
    for (const auto& [w, v] : scan.values) {
        CAPTURE(w);
        CHECK(v == 2);
    }
    CHECK(scan.uniform);
}

TEST_CASE("nested annuli induce the same classes") {
    TorusLattice lat(12, 12);
    StabilizerModel model = toric_model(lat);
    RectAnnulus inner = make_rect_annulus(lat, 4, 4, 5, 5, 2);
    RectAnnulus outer = make_rect_annulus(lat, 2, 2, 9, 9, 4);

    // Same declared hole cell, so the inner annulus sits inside the outer.
    BitVec overlap = inner.edges;
    for (size_t w = 0; w < overlap.word_count(); ++w)
        overlap.words()[w] &= outer.edges.words()[w];
    CHECK(overlap == inner.edges);

    LogicalAlgebra li = logical_algebra(model, inner.edges);
    LogicalAlgebra lo = logical_algebra(model, outer.edges);
    CHECK(li.class_rank == 2);
    CHECK(lo.class_rank == 2);

    // Inner representatives stay nontrivial and independent as classes of
    // the outer annulus: they extend the outer trivial span by full rank.
    std::vector<BitVec> rows;
    for (const auto& g : lo.trivial_gens) rows.push_back(g.symplectic());
    size_t base = BitMatrix::from_rows(rows).rank();
    CHECK(base == lo.trivial_rank);
    for (const auto& rep : li.class_reps) rows.push_back(rep.symplectic());
    CHECK(BitMatrix::from_rows(rows).rank() == base + li.class_reps.size());
}

TEST_CASE("product state has trivial classes everywhere") {
    TorusLattice lat(8, 8);
    StabilizerModel model = trivial_model(lat);
    GroundStateChoice plain{"plain", {}};
    RectAnnulus a = standard_annulus(lat, 2, 1);
    CHECK(invariant_bits(model, plain, a.edges) == 0);
    LogicalAlgebra la = logical_algebra(model, a.edges);
    CHECK(la.class_rank == 0);
    CHECK(la.commutant_rank == la.trivial_rank);
    SectorDecomposition d = sector_decomposition(model, a.edges);
    CHECK(d.class_rank == 0);
    CHECK(d.equal_dims_certified);
    CHECK(d.log2_sector_dim == d.log2_total_dim);
    CHECK(region_entropy_bits(model, plain, a.edges) == 0);
}

TEST_CASE("entropies of blocks and rings follow the area law exactly") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);

    struct Row {
        GeomRegion region;
        std::int64_t entropy;
    };
    std::vector<Row> rows;
    rows.push_back({disc_region(lat, 0, 0, 1, 1), 3});
    rows.push_back({disc_region(lat, 3, 2, 2, 1), 5});
    rows.push_back({disc_region(lat, 0, 0, 2, 2), 7});
    rows.push_back({disc_region(lat, 1, 4, 3, 2), 9});
    rows.push_back({ring_region(lat, 0, 0, 4, 4, 1, 1, 2, 2), 18});
    rows.push_back({ring_region(lat, 2, 1, 5, 5, 1, 1, 3, 3), 26});

    for (const auto& choice : {toric_loop_choice(lat), toric_dual_loop_choice(lat)}) {
        std::vector<AreaLawPoint> pts;
        for (const auto& row : rows) {
            std::int64_t s = region_entropy_bits(model, choice, row.region.edges);
            CHECK(s == row.entropy);
            std::int64_t boundary = 0;
            for (auto l : row.region.boundary_lengths) boundary += l;
            pts.push_back({s, boundary, std::int64_t(row.region.boundary_lengths.size())});
        }
        AreaLawFit fit = area_law_fit(pts);
        CHECK(fit.alpha == Rat(1));
        CHECK(fit.gamma == Rat(1));
        CHECK(fit.residual == Rat(0));
    }
}

TEST_CASE("area law fit handles flat data and rejects degenerate designs") {
    std::vector<AreaLawPoint> flat = {{0, 4, 1}, {0, 6, 1}, {0, 8, 1}, {0, 20, 2}};
    AreaLawFit fit = area_law_fit(flat);
    CHECK(fit.alpha == Rat(0));
    CHECK(fit.gamma == Rat(0));
    CHECK(fit.residual == Rat(0));

    // All regions with proportional boundary and contour columns: singular.
    std::vector<AreaLawPoint> bad = {{3, 4, 2}, {5, 8, 4}, {7, 16, 8}};
    CHECK_THROWS_AS(area_law_fit(bad), std::invalid_argument);
    CHECK_THROWS_AS(area_law_fit({{3, 4, 1}}), std::invalid_argument);
}

TEST_CASE("conditional mutual information across the annulus") {
    TorusLattice lat(8, 8);
    StabilizerModel model = toric_model(lat);
    RectAnnulus a = standard_annulus(lat, 0, 0);
    Tripartition parts = tripartition(lat, a);

    for (const auto& choice : {toric_loop_choice(lat), toric_dual_loop_choice(lat)}) {
        auto gens = state_group(model, choice);
        BitVec xy = parts.x, yz = parts.y;
        xy.xor_with(parts.y);
        yz.xor_with(parts.z);
        CHECK(entropy_bits(gens, xy) == 19);
        CHECK(entropy_bits(gens, yz) == 19);
        CHECK(entropy_bits(gens, parts.y) == 6);
        CHECK(cmi_bits(gens, parts) == 2);
        // The invariant never exceeds the conditional mutual information;
        // here the bound is tight.
        CHECK(cmi_bits(gens, parts) - invariant_bits(model, choice, a.edges) == 0);
    }

    GroundStateChoice plain{"plain", {}};
    CHECK(cmi_bits(state_group(trivial_model(lat), plain), parts) == 0);
}

TEST_CASE("cmi rejects overlapping parts") {
    TorusLattice lat(8, 8);
    auto gens = state_group(toric_model(lat), toric_loop_choice(lat));
    Tripartition bad;
    bad.x = BitVec(lat.num_edges());
    bad.y = BitVec(lat.num_edges());
    bad.z = BitVec(lat.num_edges());
    bad.x.set(0, true);
    bad.y.set(0, true);
    bad.z.set(1, true);
    CHECK_THROWS_AS(cmi_bits(gens, bad), std::invalid_argument);
}

TEST_CASE("ring fragment invariant depends on the boundary completion") {
    for (int n : {3, 4}) {
        RingFragment f = make_ring_fragment(n, 1);
        BitVec band = f.annulus_region();
        CAPTURE(n);
        // Boundary-entangled completion reproduces the bulk two-bit value.
        CHECK(invariant_bits(f.model, fragment_entangled_choice(f), band) == 2);
        // Boundary-pinned completion inflates it with a spurious
        // circumference-proportional contribution.
        CHECK(invariant_bits(f.model, fragment_pinned_choice(f), band) == 2 * n);
        CHECK(invariant_bits(f.model, fragment_pinned_choice_variant(f), band) == 2 * n);
    }
}

TEST_CASE("fragment entropies under the entangled completion") {
    RingFragment f = make_ring_fragment(3, 1);
    BitVec band = f.annulus_region();
    CHECK(region_entropy_bits(f.model, fragment_entangled_choice(f), band) == 4);
    CHECK(region_entropy_bits(f.model, fragment_pinned_choice(f), band) == 0);
}

TEST_CASE("double ring washer is insensitive to the pinned loop position") {
    RingFragment f = make_ring_fragment(2, 2);
    BitVec band = f.annulus_region();
    CHECK(invariant_bits(f.model, fragment_pinned_choice(f), band) == 2);
    CHECK(invariant_bits(f.model, fragment_pinned_choice_variant(f), band) == 2);
    CHECK(region_entropy_bits(f.model, fragment_pinned_choice(f), band) == 2);

    LogicalAlgebra la = logical_algebra(f.model, band);
    CHECK(la.class_rank == 2);
    CHECK(la.abelian);

    SectorDecomposition d = sector_decomposition(f.model, band);
    CHECK(d.log2_total_dim == 4);
    CHECK(d.equal_dims_certified);
    CHECK(d.log2_sector_dim == 2);
}

TEST_CASE("one ring band algebra is contaminated by the open boundary") {
    // With a single face ring the band contains both circles of every face,
    // so pairs X(inner_i) X(outer_i) commute with all terms without being
    // surrounding products. The class group then mixes boundary junk with
    // the flux loops and stops being abelian. Contrast with the washer
    // above, whose band keeps one face ring of standoff on each side.
    RingFragment f = make_ring_fragment(4, 1);
    LogicalAlgebra la = logical_algebra(f.model, f.annulus_region());
    CHECK(la.trivial_rank == 4);
    CHECK(la.class_rank == 9);
    CHECK_FALSE(la.abelian);

    SectorDecomposition d = sector_decomposition(f.model, f.annulus_region());
    CHECK(d.log2_total_dim == 8);
    CHECK_FALSE(d.equal_dims_certified);
}

TEST_CASE("fragment conditional mutual information matches the invariant") {
    RingFragment f = make_ring_fragment(4, 1);
    Tripartition parts = f.tripartition();

    // Vacuum block of the fragment: the terms plus both band loops. This is
    // the mixed state the bound is stated for; entropies stay countable.
    std::vector<PauliWord> vac = f.model.terms;
    std::vector<size_t> ring0, rungs;
    for (int i = 0; i < f.n; ++i) {
        ring0.push_back(size_t(f.ring_edge(0, i)));
        rungs.push_back(size_t(f.rung_edge(1, i)));
    }
    vac.push_back(PauliWord::from_support(f.num_qubits(), 'Z', ring0));
    vac.push_back(PauliWord::from_support(f.num_qubits(), 'X', rungs));
    auto check = check_group(vac);
    CHECK(check.all_hermitian);
    CHECK(check.all_commuting);
    CHECK_FALSE(check.contains_minus_identity);
    CHECK(check.rank == vac.size());

    BitVec xy = parts.x, yz = parts.y;
    xy.xor_with(parts.y);
    yz.xor_with(parts.z);
    CHECK(entropy_bits(vac, xy) == 7);
    CHECK(entropy_bits(vac, yz) == 7);
    CHECK(entropy_bits(vac, parts.y) == 6);
    BitVec band = f.annulus_region();
    CHECK(entropy_bits(vac, band) == 6);
    CHECK(cmi_bits(vac, parts) == 2);

    // Against the surrounding-terms average the gap is exactly the
    // invariant: S(average on band) - S(vacuum on band) = 8 - 6.
    CHECK(entropy_bits(f.model.terms, band) == 8);
}
