#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tqi/qdouble.hpp"

using namespace tqi;

namespace {

std::vector<std::int64_t> squared_dims(const AnyonTable& t) {
    std::vector<std::int64_t> out;
    for (const auto& a : t.anyons) out.push_back(a.quantum_dim * a.quantum_dim);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("the group zoo validates and multiplies correctly") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
        auto g = group_by_name(name);
        validate_group(g);
        CHECK(g.at(g.identity, g.identity) == g.identity);
    }
    CHECK(group_by_name("q8").order == 8);
    CHECK_THROWS_AS(group_by_name("E8"), std::invalid_argument);

    // S3 is non-abelian, Z2xZ2 is abelian.
    auto s3 = symmetric3();
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian &= s3.at(a, b) == s3.at(b, a);
    CHECK_FALSE(abelian);

    auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
    validate_group(v4);
    for (int a = 0; a < 4; ++a) CHECK(v4.at(a, a) == v4.identity);

    auto broken = cyclic_group(3);
    broken.mul[4] = 0;
    CHECK_THROWS_AS(validate_group(broken), std::invalid_argument);
}

TEST_CASE("conjugacy classes and centralizers have the textbook shapes") {
    auto check_classes = [](const FiniteGroup& g, std::vector<size_t> expected_sizes) {
        auto classes = conjugacy_classes(g);
        REQUIRE(classes.size() == expected_sizes.size());
        CHECK(classes[0].rep == g.identity);
        CHECK(classes[0].elements.size() == 1);
        std::vector<size_t> sizes;
        size_t total = 0;
        for (const auto& c : classes) {
            sizes.push_back(c.elements.size());
            total += c.elements.size();
        }
        CHECK(total == size_t(g.order));
        std::sort(sizes.begin(), sizes.end());
        std::sort(expected_sizes.begin(), expected_sizes.end());
        CHECK(sizes == expected_sizes);
    };
    check_classes(cyclic_group(2), {1, 1});
    check_classes(cyclic_group(4), {1, 1, 1, 1});
    check_classes(symmetric3(), {1, 2, 3});
    check_classes(dihedral4(), {1, 1, 2, 2, 2});
    check_classes(quaternion8(), {1, 1, 2, 2, 2});

    // Centralizer orders: |C| * |Z| = |G|.
    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
        auto g = group_by_name(name);
        for (const auto& c : conjugacy_classes(g)) {
            auto z = centralizer_subgroup(g, c.rep);
            validate_group(z);
            CHECK(size_t(z.order) * c.elements.size() == size_t(g.order));
        }
    }
}

TEST_CASE("irreducible degrees come out of the class algebra") {
    CHECK(irrep_dimensions(cyclic_group(1)) == std::vector<int>{1});
    CHECK(irrep_dimensions(cyclic_group(4)) == std::vector<int>{1, 1, 1, 1});
    CHECK(irrep_dimensions(direct_product(cyclic_group(2), cyclic_group(2))) ==
          std::vector<int>{1, 1, 1, 1});
    CHECK(irrep_dimensions(symmetric3()) == std::vector<int>{1, 1, 2});
    CHECK(irrep_dimensions(dihedral4()) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(irrep_dimensions(quaternion8()) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(irrep_dimensions(direct_product(symmetric3(), cyclic_group(2))) ==
          std::vector<int>{1, 1, 1, 1, 2, 2});

    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
        auto g = group_by_name(name);
        std::int64_t sum = 0;
        for (int d : irrep_dimensions(g)) sum += std::int64_t(d) * d;
        CHECK(sum == g.order);
    }
}

TEST_CASE("double models have the expected excitation tables") {
    auto count = [](const char* name) { return double_model_anyons(group_by_name(name)).anyons.size(); };
    CHECK(count("Z2") == 4);
    CHECK(count("Z3") == 9);
    CHECK(count("Z4") == 16);
    CHECK(count("Z2xZ2") == 16);
    CHECK(count("S3") == 8);
    CHECK(count("D4") == 22);
    CHECK(count("Q8") == 22);

    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
        auto g = group_by_name(name);
        auto t = double_model_anyons(g);
        CHECK(t.total_dim_sq == std::int64_t(g.order) * g.order);
        CHECK(std::abs(t.invariant_bits - 2.0 * std::log2(double(g.order))) < 1e-12);
        double psum = 0.0;
        for (double p : t.probabilities) psum += p;
        CHECK(std::abs(psum - 1.0) < 1e-12);
        // The vacuum: trivial class, trivial representation, dimension one.
        CHECK(t.anyons[0].class_index == 0);
        CHECK(t.anyons[0].quantum_dim == 1);
    }

    auto s3 = double_model_anyons(symmetric3());
    CHECK(squared_dims(s3) == std::vector<std::int64_t>{1, 1, 4, 4, 4, 4, 9, 9});
    CHECK(std::abs(s3.invariant_bits - 5.169925001442312) < 1e-12);
}

TEST_CASE("thin annulus sector dimensions fill the space exactly") {
    auto dims = thin_annulus_dims(symmetric3(), 2, 2);
    CHECK(u128_str(dims.total) == "1296");
    CHECK(u128_str(dims.vacuum) == "36");
    std::vector<u128> sectors = dims.sectors;
    std::sort(sectors.begin(), sectors.end());
    std::vector<std::string> sorted;
    for (u128 s : sectors) sorted.push_back(u128_str(s));
    CHECK(sorted == std::vector<std::string>{"36", "36", "144", "144", "144", "144", "324", "324"});

    // The invariant is the log ratio of total to vacuum.
    CHECK(std::abs(std::log2(double(dims.total) / double(dims.vacuum)) -
                   double_model_anyons(symmetric3()).invariant_bits) < 1e-12);

    auto tiny = thin_annulus_dims(cyclic_group(2), 1, 1);
    CHECK(u128_str(tiny.total) == "4");
    CHECK(u128_str(tiny.vacuum) == "1");
    CHECK(tiny.sectors.size() == 4);

    CHECK_THROWS_AS(thin_annulus_dims(dihedral4(), 22, 22), std::overflow_error);
    CHECK_THROWS_AS(thin_annulus_dims(symmetric3(), 0, 2), std::invalid_argument);
}

TEST_CASE("decimal rendering of wide dimensions") {
    CHECK(u128_str(0) == "0");
    CHECK(u128_str(1296) == "1296");
    u128 big = 1;
    for (int i = 0; i < 100; ++i) big *= 2;
    CHECK(u128_str(big) == "1267650600228229401496703205376");
}
