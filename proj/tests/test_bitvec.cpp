#include <random>

#include "doctest.h"
#include "tqi/bitvec.hpp"

using namespace tqi;

namespace {

std::vector<uint64_t> random_words(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> w(n);
    for (auto& x : w) x = rng();
    return w;
}

}  // namespace

TEST_CASE("bitvec basic get/set/flip") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK(!v.any());
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.get(0));
    CHECK(v.get(64));
    CHECK(v.get(129));
    CHECK(v.popcount() == 3);
    v.flip(64);
    CHECK(!v.get(64));
    CHECK(v.popcount() == 2);
    CHECK_THROWS_AS(v.get(130), std::out_of_range);
}

TEST_CASE("bitvec xor and and_popcount") {
    BitVec a(200), b(200);
    for (size_t i = 0; i < 200; i += 3) a.set(i, true);
    for (size_t i = 0; i < 200; i += 5) b.set(i, true);
    size_t both = 0;
    for (size_t i = 0; i < 200; i += 15) ++both;
    CHECK(a.and_popcount(b) == both);
    BitVec c = a;
    c.xor_with(b);
    for (size_t i = 0; i < 200; ++i) CHECK(c.get(i) == (a.get(i) != b.get(i)));
    BitVec wrong(100);
    CHECK_THROWS_AS(c.xor_with(wrong), std::invalid_argument);
}

TEST_CASE("scalar and avx2 kernels agree") {
    if (!cpu_has_avx2()) {
        MESSAGE("avx2 unavailable, equivalence test skipped");
        return;
    }
    const BitKernels& s = scalar_kernels();
    const BitKernels& v = avx2_kernels();
    // Odd word counts exercise the vector tail handling.
    for (size_t nwords : {size_t(1), size_t(3), size_t(4), size_t(7), size_t(16), size_t(33)}) {
        auto a = random_words(nwords, 1000 + nwords);
        auto b = random_words(nwords, 2000 + nwords);
        CHECK(s.popcount(a.data(), nwords) == v.popcount(a.data(), nwords));
        CHECK(s.and_popcount(a.data(), b.data(), nwords) ==
              v.and_popcount(a.data(), b.data(), nwords));
        auto d1 = a, d2 = a;
        s.xor_into(d1.data(), b.data(), nwords);
        v.xor_into(d2.data(), b.data(), nwords);
        CHECK(d1 == d2);
    }
}

TEST_CASE("active kernels pick a valid implementation") {
    const BitKernels& k = active_kernels();
    std::string name = k.name;
    CHECK((name == "scalar" || name == "avx2"));
    if (cpu_has_avx2()) CHECK(name == "avx2");
    auto a = random_words(9, 7);
    CHECK(k.popcount(a.data(), 9) == scalar_kernels().popcount(a.data(), 9));
}
