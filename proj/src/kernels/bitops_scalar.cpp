#include "tqi/bitvec.hpp"

#include <bit>

namespace tqi {
namespace {

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t nwords) {
    for (size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

uint64_t popcount_scalar(const uint64_t* a, size_t nwords) {
    uint64_t total = 0;
    for (size_t i = 0; i < nwords; ++i) total += std::popcount(a[i]);
    return total;
}

uint64_t and_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t nwords) {
    uint64_t total = 0;
    for (size_t i = 0; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

}  // namespace

const BitKernels& scalar_kernels() {
    static const BitKernels k{xor_into_scalar, popcount_scalar, and_popcount_scalar, "scalar"};
    return k;
}

}  // namespace tqi
