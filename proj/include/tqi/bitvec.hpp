#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tqi {

// Raw word-level kernels over packed bit arrays. Two implementations ship:
// a portable scalar one and an AVX2 one compiled in its own translation
// unit. Which one runs is decided once at startup from cpuid.
struct BitKernels {
    void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t nwords);
    uint64_t (*popcount)(const uint64_t* a, size_t nwords);
    uint64_t (*and_popcount)(const uint64_t* a, const uint64_t* b, size_t nwords);
    const char* name;
};

const BitKernels& scalar_kernels();
const BitKernels& avx2_kernels();   // callable only if cpu_has_avx2()
bool cpu_has_avx2();

// The kernel set selected for this machine.
const BitKernels& active_kernels();

// Fixed-length bit vector packed into 64-bit words. Unused high bits of the
// last word are kept zero so popcounts and comparisons work wordwise.
class BitVec {
public:
    BitVec() : nbits_(0) {}
    explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    size_t size() const { return nbits_; }
    size_t word_count() const { return words_.size(); }
    const uint64_t* words() const { return words_.data(); }
    uint64_t* words() { return words_.data(); }

    bool get(size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(size_t i, bool v) {
        check_index(i);
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(size_t i) {
        check_index(i);
        words_[i >> 6] ^= uint64_t(1) << (i & 63);
    }

    void clear() { words_.assign(words_.size(), 0); }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    size_t popcount() const { return active_kernels().popcount(words_.data(), words_.size()); }

    void xor_with(const BitVec& other) {
        check_same_size(other);
        active_kernels().xor_into(words_.data(), other.words_.data(), words_.size());
    }

    size_t and_popcount(const BitVec& other) const {
        check_same_size(other);
        return active_kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
    }

    bool and_parity(const BitVec& other) const { return and_popcount(other) & 1u; }

    bool operator==(const BitVec& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }
    bool operator!=(const BitVec& other) const { return !(*this == other); }

private:
    void check_index(size_t i) const {
        if (i >= nbits_) throw std::out_of_range("BitVec index out of range");
    }
    void check_same_size(const BitVec& other) const {
        if (nbits_ != other.nbits_) throw std::invalid_argument("BitVec size mismatch");
    }

    size_t nbits_;
    std::vector<uint64_t> words_;
};

}  // namespace tqi
