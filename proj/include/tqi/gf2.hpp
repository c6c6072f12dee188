#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tqi/bitvec.hpp"

namespace tqi {

// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix from_rows(const std::vector<BitVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(size_t r, size_t c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    BitVec row(size_t r) const;
    void set_row(size_t r, const BitVec& v);
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    BitMatrix transposed() const;

    // In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<size_t> reduce();

    size_t rank() const;

    // Basis of { x : A x = 0 }.
    std::vector<BitVec> kernel_basis() const;

    // One solution of A x = b, if consistent.
    std::optional<BitVec> solve(const BitVec& rhs) const;

private:
    uint64_t* row_ptr(size_t r) { return data_.data() + r * wpr_; }
    const uint64_t* row_ptr(size_t r) const { return data_.data() + r * wpr_; }

    size_t rows_, cols_, wpr_;
    std::vector<uint64_t> data_;
};

}  // namespace tqi
