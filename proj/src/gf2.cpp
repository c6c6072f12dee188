#include "tqi/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqi {

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVec BitMatrix::row(size_t r) const {
    BitVec v(cols_);
    std::copy(row_ptr(r), row_ptr(r) + wpr_, v.words());
    return v;
}

void BitMatrix::set_row(size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row size mismatch");
    std::copy(v.words(), v.words() + wpr_, row_ptr(r));
}

void BitMatrix::xor_row(size_t dst, size_t src) {
    active_kernels().xor_into(row_ptr(dst), row_ptr(src), wpr_);
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t w = 0; w < wpr_; ++w) {
            uint64_t word = data_[r * wpr_ + w];
            while (word) {
                unsigned bit = __builtin_ctzll(word);
                word &= word - 1;
                t.set(w * 64 + bit, r, true);
            }
        }
    return t;
}

std::vector<size_t> BitMatrix::reduce() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t pivot = r;
        while (pivot < rows_ && !get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        swap_rows(r, pivot);
        for (size_t i = 0; i < rows_; ++i)
            if (i != r && get(i, c)) xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t BitMatrix::rank() const {
    BitMatrix copy = *this;
    return copy.reduce().size();
}

std::vector<BitVec> BitMatrix::kernel_basis() const {
    BitMatrix m = *this;
    std::vector<size_t> pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(cols_);
        v.set(f, true);
        // Pivot row i has its pivot at pivots[i]; the free column's entry in
        // that row feeds back into the pivot variable.
        for (size_t i = 0; i < pivots.size(); ++i)
            if (m.get(i, f)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> BitMatrix::solve(const BitVec& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("BitMatrix::solve rhs size mismatch");
    BitMatrix aug(rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t w = 0; w < wpr_; ++w) aug.data_[r * aug.wpr_ + w] = data_[r * wpr_ + w];
        // cols_ may not be word-aligned, so set the augmented bit explicitly.
        aug.set(r, cols_, rhs.get(r));
    }
    std::vector<size_t> pivots = aug.reduce();
    // Inconsistent iff some pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    BitVec x(cols_);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (aug.get(i, cols_)) x.set(pivots[i], true);
    return x;
}

}  // namespace tqi
