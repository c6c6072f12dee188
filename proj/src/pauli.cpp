#include "tqi/pauli.hpp"

#include <cctype>
#include <stdexcept>

namespace tqi {

PauliWord PauliWord::single(size_t n, char letter, size_t qubit) {
    PauliWord w(n);
    if (qubit >= n) throw std::out_of_range("PauliWord::single qubit out of range");
    switch (letter) {
        case 'X': w.x_.set(qubit, true); break;
        case 'Z': w.z_.set(qubit, true); break;
        case 'Y':
            w.x_.set(qubit, true);
            w.z_.set(qubit, true);
            w.k_ = 1;
            break;
        default: throw std::invalid_argument("PauliWord::single expects X, Y or Z");
    }
    return w;
}

PauliWord PauliWord::from_support(size_t n, char letter, const std::vector<size_t>& qubits) {
    PauliWord w = identity(n);
    for (size_t q : qubits) w = w * single(n, letter, q);
    return w;
}

PauliWord PauliWord::from_xz(const BitVec& x, const BitVec& z) {
    if (x.size() != z.size()) throw std::invalid_argument("PauliWord::from_xz size mismatch");
    PauliWord w(x.size());
    w.x_ = x;
    w.z_ = z;
    w.k_ = x.and_popcount(z) & 1u;
    return w;
}

size_t PauliWord::weight() const {
    BitVec s = x_;
    // support = x OR z; xor then add back the intersection
    size_t overlap = x_.and_popcount(z_);
    s.xor_with(z_);
    return s.popcount() + overlap;
}

BitVec PauliWord::support() const {
    BitVec s(n_);
    for (size_t w = 0; w < s.word_count(); ++w)
        s.words()[w] = x_.words()[w] | z_.words()[w];
    return s;
}

bool PauliWord::supported_in(const BitVec& qubit_mask) const {
    if (qubit_mask.size() != n_) throw std::invalid_argument("mask size mismatch");
    for (size_t w = 0; w < qubit_mask.word_count(); ++w) {
        uint64_t outside = ~qubit_mask.words()[w];
        if ((x_.words()[w] | z_.words()[w]) & outside) return false;
    }
    return true;
}

bool PauliWord::commutes_with(const PauliWord& other) const {
    if (n_ != other.n_) throw std::invalid_argument("PauliWord size mismatch");
    return (x_.and_popcount(other.z_) + z_.and_popcount(other.x_)) % 2 == 0;
}

PauliWord PauliWord::operator*(const PauliWord& other) const {
    if (n_ != other.n_) throw std::invalid_argument("PauliWord size mismatch");
    PauliWord r(n_);
    // Moving X^x2 through Z^z1 costs (-1)^(z1.x2).
    r.k_ = (k_ + other.k_ + 2 * (z_.and_popcount(other.x_) & 1u)) & 3u;
    r.x_ = x_;
    r.x_.xor_with(other.x_);
    r.z_ = z_;
    r.z_.xor_with(other.z_);
    return r;
}

BitVec PauliWord::symplectic() const {
    BitVec v(2 * n_);
    for (size_t i = 0; i < n_; ++i) {
        if (x_.get(i)) v.set(i, true);
        if (z_.get(i)) v.set(n_ + i, true);
    }
    return v;
}

PauliWord PauliWord::restricted_to(const BitVec& qubit_mask) const {
    if (!supported_in(qubit_mask)) throw std::invalid_argument("word not supported in mask");
    size_t m = qubit_mask.popcount();
    PauliWord r(m);
    r.k_ = k_;
    size_t j = 0;
    for (size_t i = 0; i < n_; ++i) {
        if (!qubit_mask.get(i)) continue;
        if (x_.get(i)) r.x_.set(j, true);
        if (z_.get(i)) r.z_.set(j, true);
        ++j;
    }
    return r;
}

std::string PauliWord::str() const {
    // Letters absorb i per Y factor; the leftover phase becomes the prefix.
    size_t n_y = x_.and_popcount(z_);
    unsigned prefix = (k_ + 4 - (n_y & 3u)) & 3u;
    static const char* prefixes[4] = {"", "i", "-", "-i"};
    std::string out = prefixes[prefix];
    if (is_identity()) return out + "I";
    bool first = true;
    for (size_t q = 0; q < n_; ++q) {
        bool xb = x_.get(q), zb = z_.get(q);
        if (!xb && !zb) continue;
        if (!first) out += "·";
        first = false;
        out += xb ? (zb ? 'Y' : 'X') : 'Z';
        out += std::to_string(q);
    }
    return out;
}

PauliWord PauliWord::parse(const std::string& text, size_t n) {
    size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("PauliWord::parse: ") + why + " in '" + text + "'");
    };
    unsigned k = 0;
    if (pos < text.size() && text[pos] == '-') {
        k += 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        k += 1;
        ++pos;
    }
    PauliWord w = identity(n);
    w.k_ = k & 3u;
    if (pos < text.size() && text[pos] == 'I') {
        if (pos + 1 != text.size()) fail("trailing characters after I");
        return w;
    }
    BitVec seen(n);
    bool expect_factor = true;
    while (pos < text.size()) {
        // factors are separated by U+00B7
        if (!expect_factor) {
            if (text.compare(pos, 2, "·") != 0) fail("expected separator");
            pos += 2;
        }
        if (pos >= text.size()) fail("dangling separator");
        char letter = text[pos++];
        if (letter != 'X' && letter != 'Y' && letter != 'Z') fail("expected X, Y or Z");
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("missing qubit index");
        size_t q = std::stoul(text.substr(start, pos - start));
        if (q >= n) fail("qubit index out of range");
        if (seen.get(q)) fail("duplicate qubit");
        seen.set(q, true);
        w = w * single(n, letter, q);
        expect_factor = false;
    }
    if (expect_factor) fail("empty operator");
    return w;
}

GroupCheck check_group(const std::vector<PauliWord>& gens) {
    GroupCheck res;
    for (const auto& g : gens) {
        if (!g.is_hermitian()) res.all_hermitian = false;
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].commutes_with(gens[j])) res.all_commuting = false;
    res.rank = group_rank(gens);
    if (res.all_hermitian && res.all_commuting && !gens.empty()) {
        // Commuting Hermitian generators square to +I, so the sign of a
        // product depends GF(2)-linearly on the exponent vector: checking a
        // kernel basis of the symplectic matrix decides whether -I occurs.
        std::vector<BitVec> rows;
        rows.reserve(gens.size());
        for (const auto& g : gens) rows.push_back(g.symplectic());
        BitMatrix m = BitMatrix::from_rows(rows).transposed();
        for (const BitVec& lambda : m.kernel_basis()) {
            PauliWord prod = PauliWord::identity(gens[0].num_qubits());
            for (size_t i = 0; i < gens.size(); ++i)
                if (lambda.get(i)) prod = prod * gens[i];
            if (!prod.is_identity()) throw std::logic_error("kernel product not identity-shaped");
            if (prod.identity_sign() < 0) res.contains_minus_identity = true;
        }
    }
    return res;
}

size_t group_rank(const std::vector<PauliWord>& gens) {
    if (gens.empty()) return 0;
    std::vector<BitVec> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(g.symplectic());
    return BitMatrix::from_rows(rows).rank();
}

std::vector<PauliWord> subgroup_supported_in(const std::vector<PauliWord>& gens,
                                             const BitVec& qubit_mask) {
    if (gens.empty()) return {};
    size_t n = gens[0].num_qubits();
    if (qubit_mask.size() != n) throw std::invalid_argument("mask size mismatch");

    // Exponent vectors whose product is supported in the region form the
    // kernel of the restriction of the symplectic matrix to outside columns.
    std::vector<size_t> outside;
    for (size_t q = 0; q < n; ++q)
        if (!qubit_mask.get(q)) outside.push_back(q);

    BitMatrix restr(gens.size(), 2 * outside.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < outside.size(); ++j) {
            restr.set(i, 2 * j, gens[i].x().get(outside[j]));
            restr.set(i, 2 * j + 1, gens[i].z().get(outside[j]));
        }

    std::vector<PauliWord> result;
    std::vector<BitVec> kept_rows;
    size_t kept_rank = 0;
    for (const BitVec& lambda : restr.transposed().kernel_basis()) {
        PauliWord prod = PauliWord::identity(n);
        for (size_t i = 0; i < gens.size(); ++i)
            if (lambda.get(i)) prod = prod * gens[i];
        if (!prod.supported_in(qubit_mask)) throw std::logic_error("restriction kernel leaked support");
        if (prod.is_identity()) continue;  // a relation of the generating set
        // Keep only products that enlarge the span.
        kept_rows.push_back(prod.symplectic());
        size_t r = BitMatrix::from_rows(kept_rows).rank();
        if (r > kept_rank) {
            kept_rank = r;
            result.push_back(prod);
        } else {
            kept_rows.pop_back();
        }
    }
    return result;
}

int64_t entropy_bits(const std::vector<PauliWord>& gens, const BitVec& qubit_mask) {
    return static_cast<int64_t>(qubit_mask.popcount()) -
           static_cast<int64_t>(group_rank(subgroup_supported_in(gens, qubit_mask)));
}

}  // namespace tqi
