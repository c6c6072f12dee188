#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tqi/bitvec.hpp"
#include "tqi/gf2.hpp"

namespace tqi {

// An n-qubit Pauli operator stored as i^k * X^x * Z^z with k mod 4 and
// packed x/z bit vectors. Multiplication tracks the phase exactly.
class PauliWord {
public:
    PauliWord() : n_(0), k_(0) {}
    explicit PauliWord(size_t n) : n_(n), x_(n), z_(n), k_(0) {}

    static PauliWord identity(size_t n) { return PauliWord(n); }
    // letter is 'X', 'Y' or 'Z'; Y contributes i*X*Z so the word stays Hermitian.
    static PauliWord single(size_t n, char letter, size_t qubit);
    static PauliWord from_support(size_t n, char letter, const std::vector<size_t>& qubits);
    // Hermitian word with the given bit pattern; the phase is the smallest
    // exponent making i^k X^x Z^z self-adjoint.
    static PauliWord from_xz(const BitVec& x, const BitVec& z);

    size_t num_qubits() const { return n_; }
    const BitVec& x() const { return x_; }
    const BitVec& z() const { return z_; }
    unsigned phase_k() const { return k_; }

    bool is_identity() const { return !x_.any() && !z_.any(); }
    bool is_hermitian() const { return (k_ & 1u) == (x_.and_popcount(z_) & 1u); }
    // For a Hermitian word with trivial x/z this distinguishes +I from -I.
    int identity_sign() const { return k_ == 0 ? +1 : -1; }

    size_t weight() const;
    BitVec support() const;
    bool supported_in(const BitVec& qubit_mask) const;

    bool commutes_with(const PauliWord& other) const;

    PauliWord operator*(const PauliWord& other) const;

    // The same word with its overall sign flipped.
    // The word multiplied by i^count.
    PauliWord times_i(unsigned count) const {
        PauliWord w = *this;
        w.k_ = (k_ + count) & 3u;
        return w;
    }

    PauliWord negated() const {
        PauliWord w = *this;
        w.k_ = (k_ + 2) & 3u;
        return w;
    }

    // Symplectic vector [x | z] of length 2n.
    BitVec symplectic() const;

    // Restriction to a qubit subset (bits outside the mask dropped); keeps
    // the phase, so it is only meaningful when the word is supported there.
    PauliWord restricted_to(const BitVec& qubit_mask) const;

    bool operator==(const PauliWord& other) const {
        return n_ == other.n_ && k_ == other.k_ && x_ == other.x_ && z_ == other.z_;
    }

    // Text form like "-X3·Z7"; the identity prints as "I".
    std::string str() const;
    static PauliWord parse(const std::string& text, size_t n);

private:
    size_t n_;
    BitVec x_, z_;
    unsigned k_;  // phase exponent, word = i^k X^x Z^z
};

// Diagnostics for a generating set intended as a stabilizer-style group.
struct GroupCheck {
    bool all_hermitian = true;
    bool all_commuting = true;
    bool contains_minus_identity = false;
    size_t rank = 0;
};

GroupCheck check_group(const std::vector<PauliWord>& gens);

// GF(2) rank of the generating set (phases ignored).
size_t group_rank(const std::vector<PauliWord>& gens);

// Independent generators of { g in <gens> : supp(g) inside qubit_mask }.
// Requires mutually commuting Hermitian generators; signs are exact.
std::vector<PauliWord> subgroup_supported_in(const std::vector<PauliWord>& gens,
                                             const BitVec& qubit_mask);

// Entropy in bits of the reduced state of the group state of `gens` on the
// region: |R| - rank of the supported subgroup. Valid for any commuting
// Hermitian generating set without -I (pure or mixed group state).
int64_t entropy_bits(const std::vector<PauliWord>& gens, const BitVec& qubit_mask);

}  // namespace tqi
