#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tqi/bitvec.hpp"
#include "tqi/model.hpp"
#include "tqi/pauli.hpp"

namespace tqi {

// Thrown when a dense computation would exceed the desk-scale budget this
// machinery is sized for; callers map it to a dedicated exit code.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- state vectors -------------------------------------------------------

// w |v> for a real word (phase +1 or -1, no Y content). Amplitude arrays are
// indexed by basis bitstrings, qubit q at bit q.
Eigen::VectorXd apply_word(const PauliWord& w, const Eigen::VectorXd& v);

// v <- product of (1 + g)/2 over gens, i.e. the joint +1 projector.
void project_onto_group(const std::vector<PauliWord>& gens, Eigen::VectorXd& v);

// Orthonormal basis of the joint +1 eigenspace, found by projecting a seeded
// random batch and verified by projector residuals. Columns span the ground
// space; throws ResourceLimit when the space would not fit in memory and
// logic_error when the spectral dimension disagrees with the group rank.
Eigen::MatrixXd ground_basis(const std::vector<PauliWord>& gens, size_t n_qubits,
                             std::uint64_t seed);

// --- density matrices ----------------------------------------------------

// Reduction of a weighted mixture of pure state columns onto the kept
// qubits. Empty weights mean an even mixture.
Eigen::MatrixXd reduced_density(const Eigen::MatrixXd& states, std::vector<double> weights,
                                const BitVec& keep);

// Reduction of the group state (normalized joint +1 projector) of `gens`
// onto the kept qubits, materialized directly from the signed supported
// subgroup: 2^-|keep| * sum of sign(g) g over elements supported inside.
// Works for any system size; only the kept block is ever dense.
Eigen::MatrixXd group_rdm(const std::vector<PauliWord>& gens, const BitVec& keep);

// --- spectral functionals (base-2 logarithms) ----------------------------

double entropy_bits(const Eigen::MatrixXd& rho);
double entropy_bits(const Eigen::MatrixXcd& rho);

// S(rho || sigma); +infinity when the support of rho leaks out of sigma's.
double relative_entropy_bits(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma);
double relative_entropy_bits(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

// D_max(rho || sigma) = log2 of the largest eigenvalue of
// sigma^-1/2 rho sigma^-1/2 on sigma's support; +infinity on support leak.
double max_relative_entropy_bits(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma);

// --- exact dimension counting --------------------------------------------

// log2 of the rank of the joint +1 projector of `gens`, computed by the
// exact trace formula: enumerate every product over subsets of the
// generating list (dependent generators welcome) and count signed identity
// occurrences. Throws if the projector vanishes (contradictory signs).
std::int64_t log2_projector_rank_exact(const std::vector<PauliWord>& gens, size_t n_qubits);

// --- model-level checks ----------------------------------------------------

// Ground-space indistinguishability under single-qubit observables: for
// random Hermitian O on random single qubits, compress Pi O Pi to the ground
// basis and measure the distance from the best multiple of the identity.
struct Tqo1Report {
    double max_deviation = 0.0;
    int trials = 0;
};

Tqo1Report verify_tqo1(const StabilizerModel& model, std::uint64_t seed, int trials);

// Random Hermitian single-qubit observable applied to a complex state.
Eigen::VectorXcd apply_single_qubit(const Eigen::Matrix2cd& op, size_t qubit,
                                    const Eigen::VectorXcd& v);

// Haar-ish random unitary on `dim` levels (eigenframe of a random Hermitian
// with random phases); used for invariance spot checks.
Eigen::MatrixXcd random_unitary(size_t dim, std::mt19937_64& rng);

// Conjugate a density matrix on the kept block by a unitary acting on two of
// its qubits (positions within the block's bit order).
Eigen::MatrixXcd conjugate_on_qubits(const Eigen::MatrixXcd& rho, const Eigen::Matrix4cd& u,
                                     size_t qa, size_t qb);

}  // namespace tqi
