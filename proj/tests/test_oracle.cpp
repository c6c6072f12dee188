#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "tqi/model.hpp"
#include "tqi/oracle.hpp"
#include "tqi/rng.hpp"
#include "tqi/sectors.hpp"

using namespace tqi;

namespace {

BitVec mask_of(size_t n, std::initializer_list<size_t> bits) {
    BitVec m(n);
    for (size_t b : bits) m.set(b, true);
    return m;
}

double frobenius(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).norm();
}

}  // namespace

TEST_CASE("pauli words act on amplitude vectors with exact signs") {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
    v[0] = 1.0;  // |00>

    auto xx = PauliWord::from_support(2, 'X', {0, 1});
    Eigen::VectorXd w = apply_word(xx, v);
    CHECK(w[3] == 1.0);
    CHECK(w.cwiseAbs().sum() == 1.0);

    // Z picks up a sign exactly on set bits of its support.
    auto z0 = PauliWord::single(2, 'Z', 0);
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(4);
    e1[1] = 1.0;  // qubit 0 set
    CHECK(apply_word(z0, e1)[1] == -1.0);
    CHECK(apply_word(z0, v)[0] == 1.0);

    // A negated word flips the amplitude sign globally.
    CHECK(apply_word(xx.negated(), v)[3] == -1.0);

    // Words with imaginary phase cannot act on real amplitudes.
    auto y0 = PauliWord::single(2, 'Y', 0);
    CHECK_THROWS_AS(apply_word(y0, v), std::invalid_argument);

    CHECK_THROWS_AS(apply_word(PauliWord::single(3, 'X', 0), v), std::invalid_argument);
}

TEST_CASE("projecting onto the bell group produces the bell state") {
    std::vector<PauliWord> gens = {PauliWord::from_support(2, 'X', {0, 1}),
                                   PauliWord::from_support(2, 'Z', {0, 1})};
    std::mt19937_64 rng(5);
    Eigen::VectorXd v(4);
    for (int i = 0; i < 4; ++i) v[i] = gaussian(rng);
    project_onto_group(gens, v);
    for (const auto& g : gens) CHECK((apply_word(g, v) - v).lpNorm<Eigen::Infinity>() < 1e-12);

    Eigen::MatrixXd basis = ground_basis(gens, 2, 7);
    REQUIRE(basis.cols() == 1);
    CHECK(std::abs(basis.col(0).norm() - 1.0) < 1e-12);
    CHECK(std::abs(basis(0, 0) * basis(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(basis(3, 0) * basis(3, 0) - 0.5) < 1e-12);
    CHECK(basis(0, 0) * basis(3, 0) > 0.0);
    CHECK(std::abs(basis(1, 0)) < 1e-12);
    CHECK(std::abs(basis(2, 0)) < 1e-12);

    // One half of a bell pair is maximally mixed.
    Eigen::MatrixXd half = reduced_density(basis, {}, mask_of(2, {0}));
    CHECK(std::abs(half.trace() - 1.0) < 1e-12);
    CHECK(std::abs(entropy_bits(half) - 1.0) < 1e-10);
}

TEST_CASE("ground space dimensions match the group rank on small tori") {
    TorusLattice lat22(2, 2);
    auto m22 = toric_model(lat22);
    Eigen::MatrixXd b22 = ground_basis(m22.terms, m22.n_qubits, 1);
    CHECK(b22.cols() == 4);
    // The subset trace formula handles the two dependencies among the eight
    // terms (the products of all stars and of all plaquettes are identity).
    CHECK(log2_projector_rank_exact(m22.terms, m22.n_qubits) == 2);

    TorusLattice lat23(2, 3);
    auto m23 = toric_model(lat23);
    Eigen::MatrixXd b23 = ground_basis(m23.terms, m23.n_qubits, 2);
    CHECK(b23.cols() == 4);
    CHECK(log2_projector_rank_exact(m23.terms, m23.n_qubits) == 2);

    // Polarized loop pairs pin single states.
    auto choice = toric_loop_choice(lat22);
    auto group = state_group(m22, choice);
    CHECK(ground_basis(group, m22.n_qubits, 3).cols() == 1);
    CHECK(log2_projector_rank_exact(group, m22.n_qubits) == 0);
}

TEST_CASE("the subset trace formula splits the fragment into four flux blocks") {
    auto f = make_ring_fragment(3, 1);
    const size_t nq = size_t(f.num_qubits());
    CHECK(log2_projector_rank_exact(f.model.terms, nq) == 6);

    auto wz = PauliWord::from_support(
        nq, 'Z', {size_t(f.ring_edge(0, 0)), size_t(f.ring_edge(0, 1)), size_t(f.ring_edge(0, 2))});
    auto wx = PauliWord::from_support(
        nq, 'X', {size_t(f.rung_edge(1, 0)), size_t(f.rung_edge(1, 1)), size_t(f.rung_edge(1, 2))});

    // All four joint flux sectors have equal dimension and exhaust the space.
    for (bool flip_z : {false, true}) {
        for (bool flip_x : {false, true}) {
            auto gens = f.model.terms;
            gens.push_back(flip_z ? wz.negated() : wz);
            gens.push_back(flip_x ? wx.negated() : wx);
            CHECK(log2_projector_rank_exact(gens, nq) == 4);
        }
    }

    // Contradictory signs make the projector vanish.
    auto z0 = PauliWord::single(1, 'Z', 0);
    CHECK_THROWS_AS(log2_projector_rank_exact({z0, z0.negated()}, 1), std::invalid_argument);
}

TEST_CASE("group reduced densities match the dense partial trace") {
    auto f = make_ring_fragment(3, 1);
    const size_t nq = size_t(f.num_qubits());
    const BitVec band = f.annulus_region();
    REQUIRE(band.popcount() == 9);

    auto choice = fragment_entangled_choice(f);
    auto group = state_group(f.model, choice);

    Eigen::MatrixXd pure = ground_basis(group, nq, 7);
    REQUIRE(pure.cols() == 1);
    Eigen::MatrixXd rho_dense = reduced_density(pure, {}, band);
    Eigen::MatrixXd rho_group = group_rdm(group, band);
    CHECK(frobenius(rho_dense, rho_group) < 1e-10);
    CHECK(std::abs(rho_group.trace() - 1.0) < 1e-12);
    CHECK(std::abs(entropy_bits(rho_group) - 4.0) < 1e-9);

    auto surrounding = surrounding_terms(f.model, band);
    Eigen::MatrixXd mixed = ground_basis(surrounding, nq, 11);
    Eigen::MatrixXd tau_dense = reduced_density(mixed, {}, band);
    Eigen::MatrixXd tau_group = group_rdm(surrounding, band);
    CHECK(frobenius(tau_dense, tau_group) < 1e-10);
    CHECK(std::abs(entropy_bits(tau_group) - 6.0) < 1e-9);

    // The dense route reproduces the counting route for the invariant.
    CHECK(std::abs(relative_entropy_bits(rho_group, tau_group) - 2.0) < 1e-9);
    CHECK(std::abs(max_relative_entropy_bits(rho_group, tau_group) - 2.0) < 1e-9);
    CHECK(invariant_bits(f.model, choice, band) == 2);
}

TEST_CASE("washer reduced states reproduce the pinned invariant") {
    auto f = make_ring_fragment(2, 2);
    const size_t nq = size_t(f.num_qubits());
    const BitVec band = f.annulus_region();

    auto choice = fragment_pinned_choice(f);
    auto group = state_group(f.model, choice);

    Eigen::MatrixXd pure = ground_basis(group, nq, 13);
    REQUIRE(pure.cols() == 1);
    Eigen::MatrixXd rho = group_rdm(group, band);
    CHECK(frobenius(reduced_density(pure, {}, band), rho) < 1e-10);
    CHECK(std::abs(entropy_bits(rho) - 2.0) < 1e-9);

    Eigen::MatrixXd tau = group_rdm(surrounding_terms(f.model, band), band);
    CHECK(std::abs(entropy_bits(tau) - 4.0) < 1e-9);
    CHECK(std::abs(relative_entropy_bits(rho, tau) - 2.0) < 1e-9);
    CHECK(invariant_bits(f.model, choice, band) == 2);
}

TEST_CASE("relative entropy reports divergence exactly on support leaks") {
    Eigen::MatrixXd rho(2, 2), sigma(2, 2);
    rho << 1, 0, 0, 0;
    sigma << 0, 0, 0, 1;
    CHECK(std::isinf(relative_entropy_bits(rho, sigma)));

    Eigen::MatrixXcd rc = rho.cast<std::complex<double>>();
    Eigen::MatrixXcd sc = sigma.cast<std::complex<double>>();
    CHECK(std::isinf(relative_entropy_bits(rc, sc)));

    Eigen::MatrixXd half = Eigen::MatrixXd::Identity(2, 2) / 2.0;
    CHECK(std::abs(relative_entropy_bits(rho, half) - 1.0) < 1e-12);
    CHECK(std::abs(max_relative_entropy_bits(rho, half) - 1.0) < 1e-12);
    CHECK(std::abs(relative_entropy_bits(half, half)) < 1e-12);
}

TEST_CASE("entropies are basis independent under random unitaries") {
    std::mt19937_64 rng(17);
    Eigen::MatrixXcd u = random_unitary(8, rng);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-10);

    Eigen::VectorXd spectrum(8);
    spectrum << 0.4, 0.3, 0.1, 0.1, 0.05, 0.05, 0.0, 0.0;
    Eigen::MatrixXcd rho = u * spectrum.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    double expected = 0.0;
    for (int i = 0; i < 8; ++i)
        if (spectrum[i] > 0) expected -= spectrum[i] * std::log2(spectrum[i]);
    CHECK(std::abs(entropy_bits(rho) - expected) < 1e-10);
}

TEST_CASE("single qubit and two qubit gates embed correctly") {
    Eigen::Matrix2cd had;
    had << 1, 1, 1, -1;
    had /= std::sqrt(2.0);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v[0] = 1.0;
    Eigen::VectorXcd w = apply_single_qubit(had, 1, v);
    CHECK(std::abs(w[0] - std::complex<double>(1 / std::sqrt(2.0))) < 1e-14);
    CHECK(std::abs(w[2] - std::complex<double>(1 / std::sqrt(2.0))) < 1e-14);

    // On a two-qubit system with (qa, qb) = (0, 1) the embedded gate is the
    // matrix itself; conjugation must match the direct product.
    std::mt19937_64 rng(23);
    Eigen::MatrixXcd u4 = random_unitary(4, rng);
    Eigen::Matrix4cd u = u4;
    Eigen::VectorXcd psi(4);
    for (int i = 0; i < 4; ++i) psi[i] = std::complex<double>(gaussian(rng), gaussian(rng));
    psi.normalize();
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    CHECK((conjugate_on_qubits(rho, u, 0, 1) - u * rho * u.adjoint()).norm() < 1e-12);

    // Swapping the qubit roles is conjugation by SWAP.
    Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    Eigen::Matrix4cd us = swap * u * swap;
    CHECK((conjugate_on_qubits(rho, u, 1, 0) - us * rho * us.adjoint()).norm() < 1e-12);
}

TEST_CASE("local unitaries leave the band relative entropy unchanged") {
    auto f = make_ring_fragment(2, 1);
    const BitVec band = f.annulus_region();
    REQUIRE(band.popcount() == 6);

    auto group = state_group(f.model, fragment_entangled_choice(f));
    Eigen::MatrixXd rho = group_rdm(group, band);
    Eigen::MatrixXd tau = group_rdm(surrounding_terms(f.model, band), band);
    double base = relative_entropy_bits(rho, tau);
    CHECK(std::abs(base - 2.0) < 1e-9);

    // Conjugating both states by any unitary on band qubits preserves the
    // relative entropy; this exercises the complex eigensolver path on
    // states far from the stabilizer basis.
    std::mt19937_64 rng(31);
    Eigen::Matrix4cd u = random_unitary(4, rng);
    Eigen::MatrixXcd rho_c = conjugate_on_qubits(rho.cast<std::complex<double>>(), u, 0, 3);
    Eigen::MatrixXcd tau_c = conjugate_on_qubits(tau.cast<std::complex<double>>(), u, 0, 3);
    CHECK(std::abs(relative_entropy_bits(rho_c, tau_c) - base) < 1e-8);
    CHECK(std::abs(entropy_bits(rho_c) - entropy_bits(rho)) < 1e-8);
}

TEST_CASE("explicit mixtures and argument validation") {
    // Even mixture of |0> and |1> is maximally mixed.
    Eigen::MatrixXd states(2, 2);
    states << 1, 0, 0, 1;
    Eigen::MatrixXd rho = reduced_density(states, {0.5, 0.5}, mask_of(1, {0}));
    CHECK(std::abs(entropy_bits(rho) - 1.0) < 1e-12);

    CHECK_THROWS_AS(reduced_density(states, {1.0}, mask_of(1, {0})), std::invalid_argument);
    CHECK_THROWS_AS(reduced_density(states, {}, mask_of(2, {0})), std::invalid_argument);

    // Resource caps are enforced before allocation.
    CHECK_THROWS_AS(ground_basis({}, 23, 1), ResourceLimit);
    BitVec wide(30);
    for (size_t i = 0; i < 14; ++i) wide.set(i, true);
    CHECK_THROWS_AS(group_rdm({PauliWord::identity(30)}, wide), ResourceLimit);

    // A generating set whose signs collapse the space is refused.
    auto z0 = PauliWord::single(1, 'Z', 0);
    CHECK_THROWS_AS(ground_basis({z0, z0.negated()}, 1, 5), std::logic_error);
}

TEST_CASE("single site operators cannot move between ground states") {
    TorusLattice lat22(2, 2);
    auto r22 = verify_tqo1(toric_model(lat22), 11, 12);
    CHECK(r22.trials == 12);
    CHECK(r22.max_deviation < 1e-9);

    TorusLattice lat23(2, 3);
    auto r23 = verify_tqo1(toric_model(lat23), 19, 12);
    CHECK(r23.max_deviation < 1e-9);
}
