#include "tqi/oracle.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>

#include "tqi/rng.hpp"

namespace tqi {

namespace {

constexpr size_t kMaxVectorQubits = 22;   // full amplitude arrays
constexpr size_t kMaxDenseQubits = 13;    // dense density matrices
constexpr size_t kMaxSubsetGens = 20;     // exact subset enumerations
constexpr double kSupportCutoff = 1e-12;  // eigenvalue treated as support
constexpr double kLeakTolerance = 1e-10;  // admissible support leakage
constexpr double kEntropyCutoff = 1e-14;  // eigenvalue dropped from sums

size_t checked_log2_size(Eigen::Index rows) {
    size_t n = 0;
    while ((Eigen::Index(1) << n) < rows) ++n;
    if ((Eigen::Index(1) << n) != rows)
        throw std::invalid_argument("amplitude dimension is not a power of two");
    return n;
}

// Low word of a bit vector; valid because vector sizes are capped well
// below 64 qubits before this is called.
std::uint64_t low_mask(const BitVec& v) { return v.word_count() ? v.words()[0] : 0; }

int real_sign(const PauliWord& w) {
    if (w.phase_k() == 0) return +1;
    if (w.phase_k() == 2) return -1;
    throw std::invalid_argument("word has an imaginary phase; real amplitudes cannot hold it");
}

template <class Matrix>
double entropy_impl(const Matrix& rho) {
    Matrix sym = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()[i];
        if (lam > kEntropyCutoff) s -= lam * std::log2(lam);
    }
    return s;
}

template <class Matrix>
double relative_entropy_impl(const Matrix& rho, const Matrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw std::invalid_argument("relative entropy needs equal shapes");
    Matrix rs = (rho + rho.adjoint()) / 2.0;
    Matrix ss = (sigma + sigma.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> er(rs);
    Eigen::SelfAdjointEigenSolver<Matrix> es(ss);

    std::vector<Eigen::Index> supp;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j)
        if (es.eigenvalues()[j] > kSupportCutoff) supp.push_back(j);

    Matrix w(sigma.rows(), Eigen::Index(supp.size()));
    for (size_t j = 0; j < supp.size(); ++j) w.col(j) = es.eigenvectors().col(supp[j]);
    Matrix compressed = w.adjoint() * rs * w;

    double trace_in = std::real(compressed.trace());
    if (std::real(rs.trace()) - trace_in > kLeakTolerance)
        return std::numeric_limits<double>::infinity();

    double s = 0.0;
    for (Eigen::Index i = 0; i < er.eigenvalues().size(); ++i) {
        double lam = er.eigenvalues()[i];
        if (lam > kEntropyCutoff) s += lam * std::log2(lam);
    }
    for (size_t j = 0; j < supp.size(); ++j)
        s -= std::real(compressed(j, j)) * std::log2(es.eigenvalues()[supp[j]]);
    return s;
}

}  // namespace

Eigen::VectorXd apply_word(const PauliWord& w, const Eigen::VectorXd& v) {
    size_t n = checked_log2_size(v.size());
    if (w.num_qubits() != n) throw std::invalid_argument("apply_word: qubit count mismatch");
    if (n > kMaxVectorQubits) throw ResourceLimit("state vector beyond the 22-qubit amplitude cap");
    const int sign = real_sign(w);
    const std::uint64_t x = low_mask(w.x()), z = low_mask(w.z());
    Eigen::VectorXd out(v.size());
    for (std::uint64_t b = 0; b < std::uint64_t(v.size()); ++b) {
        double amp = sign * v[b];
        if (std::popcount(b & z) & 1u) amp = -amp;
        out[b ^ x] = amp;
    }
    return out;
}

void project_onto_group(const std::vector<PauliWord>& gens, Eigen::VectorXd& v) {
    for (const auto& g : gens) v = (v + apply_word(g, v)) / 2.0;
}

Eigen::MatrixXd ground_basis(const std::vector<PauliWord>& gens, size_t n_qubits,
                             std::uint64_t seed) {
    if (n_qubits > kMaxVectorQubits) throw ResourceLimit("ground space beyond the 22-qubit amplitude cap");
    for (const auto& g : gens)
        if (g.num_qubits() != n_qubits)
            throw std::invalid_argument("ground_basis: qubit count mismatch");
    const Eigen::Index dim_full = Eigen::Index(1) << n_qubits;
    size_t rank = group_rank(gens);
    if (rank > n_qubits) throw std::invalid_argument("group rank exceeds qubit count");
    const Eigen::Index dim = Eigen::Index(1) << (n_qubits - rank);
    const Eigen::Index batch = dim + 8;
    if (double(batch + dim) * double(dim_full) * 8.0 > 1.5e9)
        throw ResourceLimit("ground basis would not fit the 1.5 GB memory budget");

    std::mt19937_64 rng(seed);
    Eigen::MatrixXd m(dim_full, batch);
    for (Eigen::Index c = 0; c < batch; ++c) {
        Eigen::VectorXd v(dim_full);
        for (Eigen::Index i = 0; i < dim_full; ++i) v[i] = gaussian(rng);
        project_onto_group(gens, v);
        m.col(c) = v;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    qr.setThreshold(1e-7);
    if (qr.rank() != dim)
        throw std::logic_error("spectral ground dimension disagrees with group rank");
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim_full, dim);

    for (Eigen::Index c = 0; c < dim; ++c) {
        Eigen::VectorXd r = q.col(c);
        project_onto_group(gens, r);
        if ((r - q.col(c)).lpNorm<Eigen::Infinity>() > 1e-10)
            throw std::logic_error("ground basis column fails the projector residual");
    }
    return q;
}

Eigen::MatrixXd reduced_density(const Eigen::MatrixXd& states, std::vector<double> weights,
                                const BitVec& keep) {
    size_t n = checked_log2_size(states.rows());
    if (keep.size() != n) throw std::invalid_argument("reduced_density: mask size mismatch");
    if (states.cols() == 0) throw std::invalid_argument("reduced_density: no states");
    if (weights.empty()) weights.assign(size_t(states.cols()), 1.0 / double(states.cols()));
    if (weights.size() != size_t(states.cols()))
        throw std::invalid_argument("reduced_density: weight count mismatch");

    const size_t a = keep.popcount();
    if (a > kMaxDenseQubits) throw ResourceLimit("kept block beyond the 13-qubit dense-matrix cap");
    const size_t e = n - a;
    const Eigen::Index dim_a = Eigen::Index(1) << a, dim_e = Eigen::Index(1) << e;

    // Basis-index gather tables: bitstring -> (kept bits, environment bits),
    // each packed in ascending global qubit order.
    std::vector<std::uint32_t> row_of(size_t(1) << n), col_of(size_t(1) << n);
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
        std::uint32_t r = 0, c = 0;
        unsigned ri = 0, ci = 0;
        for (size_t q = 0; q < n; ++q) {
            bool bit = (b >> q) & 1u;
            if (keep.get(q)) {
                r |= std::uint32_t(bit) << ri++;
            } else {
                c |= std::uint32_t(bit) << ci++;
            }
        }
        row_of[b] = r;
        col_of[b] = c;
    }

    Eigen::MatrixXd gathered(dim_a, dim_e * states.cols());
    for (Eigen::Index s = 0; s < states.cols(); ++s) {
        if (weights[size_t(s)] < 0) throw std::invalid_argument("negative mixture weight");
        const double scale = std::sqrt(weights[size_t(s)]);
        for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b)
            gathered(row_of[b], s * dim_e + col_of[b]) = scale * states(Eigen::Index(b), s);
    }
    Eigen::MatrixXd rho = gathered * gathered.transpose();
    return (rho + rho.transpose()) / 2.0;
}

Eigen::MatrixXd group_rdm(const std::vector<PauliWord>& gens, const BitVec& keep) {
    auto inside = subgroup_supported_in(gens, keep);
    const size_t a = keep.popcount();
    if (a > kMaxDenseQubits) throw ResourceLimit("kept block beyond the 13-qubit dense-matrix cap");
    if (inside.size() > kMaxSubsetGens) throw ResourceLimit("supported subgroup beyond the 20-generator enumeration cap");

    // Local bit position of each kept qubit, in ascending global order to
    // match reduced_density's gather convention.
    std::vector<int> local(keep.size(), -1);
    {
        int next = 0;
        for (size_t q = 0; q < keep.size(); ++q)
            if (keep.get(q)) local[q] = next++;
    }
    auto local_mask = [&](const BitVec& bits) {
        std::uint64_t m = 0;
        for (size_t q = 0; q < bits.size(); ++q)
            if (bits.get(q)) {
                if (local[q] < 0) throw std::logic_error("subgroup member escapes the mask");
                m |= std::uint64_t(1) << local[q];
            }
        return m;
    };

    const Eigen::Index dim = Eigen::Index(1) << a;
    const double scale = 1.0 / double(dim);
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);

    // Gray-code walk over all subgroup elements with exact signs.
    const size_t r = inside.size();
    PauliWord current = PauliWord::identity(keep.size());
    std::uint64_t prev_code = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << r); ++i) {
        std::uint64_t code = i ^ (i >> 1);
        std::uint64_t changed = code ^ prev_code;
        if (changed) current = current * inside[std::countr_zero(changed)];
        prev_code = code;

        const int sign = real_sign(current);
        const std::uint64_t x = local_mask(current.x()), z = local_mask(current.z());
        for (std::uint64_t colv = 0; colv < std::uint64_t(dim); ++colv) {
            double val = sign * scale;
            if (std::popcount(colv & z) & 1u) val = -val;
            rho(Eigen::Index(colv ^ x), Eigen::Index(colv)) += val;
        }
    }
    return (rho + rho.transpose()) / 2.0;
}

double entropy_bits(const Eigen::MatrixXd& rho) { return entropy_impl(rho); }
double entropy_bits(const Eigen::MatrixXcd& rho) { return entropy_impl(rho); }

double relative_entropy_bits(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma) {
    return relative_entropy_impl(rho, sigma);
}
double relative_entropy_bits(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
    return relative_entropy_impl(rho, sigma);
}

double max_relative_entropy_bits(const Eigen::MatrixXd& rho, const Eigen::MatrixXd& sigma) {
    Eigen::MatrixXd rs = (rho + rho.transpose()) / 2.0;
    Eigen::MatrixXd ss = (sigma + sigma.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ss);
    std::vector<Eigen::Index> supp;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j)
        if (es.eigenvalues()[j] > kSupportCutoff) supp.push_back(j);
    Eigen::MatrixXd w(sigma.rows(), Eigen::Index(supp.size()));
    Eigen::VectorXd inv_sqrt(Eigen::Index(supp.size()));
    for (size_t j = 0; j < supp.size(); ++j) {
        w.col(j) = es.eigenvectors().col(supp[j]);
        inv_sqrt[Eigen::Index(j)] = 1.0 / std::sqrt(es.eigenvalues()[supp[j]]);
    }
    Eigen::MatrixXd compressed = w.transpose() * rs * w;
    if (rs.trace() - compressed.trace() > kLeakTolerance)
        return std::numeric_limits<double>::infinity();
    Eigen::MatrixXd m =
        inv_sqrt.asDiagonal() * compressed * inv_sqrt.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em((m + m.transpose()) / 2.0,
                                                      Eigen::EigenvaluesOnly);
    return std::log2(em.eigenvalues().maxCoeff());
}

std::int64_t log2_projector_rank_exact(const std::vector<PauliWord>& gens, size_t n_qubits) {
    const size_t k = gens.size();
    if (k > kMaxSubsetGens) throw ResourceLimit("subset enumeration beyond the 20-generator cap");
    for (const auto& g : gens)
        if (g.num_qubits() != n_qubits)
            throw std::invalid_argument("log2_projector_rank_exact: qubit count mismatch");

    std::int64_t net = 0;
    PauliWord current = PauliWord::identity(n_qubits);
    std::uint64_t prev_code = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << k); ++i) {
        std::uint64_t code = i ^ (i >> 1);
        std::uint64_t changed = code ^ prev_code;
        if (changed) current = current * gens[std::countr_zero(changed)];
        prev_code = code;
        if (!current.x().any() && !current.z().any()) net += current.identity_sign();
    }
    if (net <= 0)
        throw std::invalid_argument("projector vanishes: the signs are contradictory");
    if (net & (net - 1))
        throw std::logic_error("projector trace is not a power of two");
    std::int64_t log2net = std::countr_zero(std::uint64_t(net));
    std::int64_t result = std::int64_t(n_qubits) - std::int64_t(k) + log2net;
    if (result < 0) throw std::logic_error("projector rank below one");
    return result;
}

Eigen::VectorXcd apply_single_qubit(const Eigen::Matrix2cd& op, size_t qubit,
                                    const Eigen::VectorXcd& v) {
    size_t n = checked_log2_size(v.size());
    if (qubit >= n) throw std::out_of_range("apply_single_qubit: qubit out of range");
    Eigen::VectorXcd out(v.size());
    const std::uint64_t bit = std::uint64_t(1) << qubit;
    for (std::uint64_t b = 0; b < std::uint64_t(v.size()); ++b) {
        if (b & bit) continue;
        auto v0 = v[b], v1 = v[b | bit];
        out[b] = op(0, 0) * v0 + op(0, 1) * v1;
        out[b | bit] = op(1, 0) * v0 + op(1, 1) * v1;
    }
    return out;
}

Tqo1Report verify_tqo1(const StabilizerModel& model, std::uint64_t seed, int trials) {
    Eigen::MatrixXd basis = ground_basis(model.terms, model.n_qubits, seed);
    Eigen::MatrixXcd bc = basis.cast<std::complex<double>>();
    const Eigen::Index g = bc.cols();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

    Tqo1Report report{};
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        size_t q = size_t(uniform_below(rng, model.n_qubits));
        Eigen::Matrix2cd op;
        double a = gaussian(rng), d = gaussian(rng), re = gaussian(rng), im = gaussian(rng);
        op << a, std::complex<double>(re, im), std::complex<double>(re, -im), d;

        Eigen::MatrixXcd moved(bc.rows(), g);
        for (Eigen::Index c = 0; c < g; ++c) moved.col(c) = apply_single_qubit(op, q, bc.col(c));
        Eigen::MatrixXcd compressed = bc.adjoint() * moved;
        std::complex<double> scalar = compressed.trace() / double(g);
        Eigen::MatrixXcd dev = compressed - scalar * Eigen::MatrixXcd::Identity(g, g);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((dev + dev.adjoint()) / 2.0,
                                                           Eigen::EigenvaluesOnly);
        double norm = es.eigenvalues().cwiseAbs().maxCoeff();
        report.max_deviation = std::max(report.max_deviation, norm);
    }
    return report;
}

Eigen::MatrixXcd random_unitary(size_t dim, std::mt19937_64& rng) {
    Eigen::MatrixXcd h(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            h(Eigen::Index(i), Eigen::Index(j)) = std::complex<double>(gaussian(rng), gaussian(rng));
    h = (h + h.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases{Eigen::Index(dim)};
    for (size_t j = 0; j < dim; ++j) {
        double theta = 6.283185307179586477 * uniform_unit(rng);
        phases[Eigen::Index(j)] = std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd conjugate_on_qubits(const Eigen::MatrixXcd& rho, const Eigen::Matrix4cd& u,
                                     size_t qa, size_t qb) {
    size_t m = checked_log2_size(rho.rows());
    if (qa >= m || qb >= m || qa == qb)
        throw std::invalid_argument("conjugate_on_qubits: bad qubit positions");

    // u indexes its 4-dim space as (bit of qb << 1) | bit of qa.
    auto apply_gate = [&](const Eigen::MatrixXcd& mat) {
        Eigen::MatrixXcd out(mat.rows(), mat.cols());
        const std::uint64_t ba = std::uint64_t(1) << qa, bb = std::uint64_t(1) << qb;
        for (std::uint64_t r = 0; r < std::uint64_t(mat.rows()); ++r) {
            if (r & (ba | bb)) continue;
            std::uint64_t idx[4] = {r, r | ba, r | bb, r | ba | bb};
            for (Eigen::Index c = 0; c < mat.cols(); ++c) {
                std::complex<double> in[4];
                for (int i = 0; i < 4; ++i) in[i] = mat(Eigen::Index(idx[i]), c);
                for (int i = 0; i < 4; ++i) {
                    std::complex<double> acc = 0;
                    for (int j = 0; j < 4; ++j) acc += u(i, j) * in[j];
                    out(Eigen::Index(idx[i]), c) = acc;
                }
            }
        }
        return out;
    };

    Eigen::MatrixXcd left = apply_gate(rho);
    Eigen::MatrixXcd right = apply_gate(left.adjoint());
    return right.adjoint();
}

}  // namespace tqi
