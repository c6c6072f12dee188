#include "tqi/circuits.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "tqi/rng.hpp"
#include "tqi/sectors.hpp"

namespace tqi {

namespace {

constexpr size_t kMaxGateQubits = 8;

// Symplectic product of two local Pauli patterns packed as x | (z << k).
int sp_product(std::uint32_t a, std::uint32_t b, size_t k) {
    std::uint32_t mask = (std::uint32_t(1) << k) - 1;
    std::uint32_t ax = a & mask, az = (a >> k) & mask;
    std::uint32_t bx = b & mask, bz = (b >> k) & mask;
    return (std::popcount(ax & bz) ^ std::popcount(az & bx)) & 1;
}

PauliWord word_from_packed(std::uint32_t packed, size_t k) {
    BitVec x(k), z(k);
    for (size_t j = 0; j < k; ++j) {
        if ((packed >> j) & 1u) x.set(j, true);
        if ((packed >> (j + k)) & 1u) z.set(j, true);
    }
    return PauliWord::from_xz(x, z);
}

// Raises the embedded copy's phase so it equals the local word's; the two
// differ by a sign because both are smallest-Hermitian over one pattern.
PauliWord embed_word(const PauliWord& local, const std::vector<size_t>& at, size_t n) {
    BitVec x(n), z(n);
    for (size_t j = 0; j < at.size(); ++j) {
        if (local.x().get(j)) x.set(at[j], true);
        if (local.z().get(j)) z.set(at[j], true);
    }
    PauliWord w = PauliWord::from_xz(x, z);
    return w.times_i((local.phase_k() - w.phase_k()) & 3u);
}

PauliWord conjugate_by_gate(const CliffordGate& g, const PauliWord& w) {
    const size_t k = g.qubits.size();
    BitVec lx(k), lz(k);
    bool touched = false;
    for (size_t j = 0; j < k; ++j) {
        if (w.x().get(g.qubits[j])) lx.set(j, true), touched = true;
        if (w.z().get(g.qubits[j])) lz.set(j, true), touched = true;
    }
    if (!touched) return w;

    // Split w = rest * local exactly: the local factor is the Hermitian word
    // over w's bits on the gate qubits, and multiplying by it again cancels
    // those bits while keeping every phase.
    BitVec gx(w.num_qubits()), gz(w.num_qubits());
    for (size_t j = 0; j < k; ++j) {
        if (lx.get(j)) gx.set(g.qubits[j], true);
        if (lz.get(j)) gz.set(g.qubits[j], true);
    }
    PauliWord local = PauliWord::from_xz(gx, gz);
    PauliWord rest = w * local;

    // Image of X^u Z^v is the ordered product of the generator images; the
    // local factor's i^k0 rides along unchanged.
    PauliWord img = PauliWord::identity(k);
    for (size_t j = 0; j < k; ++j)
        if (lx.get(j)) img = img * g.x_images[j];
    for (size_t j = 0; j < k; ++j)
        if (lz.get(j)) img = img * g.z_images[j];
    img = img.times_i(local.phase_k());

    return rest * embed_word(img, g.qubits, w.num_qubits());
}

}  // namespace

void validate_gate(const CliffordGate& g) {
    const size_t k = g.qubits.size();
    if (k == 0 || k > kMaxGateQubits) throw std::logic_error("gate arity out of range");
    if (g.x_images.size() != k || g.z_images.size() != k)
        throw std::logic_error("gate image count mismatch");
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
            if (g.qubits[a] == g.qubits[b]) throw std::logic_error("gate qubits repeat");
    std::vector<PauliWord> all;
    for (size_t i = 0; i < k; ++i) {
        all.push_back(g.x_images[i]);
        all.push_back(g.z_images[i]);
    }
    for (const auto& w : all) {
        if (w.num_qubits() != k) throw std::logic_error("gate image arity mismatch");
        if (!w.is_hermitian()) throw std::logic_error("gate image is not Hermitian");
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            bool same = i == j;
            if (g.x_images[i].commutes_with(g.x_images[j]) != true ||
                g.z_images[i].commutes_with(g.z_images[j]) != true)
                throw std::logic_error("gate images break the commutation pattern");
            if (g.x_images[i].commutes_with(g.z_images[j]) != !same)
                throw std::logic_error("gate images break the commutation pattern");
        }
    if (group_rank(all) != 2 * k) throw std::logic_error("gate images do not span");
}

CliffordGate random_clifford_gate(std::vector<size_t> qubits, std::mt19937_64& rng) {
    const size_t k = qubits.size();
    if (k == 0 || k > kMaxGateQubits) throw std::invalid_argument("gate arity out of range");
    CliffordGate g;
    g.qubits = std::move(qubits);

    std::vector<std::uint32_t> rows;  // a0, b0, a1, b1, ...
    const std::uint64_t space = std::uint64_t(1) << (2 * k);
    for (size_t i = 0; i < k; ++i) {
        for (int half = 0; half < 2; ++half) {
            for (int guard = 0;; ++guard) {
                if (guard > 100000) throw std::logic_error("symplectic sampling stalled");
                std::uint32_t r = std::uint32_t(uniform_below(rng, space));
                bool ok = half == 0 ? r != 0 : sp_product(r, rows[2 * i], k) == 1;
                for (size_t p = 0; ok && p < rows.size(); ++p)
                    if (p != 2 * i && sp_product(r, rows[p], k) != 0) ok = false;
                if (ok) {
                    rows.push_back(r);
                    break;
                }
            }
        }
    }

    for (size_t i = 0; i < k; ++i) {
        PauliWord xi = word_from_packed(rows[2 * i], k);
        PauliWord zi = word_from_packed(rows[2 * i + 1], k);
        if (uniform_below(rng, 2)) xi = xi.negated();
        if (uniform_below(rng, 2)) zi = zi.negated();
        g.x_images.push_back(xi);
        g.z_images.push_back(zi);
    }
    validate_gate(g);
    return g;
}

LocalCircuit random_local_circuit(const TorusLattice& lat, int depth, std::uint64_t seed) {
    if (lat.lx % 2 || lat.ly % 2)
        throw std::invalid_argument("block layers need even torus sides");
    if (depth < 0) throw std::invalid_argument("negative circuit depth");
    static const int offsets[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};

    LocalCircuit c;
    c.lx = lat.lx;
    c.ly = lat.ly;
    c.seed = seed;
    std::mt19937_64 rng(seed);
    for (int layer = 0; layer < depth; ++layer) {
        CircuitLayer out;
        out.offset_x = offsets[layer % 4][0];
        out.offset_y = offsets[layer % 4][1];
        for (int by = 0; by < lat.ly; by += 2)
            for (int bx = 0; bx < lat.lx; bx += 2) {
                int ax = bx + out.offset_x, ay = by + out.offset_y;
                for (int row = 0; row < 2; ++row) {
                    std::vector<size_t> q;
                    for (int col = 0; col < 2; ++col) {
                        q.push_back(size_t(lat.h_edge(ax + col, ay + row)));
                        q.push_back(size_t(lat.v_edge(ax + col, ay + row)));
                    }
                    out.gates.push_back(random_clifford_gate(std::move(q), rng));
                }
            }
        c.layers.push_back(std::move(out));
    }
    return c;
}

PauliWord conjugate_word(const LocalCircuit& c, const PauliWord& w) {
    PauliWord out = w;
    for (const auto& layer : c.layers)
        for (const auto& gate : layer.gates) out = conjugate_by_gate(gate, out);
    return out;
}

StabilizerModel conjugate_model(const LocalCircuit& c, const StabilizerModel& m) {
    StabilizerModel out;
    out.name = m.name + "+circuit";
    out.n_qubits = m.n_qubits;
    for (const auto& t : m.terms) out.terms.push_back(conjugate_word(c, t));
    return out;
}

GroundStateChoice conjugate_choice(const LocalCircuit& c, const GroundStateChoice& ch) {
    GroundStateChoice out;
    out.name = ch.name + "+circuit";
    for (const auto& w : ch.extra) out.extra.push_back(conjugate_word(c, w));
    return out;
}

InvarianceReport invariance_test(const StabilizerModel& m, const GroundStateChoice& choice,
                                 const RectAnnulus& wide, const LocalCircuit& c) {
    TorusLattice lat(c.lx, c.ly);
    InvarianceReport rep;
    rep.before_bits = invariant_bits(m, choice, wide.edges);
    rep.narrowed = shrink_annulus(lat, wide, c.spread_radius());
    rep.after_bits =
        invariant_bits(conjugate_model(c, m), conjugate_choice(c, choice), rep.narrowed.edges);
    rep.pass = rep.before_bits == rep.after_bits;
    return rep;
}

std::string serialize_circuit(const LocalCircuit& c) {
    std::ostringstream os;
    os << "localcircuit 1\n";
    os << "torus " << c.lx << " " << c.ly << "\n";
    os << "seed " << c.seed << "\n";
    os << "layers " << c.layers.size() << "\n";
    for (const auto& layer : c.layers) {
        os << "layer " << layer.offset_x << " " << layer.offset_y << " " << layer.gates.size()
           << "\n";
        for (const auto& g : layer.gates) {
            os << "gate";
            for (size_t q : g.qubits) os << " " << q;
            os << "\n";
            for (size_t j = 0; j < g.qubits.size(); ++j)
                os << g.x_images[j].str() << "\n" << g.z_images[j].str() << "\n";
        }
    }
    return os.str();
}

LocalCircuit parse_circuit(const std::string& text) {
    std::istringstream is(text);
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("circuit parse: " + what);
    };
    std::string tag;
    int version = 0;
    if (!(is >> tag >> version) || tag != "localcircuit" || version != 1)
        fail("bad header");
    LocalCircuit c;
    size_t n_layers = 0;
    if (!(is >> tag >> c.lx >> c.ly) || tag != "torus" || c.lx < 2 || c.ly < 2)
        fail("bad torus line");
    if (!(is >> tag >> c.seed) || tag != "seed") fail("bad seed line");
    if (!(is >> tag >> n_layers) || tag != "layers") fail("bad layer count");
    const size_t n = 2 * size_t(c.lx) * size_t(c.ly);
    for (size_t l = 0; l < n_layers; ++l) {
        CircuitLayer layer;
        size_t n_gates = 0;
        if (!(is >> tag >> layer.offset_x >> layer.offset_y >> n_gates) || tag != "layer")
            fail("bad layer line");
        for (size_t gi = 0; gi < n_gates; ++gi) {
            if (!(is >> tag) || tag != "gate") fail("bad gate line");
            CliffordGate g;
            for (int j = 0; j < 4; ++j) {
                size_t q = 0;
                if (!(is >> q) || q >= n) fail("gate qubit out of range");
                g.qubits.push_back(q);
            }
            for (size_t j = 0; j < g.qubits.size(); ++j) {
                std::string xs, zs;
                if (!(is >> xs >> zs)) fail("missing gate images");
                g.x_images.push_back(PauliWord::parse(xs, g.qubits.size()));
                g.z_images.push_back(PauliWord::parse(zs, g.qubits.size()));
            }
            validate_gate(g);
            layer.gates.push_back(std::move(g));
        }
        c.layers.push_back(std::move(layer));
    }
    if (is >> tag) fail("trailing content");
    return c;
}

}  // namespace tqi
