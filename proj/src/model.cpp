#include "tqi/model.hpp"

#include <stdexcept>

namespace tqi {

std::vector<PauliWord> state_group(const StabilizerModel& model, const GroundStateChoice& choice) {
    std::vector<PauliWord> gens = model.terms;
    gens.insert(gens.end(), choice.extra.begin(), choice.extra.end());
    GroupCheck c = check_group(gens);
    if (!c.all_hermitian)
        throw std::invalid_argument("state group: non-Hermitian generator");
    if (!c.all_commuting)
        throw std::invalid_argument("state group: generators do not all commute");
    if (c.contains_minus_identity)
        throw std::invalid_argument("state group: signs are frustrated (-I is generated)");
    if (c.rank != model.n_qubits)
        throw std::invalid_argument("state group: rank " + std::to_string(c.rank) + " does not pin a pure state on " +
                                    std::to_string(model.n_qubits) + " qubits");
    return gens;
}

BitVec fatten_by_terms(const std::vector<PauliWord>& terms, const BitVec& region, int rounds) {
    BitVec mask = region;
    for (int round = 0; round < rounds; ++round) {
        BitVec grown = mask;
        for (const auto& t : terms) {
            BitVec supp = t.support();
            if (supp.and_popcount(mask) == 0) continue;
            for (size_t w = 0; w < grown.word_count(); ++w) grown.words()[w] |= supp.words()[w];
        }
        mask = grown;
    }
    return mask;
}

std::vector<PauliWord> terms_supported_in(const StabilizerModel& model, const BitVec& mask) {
    std::vector<PauliWord> out;
    for (const auto& t : model.terms)
        if (t.supported_in(mask)) out.push_back(t);
    return out;
}

StabilizerModel toric_model(const TorusLattice& lat) {
    StabilizerModel m;
    m.name = "toric-" + std::to_string(lat.lx) + "x" + std::to_string(lat.ly);
    m.n_qubits = lat.num_edges();
    for (int y = 0; y < lat.ly; ++y)
        for (int x = 0; x < lat.lx; ++x) {
            std::vector<size_t> star;
            for (int e : lat.star_edges(x, y)) star.push_back(e);
            m.terms.push_back(PauliWord::from_support(m.n_qubits, 'X', star));
        }
    for (int y = 0; y < lat.ly; ++y)
        for (int x = 0; x < lat.lx; ++x) {
            std::vector<size_t> plaq;
            for (int e : lat.plaquette_edges(x, y)) plaq.push_back(e);
            m.terms.push_back(PauliWord::from_support(m.n_qubits, 'Z', plaq));
        }
    return m;
}

StabilizerModel trivial_model(const TorusLattice& lat) {
    StabilizerModel m;
    m.name = "trivial-" + std::to_string(lat.lx) + "x" + std::to_string(lat.ly);
    m.n_qubits = lat.num_edges();
    for (int e = 0; e < lat.num_edges(); ++e)
        m.terms.push_back(PauliWord::single(m.n_qubits, 'Z', e));
    return m;
}

GroundStateChoice toric_loop_choice(const TorusLattice& lat) {
    GroundStateChoice c;
    c.name = "z-loops";
    size_t n = lat.num_edges();
    std::vector<size_t> row, col;
    for (int x = 0; x < lat.lx; ++x) row.push_back(lat.h_edge(x, 0));
    for (int y = 0; y < lat.ly; ++y) col.push_back(lat.v_edge(0, y));
    c.extra.push_back(PauliWord::from_support(n, 'Z', row));
    c.extra.push_back(PauliWord::from_support(n, 'Z', col));
    return c;
}

GroundStateChoice toric_dual_loop_choice(const TorusLattice& lat) {
    GroundStateChoice c;
    c.name = "x-loops";
    size_t n = lat.num_edges();
    std::vector<size_t> row, col;
    for (int x = 0; x < lat.lx; ++x) row.push_back(lat.v_edge(x, 0));
    for (int y = 0; y < lat.ly; ++y) col.push_back(lat.h_edge(0, y));
    c.extra.push_back(PauliWord::from_support(n, 'X', row));
    c.extra.push_back(PauliWord::from_support(n, 'X', col));
    return c;
}

namespace {
int wrap(int i, int n) { return ((i % n) + n) % n; }
}  // namespace

int RingFragment::ring_edge(int j, int i) const { return j * n + wrap(i, n); }

int RingFragment::rung_edge(int j, int i) const {
    return (rings + 1) * n + (j - 1) * n + wrap(i, n);
}

int RingFragment::inner_dangling(int i) const { return (2 * rings + 1) * n + wrap(i, n); }

int RingFragment::outer_dangling(int i) const { return (2 * rings + 2) * n + wrap(i, n); }

BitVec RingFragment::annulus_region() const {
    BitVec mask(num_qubits());
    for (int i = 0; i < n; ++i) {
        if (rings == 1) {
            mask.set(ring_edge(0, i), true);
            mask.set(rung_edge(1, i), true);
            mask.set(ring_edge(1, i), true);
        } else {
            mask.set(rung_edge(1, i), true);
            mask.set(ring_edge(1, i), true);
            mask.set(rung_edge(2, i), true);
        }
    }
    return mask;
}

BitVec RingFragment::position_mask(int i) const {
    BitVec mask(num_qubits());
    if (rings == 1) {
        mask.set(ring_edge(0, i), true);
        mask.set(rung_edge(1, i), true);
        mask.set(ring_edge(1, i), true);
    } else {
        mask.set(rung_edge(1, i), true);
        mask.set(ring_edge(1, i), true);
        mask.set(rung_edge(2, i), true);
    }
    return mask;
}

Tripartition RingFragment::tripartition() const {
    if (n < 4)
        throw std::invalid_argument(
            "fragment tripartition needs circumference >= 4; with 3 positions every pair is adjacent");
    Tripartition t{position_mask(0), BitVec(num_qubits()), position_mask(2)};
    for (int i = 1; i < n; ++i) {
        if (i == 2) continue;
        BitVec p = position_mask(i);
        for (size_t w = 0; w < t.y.word_count(); ++w) t.y.words()[w] |= p.words()[w];
    }
    for (const auto& term : model.terms) {
        BitVec supp = term.support();
        if (supp.and_popcount(t.x) > 0 && supp.and_popcount(t.z) > 0)
            throw std::logic_error("fragment tripartition bands are not separated");
    }
    return t;
}

RingFragment make_ring_fragment(int n, int rings) {
    if (n < 2) throw std::invalid_argument("ring fragment needs circumference >= 2");
    if (rings != 1 && rings != 2)
        throw std::invalid_argument("ring fragment supports 1 or 2 face rings");
    RingFragment f;
    f.n = n;
    f.rings = rings;
    f.model.name = "ring-fragment-" + std::to_string(n) + "x" + std::to_string(rings);
    f.model.n_qubits = f.num_qubits();
    size_t nq = f.model.n_qubits;

    for (int i = 0; i < n; ++i)
        f.model.terms.push_back(PauliWord::from_support(
            nq, 'X',
            {size_t(f.inner_dangling(i)), size_t(f.ring_edge(0, i - 1)), size_t(f.ring_edge(0, i)),
             size_t(f.rung_edge(1, i))}));
    for (int j = 1; j < rings; ++j)
        for (int i = 0; i < n; ++i)
            f.model.terms.push_back(PauliWord::from_support(
                nq, 'X',
                {size_t(f.rung_edge(j, i)), size_t(f.ring_edge(j, i - 1)), size_t(f.ring_edge(j, i)),
                 size_t(f.rung_edge(j + 1, i))}));
    for (int i = 0; i < n; ++i)
        f.model.terms.push_back(PauliWord::from_support(
            nq, 'X',
            {size_t(f.rung_edge(rings, i)), size_t(f.ring_edge(rings, i - 1)),
             size_t(f.ring_edge(rings, i)), size_t(f.outer_dangling(i))}));
    for (int j = 1; j <= rings; ++j)
        for (int i = 0; i < n; ++i)
            f.model.terms.push_back(PauliWord::from_support(
                nq, 'Z',
                {size_t(f.ring_edge(j - 1, i)), size_t(f.rung_edge(j, i)),
                 size_t(f.rung_edge(j, i + 1)), size_t(f.ring_edge(j, i))}));
    return f;
}

namespace {

GroundStateChoice pinned_choice_with_loop(const RingFragment& f, int loop_circle,
                                          const std::string& name) {
    GroundStateChoice c;
    c.name = name;
    size_t nq = f.model.n_qubits;
    for (int i = 0; i < f.n; ++i)
        c.extra.push_back(PauliWord::single(nq, 'X', f.inner_dangling(i)));
    for (int i = 0; i < f.n; ++i)
        c.extra.push_back(PauliWord::single(nq, 'X', f.outer_dangling(i)));
    std::vector<size_t> loop;
    for (int i = 0; i < f.n; ++i) loop.push_back(f.ring_edge(loop_circle, i));
    c.extra.push_back(PauliWord::from_support(nq, 'Z', loop));
    return c;
}

}  // namespace

GroundStateChoice fragment_pinned_choice(const RingFragment& f) {
    return pinned_choice_with_loop(f, f.rings / 2, "pinned");
}

GroundStateChoice fragment_pinned_choice_variant(const RingFragment& f) {
    return pinned_choice_with_loop(f, f.rings / 2 == 0 ? 1 : 0, "pinned-variant");
}

GroundStateChoice fragment_entangled_choice(const RingFragment& f) {
    if (f.rings != 1)
        throw std::invalid_argument("entangled choice is defined for the one-ring fragment");
    GroundStateChoice c;
    c.name = "entangled";
    size_t nq = f.model.n_qubits;
    for (int i = 0; i < f.n; ++i)
        c.extra.push_back(PauliWord::from_support(
            nq, 'Z',
            {size_t(f.inner_dangling(i)), size_t(f.inner_dangling(i + 1)),
             size_t(f.ring_edge(0, i))}));
    for (int i = 0; i < f.n; ++i)
        c.extra.push_back(PauliWord::from_support(
            nq, 'Z',
            {size_t(f.outer_dangling(i)), size_t(f.outer_dangling(i + 1)),
             size_t(f.ring_edge(1, i))}));
    std::vector<size_t> rungs;
    for (int i = 0; i < f.n; ++i) rungs.push_back(f.rung_edge(1, i));
    c.extra.push_back(PauliWord::from_support(nq, 'X', rungs));
    return c;
}

}  // namespace tqi
