#pragma once

#include <string>
#include <vector>

#include "tqi/lattice.hpp"
#include "tqi/pauli.hpp"

namespace tqi {

// Commuting-projector model: each term g is a Hermitian Pauli word and the
// Hamiltonian is the sum of projectors (1 - g)/2, so the ground space is
// the joint +1 eigenspace of the terms.
struct StabilizerModel {
    std::string name;
    size_t n_qubits = 0;
    std::vector<PauliWord> terms;
};

// Extra commuting words that, together with the terms, pin a single ground
// state (the group state of terms + extra).
struct GroundStateChoice {
    std::string name;
    std::vector<PauliWord> extra;
};

// terms + extra, validated: mutually commuting Hermitian words, no -I in
// the generated group, and full rank so the state is pure.
std::vector<PauliWord> state_group(const StabilizerModel& model, const GroundStateChoice& choice);

// Union of supports of terms whose support intersects the region, iterated
// `rounds` times; this is the region the surrounding Hamiltonian sees.
BitVec fatten_by_terms(const std::vector<PauliWord>& terms, const BitVec& region, int rounds);

// The terms themselves that fit inside the given mask (no products taken).
std::vector<PauliWord> terms_supported_in(const StabilizerModel& model, const BitVec& mask);

// --- square-lattice models on the torus ---

// Vertex stars of X and face plaquettes of Z on every site.
StabilizerModel toric_model(const TorusLattice& lat);

// Single-qubit Z on every edge: a product state with no topological order.
StabilizerModel trivial_model(const TorusLattice& lat);

// Two non-contractible Z loops (one per handle) complete the toric terms to
// a pure state.
GroundStateChoice toric_loop_choice(const TorusLattice& lat);
// Same but with X loops on dual cycles, for choice-independence checks.
GroundStateChoice toric_dual_loop_choice(const TorusLattice& lat);

// --- ring fragment ---
//
// A finite patch of the toric code wrapped around one cycle only: `rings`
// concentric rings of faces between rings+1 circles of ring edges, with
// radial rungs between consecutive circles and one dangling edge attached
// to every inner and outer boundary vertex. This is the smallest geometry
// whose region A is an annulus while the total qubit count stays in dense
// range.
struct RingFragment {
    int n = 0;      // circumference (vertices per circle)
    int rings = 0;  // face rings, 1 or 2
    StabilizerModel model;

    // qubit ids
    int ring_edge(int j, int i) const;      // circle j in [0,rings], position i
    int rung_edge(int j, int i) const;      // between circles j-1 and j, j in [1,rings]
    int inner_dangling(int i) const;
    int outer_dangling(int i) const;
    int num_qubits() const { return n * (2 * rings + 3); }

    // The annular band used as region A: for one face ring the full
    // ring0/rung/ring1 band, for two face rings the middle band
    // rung1/ring1/rung2 (whose surroundings lie entirely in the fragment).
    BitVec annulus_region() const;
    // Qubits of the annulus at angular position i.
    BitVec position_mask(int i) const;
    // X = position 0, Z = position 2, Y = the rest; needs n >= 4 so that a
    // term (spanning two adjacent positions) never touches X and Z both.
    Tripartition tripartition() const;
};

RingFragment make_ring_fragment(int n, int rings);

// Boundary-pinned choice: X on every dangling edge plus one Z ring loop.
// The danglings decouple, leaving the band near the boundary in a product
// state; spurious boundary contributions show up in the invariant.
GroundStateChoice fragment_pinned_choice(const RingFragment& f);
// Variant with the Z loop on a different circle (for independence checks).
GroundStateChoice fragment_pinned_choice_variant(const RingFragment& f);

// Boundary-entangled choice for one face ring: Z triangles tying each
// dangling pair to its ring edge plus one X rung loop. The band's reduced
// state then matches the vacuum block of the fragment and the invariant
// reproduces the bulk value.
GroundStateChoice fragment_entangled_choice(const RingFragment& f);

}  // namespace tqi
