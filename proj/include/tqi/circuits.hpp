#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tqi/lattice.hpp"
#include "tqi/model.hpp"
#include "tqi/pauli.hpp"

namespace tqi {

// A Clifford gate on a few qubits, stored as the exact conjugation images
// of the single-qubit X and Z words on those qubits. The images live on
// qubits.size() local qubits; phases are tracked exactly.
struct CliffordGate {
    std::vector<size_t> qubits;  // global qubit ids, all distinct
    std::vector<PauliWord> x_images;
    std::vector<PauliWord> z_images;
};

// Throws std::logic_error unless the images satisfy the exact single-qubit
// commutation pattern and span the full local Pauli group.
void validate_gate(const CliffordGate& g);

// Uniformly random Clifford conjugation table on the given qubits, built
// one symplectic pair at a time with uniform sign bits.
CliffordGate random_clifford_gate(std::vector<size_t> qubits, std::mt19937_64& rng);

struct CircuitLayer {
    int offset_x = 0, offset_y = 0;
    std::vector<CliffordGate> gates;  // disjoint qubit sets
};

// Brickwork of 2x2-cell blocks over a torus with even sides: each block
// carries one four-qubit gate on the edges of its lower cell pair and one
// on its upper cell pair, and the block anchor cycles through the four
// diagonal offsets from layer to layer.
struct LocalCircuit {
    int lx = 0, ly = 0;
    std::uint64_t seed = 0;
    std::vector<CircuitLayer> layers;

    int depth() const { return int(layers.size()); }
    // Worst-case support growth per layer is one cell on each side, so the
    // annulus loses 2 * depth cells of outer size and of width; this is the
    // shrink argument shrink_annulus expects.
    int spread_radius() const { return 2 * depth(); }
};

LocalCircuit random_local_circuit(const TorusLattice& lat, int depth, std::uint64_t seed);

// w -> U w U^dag through every layer, phases exact.
PauliWord conjugate_word(const LocalCircuit& c, const PauliWord& w);

// The same conjugation applied to every term or completion generator.
StabilizerModel conjugate_model(const LocalCircuit& c, const StabilizerModel& m);
GroundStateChoice conjugate_choice(const LocalCircuit& c, const GroundStateChoice& ch);

// Compares the invariant of a model on a wide annulus against the invariant
// of the conjugated model on the annulus shrunk by the circuit's spread
// radius. Equality is the expected outcome whenever the shrunk annulus is
// still wide enough to host the conjugated model's dressed loop operators
// and its hole keeps a core beyond the reach of terms touching the ring;
// desk-scale geometries below those margins genuinely lose the invariant.
// Throws std::invalid_argument when the shrunk annulus is degenerate.
struct InvarianceReport {
    std::int64_t before_bits = 0;
    std::int64_t after_bits = 0;
    RectAnnulus narrowed;
    bool pass = false;
};

InvarianceReport invariance_test(const StabilizerModel& m, const GroundStateChoice& choice,
                                 const RectAnnulus& wide, const LocalCircuit& c);

// Plain text, versioned, round-trip exact.
std::string serialize_circuit(const LocalCircuit& c);
LocalCircuit parse_circuit(const std::string& text);

}  // namespace tqi
