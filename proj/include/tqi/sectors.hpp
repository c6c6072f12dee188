#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tqi/lattice.hpp"
#include "tqi/model.hpp"
#include "tqi/pauli.hpp"
#include "tqi/rational.hpp"

namespace tqi {

// The fattened neighborhood of a region: the union of the supports of every
// interaction term that touches it. Ground states of the terms inside this
// neighborhood are what the region is compared against.
BitVec region_plus(const StabilizerModel& model, const BitVec& region);

// Terms whose support lies entirely inside region_plus(model, region).
std::vector<PauliWord> surrounding_terms(const StabilizerModel& model, const BitVec& region);

// The invariant, in bits: how many more independent stabilizers of the global
// state fit inside the region than products of the surrounding terms do.
// Equivalently the relative entropy (base 2) between the region's reduced
// state and the reduced ground-space-average of the surrounding terms.
std::int64_t invariant_bits(const StabilizerModel& model, const GroundStateChoice& choice,
                            const BitVec& region);

// Structure of the operators on a region that commute with every term,
// modulo products of surrounding terms supported in the region. Class
// representatives generate the quotient; for abelian quotients the sectors
// of the region algebra are their joint sign patterns.
struct LogicalAlgebra {
    std::size_t commutant_rank = 0;   // operators on the region commuting with all terms
    std::size_t trivial_rank = 0;     // those generated by surrounding-term products
    std::size_t class_rank = 0;       // commutant_rank - trivial_rank
    bool abelian = true;              // class representatives pairwise commute
    std::vector<PauliWord> class_reps;
    std::vector<PauliWord> trivial_gens;
};

LogicalAlgebra logical_algebra(const StabilizerModel& model, const BitVec& region);

// Decomposition of the surrounding-terms ground space by the sign patterns of
// the class representatives. Equal sector dimensions are certified by finding,
// for each representative, a globally supported operator that commutes with
// all surrounding terms and flips exactly that representative's sign.
struct SectorDecomposition {
    std::size_t class_rank = 0;
    std::int64_t log2_total_dim = 0;   // ground space of the surrounding terms
    std::int64_t log2_sector_dim = 0;  // each sector, when certified equal
    bool equal_dims_certified = false;
    std::vector<PauliWord> class_reps;
    std::vector<PauliWord> sector_movers;  // one per representative, when certified
};

SectorDecomposition sector_decomposition(const StabilizerModel& model, const BitVec& region);

// Invariant of concentric square annuli of growing width around a fixed cell.
// A width-w annulus is anchored at (cx - w, cy - w) with outer side 2w + 1.
struct UniformityScan {
    std::vector<std::pair<int, std::int64_t>> values;  // (width, invariant)
    bool uniform = false;
};

UniformityScan uniformity_scan(const TorusLattice& lat, const StabilizerModel& model,
                               const GroundStateChoice& choice, int cx, int cy, int width_min,
                               int width_max);

// Entropy (bits) of the state's reduction to a region, via stabilizer counting.
std::int64_t region_entropy_bits(const StabilizerModel& model, const GroundStateChoice& choice,
                                 const BitVec& region);

/// Conditional mutual information I(X:Z|Y) in bits for the state of a
// commuting Hermitian group (pure or mixed), via stabilizer counting.
std::int64_t cmi_bits(const std::vector<PauliWord>& group_gens, const Tripartition& parts);

// Exact least-squares fit of entropy = alpha * boundary - gamma * contours
// over a set of regions, solved in rational arithmetic.
struct AreaLawPoint {
    std::int64_t entropy = 0;
    std::int64_t boundary = 0;  // total boundary length
    std::int64_t contours = 0;  // number of boundary curves
};

struct AreaLawFit {
    Rat alpha;
    Rat gamma;
    Rat residual;  // sum of squared residuals
};

AreaLawFit area_law_fit(const std::vector<AreaLawPoint>& points);

}  // namespace tqi
