#include "tqi/sectors.hpp"

#include <stdexcept>

#include "tqi/gf2.hpp"

namespace tqi {

namespace {

// Row whose GF(2) dot with the interleaved (x0,z0,x1,z1,...) coordinates of a
// word v, taken over the listed qubits, equals the symplectic product <h, v>.
BitVec partner_row(const PauliWord& h, const std::vector<size_t>& qubits) {
    BitVec row(2 * qubits.size());
    for (size_t j = 0; j < qubits.size(); ++j) {
        if (h.z().get(qubits[j])) row.set(2 * j, true);
        if (h.x().get(qubits[j])) row.set(2 * j + 1, true);
    }
    return row;
}

PauliWord word_from_local(const BitVec& coords, const std::vector<size_t>& qubits, size_t n) {
    BitVec x(n), z(n);
    for (size_t j = 0; j < qubits.size(); ++j) {
        if (coords.get(2 * j)) x.set(qubits[j], true);
        if (coords.get(2 * j + 1)) z.set(qubits[j], true);
    }
    return PauliWord::from_xz(x, z);
}

std::vector<size_t> mask_qubits(const BitVec& mask) {
    std::vector<size_t> ids;
    for (size_t q = 0; q < mask.size(); ++q)
        if (mask.get(q)) ids.push_back(q);
    return ids;
}

}  // namespace

BitVec region_plus(const StabilizerModel& model, const BitVec& region) {
    return fatten_by_terms(model.terms, region, 1);
}

std::vector<PauliWord> surrounding_terms(const StabilizerModel& model, const BitVec& region) {
    return terms_supported_in(model, region_plus(model, region));
}

std::int64_t invariant_bits(const StabilizerModel& model, const GroundStateChoice& choice,
                            const BitVec& region) {
    auto state = state_group(model, choice);
    auto surrounding = surrounding_terms(model, region);
    auto state_in = subgroup_supported_in(state, region);
    auto trivial_in = subgroup_supported_in(surrounding, region);
    return std::int64_t(state_in.size()) - std::int64_t(trivial_in.size());
}

LogicalAlgebra logical_algebra(const StabilizerModel& model, const BitVec& region) {
    if (region.size() != model.n_qubits)
        throw std::invalid_argument("logical_algebra: region size mismatch");
    LogicalAlgebra la;
    const auto ids = mask_qubits(region);
    const size_t n = model.n_qubits;

    // Commutant: words on the region whose symplectic product with every
    // term vanishes.
    std::vector<BitVec> constraint_rows;
    constraint_rows.reserve(model.terms.size());
    for (const auto& h : model.terms) constraint_rows.push_back(partner_row(h, ids));
    auto kernel = BitMatrix::from_rows(constraint_rows).kernel_basis();
    la.commutant_rank = kernel.size();

    la.trivial_gens = subgroup_supported_in(surrounding_terms(model, region), region);
    la.trivial_rank = la.trivial_gens.size();

    // Class representatives: commutant basis words that extend the span of
    // the trivial subgroup.
    std::vector<BitVec> span_rows;
    span_rows.reserve(la.trivial_rank + kernel.size());
    for (const auto& g : la.trivial_gens) span_rows.push_back(g.symplectic());
    size_t span_rank = la.trivial_rank;
    for (const auto& coords : kernel) {
        PauliWord w = word_from_local(coords, ids, n);
        span_rows.push_back(w.symplectic());
        size_t r = BitMatrix::from_rows(span_rows).rank();
        if (r > span_rank) {
            span_rank = r;
            la.class_reps.push_back(w);
        } else {
            span_rows.pop_back();
        }
    }
    la.class_rank = la.class_reps.size();
    if (la.commutant_rank != la.trivial_rank + la.class_rank)
        throw std::logic_error("logical_algebra: trivial subgroup escapes the commutant");

    for (size_t i = 0; i < la.class_reps.size() && la.abelian; ++i)
        for (size_t j = i + 1; j < la.class_reps.size(); ++j)
            if (!la.class_reps[i].commutes_with(la.class_reps[j])) {
                la.abelian = false;
                break;
            }
    return la;
}

SectorDecomposition sector_decomposition(const StabilizerModel& model, const BitVec& region) {
    SectorDecomposition d;
    BitVec plus = region_plus(model, region);
    auto surrounding = terms_supported_in(model, plus);
    d.log2_total_dim =
        std::int64_t(plus.popcount()) - std::int64_t(group_rank(surrounding));

    LogicalAlgebra la = logical_algebra(model, region);
    d.class_rank = la.class_rank;
    d.class_reps = la.class_reps;
    if (!la.abelian) return d;  // sign patterns do not label sectors then
    if (d.class_rank == 0) {
        d.equal_dims_certified = true;
        d.log2_sector_dim = d.log2_total_dim;
        return d;
    }

    // A mover for representative i: any word commuting with every
    // surrounding term and with the other representatives while
    // anticommuting with representative i. Conjugation by it is a unitary
    // bijection between adjacent sectors, so solvability for every i forces
    // all 2^class_rank sector dimensions to be equal.
    std::vector<size_t> all_ids(model.n_qubits);
    for (size_t q = 0; q < model.n_qubits; ++q) all_ids[q] = q;
    std::vector<BitVec> rows;
    rows.reserve(surrounding.size() + d.class_reps.size());
    for (const auto& h : surrounding) rows.push_back(partner_row(h, all_ids));
    for (const auto& r : d.class_reps) rows.push_back(partner_row(r, all_ids));
    BitMatrix system = BitMatrix::from_rows(rows);

    std::vector<PauliWord> movers;
    for (size_t i = 0; i < d.class_reps.size(); ++i) {
        BitVec rhs(rows.size());
        rhs.set(surrounding.size() + i, true);
        auto sol = system.solve(rhs);
        if (!sol) return d;  // dimensions not certified equal
        PauliWord t = word_from_local(*sol, all_ids, model.n_qubits);
        for (const auto& h : surrounding)
            if (!t.commutes_with(h)) throw std::logic_error("sector mover fails term check");
        for (size_t j = 0; j < d.class_reps.size(); ++j)
            if (t.commutes_with(d.class_reps[j]) != (i != j))
                throw std::logic_error("sector mover fails representative check");
        movers.push_back(t);
    }
    d.sector_movers = std::move(movers);
    d.equal_dims_certified = true;
    d.log2_sector_dim = d.log2_total_dim - std::int64_t(d.class_rank);
    return d;
}

UniformityScan uniformity_scan(const TorusLattice& lat, const StabilizerModel& model,
                               const GroundStateChoice& choice, int cx, int cy, int width_min,
                               int width_max) {
    if (width_min < 2 || width_max < width_min)
        throw std::invalid_argument("uniformity_scan: bad width range");
    UniformityScan scan;
    for (int w = width_min; w <= width_max; ++w) {
        RectAnnulus a =
            make_rect_annulus(lat, lat.wrap_x(cx - w), lat.wrap_y(cy - w), 2 * w + 1, 2 * w + 1, w);
        scan.values.emplace_back(w, invariant_bits(model, choice, a.edges));
    }
    scan.uniform = true;
    for (const auto& [w, v] : scan.values)
        if (v != scan.values.front().second) scan.uniform = false;
    return scan;
}

std::int64_t region_entropy_bits(const StabilizerModel& model, const GroundStateChoice& choice,
                                 const BitVec& region) {
    return entropy_bits(state_group(model, choice), region);
}

std::int64_t cmi_bits(const std::vector<PauliWord>& group_gens, const Tripartition& parts) {
    BitVec xy = parts.x, yz = parts.y, xyz = parts.x;
    xy.xor_with(parts.y);
    yz.xor_with(parts.z);
    xyz.xor_with(parts.y);
    xyz.xor_with(parts.z);
    if (xy.popcount() != parts.x.popcount() + parts.y.popcount() ||
        xyz.popcount() != xy.popcount() + parts.z.popcount())
        throw std::invalid_argument("cmi_bits: parts overlap");
    return entropy_bits(group_gens, xy) + entropy_bits(group_gens, yz) -
           entropy_bits(group_gens, parts.y) - entropy_bits(group_gens, xyz);
}

AreaLawFit area_law_fit(const std::vector<AreaLawPoint>& points) {
    if (points.size() < 2) throw std::invalid_argument("area_law_fit: need at least two regions");
    Rat ll(0), ln(0), nn(0), sl(0), sn(0);
    for (const auto& p : points) {
        Rat l(p.boundary), n(p.contours), s(p.entropy);
        ll = ll + l * l;
        ln = ln + l * n;
        nn = nn + n * n;
        sl = sl + s * l;
        sn = sn + s * n;
    }
    // Least squares for entropy = alpha * boundary - gamma * contours:
    //   alpha ll - gamma ln = sl
    //   alpha ln - gamma nn = sn
    Rat det = ln * ln - ll * nn;
    if (det == Rat(0)) throw std::invalid_argument("area_law_fit: degenerate design");
    AreaLawFit fit;
    fit.alpha = (ln * sn - nn * sl) / det;
    fit.gamma = (ll * sn - ln * sl) / det;
    fit.residual = Rat(0);
    for (const auto& p : points) {
        Rat r = fit.alpha * Rat(p.boundary) - fit.gamma * Rat(p.contours) - Rat(p.entropy);
        fit.residual = fit.residual + r * r;
    }
    return fit;
}

}  // namespace tqi
