#include "tqi/lattice.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace tqi {

TorusLattice::TorusLattice(int lx_, int ly_) : lx(lx_), ly(ly_) {
    if (lx < 2 || ly < 2) throw std::invalid_argument("torus requires lx, ly >= 2");
}

std::pair<int, int> TorusLattice::edge_origin(int edge) const {
    if (edge < 0 || edge >= num_edges()) throw std::out_of_range("edge id out of range");
    int base = is_horizontal(edge) ? edge : edge - lx * ly;
    return {base % lx, base / lx};
}

std::vector<int> TorusLattice::star_edges(int x, int y) const {
    return {h_edge(x, y), h_edge(x - 1, y), v_edge(x, y), v_edge(x, y - 1)};
}

std::vector<int> TorusLattice::plaquette_edges(int x, int y) const {
    return {h_edge(x, y), h_edge(x, y + 1), v_edge(x, y), v_edge(x + 1, y)};
}

std::pair<int, int> TorusLattice::edge_endpoints(int edge) const {
    auto [x, y] = edge_origin(edge);
    if (is_horizontal(edge)) return {y * lx + x, y * lx + wrap_x(x + 1)};
    return {y * lx + x, wrap_y(y + 1) * lx + x};
}

BitVec TorusLattice::closed_rect_edges(int ax, int ay, int w, int h) const {
    if (w < 1 || h < 1) throw std::invalid_argument("closed_rect_edges: block must be at least 1x1");
    if (w >= lx || h >= ly)
        throw std::invalid_argument("closed_rect_edges: block does not fit on the torus");
    BitVec mask(num_edges());
    for (int y = ay; y <= ay + h; ++y)
        for (int x = ax; x < ax + w; ++x) mask.set(h_edge(x, y), true);
    for (int y = ay; y < ay + h; ++y)
        for (int x = ax; x <= ax + w; ++x) mask.set(v_edge(x, y), true);
    return mask;
}

int TorusLattice::edge_components(const BitVec& mask) const {
    std::vector<int> parent(num_sites());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (int e = 0; e < num_edges(); ++e) {
        if (!mask.get(e)) continue;
        auto [a, b] = edge_endpoints(e);
        parent[find(a)] = find(b);
    }
    std::vector<bool> seen(num_sites(), false);
    int count = 0;
    for (int e = 0; e < num_edges(); ++e) {
        if (!mask.get(e)) continue;
        int root = find(edge_endpoints(e).first);
        if (!seen[root]) {
            seen[root] = true;
            ++count;
        }
    }
    return count;
}

RectAnnulus make_rect_annulus(const TorusLattice& lat, int ax, int ay, int outer_w, int outer_h,
                              int width) {
    if (width < 2)
        throw std::invalid_argument(
            "annulus width must be at least 2 (one cell of standoff plus the band itself)");
    RectAnnulus a;
    a.ax = ax;
    a.ay = ay;
    a.outer_w = outer_w;
    a.outer_h = outer_h;
    a.width = width;
    a.hole_w = outer_w - 2 * width;
    a.hole_h = outer_h - 2 * width;
    if (a.hole_w < 1 || a.hole_h < 1)
        throw std::invalid_argument("annulus hole vanishes: need outer size > 2*width");
    a.hole_x = ax + width;
    a.hole_y = ay + width;

    BitVec outer = lat.closed_rect_edges(ax, ay, outer_w, outer_h);
    // One-cell standoff: remove the closed block of the hole grown by one
    // cell on every side, so the region never touches the hole boundary.
    BitVec grown = lat.closed_rect_edges(a.hole_x - 1, a.hole_y - 1, a.hole_w + 2, a.hole_h + 2);
    a.edges = BitVec(lat.num_edges());
    for (int e = 0; e < lat.num_edges(); ++e)
        if (outer.get(e) && !grown.get(e)) a.edges.set(e, true);

    // Topology: the hole side of the complement must not connect to the
    // outside. (The outside may itself be a disconnected zero-width seam
    // when the block fills the torus up to one cell; that is still an
    // annulus.)
    BitVec complement(lat.num_edges());
    for (int e = 0; e < lat.num_edges(); ++e) complement.set(e, !a.edges.get(e));
    BitVec hole_side(lat.num_edges());
    for (int e = 0; e < lat.num_edges(); ++e)
        if (complement.get(e) && grown.get(e)) hole_side.set(e, true);
    if (!hole_side.any()) throw std::logic_error("annulus lost its hole");
    if (lat.edge_components(complement) !=
        lat.edge_components(hole_side) + [&] {
            BitVec outside(lat.num_edges());
            for (int e = 0; e < lat.num_edges(); ++e)
                if (complement.get(e) && !grown.get(e)) outside.set(e, true);
            return outside.any() ? lat.edge_components(outside) : 0;
        }())
        throw std::invalid_argument("annulus hole connects to the outside (torus too small)");
    if (lat.edge_components(a.edges) != 1)
        throw std::invalid_argument("annulus region is not connected");
    return a;
}

RectAnnulus shrink_annulus(const TorusLattice& lat, const RectAnnulus& a, int r) {
    if (r < 0 || r % 2 != 0) throw std::invalid_argument("shrink radius must be even and >= 0");
    int m = r / 2;
    return make_rect_annulus(lat, a.ax + m, a.ay + m, a.outer_w - r, a.outer_h - r, a.width - r);
}

Tripartition tripartition(const TorusLattice& lat, const RectAnnulus& a) {
    if (a.outer_w < 5)
        throw std::invalid_argument("tripartition requires outer width >= 5 for a separating band");
    Tripartition t{BitVec(lat.num_edges()), BitVec(lat.num_edges()), BitVec(lat.num_edges())};
    for (int e = 0; e < lat.num_edges(); ++e) {
        if (!a.edges.get(e)) continue;
        auto [x, y] = lat.edge_origin(e);
        (void)y;
        int rel = lat.wrap_x(x - a.ax);
        // doubled x-position of the edge midpoint relative to the anchor
        int pos2 = lat.is_horizontal(e) ? 2 * rel + 1 : 2 * rel;
        if (pos2 <= 3)
            t.x.set(e, true);
        else if (pos2 >= 2 * a.outer_w - 3)
            t.z.set(e, true);
        else
            t.y.set(e, true);
    }
    // No star or plaquette may touch both X and Z.
    for (int y = 0; y < lat.ly; ++y)
        for (int x = 0; x < lat.lx; ++x) {
            for (const auto& edges : {lat.star_edges(x, y), lat.plaquette_edges(x, y)}) {
                bool in_x = false, in_z = false;
                for (int e : edges) {
                    in_x = in_x || t.x.get(e);
                    in_z = in_z || t.z.get(e);
                }
                if (in_x && in_z) throw std::logic_error("tripartition bands are not separated");
            }
        }
    return t;
}

GeomRegion disc_region(const TorusLattice& lat, int ax, int ay, int w, int h) {
    GeomRegion r;
    r.edges = lat.closed_rect_edges(ax, ay, w, h);
    r.boundary_lengths = {2 * int64_t(w + h)};
    return r;
}

GeomRegion ring_region(const TorusLattice& lat, int ax, int ay, int w, int h, int hx, int hy,
                       int hw, int hh) {
    if (hw < 2 || hh < 2)
        throw std::invalid_argument("ring_region hole must be at least 2x2 to have an interior");
    if (hx < 1 || hy < 1 || hx + hw > w - 1 || hy + hh > h - 1)
        throw std::invalid_argument("ring_region hole must sit strictly inside the outer block");
    GeomRegion r;
    r.edges = lat.closed_rect_edges(ax, ay, w, h);
    // Remove the open interior of the hole; its perimeter stays in the region.
    for (int y = hy + 1; y <= hy + hh - 1; ++y)
        for (int x = hx; x < hx + hw; ++x) r.edges.set(lat.h_edge(ax + x, ay + y), false);
    for (int y = hy; y < hy + hh; ++y)
        for (int x = hx + 1; x <= hx + hw - 1; ++x) r.edges.set(lat.v_edge(ax + x, ay + y), false);
    r.boundary_lengths = {2 * int64_t(w + h), 2 * int64_t((hw - 1) + (hh - 1))};
    return r;
}

}  // namespace tqi
