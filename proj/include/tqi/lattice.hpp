#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tqi/bitvec.hpp"

namespace tqi {

// Square lattice on a torus with one qubit per edge. Horizontal edges come
// first in the index space, then vertical ones:
//   h_edge(x,y): (x,y) -> (x+1,y), id y*lx + x
//   v_edge(x,y): (x,y) -> (x,y+1), id lx*ly + y*lx + x
struct TorusLattice {
    int lx = 0, ly = 0;

    TorusLattice(int lx_, int ly_);

    int num_edges() const { return 2 * lx * ly; }
    int num_sites() const { return lx * ly; }

    int wrap_x(int x) const { return ((x % lx) + lx) % lx; }
    int wrap_y(int y) const { return ((y % ly) + ly) % ly; }

    int h_edge(int x, int y) const { return wrap_y(y) * lx + wrap_x(x); }
    int v_edge(int x, int y) const { return lx * ly + wrap_y(y) * lx + wrap_x(x); }

    bool is_horizontal(int edge) const { return edge < lx * ly; }
    // (x, y) of the edge's base vertex.
    std::pair<int, int> edge_origin(int edge) const;

    // Vertex star: the four edges meeting (x, y).
    std::vector<int> star_edges(int x, int y) const;
    // Face with lower-left corner (x, y).
    std::vector<int> plaquette_edges(int x, int y) const;

    // Both endpoints of an edge, as site ids y*lx + x.
    std::pair<int, int> edge_endpoints(int edge) const;

    // All edges of the closed w x h cell block anchored at (ax, ay),
    // perimeter included. Requires 1 <= w < lx and 1 <= h < ly.
    BitVec closed_rect_edges(int ax, int ay, int w, int h) const;

    // Number of connected components of an edge set (edges touching at a
    // shared vertex are connected).
    int edge_components(const BitVec& mask) const;
};

// Rectangular annulus with a one-cell standoff between the region and the
// declared hole: the region is the closed outer block minus the closed
// block of the hole expanded by one cell on every side. The expansion keeps
// the region's stabilizer structure clear of the hole boundary.
struct RectAnnulus {
    int ax = 0, ay = 0;        // outer block anchor
    int outer_w = 0, outer_h = 0;  // outer block size in cells
    int width = 0;             // radial thickness in cells
    int hole_x = 0, hole_y = 0;    // declared hole anchor
    int hole_w = 0, hole_h = 0;    // declared hole size

    BitVec edges;              // the annulus region A
};

// Builds and validates the annulus; throws std::invalid_argument with the
// failing condition when the request does not produce an annulus (width
// < 2, hole vanishes, block does not fit, or the hole side of the
// complement connects to the outside).
RectAnnulus make_rect_annulus(const TorusLattice& lat, int ax, int ay, int outer_w, int outer_h,
                              int width);

// Grows the annulus hole and shrinks its thickness, keeping the outer block
// centered; used after constant-depth circuits with spread radius r.
RectAnnulus shrink_annulus(const TorusLattice& lat, const RectAnnulus& a, int r);

struct Tripartition {
    BitVec x, y, z;
};

// Splits an annulus into left band X, right band Z and the two connecting
// arcs Y such that no lattice term (diameter-1 support) touches both X and
// Z. Requires outer_w >= 5.
Tripartition tripartition(const TorusLattice& lat, const RectAnnulus& a);

// Simply connected block region for entropy scans.
struct GeomRegion {
    BitVec edges;
    // Dual contour length of each boundary component (outer first).
    std::vector<int64_t> boundary_lengths;
};

GeomRegion disc_region(const TorusLattice& lat, int ax, int ay, int w, int h);

// Closed outer block minus the open interior of a hole block (the hole
// perimeter stays in the region). hole coordinates are relative to (ax,ay);
// requires hw, hh >= 2 and the hole strictly inside the outer block.
GeomRegion ring_region(const TorusLattice& lat, int ax, int ay, int w, int h, int hx, int hy,
                       int hw, int hh);

}  // namespace tqi
