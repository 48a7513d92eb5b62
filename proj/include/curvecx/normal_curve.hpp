#ifndef CURVECX_NORMAL_CURVE_HPP
#define CURVECX_NORMAL_CURVE_HPP

#include <array>
#include <vector>

#include "curvecx/surface.hpp"

namespace curvecx {

// Per-edge crossing counts of a multicurve in normal position.
using Coords = std::vector<int>;

// Triangle inequalities (x <= y + z cyclically) and parity (x+y+z even) in
// every triangle.
bool satisfies_matching(const Triangulation& T, const Coords& w);

// Corner coordinates of triangle t: a[k] = number of arcs cutting off the
// corner at the head of side k (between sides k and k+1).
std::array<int, 3> corner_coords(const Triangulation& T, const Coords& w, int t);

// Coordinates of the link of vertex v: one crossing per edge-end at v.
Coords vertex_link_coords(const Triangulation& T, int v);

// An isotopy class of an essential connected simple closed curve, identified
// by canonical normal coordinates.
struct CurveClass {
    Coords w;
    bool nonseparating = false;

    bool operator==(const CurveClass& o) const { return w == o.w; }
    bool operator<(const CurveClass& o) const { return w < o.w; }
};

}  // namespace curvecx

#endif  // CURVECX_NORMAL_CURVE_HPP
