#ifndef CURVECX_CURVES_HPP
#define CURVECX_CURVES_HPP

#include <vector>

#include "curvecx/diagram.hpp"
#include "curvecx/normal_curve.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

// Pairing of the multicurve with the fundamental cycles of a spanning tree
// of the dual graph, mod 2.  This is the image of the curve's class under
// the mod-2 intersection form of the filled (puncture-free) surface: the
// vector is zero exactly for separating curves.
std::vector<int> mod2_class(const Triangulation& T, const Coords& w);

bool is_nonseparating(const Triangulation& T, const Coords& w);

// All essential connected isotopy classes whose canonical coordinates have
// every edge weight <= maxw, sorted by (total weight, lex).
std::vector<CurveClass> enumerate_curves(const Triangulation& T, int maxw);

// One complementary piece of a multicurve.
struct CutPiece {
    int genus = 0;
    int punctures = 0;  // punctures of the ambient surface inside the piece
    // Boundary circles as (class index, side); the two sides of class i are
    // 0 and 1 (a nonseparating curve contributes both to one piece).
    std::vector<std::array<int, 2>> boundary;
};

// Cut the surface along pairwise-disjoint classes (canonical coordinates).
std::vector<CutPiece> cut_along(const Triangulation& T,
                                const std::vector<Coords>& classes);

bool is_pants_decomposition(const Triangulation& T,
                            const std::vector<Coords>& classes);

// Index into cut_along(T, curves) of the piece containing the class x;
// x must be disjoint from every curve and not isotopic to any of them.
int piece_containing(const Triangulation& T, const std::vector<Coords>& curves,
                     const Coords& x);

}  // namespace curvecx

#endif  // CURVECX_CURVES_HPP
