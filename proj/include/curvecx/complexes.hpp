#ifndef CURVECX_COMPLEXES_HPP
#define CURVECX_COMPLEXES_HPP

#include <array>
#include <optional>
#include <vector>

#include "curvecx/curves.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

// Finite slice of a curve complex: all essential classes with edge weights
// at most W, with the full pairwise geometric intersection table.
//   C: all classes, edges at i = 0 (disjointness).
//   N: nonseparating classes only, edges at i = 0.
//   G: nonseparating classes only, edges at i = 1.
enum class SliceKind { C, N, G };

struct ComplexSlice {
    SliceKind kind;
    int weight_bound = 0;
    std::vector<CurveClass> vertices;
    std::vector<std::vector<int>> itable;  // symmetric, zero diagonal
    std::vector<std::array<int, 2>> edges;
};

// jobs <= 0 means one worker per available core.
ComplexSlice build_slice(const Triangulation& T, int maxw, SliceKind kind,
                         int jobs = 0);

// Maximal cliques of the disjointness relation within a C- or N-slice.
// A clique is globally maximal when it realizes a full pants decomposition
// (3g-3+p curves); smaller maximal cliques are artifacts of the weight
// bound ("bound-limited").
struct SliceClique {
    std::vector<int> vertices;  // sorted slice indices
    bool globally_maximal = false;
};
std::vector<SliceClique> maximal_simplices(const Triangulation& T,
                                           const ComplexSlice& slice);

// A pants decomposition: 3g-3+p pairwise-disjoint classes cutting the
// surface into 2g-2+p pants.  `pants` boundary entries are (curve index,
// side) pairs as produced by cut_along.
struct PantsDecomposition {
    std::vector<Coords> curves;
    std::vector<CutPiece> pants;
};
std::optional<PantsDecomposition> make_pants_decomposition(
    const Triangulation& T, const std::vector<Coords>& curves);

// Two decomposition curves are adjacent when some pants has both on its
// boundary.
bool pants_adjacent(const PantsDecomposition& P, int a, int b);

// A 4-curve is adjacent to four distinct decomposition curves (the maximum
// possible).
bool is_4_curve(const PantsDecomposition& P, int x);

// Isomorphism of the labeled dual multigraphs (pants as nodes, curves as
// edges, punctures as stubs) respecting the curve correspondence
// corr[i in P] = index in Q.  Returns the pants bijection, or nothing.
std::optional<std::vector<int>> topological_equivalence(
    const PantsDecomposition& P, const PantsDecomposition& Q,
    const std::vector<int>& corr);

// All chains of the given length within the slice (consecutive i = 1,
// other pairs i = 0), as vertex index lists, in lexicographic order.
// `allowed` optionally restricts the vertex pool.
std::vector<std::vector<int>> find_chains(const ComplexSlice& slice, int length,
                                          const std::vector<char>* allowed = nullptr);

}  // namespace curvecx

#endif  // CURVECX_COMPLEXES_HPP
