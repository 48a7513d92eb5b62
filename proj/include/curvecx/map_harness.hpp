#ifndef CURVECX_MAP_HARNESS_HPP
#define CURVECX_MAP_HARNESS_HPP

#include <array>
#include <optional>
#include <vector>

#include "curvecx/complexes.hpp"
#include "curvecx/mapping_classes.hpp"

namespace curvecx {

// A map on the vertices of a slice: image[i] holds canonical coordinates of
// the image of vertex i.  Images are arbitrary classes on the surface and
// need not lie inside any enumerated slice.  An empty coordinate vector
// means the map is not defined at that vertex (used for partial maps on the
// nonseparating part of a C-slice).
struct VertexMap {
    std::vector<Coords> image;
};

// The identity on a slice.
VertexMap identity_map(const ComplexSlice& domain);

// The map induced by a twist word: every vertex is pushed through the word.
VertexMap induced_map(const Triangulation& T, const std::vector<Coords>& gens,
                      const MappingClassWord& word, const ComplexSlice& domain);

struct MapCheckReport {
    bool injective = true;       // distinct vertices, distinct images
    bool simplicial = true;      // i = 0 is preserved forward
    bool superinjective = true;  // i = 0 is preserved in both directions
    long long pairs_checked = 0;
    std::vector<std::array<int, 2>> violations;  // offending vertex pairs
};

// Exact check over every pair of domain vertices where the map is defined.
MapCheckReport check_map(const Triangulation& T, const ComplexSlice& domain,
                         const VertexMap& m);

// Deterministic sampled check: `samples` vertex pairs drawn from the seeded
// generator; each sampled pair is tested exactly.
MapCheckReport check_map_sampled(const Triangulation& T,
                                 const ComplexSlice& domain, const VertexMap& m,
                                 unsigned seed, int samples);

// --- extension of a nonseparating-vertex map to separating vertices ------

enum class ExtendStatus { Ok, NoCandidate, Ambiguous };

struct ExtendResult {
    ExtendStatus status = ExtendStatus::Ok;
    int failed_vertex = -1;  // first separating vertex without a unique image
    VertexMap map;           // full images; nonseparating entries copied
    // Per separating vertex: surviving candidates after refinement
    // (1 everywhere on success); -1 marks nonseparating vertices.
    std::vector<int> candidate_counts;
};

// Extend a map defined on the nonseparating vertices of a C-slice to its
// separating vertices.  For a separating class c, each complementary piece
// is filled by a twist chain of nonseparating slice classes disjoint from c
// (length 2 for a one-holed torus, 3 when the piece carries the puncture);
// the image of c is the unique class in `separating_pool` disjoint from all
// the chains' images and with the matching cut type.  Several surviving
// candidates trigger refinement by further chains before the vertex is
// reported Ambiguous.
ExtendResult extend_to_C(const Triangulation& T, const ComplexSlice& cslice,
                         const VertexMap& lambda,
                         const std::vector<Coords>& separating_pool);

// --- realization of a vertex map by a twist word --------------------------

// Search for a word in the Dehn twists about `gens` (each letter one twist,
// either sign) of length at most max_len whose induced map agrees with
// `target` on the whole domain.  The search meets in the middle on the
// tuple of generator-curve images, then verifies full agreement; matches
// that fail full verification are discarded and the search continues.
// Requires every generator class to be a vertex of the domain.
std::optional<MappingClassWord> realize_by_homeomorphism(
    const Triangulation& T, const std::vector<Coords>& gens,
    const ComplexSlice& domain, const VertexMap& target, int max_len);

}  // namespace curvecx

#endif  // CURVECX_MAP_HARNESS_HPP
