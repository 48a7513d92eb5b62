#ifndef CURVECX_PREDICATES_HPP
#define CURVECX_PREDICATES_HPP

#include <array>
#include <optional>
#include <vector>

#include "curvecx/complexes.hpp"

namespace curvecx {

// Disjoint classes that bound a pair of pants together with one boundary
// component (puncture) of the surface.
bool is_peripheral_pair(const Triangulation& T, const Coords& a,
                        const Coords& b);

// Three distinct pairwise-disjoint classes bounding an embedded pair of
// pants (one side of each on one genus-zero piece, no punctures).
bool bounds_pants(const Triangulation& T, const Coords& a, const Coords& b,
                  const Coords& c);

// Geometric intersection two with algebraic (homological) intersection zero.
bool geo2_alg0(const Triangulation& T, const Coords& a, const Coords& b);

// Certificate that two nonseparating classes intersect exactly once: five
// auxiliary classes alpha3..alpha7 whose zero/nonzero intersection pattern
// with alpha1, alpha2 and each other matches the fixed seven-curve
// configuration, together with the torus-with-two-holes cut condition.
// Entries are slice vertex indices; alpha[0], alpha[1] are the inputs.
// On a closed surface alpha5 and alpha6 coincide (two parallel copies of
// one class cut off the two-holed torus), so alpha[4] == alpha[5] there.
struct IntersectionOneCertificate {
    std::array<int, 7> alpha;
};

std::optional<IntersectionOneCertificate> find_intersection_one_certificate(
    const Triangulation& T, const ComplexSlice& slice, int a1, int a2);

// Checks that a candidate tuple satisfies both certificate conditions
// (pattern and cut condition); exposed for tests.
bool check_intersection_one_certificate(const Triangulation& T,
                                        const ComplexSlice& slice,
                                        const std::array<int, 7>& alpha);

// Pentagons and n-vertex labels in a slice over a sphere with k >= 5
// punctures.  A pentagon is a cyclically-ordered 5-tuple with consecutive
// intersections zero and all others nonzero, reported as its
// lexicographically least rotation.  labels[v] holds the hole counts of the
// two disks the vertex bounds, sorted.
struct PentagonReport {
    std::vector<std::array<int, 5>> pentagons;
    std::vector<std::array<int, 2>> labels;
};
PentagonReport pentagon_and_nvertex(const Triangulation& T,
                                    const ComplexSlice& slice);

}  // namespace curvecx

#endif  // CURVECX_PREDICATES_HPP
