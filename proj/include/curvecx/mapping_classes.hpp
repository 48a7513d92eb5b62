#ifndef CURVECX_MAPPING_CLASSES_HPP
#define CURVECX_MAPPING_CLASSES_HPP

#include <vector>

#include "curvecx/normal_curve.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

// A chain of simple closed curves on the standard surface: consecutive
// curves meet exactly once, non-consecutive ones are disjoint.  Dehn twists
// about a long enough chain generate the mapping class group (together with
// the hyperelliptic involution where needed); for the surfaces supported
// here the chain has length 2 (torus) or 5 (genus two).
std::vector<Coords> twist_chain(const Triangulation& T);

// One letter of a mapping class word: the Dehn twist about generator curve
// `gen` (an index into a generator list), raised to `power` (any nonzero
// integer; negative means the inverse twist).
struct TwistLetter {
    int gen;
    int power;
};
using MappingClassWord = std::vector<TwistLetter>;

// Apply a word to a curve class.  Letters act in order: the first letter of
// the word is applied first.  Returns canonical coordinates.
Coords apply_word(const Triangulation& T, const std::vector<Coords>& gens,
                  const MappingClassWord& word, const Coords& a);

// Action of a simplicial automorphism, given as a map on sides, on normal
// coordinates.
Coords apply_automorphism(const Triangulation& T,
                          const std::vector<int>& side_map, const Coords& w);

// The hyperelliptic involution of the standard closed genus-two surface as
// a twist word in the chain generators.
MappingClassWord hyperelliptic_word(const Triangulation& T);

}  // namespace curvecx

#endif  // CURVECX_MAPPING_CLASSES_HPP
