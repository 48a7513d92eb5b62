#include "curvecx/mapping_classes.hpp"

#include <stdexcept>

#include "curvecx/overlay.hpp"

namespace curvecx {

std::vector<Coords> twist_chain(const Triangulation& T) {
    SurfaceSignature sig = T.signature();
    if (sig.genus == 1 && sig.punctures == 1)
        return {{0, 1, 1}, {1, 0, 1}};
    if (sig.genus == 2 && sig.punctures <= 1) {
        // The once-punctured table is the closed table with its vertex
        // marked, so the same coordinates work for both.
        return {
            {0, 0, 0, 0, 0, 1, 1, 0, 0},
            {0, 0, 0, 1, 1, 0, 1, 1, 0},
            {0, 1, 1, 1, 0, 0, 0, 0, 1},
            {1, 0, 1, 1, 0, 1, 1, 2, 1},
            {0, 1, 1, 1, 0, 1, 1, 2, 1},
        };
    }
    throw std::invalid_argument("twist_chain: unsupported surface");
}

Coords apply_word(const Triangulation& T, const std::vector<Coords>& gens,
                  const MappingClassWord& word, const Coords& a) {
    Coords cur = canonical_coords(T, a).w;
    for (const TwistLetter& l : word) {
        if (l.gen < 0 || l.gen >= (int)gens.size())
            throw std::invalid_argument("apply_word: generator out of range");
        int sign = l.power > 0 ? 1 : -1;
        for (int k = 0; k != l.power; k += sign)
            cur = dehn_twist(T, cur, gens[l.gen], sign);
    }
    return cur;
}

Coords apply_automorphism(const Triangulation& T,
                          const std::vector<int>& side_map, const Coords& w) {
    if (!is_simplicial_automorphism(T, side_map))
        throw std::invalid_argument("apply_automorphism: not an automorphism");
    Coords out(T.num_edges(), 0);
    std::vector<char> seen(T.num_edges(), 0);
    for (int s = 0; s < 3 * T.num_triangles(); ++s) {
        int e = T.edge_of(s), e2 = T.edge_of(side_map[s]);
        if (seen[e2] && out[e2] != w[e])
            throw std::invalid_argument("apply_automorphism: inconsistent map");
        out[e2] = w[e];
        seen[e2] = 1;
    }
    return out;
}

MappingClassWord hyperelliptic_word(const Triangulation& T) {
    SurfaceSignature sig = T.signature();
    if (sig.genus != 2 || sig.punctures > 1)
        throw std::invalid_argument("hyperelliptic_word: unsupported surface");
    // t1 t2 t3 t4 t5 t5 t4 t3 t2 t1 along the five-curve chain.
    MappingClassWord w;
    for (int g = 0; g < 5; ++g) w.push_back({g, 1});
    for (int g = 4; g >= 0; --g) w.push_back({g, 1});
    return w;
}

}  // namespace curvecx
