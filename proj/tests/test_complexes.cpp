#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "curvecx/complexes.hpp"
#include "curvecx/mapping_classes.hpp"
#include "curvecx/overlay.hpp"
#include "curvecx/surface.hpp"

using namespace curvecx;

namespace {
// Two disjoint classes are the same class iff they cobound an annulus; used
// to validate that canonical coordinates never duplicate a class.
bool cobound_annulus(const Triangulation& T, const Coords& a, const Coords& b) {
    for (const CutPiece& p : cut_along(T, {a, b})) {
        if (p.genus != 0 || p.punctures != 0 || p.boundary.size() != 2) continue;
        if (p.boundary[0][0] != p.boundary[1][0]) return true;
    }
    return false;
}
}  // namespace

TEST_CASE("slice construction and class uniqueness on genus two") {
    Triangulation T = build_standard_surface({2, 0});
    ComplexSlice C = build_slice(T, 2, SliceKind::C);
    CHECK(C.vertices.size() == 100);
    ComplexSlice N = build_slice(T, 2, SliceKind::N);
    CHECK(N.vertices.size() == 90);
    for (const CurveClass& v : N.vertices) CHECK(v.nonseparating);
    for (size_t i = 0; i < C.vertices.size(); ++i) {
        CHECK(C.itable[i][i] == 0);
        for (size_t j = i + 1; j < C.vertices.size(); ++j)
            CHECK(C.itable[i][j] == C.itable[j][i]);
    }
    // Distinct vertices never cobound an annulus (coordinates are canonical).
    for (const std::array<int, 2>& e : C.edges)
        CHECK_FALSE(cobound_annulus(T, C.vertices[e[0]].w, C.vertices[e[1]].w));
    // G-slice edges are exactly the intersection-one pairs.
    ComplexSlice G = build_slice(T, 2, SliceKind::G);
    for (const std::array<int, 2>& e : G.edges)
        CHECK(G.itable[e[0]][e[1]] == 1);
}

TEST_CASE("maximal cliques and pants structure") {
    Triangulation T = build_standard_surface({2, 0});
    ComplexSlice C = build_slice(T, 2, SliceKind::C);
    std::vector<SliceClique> cliques = maximal_simplices(T, C);
    CHECK(cliques.size() > 0);
    int global = 0;
    for (const SliceClique& c : cliques) {
        CHECK(c.vertices.size() <= 3);
        if (!c.globally_maximal) continue;
        ++global;
        REQUIRE(c.vertices.size() == 3);
        std::vector<Coords> cs;
        for (int v : c.vertices) cs.push_back(C.vertices[v].w);
        auto pd = make_pants_decomposition(T, cs);
        REQUIRE(pd.has_value());
        CHECK(pd->pants.size() == 2);
    }
    CHECK(global > 0);
}

TEST_CASE("adjacency and the separating-curve barrier") {
    Triangulation T = build_standard_surface({2, 0});
    ComplexSlice C = build_slice(T, 2, SliceKind::C);
    std::vector<SliceClique> cliques = maximal_simplices(T, C);
    int all_nonsep_seen = 0, with_sep_seen = 0;
    for (const SliceClique& c : cliques) {
        if (!c.globally_maximal) continue;
        std::vector<Coords> cs;
        int nonsep = 0;
        for (int v : c.vertices) {
            cs.push_back(C.vertices[v].w);
            nonsep += C.vertices[v].nonseparating;
        }
        auto pd = make_pants_decomposition(T, cs);
        REQUIRE(pd.has_value());
        if (nonsep == 3) {
            ++all_nonsep_seen;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) CHECK(pants_adjacent(*pd, a, b));
        } else if (nonsep == 2) {
            ++with_sep_seen;
            // The separating curve is adjacent to both others; the two
            // nonseparating curves sit on opposite sides of it.
            int sep = -1;
            for (int k = 0; k < 3; ++k)
                if (!C.vertices[c.vertices[k]].nonseparating) sep = k;
            REQUIRE(sep >= 0);
            int x = (sep + 1) % 3, y = (sep + 2) % 3;
            CHECK(pants_adjacent(*pd, sep, x));
            CHECK(pants_adjacent(*pd, sep, y));
            CHECK_FALSE(pants_adjacent(*pd, x, y));
        }
        for (int k = 0; k < 3; ++k) CHECK_FALSE(is_4_curve(*pd, k));
    }
    CHECK(all_nonsep_seen > 0);
    CHECK(with_sep_seen > 0);
}

TEST_CASE("topological equivalence of pants decompositions") {
    Triangulation T = build_standard_surface({2, 0});
    ComplexSlice C = build_slice(T, 2, SliceKind::C);
    std::vector<SliceClique> cliques = maximal_simplices(T, C);
    std::optional<PantsDecomposition> all_nonsep, with_sep, other_nonsep;
    for (const SliceClique& c : cliques) {
        if (!c.globally_maximal) continue;
        std::vector<Coords> cs;
        int nonsep = 0;
        for (int v : c.vertices) {
            cs.push_back(C.vertices[v].w);
            nonsep += C.vertices[v].nonseparating;
        }
        auto pd = make_pants_decomposition(T, cs);
        REQUIRE(pd.has_value());
        if (nonsep == 3 && !all_nonsep)
            all_nonsep = pd;
        else if (nonsep == 3 && !other_nonsep)
            other_nonsep = pd;
        else if (nonsep == 2 && !with_sep)
            with_sep = pd;
        if (all_nonsep && with_sep && other_nonsep) break;
    }
    REQUIRE(all_nonsep.has_value());
    REQUIRE(with_sep.has_value());
    REQUIRE(other_nonsep.has_value());
    std::vector<int> id{0, 1, 2};
    CHECK(topological_equivalence(*all_nonsep, *all_nonsep, id).has_value());
    CHECK(topological_equivalence(*all_nonsep, *other_nonsep, id).has_value());
    CHECK_FALSE(topological_equivalence(*all_nonsep, *with_sep, id).has_value());
}

TEST_CASE("chains in the N-slice") {
    Triangulation T = build_standard_surface({2, 0});
    ComplexSlice N = build_slice(T, 2, SliceKind::N);
    std::vector<Coords> fam = twist_chain(T);
    // Locate the first three chain curves in the slice.
    std::vector<int> idx;
    for (int k = 0; k < 3; ++k)
        for (size_t v = 0; v < N.vertices.size(); ++v)
            if (N.vertices[v].w == fam[k]) idx.push_back((int)v);
    REQUIRE(idx.size() == 3);
    std::vector<std::vector<int>> chains = find_chains(N, 3);
    CHECK(std::find(chains.begin(), chains.end(), idx) != chains.end());
    std::vector<int> rev(idx.rbegin(), idx.rend());
    CHECK(std::find(chains.begin(), chains.end(), rev) != chains.end());
}
