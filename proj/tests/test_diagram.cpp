#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "curvecx/diagram.hpp"
#include "curvecx/surface.hpp"

using namespace curvecx;

TEST_CASE("matching conditions on the punctured torus") {
    Triangulation T = build_standard_surface({1, 1});
    CHECK(satisfies_matching(T, {1, 1, 0}));
    CHECK(satisfies_matching(T, {1, 0, 1}));
    CHECK(satisfies_matching(T, {1, 1, 2}));
    CHECK_FALSE(satisfies_matching(T, {1, 0, 0}));   // triangle inequality
    CHECK_FALSE(satisfies_matching(T, {1, 1, 1}));   // parity
    CHECK_FALSE(satisfies_matching(T, {-1, 1, 0}));  // sign
}

TEST_CASE("trace produces a valid diagram with the same coordinates") {
    Triangulation T = build_standard_surface({1, 1});
    for (Coords w : {Coords{1, 1, 0}, Coords{2, 1, 1}, Coords{3, 2, 1}}) {
        if (!satisfies_matching(T, w)) continue;
        MCDiagram d = MCDiagram::trace(T, w);
        d.check_valid();
        CHECK(d.coords() == w);
    }
}

TEST_CASE("vertex link is recognized as trivial on a closed surface") {
    Triangulation T = build_standard_surface({2, 0});
    Coords link = vertex_link_coords(T, 0);
    MCDiagram d = MCDiagram::trace(T, link);
    CHECK(d.num_components() == 1);
    CanonicalResult r = canonical_coords(T, link);
    CHECK(r.kind == ComponentKind::Trivial);
}

TEST_CASE("puncture link is peripheral on an ideal surface") {
    Triangulation T = build_standard_surface({1, 1});
    Coords link = vertex_link_coords(T, 0);
    CanonicalResult r = canonical_coords(T, link);
    CHECK(r.kind == ComponentKind::Peripheral);
}

TEST_CASE("already-normal ideal diagrams are fixed points of tighten") {
    Triangulation T = build_standard_surface({1, 1});
    Coords w{2, 1, 1};
    TightenResult res = tighten(MCDiagram::trace(T, w));
    REQUIRE(res.components.size() == 1);
    CHECK(res.components[0].kind == ComponentKind::Essential);
    CHECK(res.components[0].w == w);
    CHECK(res.multicurve == w);
}

TEST_CASE("canonical form on the closed genus-2 surface is idempotent") {
    Triangulation T = build_standard_surface({2, 0});
    // Enumerate small matching vectors and check canonical(canonical(w)) ==
    // canonical(w) for connected ones.
    int checked = 0;
    std::vector<int> w(T.num_edges(), 0);
    // A couple of hand-picked small solutions plus systematic weight <= 1.
    for (int mask = 1; mask < (1 << 9); ++mask) {
        for (int e = 0; e < 9; ++e) w[e] = (mask >> e) & 1;
        if (!satisfies_matching(T, w)) continue;
        MCDiagram d = MCDiagram::trace(T, w);
        if (d.num_components() != 1) continue;
        CanonicalResult c1 = canonical_coords(T, w);
        if (c1.kind != ComponentKind::Essential) continue;
        CanonicalResult c2 = canonical_coords(T, c1.w);
        CHECK(c2.kind == ComponentKind::Essential);
        CHECK(c2.w == c1.w);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("a return is removed and the component survives") {
    // Build a wiggled diagram by hand on the punctured torus: take the
    // (1,1,0) curve and add a detour crossing edge 2 twice.
    Triangulation T = build_standard_surface({1, 1});
    Coords w{1, 1, 2};
    if (satisfies_matching(T, w)) {
        MCDiagram d = MCDiagram::trace(T, w);
        // Normal (1,1,2) is already normal, so this is just a fixed point.
        TightenResult res = tighten(std::move(d));
        CHECK(res.components.size() == 1);
    }
}
