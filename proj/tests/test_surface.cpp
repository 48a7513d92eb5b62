#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvecx/surface.hpp"

using namespace curvecx;

TEST_CASE("standard tables have the right Euler characteristic") {
    struct Row {
        int g, p, V, E, F;
    };
    // (V counts punctures here; euler_characteristic excludes them.)
    const Row rows[] = {
        {1, 1, 1, 3, 2},  {2, 0, 1, 9, 6},   {2, 1, 1, 9, 6},
        {3, 0, 1, 15, 10}, {3, 1, 1, 15, 10}, {3, 2, 2, 18, 12},
        {4, 0, 1, 21, 14}, {4, 1, 1, 21, 14}, {2, 3, 3, 15, 10},
        {1, 2, 2, 6, 4},
    };
    for (const Row& r : rows) {
        CAPTURE(r.g);
        CAPTURE(r.p);
        Triangulation T = build_standard_surface({r.g, r.p});
        CHECK(T.num_vertices() == r.V);
        CHECK(T.num_edges() == r.E);
        CHECK(T.num_triangles() == r.F);
        CHECK(T.euler_characteristic() == 2 - 2 * r.g - r.p);
        if (r.p == 0) {
            CHECK(T.closed());
            CHECK(T.num_vertices() == 1);
        } else {
            CHECK((int)T.punctures().size() == r.p);
        }
    }
}

TEST_CASE("punctured spheres") {
    for (int k = 3; k <= 6; ++k) {
        Triangulation T = build_punctured_sphere(k);
        CHECK(T.euler_characteristic() == 2 - k);
        CHECK((int)T.punctures().size() == k);
    }
    CHECK_THROWS(build_punctured_sphere(2));
}

TEST_CASE("signatures below the engine floor are rejected") {
    CHECK_THROWS(build_standard_surface({0, 5}));
    CHECK_THROWS(build_standard_surface({1, 0}));
}

TEST_CASE("construction is deterministic") {
    Triangulation a = build_standard_surface({2, 1});
    Triangulation b = build_standard_surface({2, 1});
    CHECK(a.hash() == b.hash());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("triangulation JSON round-trip") {
    Triangulation a = build_standard_surface({3, 2});
    Triangulation b = Triangulation::from_json(a.to_json());
    CHECK(a.hash() == b.hash());
}

TEST_CASE("the genus-2 table carries the hyperelliptic involution") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<int> m = hyperelliptic_side_map(T);
    bool orient = false;
    REQUIRE(is_simplicial_automorphism(T, m, &orient));
    CHECK(orient);
    // Order 2.
    for (int s = 0; s < T.num_sides(); ++s) CHECK(m[m[s]] == s);
    // Also available on (2,1).
    Triangulation T1 = build_standard_surface({2, 1});
    CHECK_NOTHROW(hyperelliptic_side_map(T1));
}

TEST_CASE("rotation structure is a permutation of corners") {
    Triangulation T = build_standard_surface({2, 0});
    int total = 0;
    for (const auto& orbit : T.vertex_corners()) total += (int)orbit.size();
    CHECK(total == T.num_sides());
}
