#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvecx/curves.hpp"
#include "curvecx/mapping_classes.hpp"
#include "curvecx/overlay.hpp"
#include "curvecx/surface.hpp"

using namespace curvecx;

TEST_CASE("twist chains have the chain intersection pattern") {
    for (SurfaceSignature sig :
         {SurfaceSignature{1, 1}, SurfaceSignature{2, 0}, SurfaceSignature{2, 1}}) {
        Triangulation T = build_standard_surface(sig);
        std::vector<Coords> ch = twist_chain(T);
        CHECK(ch.size() == (sig.genus == 1 ? 2 : 5));
        for (size_t i = 0; i < ch.size(); ++i) {
            CHECK(is_nonseparating(T, ch[i]));
            CHECK(canonical_coords(T, ch[i]).w == ch[i]);
            for (size_t j = i + 1; j < ch.size(); ++j)
                CHECK(geometric_intersection(T, ch[i], ch[j]) == (j == i + 1 ? 1 : 0));
        }
    }
}

TEST_CASE("twists are invertible and satisfy braid and commutation relations") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<Coords> ch = twist_chain(T);
    for (const CurveClass& c : enumerate_curves(T, 1)) {
        CHECK(apply_word(T, ch, {{2, 1}, {2, -1}}, c.w) == c.w);
        CHECK(apply_word(T, ch, {{3, -2}, {3, 2}}, c.w) == c.w);
        CHECK(apply_word(T, ch, {{0, 1}, {1, 1}, {0, 1}}, c.w) ==
              apply_word(T, ch, {{1, 1}, {0, 1}, {1, 1}}, c.w));
        CHECK(apply_word(T, ch, {{0, 1}, {2, 1}}, c.w) ==
              apply_word(T, ch, {{2, 1}, {0, 1}}, c.w));
    }
}

TEST_CASE("torus chain relation: (t1 t2)^6 is the identity") {
    Triangulation T = build_standard_surface({1, 1});
    std::vector<Coords> ch = twist_chain(T);
    MappingClassWord w;
    for (int r = 0; r < 6; ++r) {
        w.push_back({0, 1});
        w.push_back({1, 1});
    }
    for (const CurveClass& c : enumerate_curves(T, 3))
        CHECK(apply_word(T, ch, w, c.w) == c.w);
}

TEST_CASE("genus-two chain relation: (t1..t5)^6 is the identity") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<Coords> ch = twist_chain(T);
    MappingClassWord w;
    for (int r = 0; r < 6; ++r)
        for (int g = 0; g < 5; ++g) w.push_back({g, 1});
    for (const CurveClass& c : enumerate_curves(T, 1))
        CHECK(apply_word(T, ch, w, c.w) == c.w);
}

TEST_CASE("hyperelliptic word matches the simplicial involution") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<Coords> ch = twist_chain(T);
    MappingClassWord hw = hyperelliptic_word(T);
    std::vector<int> sm = hyperelliptic_side_map(T);
    for (const CurveClass& c : enumerate_curves(T, 1)) {
        Coords via_word = apply_word(T, ch, hw, c.w);
        Coords via_map = canonical_coords(T, apply_automorphism(T, sm, c.w)).w;
        CHECK(via_word == via_map);
        CHECK(via_word == c.w);  // the involution fixes every class
    }
}

TEST_CASE("automorphism action preserves intersection numbers") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<int> sm = hyperelliptic_side_map(T);
    std::vector<CurveClass> cls = enumerate_curves(T, 1);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i; j < cls.size(); ++j) {
            Coords a = apply_automorphism(T, sm, cls[i].w);
            Coords b = apply_automorphism(T, sm, cls[j].w);
            CHECK(geometric_intersection(T, a, b) ==
                  geometric_intersection(T, cls[i].w, cls[j].w));
        }
}
