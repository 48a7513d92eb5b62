#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvecx/curves.hpp"
#include "curvecx/overlay.hpp"
#include "curvecx/surface.hpp"

using namespace curvecx;

TEST_CASE("every essential curve on the once-punctured torus is nonseparating") {
    Triangulation T = build_standard_surface({1, 1});
    std::vector<CurveClass> cls = enumerate_curves(T, 4);
    CHECK(cls.size() >= 10);
    for (const CurveClass& c : cls) CHECK(c.nonseparating);
}

TEST_CASE("mod-2 classification agrees with the complement topology") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<CurveClass> cls = enumerate_curves(T, 2);
    CHECK(cls.size() > 0);
    int nonsep = 0, sep = 0;
    for (const CurveClass& c : cls) {
        std::vector<CutPiece> pieces = cut_along(T, {c.w});
        if (c.nonseparating) {
            ++nonsep;
            REQUIRE(pieces.size() == 1);
            CHECK(pieces[0].genus == 1);
            CHECK(pieces[0].boundary.size() == 2);
        } else {
            ++sep;
            REQUIRE(pieces.size() == 2);
            for (const CutPiece& p : pieces) {
                CHECK(p.genus == 1);
                CHECK(p.boundary.size() == 1);
            }
        }
    }
    CHECK(nonsep > 0);
}

TEST_CASE("cutting along a disjoint pair") {
    Triangulation T = build_standard_surface({2, 0});
    std::vector<CurveClass> cls = enumerate_curves(T, 2);
    int done = 0;
    for (size_t i = 0; i < cls.size() && done < 3; ++i)
        for (size_t j = i + 1; j < cls.size() && done < 3; ++j) {
            if (geometric_intersection(T, cls[i].w, cls[j].w) != 0) continue;
            std::vector<CutPiece> pieces = cut_along(T, {cls[i].w, cls[j].w});
            int chi = 0, circles = 0;
            for (const CutPiece& p : pieces) {
                chi += 2 - 2 * p.genus - (int)p.boundary.size();
                circles += (int)p.boundary.size();
            }
            CHECK(chi == T.euler_characteristic());
            CHECK(circles == 4);  // two sides per curve
            ++done;
        }
    CHECK(done > 0);
}

TEST_CASE("punctures land in the right piece") {
    Triangulation T = build_standard_surface({2, 1});
    std::vector<CurveClass> cls = enumerate_curves(T, 1);
    REQUIRE(cls.size() > 0);
    for (const CurveClass& c : cls) {
        std::vector<CutPiece> pieces = cut_along(T, {c.w});
        int punct = 0;
        for (const CutPiece& p : pieces) punct += p.punctures;
        CHECK(punct == 1);
    }
}

TEST_CASE("enumeration counts are stable") {
    // Regression pins; independently spot-checked in the other suites.
    Triangulation T11 = build_standard_surface({1, 1});
    Triangulation T20 = build_standard_surface({2, 0});
    CHECK(enumerate_curves(T11, 2).size() == 6);
    CHECK(enumerate_curves(T11, 4).size() == 18);
    CHECK(enumerate_curves(T20, 1).size() == 10);
    CHECK(enumerate_curves(T20, 2).size() == 100);
}
