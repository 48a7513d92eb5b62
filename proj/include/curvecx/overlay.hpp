#ifndef CURVECX_OVERLAY_HPP
#define CURVECX_OVERLAY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "curvecx/diagram.hpp"

namespace curvecx {

// Two embedded multicurves (labels 0 and 1) superimposed transversally on
// the same triangulation.  Within each triangle, arcs are chords of the
// boundary circle; two chords cross iff their endpoints interleave, and
// crossings between a chord and the (pairwise disjoint) chords of the other
// label are ordered along it by nesting, so the whole arrangement is
// determined combinatorially.
class Overlay {
  public:
    Overlay(const Triangulation& T, const MCDiagram& a, const MCDiagram& b);

    int num_crossings() const { return (int)crossings_.size(); }
    // Sum of crossing signs (orientations induced by the input components).
    long long signed_sum() const;

    // Remove bigons (discs bounded by one subarc of each label, containing
    // no puncture) until none remain; returns the final crossing count.
    int minimize();

    // With zero crossings: the union as one embedded multicurve.
    MCDiagram merged() const;

    // Resolve every crossing with the same turn direction (0 or 1) and
    // return the resulting embedded multicurve.  Used for twist surgery.
    MCDiagram smoothed(int turn) const;

    // --- complement faces (valid after construction / each round) -----
    struct Face {
        int chi = 0;
        int corner_count = 0;          // crossing-quadrant incidences
        std::vector<int> vertices;     // surface vertices inside the face
        bool has_puncture = false;
    };
    const std::vector<Face>& faces() const { return faces_; }
    // Face adjacent to the given side of a chord-bearing curve component of
    // label lab: side 0 = the cell on the traced side of the component's
    // forward direction, side 1 = the other.  Only meaningful with zero
    // crossings.  Component indices follow the input diagrams.
    int face_of_component_side(int lab, int comp, int side) const;

  private:
    struct End {
        int side;
        int point;
    };
    struct Chord {
        int label;
        std::array<End, 2> e;  // ordered along the curve traversal
        int comp;              // component index within its input diagram
        bool dead = false;
    };
    struct Crossing {
        int ca, cb;  // chord ids, label 0 and 1
    };
    // A crossing-quadrant corner of a face: the adjacent segment of each
    // chord (segment j of a chord lies between its (j-1)-th and j-th
    // crossing, with the chord endpoints at the extremes).
    struct CornerInc {
        int crossing;
        int achord, aseg;
        int bchord, bseg;
    };

    void rebuild_incidence();
    void analyze();  // crossings, cells, faces
    bool surgery_round();

    long long bcoord(int side, int point) const;
    int pos_on_side(int point, int side) const;
    int crossing_index_on(int chord, int crossing) const;

    const Triangulation* T_;
    // points
    std::vector<int> pt_edge_;  // -1 = dead
    std::vector<int> pt_label_;
    std::vector<std::vector<int>> edge_pts_;
    std::vector<int> pt_pos_;
    // chords
    std::vector<Chord> chords_;
    std::vector<std::array<std::array<int, 2>, 2>> pt_inc_;  // per point: {chord, end}
    int comp_count_[2] = {0, 0};
    // analysis products
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> chord_items_;  // crossing ids in chord order
    std::vector<Face> faces_;
    std::vector<std::vector<CornerInc>> face_corners_;
    std::vector<int> seg_face_scaffold_;  // per scaffold segment (edge, i)
    std::vector<int> scaffold_base_;
    std::vector<std::array<int, 2>> chord_side_face_;
    std::vector<int> comp_rep_[2];  // a representative chord per component

    friend struct OverlayTestPeek;
};

// Exact geometric intersection number of two curve classes (canonical or any
// normal coordinates).
int geometric_intersection(const Triangulation& T, const Coords& a, const Coords& b);

// |signed intersection sum| on any transverse overlay (homological pairing;
// no minimization required).
int algebraic_pairing(const Triangulation& T, const Coords& a, const Coords& b);

// Realize pairwise-disjoint classes as one embedded multicurve; component
// order matches the input order.  Throws if the classes are not pairwise
// disjoint.
MCDiagram realize_disjointly(const Triangulation& T,
                             const std::vector<Coords>& classes);

// The Dehn twist of class a along class c (sign +1/-1), as canonical
// coordinates.  Computed by putting a against an i(a,c)-strand cable of c in
// minimal position and resolving all crossings coherently; the sign
// convention is fixed by the orientation of the triangulated surface.
Coords dehn_twist(const Triangulation& T, const Coords& a, const Coords& c,
                  int sign);

}  // namespace curvecx

#endif  // CURVECX_OVERLAY_HPP
