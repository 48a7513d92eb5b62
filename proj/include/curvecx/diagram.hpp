#ifndef CURVECX_DIAGRAM_HPP
#define CURVECX_DIAGRAM_HPP

#include <optional>
#include <vector>

#include "curvecx/normal_curve.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

// Embedded multicurve diagram: a disjoint union of simple closed curves in
// general position with respect to the triangulation (transverse to edges,
// avoiding vertices, no crossings between strands).
//
// Representation: points on edges (ordered along the canonical side) plus,
// per component, the cyclic sequence of edge crossings.  Consecutive points
// of a component are joined by an (implicit) arc inside one triangle; which
// triangle is recorded by out_side, the side of the current point's edge
// through which the strand leaves toward the next point.
class MCDiagram {
  public:
    struct Visit {
        int point;
        int out_side;
    };

    explicit MCDiagram(const Triangulation& T);

    // Embed the normal multicurve with coordinates w (which must satisfy the
    // matching conditions) using the standard corner arcs.
    static MCDiagram trace(const Triangulation& T, const Coords& w);

    const Triangulation& tri() const { return *T_; }
    int num_components() const { return (int)comps_.size(); }
    const std::vector<Visit>& component(int ci) const { return comps_[ci]; }
    const std::vector<int>& points_on_edge(int e) const { return edge_points_[e]; }
    int point_edge(int p) const { return point_edge_[p]; }
    // Index of point p in its edge's list (position along canonical side).
    int point_index(int p) const { return point_pos_[p]; }
    // Position of point p along side s of its edge (s or its partner).
    int point_pos_on_side(int p, int s) const;

    Coords coords() const;
    Coords component_coords(int ci) const;
    int total_points() const;

    // Structure checks (used by tests and after surgery): visit chains are
    // consistent and per-triangle arcs are pairwise non-crossing.
    void check_valid() const;

    // --- isotopy moves ------------------------------------------------

    // Remove one innermost return arc (arc entering and leaving a triangle
    // through the same side) if any exists; true if a move was made.  A
    // component shrinking to nothing is deleted and counted in
    // trivial_removed.
    bool remove_one_return();
    // Apply return removals until none remain; returns number of trivial
    // components dropped.  Afterwards the diagram is normal (corner arcs
    // only) and coords() satisfies the matching conditions.
    int normalize();

    // A maximal run of innermost corner arcs around a vertex.
    struct VertexRun {
        int comp = 0;
        int first_chord = 0;  // visit index i: chord between visits i, i+1
        int num_chords = 0;   // r; the run crosses r+1 edge points
        int vertex = 0;
        bool full_circle = false;  // component is the vertex link
    };
    std::vector<VertexRun> find_vertex_runs() const;

    // Push the run's strand across the vertex (rerouting it through the
    // complementary edge-ends).  Only legal for interior (non-puncture)
    // vertices; full-circle runs delete the component instead.
    void apply_vertex_move(const VertexRun& run);

    // Reverse the traversal direction of a component (no geometric change).
    void reverse_component(int ci);
    void remove_component(int ci);
    // Reorder components: position i receives old component perm[i].
    void permute_components(const std::vector<int>& perm);

  private:
    int new_point(int edge);
    void reindex_edge(int e);
    void erase_point(int p);

    const Triangulation* T_;
    std::vector<std::vector<int>> edge_points_;
    std::vector<int> point_edge_;  // -1 = deleted
    std::vector<int> point_pos_;
    std::vector<std::vector<Visit>> comps_;

    friend MCDiagram diagram_from_arcs(const Triangulation&,
                                       const struct ArcDiagram&);
};

// Per-triangle arc-soup form of a multicurve: used when a diagram is
// assembled from surgery (overlay merge, twist smoothing) rather than traced.
// Endpoints name a point by (side, index along the canonical side of its
// edge).
struct ArcDiagram {
    struct End {
        int side;
        int cidx;
    };
    Coords w;                                       // points per edge
    std::vector<std::vector<std::array<End, 2>>> arcs;  // per triangle
    int closed_loops = 0;  // arcs closed inside one triangle (trivial)
};

// Assemble a diagram by walking the arc matching into components.  Throws on
// inconsistent matchings.
MCDiagram diagram_from_arcs(const Triangulation& T, const ArcDiagram& a);

// Classification of one component after tightening.
enum class ComponentKind { Essential, Trivial, Peripheral };

struct TightenedComponent {
    ComponentKind kind;
    Coords w;  // canonical coordinates (empty for trivial)
};

struct TightenResult {
    Coords multicurve;  // normal coordinates of the multicurve, trivial
                        // components dropped (peripheral kept)
    std::vector<TightenedComponent> components;
};

// Spec op: normalize a diagram and report each component's class.
TightenResult tighten(MCDiagram d);

// Canonical coordinates of a single connected curve given by normal
// coordinates w.  On ideal triangulations normal coordinates are already
// canonical (peripheral = a puncture link).  On closed surfaces the
// canonical form is the (total weight, lex) minimum over the states
// reachable by weight-nonincreasing vertex pushes; a curve reducing to
// nothing is trivial.
struct CanonicalResult {
    ComponentKind kind = ComponentKind::Essential;
    Coords w;
};
CanonicalResult canonical_coords(const Triangulation& T, const Coords& w);

}  // namespace curvecx

#endif  // CURVECX_DIAGRAM_HPP
