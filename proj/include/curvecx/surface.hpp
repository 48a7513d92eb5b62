#ifndef CURVECX_SURFACE_HPP
#define CURVECX_SURFACE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvecx {

// Surface signature (g, p): genus and number of punctures.  Punctures stand
// in for boundary components throughout; see README for the rationale.
struct SurfaceSignature {
    int genus = 0;
    int punctures = 0;

    bool operator==(const SurfaceSignature&) const = default;
};

// Oriented combinatorial surface given as a list of triangles with glued
// sides.
//
// Conventions:
//   * Triangle t has three sides with global ids 3t+0, 3t+1, 3t+2 listed in
//     counterclockwise order around the triangle.
//   * glue[s] = s' pairs side s with side s' (involution, glue[s] != s).
//     A gluing always identifies the two sides with opposite boundary
//     directions (head of one to tail of the other), so every gluing table
//     describes an oriented surface.
//   * Corner c = 3t+k sits at the head of side (t,k) (equivalently at the
//     tail of side (t,k+1)).
//   * Each unordered pair {s, glue[s]} is one edge; the canonical side of an
//     edge is min(s, glue[s]).  Positions of curve points along an edge are
//     indexed from the canonical side's tail; on the partner side position j
//     reads as w-1-j (the gluing reverses direction).
class Triangulation {
  public:
    // Raw construction from a gluing table.  vertex ids and edges are
    // derived; punctures lists the vertex ids marking boundary components.
    Triangulation(int num_triangles, std::vector<int> glue,
                  std::vector<int> punctures, SurfaceSignature sig);

    int num_triangles() const { return F_; }
    int num_sides() const { return 3 * F_; }
    int num_edges() const { return E_; }
    int num_vertices() const { return V_; }
    const SurfaceSignature& signature() const { return sig_; }

    int glue(int side) const { return glue_[side]; }
    // Edge id of a side; canonical / partner side of an edge.
    int edge_of(int side) const { return edge_of_side_[side]; }
    int canonical_side(int edge) const { return edge_sides_[edge][0]; }
    int partner_side(int edge) const { return edge_sides_[edge][1]; }
    bool is_canonical(int side) const {
        return canonical_side(edge_of(side)) == side;
    }

    // Vertex at a given corner (corner id = side id, head of that side).
    int vertex_of_corner(int corner) const { return vertex_of_corner_[corner]; }
    // Vertex at the head / tail of a side.
    int head_vertex(int side) const { return vertex_of_corner_[side]; }
    int tail_vertex(int side) const {
        int t = side / 3, k = side % 3;
        return vertex_of_corner_[3 * t + (k + 2) % 3];
    }
    bool is_puncture(int vertex) const { return puncture_mask_[vertex]; }
    const std::vector<int>& punctures() const { return punctures_; }
    bool closed() const { return punctures_.empty(); }

    // Rotation around the vertex at corner c: the next corner reached by
    // crossing side (t, k+1).
    int next_corner_around_vertex(int corner) const {
        int t = corner / 3, k = corner % 3;
        return glue_[3 * t + (k + 1) % 3];
    }
    // Corners at each vertex in rotation order (fixed orientation).
    const std::vector<std::vector<int>>& vertex_corners() const {
        return vertex_corners_;
    }

    // V - E + F with puncture vertices not counted; equals 2 - 2g - p.
    int euler_characteristic() const;

    // Deterministic content hash (used as cache key component).
    std::uint64_t hash() const;

    std::string to_json() const;
    static Triangulation from_json(const std::string& text);

  private:
    void validate() const;

    int F_ = 0;
    int E_ = 0;
    int V_ = 0;
    SurfaceSignature sig_;
    std::vector<int> glue_;
    std::vector<int> edge_of_side_;
    std::vector<std::array<int, 2>> edge_sides_;
    std::vector<int> vertex_of_corner_;
    std::vector<std::vector<int>> vertex_corners_;
    std::vector<int> punctures_;
    std::vector<char> puncture_mask_;
};

// Deterministic standard triangulation for signature (g, p).
// Requires g >= 1 and g + p >= 2.  Closed surfaces get a one-vertex
// triangulation; p >= 1 gets an ideal triangulation (every vertex a
// puncture).  The (2,0) table carries the hyperelliptic involution as a
// simplicial automorphism (see hyperelliptic_side_map).
Triangulation build_standard_surface(SurfaceSignature sig);

// k-punctured sphere (k >= 3), ideal triangulation.  Kept separate from
// build_standard_surface, whose contract requires g >= 1; genus-zero pieces
// arise when re-triangulating cut pieces as their own surfaces.
Triangulation build_punctured_sphere(int k);

// The side permutation realizing the hyperelliptic involution on the
// standard (2,0) (or (2,1)) triangulation: side (t,k) -> (5-t,k).
// Throws if T is not the shipped genus-2 table.
std::vector<int> hyperelliptic_side_map(const Triangulation& T);

// Checks that a side permutation is a simplicial automorphism: maps
// triangles to triangles preserving cyclic side order and commutes with the
// gluing.  Returns true and sets orientation_preserving accordingly.
bool is_simplicial_automorphism(const Triangulation& T,
                                const std::vector<int>& side_map,
                                bool* orientation_preserving = nullptr);

}  // namespace curvecx

#endif  // CURVECX_SURFACE_HPP
