#include "curvecx/curves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "curvecx/overlay.hpp"

namespace curvecx {

namespace {

// Spanning tree of the dual graph (nodes = triangles, edges = edges of T);
// returns the set of non-tree edges and, for every edge, the parent
// structure needed to read off fundamental cycles.
struct DualTree {
    std::vector<int> parent_tri;   // parent triangle in the BFS tree
    std::vector<int> parent_edge;  // edge to the parent
    std::vector<int> depth;
    std::vector<int> cotree;  // edges outside the tree
};

DualTree dual_spanning_tree(const Triangulation& T) {
    DualTree d;
    int F = T.num_triangles();
    d.parent_tri.assign(F, -1);
    d.parent_edge.assign(F, -1);
    d.depth.assign(F, -1);
    std::vector<char> in_tree(T.num_edges(), 0);
    std::vector<int> queue{0};
    d.depth[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int t = queue[qi];
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k;
            int t2 = T.glue(s) / 3;
            if (d.depth[t2] >= 0) continue;
            d.depth[t2] = d.depth[t] + 1;
            d.parent_tri[t2] = t;
            d.parent_edge[t2] = T.edge_of(s);
            in_tree[T.edge_of(s)] = 1;
            queue.push_back(t2);
        }
    }
    for (int e = 0; e < T.num_edges(); ++e)
        if (!in_tree[e]) d.cotree.push_back(e);
    return d;
}

}  // namespace

std::vector<int> mod2_class(const Triangulation& T, const Coords& w) {
    DualTree d = dual_spanning_tree(T);
    std::vector<int> out;
    for (int e : d.cotree) {
        int bit = w[e] & 1;
        // Tree path between the two triangles of e.
        int a = T.canonical_side(e) / 3, b = T.partner_side(e) / 3;
        while (a != b) {
            if (d.depth[a] < d.depth[b]) std::swap(a, b);
            bit ^= w[d.parent_edge[a]] & 1;
            a = d.parent_tri[a];
        }
        out.push_back(bit);
    }
    return out;
}

bool is_nonseparating(const Triangulation& T, const Coords& w) {
    std::vector<int> cls = mod2_class(T, w);
    return std::any_of(cls.begin(), cls.end(), [](int b) { return b != 0; });
}

std::vector<CurveClass> enumerate_curves(const Triangulation& T, int maxw) {
    int E = T.num_edges();
    // Triangles whose last edge (in assignment order 0..E-1) is e.
    std::vector<std::vector<int>> complete_at(E);
    std::vector<std::array<int, 3>> tri_edges(T.num_triangles());
    for (int t = 0; t < T.num_triangles(); ++t) {
        int mx = 0;
        for (int k = 0; k < 3; ++k) {
            tri_edges[t][k] = T.edge_of(3 * t + k);
            mx = std::max(mx, tri_edges[t][k]);
        }
        complete_at[mx].push_back(t);
    }
    std::vector<CurveClass> out;
    Coords w(E, 0);
    auto admissible = [&](int t) {
        int a = w[tri_edges[t][0]], b = w[tri_edges[t][1]], c = w[tri_edges[t][2]];
        if ((a + b + c) % 2) return false;
        return a <= b + c && b <= a + c && c <= a + b;
    };
    auto rec = [&](auto&& self, int e) -> void {
        if (e == E) {
            if (std::accumulate(w.begin(), w.end(), 0) == 0) return;
            MCDiagram dgm = MCDiagram::trace(T, w);
            if (dgm.num_components() != 1) return;
            CanonicalResult r = canonical_coords(T, w);
            if (r.kind != ComponentKind::Essential || r.w != w) return;
            out.push_back({w, is_nonseparating(T, w)});
            return;
        }
        for (w[e] = 0; w[e] <= maxw; ++w[e]) {
            bool ok = true;
            for (int t : complete_at[e])
                if (!admissible(t)) ok = false;
            if (ok) self(self, e + 1);
        }
        w[e] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CutPiece> cut_along(const Triangulation& T,
                                const std::vector<Coords>& classes) {
    if (classes.empty()) {
        CutPiece whole;
        whole.genus = T.signature().genus;
        whole.punctures = T.signature().punctures;
        return {whole};
    }
    MCDiagram m = realize_disjointly(T, classes);
    Overlay o(T, m, MCDiagram(T));
    const auto& faces = o.faces();
    std::vector<CutPiece> pieces(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
        for (int v : faces[f].vertices)
            if (T.is_puncture(v)) pieces[f].punctures++;
    }
    for (int ci = 0; ci < (int)classes.size(); ++ci)
        for (int s = 0; s < 2; ++s) {
            int f = o.face_of_component_side(0, ci, s);
            pieces[f].boundary.push_back({ci, s});
        }
    for (size_t f = 0; f < faces.size(); ++f) {
        // faces[].chi counts punctures as interior points, i.e. it is the
        // Euler characteristic of the filled compact piece: 2 - 2g - b.
        int b = (int)pieces[f].boundary.size();
        int num = 2 - faces[f].chi - b;
        if (num < 0 || num % 2)
            throw std::logic_error("cut_along: inconsistent piece");
        pieces[f].genus = num / 2;
    }
    return pieces;
}

int piece_containing(const Triangulation& T, const std::vector<Coords>& curves,
                     const Coords& x) {
    if (curves.empty()) return 0;
    std::vector<Coords> fine = curves;
    fine.push_back(x);
    std::vector<CutPiece> fp = cut_along(T, fine);
    int xi = (int)curves.size();
    // Curve-boundary slots of the coarse piece that x lives in: every slot
    // of a fine piece adjacent to x belongs to that coarse piece.
    std::vector<std::array<int, 2>> slots;
    for (const CutPiece& p : fp) {
        bool adj = false;
        for (const std::array<int, 2>& s : p.boundary) adj |= s[0] == xi;
        if (!adj) continue;
        for (const std::array<int, 2>& s : p.boundary)
            if (s[0] != xi) slots.push_back(s);
    }
    if (slots.empty()) throw std::logic_error("piece_containing: no anchor slot");
    std::vector<CutPiece> cp = cut_along(T, curves);
    for (int i = 0; i < (int)cp.size(); ++i) {
        bool all = true;
        for (const std::array<int, 2>& s : slots)
            all = all && std::find(cp[i].boundary.begin(), cp[i].boundary.end(),
                                   s) != cp[i].boundary.end();
        if (all) return i;
    }
    throw std::logic_error("piece_containing: no matching piece");
}

bool is_pants_decomposition(const Triangulation& T,
                            const std::vector<Coords>& classes) {
    for (const CutPiece& p : cut_along(T, classes))
        if (p.genus != 0 || (int)p.boundary.size() + p.punctures != 3)
            return false;
    return true;
}

}  // namespace curvecx
