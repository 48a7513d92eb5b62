#include "curvecx/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curvecx {

bool satisfies_matching(const Triangulation& T, const Coords& w) {
    if ((int)w.size() != T.num_edges()) return false;
    for (int e = 0; e < T.num_edges(); ++e)
        if (w[e] < 0) return false;
    for (int t = 0; t < T.num_triangles(); ++t) {
        int x = w[T.edge_of(3 * t)], y = w[T.edge_of(3 * t + 1)],
            z = w[T.edge_of(3 * t + 2)];
        if ((x + y + z) % 2 != 0) return false;
        if (x > y + z || y > x + z || z > x + y) return false;
    }
    return true;
}

std::array<int, 3> corner_coords(const Triangulation& T, const Coords& w, int t) {
    std::array<int, 3> ww{w[T.edge_of(3 * t)], w[T.edge_of(3 * t + 1)],
                          w[T.edge_of(3 * t + 2)]};
    std::array<int, 3> a;
    for (int k = 0; k < 3; ++k)
        a[k] = (ww[k] + ww[(k + 1) % 3] - ww[(k + 2) % 3]) / 2;
    return a;
}

Coords vertex_link_coords(const Triangulation& T, int v) {
    Coords w(T.num_edges(), 0);
    for (int c : T.vertex_corners()[v]) {
        // End crossed when rotating past corner c: the tail of side (t,k+1).
        int t = c / 3, k = c % 3;
        w[T.edge_of(3 * t + (k + 1) % 3)] += 1;
    }
    return w;
}

MCDiagram::MCDiagram(const Triangulation& T) : T_(&T) {
    edge_points_.resize(T.num_edges());
}

int MCDiagram::point_pos_on_side(int p, int s) const {
    int e = point_edge_[p];
    int w = (int)edge_points_[e].size();
    return T_->is_canonical(s) ? point_pos_[p] : w - 1 - point_pos_[p];
}

Coords MCDiagram::coords() const {
    Coords w(T_->num_edges());
    for (int e = 0; e < T_->num_edges(); ++e) w[e] = (int)edge_points_[e].size();
    return w;
}

Coords MCDiagram::component_coords(int ci) const {
    Coords w(T_->num_edges(), 0);
    for (const Visit& v : comps_[ci]) w[point_edge_[v.point]] += 1;
    return w;
}

int MCDiagram::total_points() const {
    int n = 0;
    for (const auto& ep : edge_points_) n += (int)ep.size();
    return n;
}

int MCDiagram::new_point(int edge) {
    int id = (int)point_edge_.size();
    point_edge_.push_back(edge);
    point_pos_.push_back(-1);
    return id;
}

void MCDiagram::reindex_edge(int e) {
    for (int i = 0; i < (int)edge_points_[e].size(); ++i)
        point_pos_[edge_points_[e][i]] = i;
}

void MCDiagram::erase_point(int p) {
    int e = point_edge_[p];
    auto& v = edge_points_[e];
    v.erase(std::find(v.begin(), v.end(), p));
    point_edge_[p] = -1;
    reindex_edge(e);
}

MCDiagram MCDiagram::trace(const Triangulation& T, const Coords& w) {
    if (!satisfies_matching(T, w))
        throw std::invalid_argument("coordinates violate matching conditions");
    MCDiagram d(T);
    for (int e = 0; e < T.num_edges(); ++e)
        for (int j = 0; j < w[e]; ++j) {
            int p = d.new_point(e);
            d.edge_points_[e].push_back(p);
            d.point_pos_[p] = j;
        }
    // Matching: (side, local position) -> (side, local position).
    std::map<std::pair<int, int>, std::pair<int, int>> match;
    for (int t = 0; t < T.num_triangles(); ++t) {
        auto a = corner_coords(T, w, t);
        for (int k = 0; k < 3; ++k) {
            int s1 = 3 * t + k, s2 = 3 * t + (k + 1) % 3;
            int w1 = w[T.edge_of(s1)];
            for (int j = 0; j < a[k]; ++j) {
                match[{s1, w1 - 1 - j}] = {s2, j};
                match[{s2, j}] = {s1, w1 - 1 - j};
            }
        }
    }
    // Point at (side, local position).
    auto point_at = [&](int s, int lp) {
        int e = T.edge_of(s);
        int idx = T.is_canonical(s) ? lp : (int)d.edge_points_[e].size() - 1 - lp;
        return d.edge_points_[e][idx];
    };
    std::vector<char> used(d.point_edge_.size(), 0);
    for (int e = 0; e < T.num_edges(); ++e) {
        for (int p : d.edge_points_[e]) {
            if (used[p]) continue;
            std::vector<Visit> comp;
            int s = T.canonical_side(e);
            int cur = p;
            int out = s;
            do {
                used[cur] = 1;
                comp.push_back({cur, out});
                int lp = d.point_pos_on_side(cur, out);
                auto [s2, lp2] = match.at({out, lp});
                cur = point_at(s2, lp2);
                out = T.glue(s2);
            } while (!(cur == p && out == s));
            d.comps_.push_back(std::move(comp));
        }
    }
    return d;
}

MCDiagram diagram_from_arcs(const Triangulation& T, const ArcDiagram& a) {
    MCDiagram d(T);
    for (int e = 0; e < T.num_edges(); ++e)
        for (int j = 0; j < a.w[e]; ++j) {
            int p = d.new_point(e);
            d.edge_points_[e].push_back(p);
            d.point_pos_[p] = j;
        }
    // (side, canonical index) -> (side, canonical index)
    std::map<std::pair<int, int>, std::pair<int, int>> match;
    for (int t = 0; t < T.num_triangles(); ++t)
        for (const auto& arc : a.arcs[t]) {
            auto k0 = std::make_pair(arc[0].side, arc[0].cidx);
            auto k1 = std::make_pair(arc[1].side, arc[1].cidx);
            if (match.count(k0) || match.count(k1))
                throw std::invalid_argument("arc endpoint used twice");
            match[k0] = k1;
            match[k1] = k0;
        }
    std::vector<char> used(d.point_edge_.size(), 0);
    for (int e = 0; e < T.num_edges(); ++e) {
        for (int p : d.edge_points_[e]) {
            if (used[p]) continue;
            std::vector<MCDiagram::Visit> comp;
            int s = T.canonical_side(e);
            int cur = p;
            int out = s;
            do {
                used[cur] = 1;
                comp.push_back({cur, out});
                auto it = match.find({out, d.point_pos_[cur]});
                if (it == match.end())
                    throw std::invalid_argument("arc matching incomplete");
                auto [s2, c2] = it->second;
                if (T.edge_of(s2) == T.edge_of(out) && s2 == out && c2 == d.point_pos_[cur])
                    throw std::invalid_argument("degenerate arc");
                cur = d.edge_points_[T.edge_of(s2)][c2];
                out = T.glue(s2);
            } while (!(cur == p && out == s));
            d.comps_.push_back(std::move(comp));
        }
    }
    d.check_valid();
    return d;
}

void MCDiagram::check_valid() const {
    // Every live point appears in exactly one component once.
    std::vector<int> count(point_edge_.size(), 0);
    for (const auto& comp : comps_)
        for (const Visit& v : comp) {
            if (point_edge_[v.point] < 0) throw std::logic_error("visit to deleted point");
            if (T_->edge_of(v.out_side) != point_edge_[v.point])
                throw std::logic_error("out_side not on point's edge");
            count[v.point]++;
        }
    int live = 0;
    for (int p = 0; p < (int)point_edge_.size(); ++p) {
        if (point_edge_[p] < 0) continue;
        ++live;
        if (count[p] != 1) throw std::logic_error("point visit count != 1");
    }
    // Visit chains: consecutive visits share a triangle.
    for (const auto& comp : comps_)
        for (int i = 0; i < (int)comp.size(); ++i) {
            const Visit& v = comp[i];
            const Visit& w = comp[(i + 1) % comp.size()];
            if (v.out_side / 3 != T_->glue(w.out_side) / 3)
                throw std::logic_error("visit chain broken");
        }
    // Non-crossing within each triangle: collect arcs as boundary-coordinate
    // pairs and check no interleaving.
    for (int t = 0; t < T_->num_triangles(); ++t) {
        std::vector<std::array<long long, 2>> arcs;
        auto bc = [&](int side, int point) {
            return (long long)(side % 3) * 1000000 + point_pos_on_side(point, side);
        };
        for (const auto& comp : comps_)
            for (int i = 0; i < (int)comp.size(); ++i) {
                const Visit& v = comp[i];
                if (v.out_side / 3 != t) continue;
                const Visit& w = comp[(i + 1) % comp.size()];
                arcs.push_back({bc(v.out_side, v.point),
                                bc(T_->glue(w.out_side), w.point)});
            }
        for (auto& a : arcs)
            if (a[0] > a[1]) std::swap(a[0], a[1]);
        for (size_t i = 0; i < arcs.size(); ++i)
            for (size_t j = i + 1; j < arcs.size(); ++j) {
                bool in0 = arcs[i][0] < arcs[j][0] && arcs[j][0] < arcs[i][1];
                bool in1 = arcs[i][0] < arcs[j][1] && arcs[j][1] < arcs[i][1];
                if (in0 != in1) throw std::logic_error("crossing arcs in diagram");
            }
    }
}

bool MCDiagram::remove_one_return() {
    for (int ci = 0; ci < (int)comps_.size(); ++ci) {
        auto& comp = comps_[ci];
        int n = (int)comp.size();
        for (int i = 0; i < n; ++i) {
            const Visit& v = comp[i];
            const Visit& w = comp[(i + 1) % n];
            if (point_edge_[v.point] != point_edge_[w.point]) continue;
            if (v.out_side != T_->glue(w.out_side)) continue;  // not same-side
            if (std::abs(point_pos_[v.point] - point_pos_[w.point]) != 1)
                continue;  // not innermost
            erase_point(v.point);
            erase_point(w.point);
            if (n == 2) {
                remove_component(ci);
            } else {
                int j = (i + 1) % n;
                if (j > i) {
                    comp.erase(comp.begin() + i, comp.begin() + i + 2);
                } else {  // wrapped: i == n-1, j == 0
                    comp.erase(comp.begin() + i);
                    comp.erase(comp.begin());
                }
            }
            return true;
        }
    }
    return false;
}

int MCDiagram::normalize() {
    int before = (int)comps_.size();
    while (remove_one_return()) {
    }
    return before - (int)comps_.size();
}

void MCDiagram::remove_component(int ci) {
    for (const Visit& v : comps_[ci])
        if (point_edge_[v.point] >= 0) erase_point(v.point);
    comps_.erase(comps_.begin() + ci);
}

void MCDiagram::permute_components(const std::vector<int>& perm) {
    if (perm.size() != comps_.size())
        throw std::invalid_argument("permute_components: size mismatch");
    std::vector<std::vector<Visit>> next(perm.size());
    std::vector<char> seen(comps_.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[perm[i]]++) throw std::invalid_argument("not a permutation");
        next[i] = std::move(comps_[perm[i]]);
    }
    comps_ = std::move(next);
}

void MCDiagram::reverse_component(int ci) {
    auto& comp = comps_[ci];
    std::reverse(comp.begin(), comp.end());
    for (Visit& v : comp) v.out_side = T_->glue(v.out_side);
}

namespace {
struct Passage {
    int corner = -1;  // -1 = not an innermost corner arc
    int dir = 0;      // +1: traversal head-side -> tail-side (with rotation)
};
}  // namespace

std::vector<MCDiagram::VertexRun> MCDiagram::find_vertex_runs() const {
    const Triangulation& T = *T_;
    // pred of the corner rotation.
    std::vector<int> pred(T.num_sides());
    for (int c = 0; c < T.num_sides(); ++c)
        pred[T.next_corner_around_vertex(c)] = c;

    std::vector<VertexRun> runs;
    for (int ci = 0; ci < (int)comps_.size(); ++ci) {
        const auto& comp = comps_[ci];
        int n = (int)comp.size();
        std::vector<Passage> pas(n);
        for (int i = 0; i < n; ++i) {
            const Visit& v = comp[i];
            const Visit& w = comp[(i + 1) % n];
            int sA = v.out_side, sB = T.glue(w.out_side);
            int t = sA / 3;
            int kA = sA % 3, kB = sB % 3;
            int wA = (int)edge_points_[T.edge_of(sA)].size();
            int wB = (int)edge_points_[T.edge_of(sB)].size();
            if ((kA + 1) % 3 == kB) {
                if (point_pos_on_side(v.point, sA) == wA - 1 &&
                    point_pos_on_side(w.point, sB) == 0) {
                    pas[i] = {3 * t + kA, +1};
                }
            } else if ((kB + 1) % 3 == kA) {
                if (point_pos_on_side(w.point, sB) == wB - 1 &&
                    point_pos_on_side(v.point, sA) == 0) {
                    pas[i] = {3 * t + kB, -1};
                }
            }
            if (pas[i].corner >= 0 &&
                T.is_puncture(T.vertex_of_corner(pas[i].corner)))
                pas[i].corner = -1;  // strands are pinned at punctures
        }
        auto chained = [&](int i, int j) {
            if (pas[i].corner < 0 || pas[j].corner < 0) return false;
            if (pas[i].dir != pas[j].dir) return false;
            if (T.vertex_of_corner(pas[i].corner) !=
                T.vertex_of_corner(pas[j].corner))
                return false;
            if (pas[i].dir == +1)
                return T.next_corner_around_vertex(pas[i].corner) == pas[j].corner;
            return pred[pas[i].corner] == pas[j].corner;
        };
        // Full circle?
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            all = pas[i].corner >= 0 && chained(i, (i + 1) % n);
        if (all && n > 0) {
            VertexRun r;
            r.comp = ci;
            r.first_chord = 0;
            r.num_chords = n;
            r.vertex = T.vertex_of_corner(pas[0].corner);
            r.full_circle = true;
            runs.push_back(r);
            continue;
        }
        // Maximal chains.
        std::vector<char> taken(n, 0);
        for (int i = 0; i < n; ++i) {
            if (pas[i].corner < 0 || taken[i]) continue;
            // Extend backwards.
            int start = i;
            while (pas[(start + n - 1) % n].corner >= 0 &&
                   chained((start + n - 1) % n, start) && (start + n - 1) % n != i)
                start = (start + n - 1) % n;
            // Extend forwards.
            int len = 1;
            while (len < n && pas[(start + len) % n].corner >= 0 &&
                   chained((start + len - 1 + n) % n, (start + len) % n))
                ++len;
            for (int k = 0; k < len; ++k) taken[(start + k) % n] = 1;
            VertexRun r;
            r.comp = ci;
            r.first_chord = start;
            r.num_chords = len;
            r.vertex = T.vertex_of_corner(pas[start].corner);
            if (pas[start].dir == -1) {
                // Normalize to forward traversal by re-indexing as if the
                // component were reversed; apply_vertex_move reverses first.
                r.num_chords = -len;  // marker: see apply_vertex_move
            }
            runs.push_back(r);
        }
    }
    return runs;
}

void MCDiagram::apply_vertex_move(const VertexRun& run0) {
    VertexRun run = run0;
    if (run.full_circle) {
        remove_component(run.comp);
        return;
    }
    if (run.num_chords < 0) {
        int n = (int)comps_[run.comp].size();
        int len = -run.num_chords;
        reverse_component(run.comp);
        // Chord between old visits (i, i+1) becomes chord between new visits
        // (n-2-i, n-1-i); a backward chain starting at chord c of length len
        // becomes a forward chain starting at chord n-1-(c+len-1)-1.
        run.first_chord = ((n - 1 - (run.first_chord + len - 1)) - 1 + 2 * n) % n;
        run.num_chords = len;
    }
    const Triangulation& T = *T_;
    auto& comp = comps_[run.comp];
    const int n = (int)comp.size();
    const int c = run.first_chord;
    const int r = run.num_chords;
    const int v = run.vertex;
    const auto& rot = T.vertex_corners()[v];
    const int K = (int)rot.size();
    if (r + 1 >= K + 1)
        throw std::logic_error("run too long for a vertex move");

    // Corner of the first chord (forward direction).
    const Visit& v0 = comp[c];
    int g1 = (v0.out_side / 3) * 3 + v0.out_side % 3;  // = out_side
    // g1 is the corner at the head of v0.out_side.
    std::vector<int> slot_of(T.num_sides(), -1);
    for (int i = 0; i < K; ++i) slot_of[rot[i]] = i;
    // pred(g1):
    int pg1 = -1;
    for (int i = 0; i < K; ++i)
        if (T.next_corner_around_vertex(rot[i]) == g1) pg1 = rot[i];
    int slot_p0 = slot_of[pg1];        // end slot of p_0 = end_after(pred(g1))
    int slot_pr = (slot_p0 + r) % K;   // end slot of p_r = end_after(g_r)

    // Delete old points p_0..p_r (visits c..c+r).
    for (int m = 0; m <= r; ++m) erase_point(comp[(c + m) % n].point);

    // New points at complement end slots, ordered from u's side.
    const int M = K - r - 1;
    std::vector<Visit> fresh;
    for (int m = 1; m <= M; ++m) {
        int sigma = (slot_p0 - m + K) % K;
        int corner = rot[sigma];  // end_after(corner) holds the new point
        int t = corner / 3, k = corner % 3;
        int s_end = 3 * t + (k + 1) % 3;  // tail of this side is at v
        int e = T.edge_of(s_end);
        int p = new_point(e);
        if (T.is_canonical(s_end))
            edge_points_[e].insert(edge_points_[e].begin(), p);
        else
            edge_points_[e].push_back(p);
        reindex_edge(e);
        fresh.push_back({p, s_end});
    }

    // Rebuild the component: keep visits from c+r+1 .. c-1 (inclusive, in
    // order), then append the fresh visits.
    std::vector<Visit> rebuilt;
    for (int m = r + 1; m < n; ++m) rebuilt.push_back(comp[(c + m) % n]);
    for (const Visit& f : fresh) rebuilt.push_back(f);
    comp = std::move(rebuilt);
    (void)slot_pr;
}

TightenResult tighten(MCDiagram d) {
    TightenResult res;
    int trivial = d.normalize();
    // Reduce with strictly beneficial vertex pushes (and drop vertex links of
    // the interior vertex) until stable; ties are left to per-component
    // canonicalization.
    for (;;) {
        bool moved = false;
        for (const auto& run : d.find_vertex_runs()) {
            int K = (int)d.tri().vertex_corners()[run.vertex].size();
            int r = std::abs(run.num_chords);
            if (run.full_circle) {
                d.remove_component(run.comp);
                ++trivial;
                moved = true;
                break;
            }
            if (2 * (r + 1) <= K) continue;
            d.apply_vertex_move(run);
            moved = true;
            break;
        }
        if (!moved) break;
        trivial += d.normalize();
    }
    for (int i = 0; i < trivial; ++i)
        res.components.push_back({ComponentKind::Trivial, {}});
    for (int ci = 0; ci < d.num_components(); ++ci) {
        Coords cw = d.component_coords(ci);
        CanonicalResult cr = canonical_coords(d.tri(), cw);
        res.components.push_back({cr.kind, cr.w});
    }
    res.multicurve = d.coords();
    return res;
}

CanonicalResult canonical_coords(const Triangulation& T, const Coords& w0) {
    CanonicalResult res;
    bool zero = std::all_of(w0.begin(), w0.end(), [](int x) { return x == 0; });
    if (zero) {
        res.kind = ComponentKind::Trivial;
        return res;
    }
    if (!T.closed()) {
        for (int v : T.punctures())
            if (w0 == vertex_link_coords(T, v)) {
                res.kind = ComponentKind::Peripheral;
                res.w = w0;
                return res;
            }
        res.w = w0;
        return res;
    }
    // Closed surface: explore vertex pushes.  A push may add many points
    // that cancel against existing returns, so run length alone does not
    // predict the weight change; every run is tried and the result kept
    // when its normalized weight does not exceed the starting weight.
    const int wlimit = std::accumulate(w0.begin(), w0.end(), 0);
    std::set<Coords> visited{w0};
    std::vector<Coords> queue{w0};
    const size_t cap = 4096;
    while (!queue.empty()) {
        Coords cur = queue.back();
        queue.pop_back();
        MCDiagram d = MCDiagram::trace(T, cur);
        for (const auto& run : d.find_vertex_runs()) {
            if (run.full_circle) {
                res.kind = ComponentKind::Trivial;
                res.w.clear();
                return res;
            }
            MCDiagram d2 = d;
            d2.apply_vertex_move(run);
            d2.normalize();
            if (d2.num_components() == 0) {
                res.kind = ComponentKind::Trivial;
                res.w.clear();
                return res;
            }
            Coords w2 = d2.coords();
            if (std::accumulate(w2.begin(), w2.end(), 0) > wlimit) continue;
            if (visited.insert(w2).second) {
                if (visited.size() > cap)
                    throw std::runtime_error("canonical form search exceeded cap");
                queue.push_back(w2);
            }
        }
    }
    auto key = [](const Coords& w) {
        return std::make_pair(std::accumulate(w.begin(), w.end(), 0), w);
    };
    res.w = *visited.begin();
    for (const Coords& w : visited)
        if (key(w) < key(res.w)) res.w = w;
    return res;
}

}  // namespace curvecx
