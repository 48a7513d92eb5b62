#include "curvecx/overlay.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace curvecx {

namespace {

constexpr long long kSideCap = 1 << 20;  // > max points on one side
constexpr long long kCircle = 3 * kSideCap;

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("overlay: ") + what);
}

// Is x strictly inside the ccw boundary interval (from, to)?
bool ccw_between(long long from, long long x, long long to) {
    long long dx = (x - from + kCircle) % kCircle;
    long long dt = (to - from + kCircle) % kCircle;
    return dx > 0 && dx < dt;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Overlay::pos_on_side(int point, int side) const {
    int e = T_->edge_of(side);
    int m = (int)edge_pts_[e].size();
    return T_->is_canonical(side) ? pt_pos_[point] : m - 1 - pt_pos_[point];
}

long long Overlay::bcoord(int side, int point) const {
    return (long long)(side % 3) * kSideCap + pos_on_side(point, side);
}

int Overlay::crossing_index_on(int chord, int crossing) const {
    const auto& items = chord_items_[chord];
    for (int j = 0; j < (int)items.size(); ++j)
        if (items[j] == crossing) return j;
    require(false, "crossing not on chord");
    return -1;
}

Overlay::Overlay(const Triangulation& T, const MCDiagram& a, const MCDiagram& b)
    : T_(&T) {
    const MCDiagram* src[2] = {&a, &b};
    int E = T.num_edges();
    edge_pts_.assign(E, {});

    // Interleave the two point sets along every edge: point i of wA points
    // sits at fraction (2i+1)/(2wA); ties put label 0 first.
    std::vector<std::map<int, int>> pmap(2);
    for (int e = 0; e < E; ++e) {
        const auto& pa = a.points_on_edge(e);
        const auto& pb = b.points_on_edge(e);
        long long wa = (long long)pa.size(), wb = (long long)pb.size();
        size_t i = 0, j = 0;
        while (i < pa.size() || j < pb.size()) {
            bool take_a;
            if (i >= pa.size())
                take_a = false;
            else if (j >= pb.size())
                take_a = true;
            else
                take_a = (2 * (long long)i + 1) * wb <= (2 * (long long)j + 1) * wa;
            int lab = take_a ? 0 : 1;
            int orig = take_a ? pa[i++] : pb[j++];
            int id = (int)pt_edge_.size();
            pt_edge_.push_back(e);
            pt_label_.push_back(lab);
            pmap[lab][orig] = id;
            edge_pts_[e].push_back(id);
        }
    }
    pt_pos_.assign(pt_edge_.size(), -1);
    for (int e = 0; e < E; ++e)
        for (size_t i = 0; i < edge_pts_[e].size(); ++i)
            pt_pos_[edge_pts_[e][i]] = (int)i;

    for (int lab = 0; lab < 2; ++lab) {
        comp_count_[lab] = src[lab]->num_components();
        for (int ci = 0; ci < comp_count_[lab]; ++ci) {
            const auto& comp = src[lab]->component(ci);
            int n = (int)comp.size();
            require(n >= 2, "component with fewer than two edge crossings");
            comp_rep_[lab].push_back((int)chords_.size());
            for (int i = 0; i < n; ++i) {
                const auto& v = comp[i];
                const auto& w = comp[(i + 1) % n];
                Chord c;
                c.label = lab;
                c.comp = ci;
                c.e[0] = {v.out_side, pmap[lab].at(v.point)};
                c.e[1] = {T.glue(w.out_side), pmap[lab].at(w.point)};
                require(c.e[0].side / 3 == c.e[1].side / 3, "chord spans triangles");
                chords_.push_back(c);
            }
        }
    }
    rebuild_incidence();
    analyze();
}

void Overlay::rebuild_incidence() {
    pt_inc_.assign(pt_edge_.size(), {{{-1, -1}, {-1, -1}}});
    for (int c = 0; c < (int)chords_.size(); ++c) {
        if (chords_[c].dead) continue;
        for (int k = 0; k < 2; ++k) {
            int p = chords_[c].e[k].point;
            auto& inc = pt_inc_[p];
            if (inc[0][0] < 0)
                inc[0] = {c, k};
            else {
                require(inc[1][0] < 0, "point with more than two chord ends");
                inc[1] = {c, k};
            }
        }
    }
    for (size_t p = 0; p < pt_edge_.size(); ++p)
        if (pt_edge_[p] >= 0)
            require(pt_inc_[p][1][0] >= 0, "live point missing a chord end");
    for (int c = 0; c < (int)chords_.size(); ++c) {
        if (chords_[c].dead) continue;
        for (int k = 0; k < 2; ++k)
            require(pt_edge_[chords_[c].e[k].point] ==
                        T_->edge_of(chords_[c].e[k].side),
                    "chord endpoint off its edge");
    }
}

void Overlay::analyze() {
    int nch = (int)chords_.size();
    crossings_.clear();
    chord_items_.assign(nch, {});
    faces_.clear();
    face_corners_.clear();
    chord_side_face_.assign(nch, {-1, -1});

    scaffold_base_.assign(T_->num_edges() + 1, 0);
    for (int e = 0; e < T_->num_edges(); ++e)
        scaffold_base_[e + 1] = scaffold_base_[e] + (int)edge_pts_[e].size() + 1;
    int nscaffold = scaffold_base_[T_->num_edges()];
    std::vector<std::array<int, 2>> scaffold_cells(nscaffold, {-1, -1});

    std::vector<std::vector<int>> tri_chords(T_->num_triangles());
    for (int c = 0; c < nch; ++c)
        if (!chords_[c].dead) tri_chords[chords_[c].e[0].side / 3].push_back(c);

    // Global cells across all triangles.
    int ncells = 0;
    std::vector<std::vector<long long>> cell_nodes, cell_segs;
    std::vector<std::vector<CornerInc>> cell_corners;
    std::vector<std::vector<int>> cell_vertices;
    std::vector<std::array<int, 2>> chord_side_cell(nch, {-1, -1});
    auto node_key = [](int kind, long long id) { return kind * (1LL << 40) + id; };
    auto seg_key = [](int kind, long long id) {
        return (4 + kind) * (1LL << 40) + id;
    };

    for (int t = 0; t < T_->num_triangles(); ++t) {
        const auto& tch = tri_chords[t];

        // Crossings between the two labels, then their order along each chord.
        std::vector<std::array<long long, 2>> cbc(tch.size());
        for (size_t i = 0; i < tch.size(); ++i) {
            const Chord& c = chords_[tch[i]];
            cbc[i] = {bcoord(c.e[0].side, c.e[0].point),
                      bcoord(c.e[1].side, c.e[1].point)};
        }
        std::vector<int> local_cross;  // global crossing ids in this triangle
        for (size_t i = 0; i < tch.size(); ++i) {
            if (chords_[tch[i]].label != 0) continue;
            for (size_t j = 0; j < tch.size(); ++j) {
                if (chords_[tch[j]].label != 1) continue;
                bool in0 = ccw_between(cbc[i][0], cbc[j][0], cbc[i][1]);
                bool in1 = ccw_between(cbc[i][0], cbc[j][1], cbc[i][1]);
                if (in0 == in1) continue;  // no interleaving, no crossing
                int x = (int)crossings_.size();
                crossings_.push_back({tch[i], tch[j]});
                chord_items_[tch[i]].push_back(x);
                chord_items_[tch[j]].push_back(x);
                local_cross.push_back(x);
            }
        }
        // Order crossings along a chord by the position of the other chord's
        // endpoint inside the ccw interval (e0 -> e1): disjoint crossing
        // chords are nested, so this is the geometric order.
        for (int c : tch) {
            auto& items = chord_items_[c];
            if (items.size() < 2) continue;
            long long from = bcoord(chords_[c].e[0].side, chords_[c].e[0].point);
            long long to = bcoord(chords_[c].e[1].side, chords_[c].e[1].point);
            auto key = [&](int x) {
                int other = (crossings_[x].ca == c) ? crossings_[x].cb
                                                    : crossings_[x].ca;
                const Chord& q = chords_[other];
                for (int k = 0; k < 2; ++k) {
                    long long bq = bcoord(q.e[k].side, q.e[k].point);
                    if (ccw_between(from, bq, to)) return (bq - from + kCircle) % kCircle;
                }
                require(false, "crossing chord has no endpoint in interval");
                return 0LL;
            };
            std::sort(items.begin(), items.end(),
                      [&](int x, int y) { return key(x) < key(y); });
        }

        // --- boundary cycle: corners and points in ccw order -------------
        // Node kinds: 0 corner (id = corner), 1 point (id = point),
        // 2 crossing (id = global crossing).
        std::vector<int> cyc_kind, cyc_id, bseg_side, bseg_cidx;
        for (int k = 0; k < 3; ++k) {
            int s = 3 * t + k;
            int e = T_->edge_of(s);
            int m = (int)edge_pts_[e].size();
            cyc_kind.push_back(0);
            cyc_id.push_back(3 * t + (k + 2) % 3);  // tail corner of side k
            bool canon = T_->is_canonical(s);
            for (int j = 0; j < m; ++j) {
                bseg_side.push_back(s);
                bseg_cidx.push_back(canon ? j : m - j);
                cyc_kind.push_back(1);
                cyc_id.push_back(edge_pts_[e][canon ? j : m - 1 - j]);
            }
            bseg_side.push_back(s);
            bseg_cidx.push_back(canon ? m : 0);
        }
        int nb = (int)cyc_kind.size();

        // Local segments: [0, nb) boundary, then chord segments.
        std::vector<int> seg_off(tch.size());
        int nseg = nb;
        for (size_t i = 0; i < tch.size(); ++i) {
            seg_off[i] = nseg;
            nseg += (int)chord_items_[tch[i]].size() + 1;
        }
        std::map<int, size_t> chord_local;
        for (size_t i = 0; i < tch.size(); ++i) chord_local[tch[i]] = i;

        // Local nodes: [0, nb) boundary cycle, then crossings.
        int nnodes = nb + (int)local_cross.size();
        std::map<int, int> cross_node;
        for (size_t i = 0; i < local_cross.size(); ++i)
            cross_node[local_cross[i]] = nb + (int)i;
        std::map<int, int> point_node;
        for (int i = 0; i < nb; ++i)
            if (cyc_kind[i] == 1) point_node[cyc_id[i]] = i;

        // Rotations (ccw outgoing directed segments per node).
        // Directed segment encoding: 2*seg + dir (dir 0 = forward: boundary
        // ccw / chord from e[0] to e[1]).
        std::vector<std::vector<int>> rot(nnodes);
        for (int i = 0; i < nb; ++i) {
            rot[i].push_back(2 * i);  // forward along the boundary
            if (cyc_kind[i] == 1) {
                int p = cyc_id[i];
                // The unique chord end at p inside this triangle.
                int found = -1, endk = -1;
                for (int q = 0; q < 2; ++q) {
                    int c = pt_inc_[p][q][0], k = pt_inc_[p][q][1];
                    if (c >= 0 && chords_[c].e[k].side / 3 == t &&
                        chords_[c].e[k].point == p) {
                        found = c;
                        endk = k;
                    }
                }
                require(found >= 0, "point without a chord in its triangle");
                size_t li = chord_local.at(found);
                int nitems = (int)chord_items_[found].size();
                int ds = (endk == 0) ? 2 * seg_off[li]
                                     : 2 * (seg_off[li] + nitems) + 1;
                rot[i].push_back(ds);
            }
            rot[i].push_back(2 * ((i - 1 + nb) % nb) + 1);  // backward
        }
        for (int x : local_cross) {
            int node = cross_node.at(x);
            struct Ray {
                int ds;
                long long target;
            };
            std::vector<Ray> rays;
            for (int which = 0; which < 2; ++which) {
                int c = which == 0 ? crossings_[x].ca : crossings_[x].cb;
                size_t li = chord_local.at(c);
                int j = crossing_index_on(c, x);
                rays.push_back({2 * (seg_off[li] + j) + 1,
                                bcoord(chords_[c].e[0].side, chords_[c].e[0].point)});
                rays.push_back({2 * (seg_off[li] + j + 1),
                                bcoord(chords_[c].e[1].side, chords_[c].e[1].point)});
            }
            std::sort(rays.begin(), rays.end(),
                      [](const Ray& a, const Ray& b) { return a.target < b.target; });
            for (const Ray& r : rays) rot[node].push_back(r.ds);
        }

        // Tail node and rotation index of every directed segment.
        std::vector<int> tail(2 * nseg, -1), rpos(2 * nseg, -1);
        for (int n = 0; n < nnodes; ++n)
            for (size_t i = 0; i < rot[n].size(); ++i) {
                tail[rot[n][i]] = n;
                rpos[rot[n][i]] = (int)i;
            }
        for (int d = 0; d < 2 * nseg; ++d)
            require(tail[d] >= 0, "unplaced dirseg");

        // Face tracing: next = rotation-predecessor of the reversed segment
        // at its tail (faces close up counterclockwise; the clockwise
        // boundary walk is the outer face).
        auto nxt = [&](int ds) {
            int r = ds ^ 1;
            int n = tail[r];
            int sz = (int)rot[n].size();
            return rot[n][(rpos[r] - 1 + sz) % sz];
        };
        std::vector<int> orbit_of(2 * nseg, -1);
        std::vector<std::vector<int>> orbits;
        for (int d = 0; d < 2 * nseg; ++d) {
            if (orbit_of[d] >= 0) continue;
            int id = (int)orbits.size();
            orbits.emplace_back();
            int cur = d;
            do {
                orbit_of[cur] = id;
                orbits[id].push_back(cur);
                cur = nxt(cur);
            } while (cur != d);
        }
        require(nnodes - nseg + (int)orbits.size() == 2, "triangle cell Euler check");
        int outer = orbit_of[1];  // backward boundary segment 0

        for (int oi = 0; oi < (int)orbits.size(); ++oi) {
            if (oi == outer) continue;
            int cell = ncells++;
            cell_nodes.emplace_back();
            cell_segs.emplace_back();
            cell_corners.emplace_back();
            cell_vertices.emplace_back();
            const auto& orb = orbits[oi];
            for (size_t i = 0; i < orb.size(); ++i) {
                int d = orb[i];
                int seg = d >> 1;
                if (seg < nb) {
                    require((d & 1) == 0, "inner cell walks boundary backward");
                    int s = bseg_side[seg];
                    int sc = scaffold_base_[T_->edge_of(s)] + bseg_cidx[seg];
                    cell_segs[cell].push_back(seg_key(0, sc));
                    int slot = scaffold_cells[sc][0] < 0 ? 0 : 1;
                    require(scaffold_cells[sc][slot] < 0, "scaffold segment seen thrice");
                    scaffold_cells[sc][slot] = cell;
                } else {
                    // Which chord does this segment belong to?
                    size_t li = (size_t)(std::upper_bound(seg_off.begin(),
                                                          seg_off.end(), seg) -
                                         seg_off.begin()) -
                                1;
                    int j = seg - seg_off[li];
                    cell_segs[cell].push_back(
                        seg_key(1, (long long)tch[li] * 4096 + j));
                    if (j == 0)
                        chord_side_cell[tch[li]][d & 1] = cell;
                }
                // Node between this directed segment and the next: its head.
                int hd = tail[d ^ 1];
                if (hd < nb) {
                    if (cyc_kind[hd] == 0) {
                        int v = T_->vertex_of_corner(cyc_id[hd]);
                        cell_nodes[cell].push_back(node_key(0, v));
                        cell_vertices[cell].push_back(v);
                    } else {
                        cell_nodes[cell].push_back(node_key(1, cyc_id[hd]));
                    }
                } else {
                    int x = local_cross[hd - nb];
                    cell_nodes[cell].push_back(node_key(2, x));
                    // Record the quadrant: the two adjacent chord segments.
                    int dnext = orb[(i + 1) % orb.size()];
                    CornerInc inc{x, -1, -1, -1, -1};
                    for (int dd : {d, dnext}) {
                        int sg = dd >> 1;
                        size_t li = (size_t)(std::upper_bound(seg_off.begin(),
                                                              seg_off.end(), sg) -
                                             seg_off.begin()) -
                                    1;
                        int c = tch[li], j = sg - seg_off[li];
                        if (chords_[c].label == 0) {
                            inc.achord = c;
                            inc.aseg = j;
                        } else {
                            inc.bchord = c;
                            inc.bseg = j;
                        }
                    }
                    require(inc.achord >= 0 && inc.bchord >= 0,
                            "corner without both labels");
                    cell_corners[cell].push_back(inc);
                }
            }
        }
    }

    // Glue cells across edges into faces of the complement.
    UnionFind uf(ncells);
    for (int sc = 0; sc < nscaffold; ++sc) {
        require(scaffold_cells[sc][0] >= 0 && scaffold_cells[sc][1] >= 0,
                "scaffold segment not covered twice");
        uf.unite(scaffold_cells[sc][0], scaffold_cells[sc][1]);
    }
    std::vector<int> face_id(ncells, -1);
    for (int c = 0; c < ncells; ++c) {
        int r = uf.find(c);
        if (face_id[r] < 0) {
            face_id[r] = (int)faces_.size();
            faces_.emplace_back();
            face_corners_.emplace_back();
        }
        face_id[c] = face_id[r];
    }
    std::vector<std::set<long long>> fnodes(faces_.size()), fsegs(faces_.size());
    std::vector<int> fcells(faces_.size(), 0);
    std::vector<std::set<int>> fverts(faces_.size());
    for (int c = 0; c < ncells; ++c) {
        int f = face_id[c];
        fcells[f]++;
        fnodes[f].insert(cell_nodes[c].begin(), cell_nodes[c].end());
        fsegs[f].insert(cell_segs[c].begin(), cell_segs[c].end());
        fverts[f].insert(cell_vertices[c].begin(), cell_vertices[c].end());
        for (const CornerInc& inc : cell_corners[c]) face_corners_[f].push_back(inc);
    }
    for (size_t f = 0; f < faces_.size(); ++f) {
        faces_[f].chi = (int)fnodes[f].size() - (int)fsegs[f].size() + fcells[f];
        faces_[f].corner_count = (int)face_corners_[f].size();
        faces_[f].vertices.assign(fverts[f].begin(), fverts[f].end());
        for (int v : faces_[f].vertices)
            if (T_->is_puncture(v)) faces_[f].has_puncture = true;
    }
    seg_face_scaffold_.assign(nscaffold, -1);
    for (int sc = 0; sc < nscaffold; ++sc)
        seg_face_scaffold_[sc] = face_id[scaffold_cells[sc][0]];
    for (int c = 0; c < nch; ++c) {
        if (chords_[c].dead) continue;
        for (int s = 0; s < 2; ++s)
            if (chord_side_cell[c][s] >= 0)
                chord_side_face_[c][s] = face_id[chord_side_cell[c][s]];
    }
}

long long Overlay::signed_sum() const {
    long long sum = 0;
    for (const Crossing& x : crossings_) {
        const Chord& a = chords_[x.ca];
        const Chord& b = chords_[x.cb];
        long long af = bcoord(a.e[0].side, a.e[0].point);
        long long at = bcoord(a.e[1].side, a.e[1].point);
        long long bf = bcoord(b.e[0].side, b.e[0].point);
        sum += ccw_between(af, bf, at) ? 1 : -1;
    }
    return sum;
}

int Overlay::face_of_component_side(int lab, int comp, int side) const {
    require(crossings_.empty(), "face_of_component_side needs a crossing-free overlay");
    int rep = comp_rep_[lab].at(comp);
    return chord_side_face_[rep][side];
}

int Overlay::minimize() {
    int guard = num_crossings() + 8;
    while (guard-- > 0) {
        if (!surgery_round()) return num_crossings();
    }
    require(false, "bigon removal did not terminate");
    return -1;
}

bool Overlay::surgery_round() {
    std::vector<int> bigons;
    for (size_t f = 0; f < faces_.size(); ++f) {
        if (faces_[f].chi != 1 || faces_[f].corner_count != 2) continue;
        if (faces_[f].has_puncture) continue;
        if (face_corners_[f][0].crossing == face_corners_[f][1].crossing) continue;
        bigons.push_back((int)f);
    }
    if (bigons.empty()) return false;

    struct NewPoint {
        int edge;
        int anchor;  // existing point id
        bool after;  // insert after the anchor along the canonical order
    };
    std::vector<NewPoint> new_points;
    std::vector<std::array<std::array<int, 2>, 2>> new_chords;  // {side, ref}
    // ref >= 0: existing point id; ref < 0: new point ~ref.
    std::vector<int> new_chord_comp;
    std::vector<char> marked(chords_.size(), 0);
    std::vector<int> kill_chords, kill_points;
    int applied = 0;

    for (int f : bigons) {
        const CornerInc& c0 = face_corners_[f][0];
        const CornerInc& c1 = face_corners_[f][1];
        int X = c0.crossing, Y = c1.crossing;

        // Direction along a chord away from crossing X into segment seg.
        auto start_dir = [&](int chord, int seg) {
            int j = crossing_index_on(chord, X);
            require(seg == j || seg == j + 1, "corner segment not at crossing");
            return seg == j + 1 ? +1 : -1;
        };
        struct WalkOut {
            std::vector<int> interior;
            std::vector<int> chain;   // chords passed, starting chord first
            int arrive_chord = -1;
            int arrive_dir = 0;
        };
        auto do_walk = [&](int chord0, int dir0) {
            WalkOut out;
            int cur = chord0, dir = dir0;
            int j = crossing_index_on(cur, X);
            out.chain.push_back(cur);
            while (true) {
                const auto& items = chord_items_[cur];
                int nj = j + dir;
                if (nj >= 0 && nj < (int)items.size()) {
                    require(items[nj] == Y, "bigon arc has an interior crossing");
                    out.arrive_chord = cur;
                    out.arrive_dir = dir;
                    return out;
                }
                // Leave the chord through its endpoint in this direction.
                const End& ex = chords_[cur].e[dir > 0 ? 1 : 0];
                out.interior.push_back(ex.point);
                const auto& inc = pt_inc_[ex.point];
                int c2 = (inc[0][0] == cur) ? inc[1][0] : inc[0][0];
                int k2 = (inc[0][0] == cur) ? inc[1][1] : inc[0][1];
                require(c2 >= 0 && c2 != cur, "dangling strand");
                cur = c2;
                dir = (k2 == 0) ? +1 : -1;
                out.chain.push_back(cur);
                j = (dir > 0) ? -1 : (int)chord_items_[cur].size();
            }
        };

        WalkOut wa = do_walk(c0.achord, start_dir(c0.achord, c0.aseg));
        WalkOut wb = do_walk(c0.bchord, start_dir(c0.bchord, c0.bseg));
        bool conflict = false;
        for (int c : wa.chain)
            if (marked[c]) conflict = true;
        for (int c : wb.chain)
            if (marked[c]) conflict = true;
        if (conflict) continue;
        for (int c : wa.chain) marked[c] = 1;
        for (int c : wb.chain) marked[c] = 1;
        ++applied;

        // If the walk leaves the starting label-0 chord and comes back to it,
        // the bigon arc is the whole component except the direct X-Y span on
        // that chord.  Both chord endpoints are interior to the arc, so the
        // component is rerouted as a closed curve: a parallel of the label-1
        // arc, closed up through the span's triangle (any crossings on the
        // surviving span reappear on the closing chord when the arrangement
        // is re-analyzed).
        int dir_first = start_dir(c0.achord, c0.aseg);
        bool whole_component =
            wa.chain.size() > 1 && wa.arrive_chord == c0.achord;

        // Anchors on the curve of label 0: the endpoints just outside the arc.
        End a0 = chords_[c0.achord].e[dir_first > 0 ? 0 : 1];
        End a1 = chords_[wa.arrive_chord].e[wa.arrive_dir > 0 ? 1 : 0];

        for (int c : wa.chain) kill_chords.push_back(c);
        for (int p : wa.interior) kill_points.push_back(p);

        // New points shadowing the label-1 interior points, placed on the
        // side away from the bigon.
        int comp = chords_[c0.achord].comp;
        std::vector<int> nref;  // encoded refs (~index into new_points)
        for (int bp : wb.interior) {
            int e = pt_edge_[bp];
            int ci = pt_pos_[bp];
            int fb = seg_face_scaffold_[scaffold_base_[e] + ci];
            int fa = seg_face_scaffold_[scaffold_base_[e] + ci + 1];
            require((fb == f) != (fa == f), "bigon side of a boundary point");
            nref.push_back(~(int)new_points.size());
            // The new strand goes on the side away from the bigon.
            new_points.push_back({e, bp, fb == f});
        }
        // Side of a label-1 chord end at a given point.
        auto side_at = [&](int chord, int p) {
            for (int k = 0; k < 2; ++k)
                if (chords_[chord].e[k].point == p) return chords_[chord].e[k].side;
            require(false, "point not on chord");
            return -1;
        };
        int k = (int)wb.interior.size();
        if (whole_component) {
            // Closed reroute: new points only, with a closing chord in the
            // triangle of the two crossings.  k == 0 would mean the
            // component becomes contractible, impossible for essential input.
            require(k >= 2, "closed reroute around fewer than two points");
            for (int i = 0; i + 1 < k; ++i) {
                int q = wb.chain[i + 1];
                new_chords.push_back(
                    {{{side_at(q, wb.interior[i]), nref[i]},
                      {side_at(q, wb.interior[i + 1]), nref[i + 1]}}});
                new_chord_comp.push_back(comp);
            }
            new_chords.push_back(
                {{{side_at(wb.chain.back(), wb.interior[k - 1]), nref[k - 1]},
                  {side_at(wb.chain[0], wb.interior[0]), nref[0]}}});
            new_chord_comp.push_back(comp);
        } else if (k == 0) {
            new_chords.push_back({{{a0.side, a0.point}, {a1.side, a1.point}}});
            new_chord_comp.push_back(comp);
        } else {
            new_chords.push_back(
                {{{a0.side, a0.point},
                  {side_at(wb.chain[0], wb.interior[0]), nref[0]}}});
            new_chord_comp.push_back(comp);
            for (int i = 0; i + 1 < k; ++i) {
                int q = wb.chain[i + 1];  // label-1 chord from b_i to b_{i+1}
                new_chords.push_back(
                    {{{side_at(q, wb.interior[i]), nref[i]},
                      {side_at(q, wb.interior[i + 1]), nref[i + 1]}}});
                new_chord_comp.push_back(comp);
            }
            new_chords.push_back(
                {{{side_at(wb.chain.back(), wb.interior[k - 1]), nref[k - 1]},
                  {a1.side, a1.point}}});
            new_chord_comp.push_back(comp);
        }
    }
    if (applied == 0) return false;

    // Materialize: allocate points, rebuild edge orders, rewire chords.
    int before = num_crossings();
    std::vector<int> real_id(new_points.size());
    std::vector<std::map<int, std::pair<int, bool>>> inserts(T_->num_edges());
    for (size_t i = 0; i < new_points.size(); ++i) {
        int id = (int)pt_edge_.size();
        pt_edge_.push_back(new_points[i].edge);
        pt_label_.push_back(0);
        real_id[i] = id;
        require(inserts[new_points[i].edge].count(new_points[i].anchor) == 0,
                "two insertions at one anchor");
        inserts[new_points[i].edge][new_points[i].anchor] = {id,
                                                             new_points[i].after};
    }
    for (int p : kill_points) pt_edge_[p] = -1;
    for (int c : kill_chords) chords_[c].dead = true;
    for (size_t i = 0; i < new_chords.size(); ++i) {
        Chord c;
        c.label = 0;
        c.comp = new_chord_comp[i];
        for (int kk = 0; kk < 2; ++kk) {
            int ref = new_chords[i][kk][1];
            c.e[kk] = {new_chords[i][kk][0], ref >= 0 ? ref : real_id[~ref]};
        }
        require(c.e[0].side / 3 == c.e[1].side / 3, "patched chord spans triangles");
        chords_.push_back(c);
    }
    for (int e = 0; e < T_->num_edges(); ++e) {
        if (inserts[e].empty() &&
            std::none_of(edge_pts_[e].begin(), edge_pts_[e].end(),
                         [&](int p) { return pt_edge_[p] < 0; }))
            continue;
        std::vector<int> next;
        for (int p : edge_pts_[e]) {
            auto it = inserts[e].find(p);
            if (it != inserts[e].end() && !it->second.second)
                next.push_back(it->second.first);
            if (pt_edge_[p] >= 0) next.push_back(p);
            if (it != inserts[e].end() && it->second.second)
                next.push_back(it->second.first);
        }
        edge_pts_[e] = std::move(next);
    }
    pt_pos_.assign(pt_edge_.size(), -1);
    for (int e = 0; e < T_->num_edges(); ++e)
        for (size_t i = 0; i < edge_pts_[e].size(); ++i)
            pt_pos_[edge_pts_[e][i]] = (int)i;
    // Representative chords may have died; repoint them.
    for (int lab = 0; lab < 2; ++lab)
        for (int ci = 0; ci < comp_count_[lab]; ++ci) {
            int& rep = comp_rep_[lab][ci];
            if (rep >= 0 && !chords_[rep].dead) continue;
            rep = -1;
            for (int c = 0; c < (int)chords_.size(); ++c)
                if (!chords_[c].dead && chords_[c].label == lab &&
                    chords_[c].comp == ci) {
                    rep = c;
                    break;
                }
        }
    // Consistency audit before re-analysis.
    rebuild_incidence();
    analyze();
    // Each bigon removal is an isotopy deleting exactly its two corner
    // crossings; everything else is preserved.
    require(num_crossings() == before - 2 * applied,
            "surgery did not remove exactly the bigon crossings");
    return true;
}

MCDiagram Overlay::merged() const {
    require(crossings_.empty(), "merged() requires zero crossings");
    ArcDiagram ad;
    ad.w.assign(T_->num_edges(), 0);
    for (int e = 0; e < T_->num_edges(); ++e) ad.w[e] = (int)edge_pts_[e].size();
    ad.arcs.assign(T_->num_triangles(), {});
    for (const Chord& c : chords_) {
        if (c.dead) continue;
        ad.arcs[c.e[0].side / 3].push_back(
            {ArcDiagram::End{c.e[0].side, pt_pos_[c.e[0].point]},
             ArcDiagram::End{c.e[1].side, pt_pos_[c.e[1].point]}});
    }
    return diagram_from_arcs(*T_, ad);
}

MCDiagram Overlay::smoothed(int turn) const {
    require(turn == 0 || turn == 1, "turn must be 0 or 1");
    int nch = (int)chords_.size();
    // Global segment ids: chord c owns |crossings on c| + 1 segments.
    std::vector<int> seg_base(nch + 1, 0);
    for (int c = 0; c < nch; ++c)
        seg_base[c + 1] =
            seg_base[c] + (chords_[c].dead ? 0 : (int)chord_items_[c].size() + 1);
    int nseg = seg_base[nch];
    // Ports face a crossing or a chord endpoint: port = 2*seg + end, with
    // end 0 toward e[0] and end 1 toward e[1].
    std::vector<int> match(2 * nseg, -1);  // partner port at a crossing

    for (int x = 0; x < (int)crossings_.size(); ++x) {
        struct Ray {
            int port;
            long long target;
            int label;
        };
        std::vector<Ray> rays;
        for (int which = 0; which < 2; ++which) {
            int c = which == 0 ? crossings_[x].ca : crossings_[x].cb;
            int j = crossing_index_on(c, x);
            // Segment j ends at the crossing (end 1), segment j+1 starts
            // there (end 0); each ray heads toward the chord endpoint on its
            // side.
            rays.push_back({2 * (seg_base[c] + j) + 1,
                            bcoord(chords_[c].e[0].side, chords_[c].e[0].point),
                            chords_[c].label});
            rays.push_back({2 * (seg_base[c] + j + 1),
                            bcoord(chords_[c].e[1].side, chords_[c].e[1].point),
                            chords_[c].label});
        }
        std::sort(rays.begin(), rays.end(),
                  [](const Ray& a, const Ray& b) { return a.target < b.target; });
        require(rays[0].label != rays[1].label && rays[1].label != rays[2].label,
                "crossing rays do not alternate");
        // Pair each label-0 ray with its ccw (turn 0) or cw (turn 1)
        // neighbor; this is rotation-invariant, unlike the sorted cut.
        int i0 = rays[0].label == 0 ? 0 : 1;
        for (int r = 0; r < 2; ++r) {
            int i = (i0 + 2 * r) % 4;
            int j = (i + (turn == 0 ? 1 : 3)) % 4;
            match[rays[i].port] = rays[j].port;
            match[rays[j].port] = rays[i].port;
        }
    }

    ArcDiagram ad;
    ad.w.assign(T_->num_edges(), 0);
    for (int e = 0; e < T_->num_edges(); ++e) ad.w[e] = (int)edge_pts_[e].size();
    ad.arcs.assign(T_->num_triangles(), {});

    std::vector<char> seg_done(nseg, 0);
    auto endpoint_of = [&](int c, int end) {
        return ArcDiagram::End{chords_[c].e[end].side,
                               pt_pos_[chords_[c].e[end].point]};
    };
    for (int c = 0; c < nch; ++c) {
        if (chords_[c].dead) continue;
        for (int end = 0; end < 2; ++end) {
            int k = (int)chord_items_[c].size();
            int seg = seg_base[c] + (end == 0 ? 0 : k);
            if (seg_done[seg]) continue;
            // Walk from this chord endpoint through smoothed junctions.
            ArcDiagram::End start = endpoint_of(c, end);
            int port = 2 * seg + end;  // the far port of the first segment...
            // Entering the segment from the endpoint, we exit at the other
            // end: flip the end bit.
            port = 2 * seg + (1 - end);
            int tri = chords_[c].e[0].side / 3;
            while (true) {
                seg_done[port >> 1] = 1;
                if (match[port] < 0) {
                    // A chord endpoint: find which chord/end this is.
                    int sc = (int)(std::upper_bound(seg_base.begin(),
                                                    seg_base.end(), port >> 1) -
                                   seg_base.begin()) -
                             1;
                    int kk = (int)chord_items_[sc].size();
                    int local = (port >> 1) - seg_base[sc];
                    int which = (port & 1);
                    require((which == 0 && local == 0) || (which == 1 && local == kk),
                            "walk ended inside a chord");
                    ad.arcs[tri].push_back({start, endpoint_of(sc, which)});
                    break;
                }
                port = match[port] ^ 1;  // cross the junction, run the segment
            }
        }
    }
    for (int s = 0; s < nseg; ++s)
        if (!seg_done[s]) {
            // Leftover cycles are contractible circles inside one triangle.
            int cur = 2 * s + 1;
            while (!seg_done[cur >> 1]) {
                seg_done[cur >> 1] = 1;
                require(match[cur] >= 0, "broken leftover cycle");
                cur = match[cur] ^ 1;
            }
            ad.closed_loops++;
        }
    return diagram_from_arcs(*T_, ad);
}

Coords dehn_twist(const Triangulation& T, const Coords& a, const Coords& c,
                  int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("dehn_twist: sign must be +1 or -1");
    int n = geometric_intersection(T, a, c);
    if (n == 0) {
        CanonicalResult r = canonical_coords(T, a);
        if (r.kind != ComponentKind::Essential)
            throw std::invalid_argument("dehn_twist: inessential curve");
        return r.w;
    }
    // n parallel copies of c.
    MCDiagram cable = MCDiagram::trace(T, c);
    for (int t = 1; t < n; ++t) {
        Overlay o(T, cable, MCDiagram::trace(T, c));
        if (o.minimize() != 0)
            throw std::logic_error("dehn_twist: cable strands intersect");
        cable = o.merged();
        cable.normalize();
    }
    Overlay o(T, MCDiagram::trace(T, a), cable);
    if (o.minimize() != n * n)
        throw std::logic_error("dehn_twist: cable position is not minimal");
    TightenResult r = tighten(o.smoothed(sign > 0 ? 0 : 1));
    const TightenedComponent* essential = nullptr;
    for (const TightenedComponent& comp : r.components) {
        if (comp.kind != ComponentKind::Essential)
            throw std::logic_error("dehn_twist: inessential piece in result");
        if (essential)
            throw std::logic_error("dehn_twist: disconnected result");
        essential = &comp;
    }
    if (!essential) throw std::logic_error("dehn_twist: empty result");
    return essential->w;
}

int geometric_intersection(const Triangulation& T, const Coords& a,
                           const Coords& b) {
    if (a == b) return 0;
    Overlay o(T, MCDiagram::trace(T, a), MCDiagram::trace(T, b));
    return o.minimize();
}

int algebraic_pairing(const Triangulation& T, const Coords& a, const Coords& b) {
    Overlay o(T, MCDiagram::trace(T, a), MCDiagram::trace(T, b));
    long long s = o.signed_sum();
    return (int)(s < 0 ? -s : s);
}

MCDiagram realize_disjointly(const Triangulation& T,
                             const std::vector<Coords>& classes) {
    MCDiagram m(T);
    if (classes.empty()) return m;
    std::vector<Coords> canon;
    for (const Coords& c : classes) {
        CanonicalResult r = canonical_coords(T, c);
        if (r.kind != ComponentKind::Essential)
            throw std::invalid_argument("realize_disjointly: inessential class");
        canon.push_back(r.w);
    }
    m = MCDiagram::trace(T, canon[0]);
    for (size_t i = 1; i < canon.size(); ++i) {
        Overlay o(T, m, MCDiagram::trace(T, canon[i]));
        if (o.minimize() != 0)
            throw std::invalid_argument("realize_disjointly: classes intersect");
        m = o.merged();
        m.normalize();
    }
    // Restore the caller's component order.
    std::vector<int> perm(canon.size(), -1);
    for (int ci = 0; ci < m.num_components(); ++ci) {
        CanonicalResult r = canonical_coords(T, m.component_coords(ci));
        bool placed = false;
        for (size_t j = 0; j < canon.size(); ++j)
            if (!placed && perm[j] < 0 && canon[j] == r.w) {
                perm[j] = ci;
                placed = true;
            }
        if (!placed)
            throw std::logic_error("realize_disjointly: component mismatch");
    }
    m.permute_components(perm);
    return m;
}

}  // namespace curvecx
