#include "curvecx/predicates.hpp"

#include <algorithm>
#include <map>

#include "curvecx/overlay.hpp"

namespace curvecx {

namespace {

// Does some piece have genus zero, the given puncture count, and exactly one
// side of each of the listed curve indices on its boundary?
bool has_pants_piece(const std::vector<CutPiece>& pieces,
                     const std::vector<int>& curve_ids, int punctures) {
    for (const CutPiece& p : pieces) {
        if (p.genus != 0 || p.punctures != punctures) continue;
        if (p.boundary.size() != curve_ids.size()) continue;
        std::vector<int> got;
        for (const std::array<int, 2>& s : p.boundary) got.push_back(s[0]);
        std::sort(got.begin(), got.end());
        if (got == curve_ids) return true;
    }
    return false;
}

}  // namespace

bool is_peripheral_pair(const Triangulation& T, const Coords& a,
                        const Coords& b) {
    if (T.punctures().empty() || a == b) return false;
    if (geometric_intersection(T, a, b) != 0) return false;
    return has_pants_piece(cut_along(T, {a, b}), {0, 1}, 1);
}

bool bounds_pants(const Triangulation& T, const Coords& a, const Coords& b,
                  const Coords& c) {
    if (a == b || a == c || b == c) return false;
    return has_pants_piece(cut_along(T, {a, b, c}), {0, 1, 2}, 0);
}

bool geo2_alg0(const Triangulation& T, const Coords& a, const Coords& b) {
    return geometric_intersection(T, a, b) == 2 && algebraic_pairing(T, a, b) == 0;
}

namespace {

// The seven-curve configuration certifying i(alpha1, alpha2) = 1: the
// nonzero intersection pairs, 0-indexed.  Every other distinct pair is
// required to be disjoint.
constexpr std::array<std::array<int, 2>, 8> kNonzeroPairs = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {0, 6}, {4, 6}, {5, 6},
}};

class CertificateFinder {
  public:
    CertificateFinder(const Triangulation& T, const ComplexSlice& slice)
        : T_(T), s_(slice) {}

    // Condition (ii): alpha5 (+ alpha6) cut off a torus with two holes T
    // containing alpha1 and alpha2, and (alpha1, alpha3, alpha5/6) bound
    // pants in it.  With alpha5 == alpha6 (closed surface) the two-holed
    // torus is the whole complement of alpha5 and both pants conditions
    // become: every piece of the cut along {alpha1, alpha3, alpha5} is an
    // embedded (alpha1, alpha3, alpha5)-pants.
    bool cond2(int i1, int i2, int i3, int i5, int i6) {
        if (i5 == i6) {
            if (!torus_ok2(i5)) return false;
            auto key = std::array<int, 3>{i1, i3, i5};
            auto it = both_pants_.find(key);
            if (it == both_pants_.end()) {
                std::vector<CutPiece> ps =
                    cut_along(T_, {w(i1), w(i3), w(i5)});
                bool ok = ps.size() == 2;
                for (const CutPiece& p : ps) {
                    if (p.genus != 0 || p.punctures != 0 ||
                        p.boundary.size() != 3) {
                        ok = false;
                        break;
                    }
                    std::vector<int> got;
                    for (const std::array<int, 2>& s : p.boundary)
                        got.push_back(s[0]);
                    std::sort(got.begin(), got.end());
                    if (got != std::vector<int>{0, 1, 2}) ok = false;
                }
                it = both_pants_.emplace(key, ok).first;
            }
            return it->second;
        }
        int ti = torus_piece(i5, i6);
        if (ti < 0) return false;
        if (membership(i5, i6, i1) != ti) return false;
        if (membership(i5, i6, i2) != ti) return false;
        return pants(i1, i3, i5) && pants(i1, i3, i6);
    }

    std::optional<IntersectionOneCertificate> find(int a1, int a2) {
        int n = (int)s_.vertices.size();
        if (s_.itable[a1][a2] == 0) return {};
        auto dis = [&](int a, int b) { return s_.itable[a][b] == 0; };
        std::vector<int> c3, c56;
        for (int v = 0; v < n; ++v) {
            if (v == a1 || v == a2) continue;
            if (dis(v, a1) && !dis(v, a2)) c3.push_back(v);
            if (dis(v, a1) && dis(v, a2)) c56.push_back(v);
        }
        for (int a3 : c3) {
            // Candidate pools that do not depend on alpha5/alpha6.
            std::vector<int> c4base, c7base;
            for (int v = 0; v < n; ++v) {
                if (v == a1 || v == a2 || v == a3) continue;
                if (dis(v, a1) && dis(v, a2) && !dis(v, a3)) c4base.push_back(v);
                if (!dis(v, a1) && dis(v, a2) && dis(v, a3)) c7base.push_back(v);
            }
            if (c4base.empty() || c7base.empty()) continue;
            for (size_t x = 0; x < c56.size(); ++x) {
                int a5 = c56[x];
                if (a5 == a3 || !dis(a5, a3)) continue;
                for (size_t y = x; y < c56.size(); ++y) {
                    int a6 = c56[y];
                    if (a6 == a3 || !dis(a6, a3) || !dis(a5, a6)) continue;
                    if (a5 == a6 && !T_.closed()) continue;
                    if (a5 != a6 && T_.closed()) continue;
                    // alpha4 and alpha7 are pure pattern checks; do them
                    // before the cut-based condition.
                    int f4 = -1, f7 = -1;
                    for (int a4 : c4base) {
                        if (a4 == a5 || a4 == a6) continue;
                        if (dis(a4, a5) || dis(a4, a6)) continue;
                        for (int a7 : c7base) {
                            if (a7 == a4 || a7 == a5 || a7 == a6) continue;
                            if (dis(a7, a5) || dis(a7, a6) || !dis(a4, a7))
                                continue;
                            f4 = a4;
                            f7 = a7;
                            break;
                        }
                        if (f4 >= 0) break;
                    }
                    if (f4 < 0) continue;
                    if (!cond2(a1, a2, a3, a5, a6)) continue;
                    return IntersectionOneCertificate{
                        {a1, a2, a3, f4, a5, a6, f7}};
                }
            }
        }
        return {};
    }

    bool check(const std::array<int, 7>& al) {
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                if (i == 4 && j == 5 && al[i] == al[j]) continue;
                if (al[i] == al[j]) return false;
                bool nz = false;
                for (const std::array<int, 2>& p : kNonzeroPairs)
                    nz |= (p[0] == i && p[1] == j);
                if ((s_.itable[al[i]][al[j]] != 0) != nz) return false;
            }
        return cond2(al[0], al[1], al[2], al[4], al[5]);
    }

  private:
    const Coords& w(int i) const { return s_.vertices[i].w; }

    // Single-curve version: the complement of alpha5 alone is the two-holed
    // torus (closed genus two only).
    bool torus_ok2(int i5) {
        auto it = torus1_.find(i5);
        if (it == torus1_.end()) {
            std::vector<CutPiece> ps = cut_along(T_, {w(i5)});
            bool ok = ps.size() == 1 && ps[0].genus == 1 &&
                      ps[0].punctures == 0 && ps[0].boundary.size() == 2;
            it = torus1_.emplace(i5, ok).first;
        }
        return it->second;
    }

    // Index of the torus-with-two-holes piece of the cut along
    // {alpha5, alpha6}, or -1.
    int torus_piece(int i5, int i6) {
        auto key = std::array<int, 2>{i5, i6};
        auto it = torus2_.find(key);
        if (it == torus2_.end()) {
            std::vector<CutPiece> ps = cut_along(T_, {w(i5), w(i6)});
            int ti = -1;
            if (ps.size() == 2)
                for (int i = 0; i < 2; ++i) {
                    const CutPiece& p = ps[i];
                    if (p.genus != 1 || p.punctures != 0 ||
                        p.boundary.size() != 2)
                        continue;
                    if (p.boundary[0][0] != p.boundary[1][0]) ti = i;
                }
            it = torus2_.emplace(key, ti).first;
        }
        return it->second;
    }

    int membership(int i5, int i6, int x) {
        auto key = std::array<int, 3>{i5, i6, x};
        auto it = member_.find(key);
        if (it == member_.end())
            it = member_
                     .emplace(key,
                              piece_containing(T_, {w(i5), w(i6)}, w(x)))
                     .first;
        return it->second;
    }

    bool pants(int a, int b, int c) {
        auto key = std::array<int, 3>{a, b, c};
        auto it = pants_.find(key);
        if (it == pants_.end())
            it = pants_.emplace(key, bounds_pants(T_, w(a), w(b), w(c))).first;
        return it->second;
    }

    const Triangulation& T_;
    const ComplexSlice& s_;
    std::map<int, bool> torus1_;
    std::map<std::array<int, 2>, int> torus2_;
    std::map<std::array<int, 3>, int> member_;
    std::map<std::array<int, 3>, bool> pants_;
    std::map<std::array<int, 3>, bool> both_pants_;
};

}  // namespace

std::optional<IntersectionOneCertificate> find_intersection_one_certificate(
    const Triangulation& T, const ComplexSlice& slice, int a1, int a2) {
    return CertificateFinder(T, slice).find(a1, a2);
}

bool check_intersection_one_certificate(const Triangulation& T,
                                        const ComplexSlice& slice,
                                        const std::array<int, 7>& alpha) {
    return CertificateFinder(T, slice).check(alpha);
}

PentagonReport pentagon_and_nvertex(const Triangulation& T,
                                    const ComplexSlice& slice) {
    SurfaceSignature sig = T.signature();
    if (sig.genus != 0 || sig.punctures < 5)
        throw std::invalid_argument(
            "pentagon_and_nvertex: needs a sphere with at least 5 punctures");
    PentagonReport rep;
    int n = (int)slice.vertices.size();
    for (int v = 0; v < n; ++v) {
        std::vector<CutPiece> ps = cut_along(T, {slice.vertices[v].w});
        if (ps.size() != 2) throw std::logic_error("sphere curve must separate");
        std::array<int, 2> l{ps[0].punctures, ps[1].punctures};
        if (l[0] > l[1]) std::swap(l[0], l[1]);
        rep.labels.push_back(l);
    }
    // 5-cycles of disjointness whose chords all intersect, reported once per
    // cyclic class (least rotation kept).
    std::array<int, 5> cur{};
    auto dis = [&](int a, int b) { return slice.itable[a][b] == 0; };
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 5) {
            if (!dis(cur[4], cur[0])) return;
            if (dis(cur[0], cur[2]) || dis(cur[0], cur[3]) ||
                dis(cur[1], cur[3]) || dis(cur[1], cur[4]) ||
                dis(cur[2], cur[4]))
                return;
            for (int r = 1; r < 5; ++r) {
                std::array<int, 5> rot;
                for (int i = 0; i < 5; ++i) rot[i] = cur[(i + r) % 5];
                if (rot < cur) return;  // not the canonical rotation
            }
            rep.pentagons.push_back(cur);
            return;
        }
        for (int v = 0; v < n; ++v) {
            bool ok = v != cur[0] || k == 0;
            for (int i = 0; i < k && ok; ++i) ok = v != cur[i];
            if (ok && k > 0 && !dis(cur[k - 1], v)) ok = false;
            if (!ok) continue;
            cur[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return rep;
}

}  // namespace curvecx
