#include "curvecx/complexes.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "curvecx/overlay.hpp"

namespace curvecx {

ComplexSlice build_slice(const Triangulation& T, int maxw, SliceKind kind,
                         int jobs) {
    ComplexSlice s;
    s.kind = kind;
    s.weight_bound = maxw;
    for (CurveClass& c : enumerate_curves(T, maxw)) {
        if (kind != SliceKind::C && !c.nonseparating) continue;
        s.vertices.push_back(std::move(c));
    }
    int n = (int)s.vertices.size();
    s.itable.assign(n, std::vector<int>(n, 0));
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            for (int j = i + 1; j < n; ++j)
                s.itable[i][j] = geometric_intersection(T, s.vertices[i].w,
                                                        s.vertices[j].w);
        }
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    int want = kind == SliceKind::G ? 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            s.itable[j][i] = s.itable[i][j];
            if (s.itable[i][j] == want) s.edges.push_back({i, j});
        }
    return s;
}

std::vector<SliceClique> maximal_simplices(const Triangulation& T,
                                           const ComplexSlice& slice) {
    if (slice.kind == SliceKind::G)
        throw std::invalid_argument("maximal_simplices: needs a C- or N-slice");
    int n = (int)slice.vertices.size();
    int full = 3 * T.signature().genus - 3 + T.signature().punctures;
    std::vector<SliceClique> out;
    // Bron-Kerbosch with pivoting on the disjointness graph.
    auto adj = [&](int a, int b) { return a != b && slice.itable[a][b] == 0; };
    std::vector<int> R;
    auto bk = [&](auto&& self, std::vector<int> P, std::vector<int> X) -> void {
        if (P.empty() && X.empty()) {
            SliceClique c{R, (int)R.size() == full};
            std::sort(c.vertices.begin(), c.vertices.end());
            out.push_back(std::move(c));
            return;
        }
        int pivot = -1, best = -1;
        auto consider = [&](int u) {
            int d = 0;
            for (int v : P) d += adj(u, v);
            if (d > best) best = d, pivot = u;
        };
        for (int u : P) consider(u);
        for (int u : X) consider(u);
        std::vector<int> cand;
        for (int v : P)
            if (pivot < 0 || !adj(pivot, v)) cand.push_back(v);
        for (int v : cand) {
            std::vector<int> P2, X2;
            for (int w : P)
                if (adj(v, w)) P2.push_back(w);
            for (int w : X)
                if (adj(v, w)) X2.push_back(w);
            R.push_back(v);
            self(self, std::move(P2), std::move(X2));
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    std::vector<int> P(n), X;
    std::iota(P.begin(), P.end(), 0);
    bk(bk, std::move(P), std::move(X));
    std::sort(out.begin(), out.end(),
              [](const SliceClique& a, const SliceClique& b) {
                  return a.vertices < b.vertices;
              });
    return out;
}

std::optional<PantsDecomposition> make_pants_decomposition(
    const Triangulation& T, const std::vector<Coords>& curves) {
    SurfaceSignature sig = T.signature();
    if ((int)curves.size() != 3 * sig.genus - 3 + sig.punctures) return {};
    std::vector<CutPiece> pieces = cut_along(T, curves);
    for (const CutPiece& p : pieces)
        if (p.genus != 0 || (int)p.boundary.size() + p.punctures != 3) return {};
    if ((int)pieces.size() != 2 * sig.genus - 2 + sig.punctures)
        throw std::logic_error("make_pants_decomposition: pants count");
    return PantsDecomposition{curves, std::move(pieces)};
}

bool pants_adjacent(const PantsDecomposition& P, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= (int)P.curves.size() ||
        b >= (int)P.curves.size())
        throw std::invalid_argument("pants_adjacent: bad curve index");
    for (const CutPiece& p : P.pants) {
        bool ha = false, hb = false;
        for (const std::array<int, 2>& s : p.boundary) {
            ha |= s[0] == a;
            hb |= s[0] == b;
        }
        if (ha && hb) return true;
    }
    return false;
}

bool is_4_curve(const PantsDecomposition& P, int x) {
    int count = 0;
    for (int y = 0; y < (int)P.curves.size(); ++y)
        if (y != x && pants_adjacent(P, x, y)) ++count;
    if (count > 4) throw std::logic_error("is_4_curve: more than 4 neighbors");
    return count == 4;
}

std::optional<std::vector<int>> topological_equivalence(
    const PantsDecomposition& P, const PantsDecomposition& Q,
    const std::vector<int>& corr) {
    if (P.curves.size() != Q.curves.size() || corr.size() != P.curves.size())
        throw std::invalid_argument("topological_equivalence: size mismatch");
    if (P.pants.size() != Q.pants.size()) return {};
    int m = (int)P.pants.size();
    // Node label of a pants: puncture count + sorted multiset of boundary
    // curve indices (through corr for P).  Repeated indices encode
    // non-embedded pants.
    auto label = [](const CutPiece& p, const std::vector<int>* map) {
        std::vector<int> l{p.punctures};
        std::vector<int> b;
        for (const std::array<int, 2>& s : p.boundary)
            b.push_back(map ? (*map)[s[0]] : s[0]);
        std::sort(b.begin(), b.end());
        l.insert(l.end(), b.begin(), b.end());
        return l;
    };
    std::vector<std::vector<int>> lp(m), lq(m);
    for (int i = 0; i < m; ++i) {
        lp[i] = label(P.pants[i], &corr);
        lq[i] = label(Q.pants[i], nullptr);
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = lp[i] == lq[perm[i]];
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {};
}

std::vector<std::vector<int>> find_chains(const ComplexSlice& slice, int length,
                                          const std::vector<char>* allowed) {
    std::vector<std::vector<int>> out;
    int n = (int)slice.vertices.size();
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if ((int)cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (allowed && !(*allowed)[v]) continue;
            bool ok = true;
            for (size_t k = 0; k < cur.size() && ok; ++k) {
                int want = (k + 1 == cur.size()) ? 1 : 0;
                ok = slice.itable[cur[k]][v] == want && cur[k] != v;
            }
            if (!ok) continue;
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace curvecx
