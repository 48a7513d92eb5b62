#include "curvecx/map_harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "curvecx/overlay.hpp"
#include "curvecx/predicates.hpp"

namespace curvecx {

VertexMap identity_map(const ComplexSlice& domain) {
    VertexMap m;
    m.image.reserve(domain.vertices.size());
    for (const CurveClass& c : domain.vertices) m.image.push_back(c.w);
    return m;
}

VertexMap induced_map(const Triangulation& T, const std::vector<Coords>& gens,
                      const MappingClassWord& word,
                      const ComplexSlice& domain) {
    VertexMap m;
    m.image.reserve(domain.vertices.size());
    for (const CurveClass& c : domain.vertices)
        m.image.push_back(apply_word(T, gens, word, c.w));
    return m;
}

namespace {

void check_pair(const Triangulation& T, const ComplexSlice& domain,
                const VertexMap& m, int i, int j, MapCheckReport& rep) {
    rep.pairs_checked++;
    bool bad = false;
    if (m.image[i] == m.image[j]) {
        rep.injective = false;
        bad = true;
    }
    int ii = geometric_intersection(T, m.image[i], m.image[j]);
    if (domain.itable[i][j] == 0 && ii != 0) {
        rep.simplicial = false;
        rep.superinjective = false;
        bad = true;
    }
    if (domain.itable[i][j] != 0 && ii == 0) {
        rep.superinjective = false;
        bad = true;
    }
    if (bad && rep.violations.size() < 64) rep.violations.push_back({i, j});
}

}  // namespace

MapCheckReport check_map(const Triangulation& T, const ComplexSlice& domain,
                         const VertexMap& m) {
    MapCheckReport rep;
    int n = (int)domain.vertices.size();
    for (int i = 0; i < n; ++i) {
        if (m.image[i].empty()) continue;
        for (int j = i + 1; j < n; ++j) {
            if (m.image[j].empty()) continue;
            check_pair(T, domain, m, i, j, rep);
        }
    }
    return rep;
}

MapCheckReport check_map_sampled(const Triangulation& T,
                                 const ComplexSlice& domain, const VertexMap& m,
                                 unsigned seed, int samples) {
    MapCheckReport rep;
    std::vector<int> defined;
    for (int i = 0; i < (int)domain.vertices.size(); ++i)
        if (!m.image[i].empty()) defined.push_back(i);
    if (defined.size() < 2) return rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, (int)defined.size() - 1);
    for (int s = 0; s < samples; ++s) {
        int i = defined[pick(rng)], j = defined[pick(rng)];
        if (i == j) continue;
        check_pair(T, domain, m, std::min(i, j), std::max(i, j), rep);
    }
    return rep;
}

// --- extension to separating vertices --------------------------------------

namespace {

// Sorted (genus, punctures) pairs of the complementary pieces.
std::vector<std::array<int, 2>> cut_type(const Triangulation& T,
                                         const Coords& w) {
    std::vector<std::array<int, 2>> out;
    for (const CutPiece& p : cut_along(T, {w}))
        out.push_back({p.genus, p.punctures});
    std::sort(out.begin(), out.end());
    return out;
}

// Is the image of a chain still a chain (consecutive classes meet once,
// the rest disjoint)?
bool image_is_chain(const Triangulation& T, const VertexMap& m,
                    const std::vector<int>& chain) {
    int L = (int)chain.size();
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) {
            int want = (j == i + 1) ? 1 : 0;
            if (geometric_intersection(T, m.image[chain[i]],
                                       m.image[chain[j]]) != want)
                return false;
        }
    return true;
}

}  // namespace

ExtendResult extend_to_C(const Triangulation& T, const ComplexSlice& cslice,
                         const VertexMap& lambda,
                         const std::vector<Coords>& separating_pool) {
    constexpr int kMaxChainsPerPiece = 8;
    int n = (int)cslice.vertices.size();
    ExtendResult res;
    res.map.image.assign(n, Coords{});
    res.candidate_counts.assign(n, -1);

    std::vector<std::vector<std::array<int, 2>>> pool_types;
    pool_types.reserve(separating_pool.size());
    for (const Coords& d : separating_pool)
        pool_types.push_back(cut_type(T, d));

    auto fail = [&](int v, ExtendStatus st) {
        if (res.status == ExtendStatus::Ok) {
            res.status = st;
            res.failed_vertex = v;
        }
    };

    for (int v = 0; v < n; ++v) {
        if (cslice.vertices[v].nonseparating) {
            res.map.image[v] = lambda.image[v];
            continue;
        }
        const Coords& wc = cslice.vertices[v].w;
        std::vector<CutPiece> pieces = cut_along(T, {wc});
        std::vector<std::array<int, 2>> want_type = cut_type(T, wc);

        // Chains of slice classes filling each complementary piece.
        std::vector<std::vector<std::vector<int>>> piece_chains(pieces.size());
        bool have_all = true;
        for (int pi = 0; pi < (int)pieces.size(); ++pi) {
            int len = 2 * pieces[pi].genus + (pieces[pi].punctures > 0 ? 1 : 0);
            if (len < 2) {
                have_all = false;
                break;
            }
            std::vector<char> allowed(n, 0);
            for (int x = 0; x < n; ++x) {
                if (!cslice.vertices[x].nonseparating) continue;
                if (cslice.itable[x][v] != 0) continue;
                if (piece_containing(T, {wc}, cslice.vertices[x].w) != pi)
                    continue;
                allowed[x] = 1;
            }
            std::vector<std::vector<int>> chains =
                find_chains(cslice, len, &allowed);
            if ((int)chains.size() > kMaxChainsPerPiece)
                chains.resize(kMaxChainsPerPiece);
            // Drop chains whose images fail to be chains: they cannot pin
            // the image of v and would only produce false negatives.
            std::erase_if(chains, [&](const std::vector<int>& ch) {
                return !image_is_chain(T, lambda, ch);
            });
            if (chains.empty()) have_all = false;
            piece_chains[pi] = std::move(chains);
        }
        if (!have_all) {
            res.candidate_counts[v] = 0;
            fail(v, ExtendStatus::NoCandidate);
            continue;
        }

        // Candidates: right cut type, disjoint from the images of the first
        // chain of every piece; refine with further chains while ambiguous.
        std::vector<int> cand;
        for (int d = 0; d < (int)separating_pool.size(); ++d)
            if (pool_types[d] == want_type) cand.push_back(d);
        auto filter_with = [&](const std::vector<int>& chain) {
            std::erase_if(cand, [&](int d) {
                for (int x : chain)
                    if (geometric_intersection(T, separating_pool[d],
                                               lambda.image[x]) != 0)
                        return true;
                return false;
            });
        };
        for (int pi = 0; pi < (int)pieces.size(); ++pi)
            filter_with(piece_chains[pi][0]);
        for (int extra = 1; cand.size() > 1; ++extra) {
            bool any = false;
            for (int pi = 0; pi < (int)pieces.size(); ++pi)
                if (extra < (int)piece_chains[pi].size()) {
                    filter_with(piece_chains[pi][extra]);
                    any = true;
                }
            if (!any) break;
        }

        res.candidate_counts[v] = (int)cand.size();
        if (cand.empty()) {
            fail(v, ExtendStatus::NoCandidate);
        } else if (cand.size() > 1) {
            fail(v, ExtendStatus::Ambiguous);
        } else {
            res.map.image[v] = separating_pool[cand[0]];
        }
    }
    return res;
}

// --- realization by a twist word -------------------------------------------

namespace {

std::vector<int> tuple_key(const std::vector<Coords>& t) {
    std::vector<int> key;
    for (const Coords& w : t) {
        key.insert(key.end(), w.begin(), w.end());
        key.push_back(-1);
    }
    return key;
}

}  // namespace

std::optional<MappingClassWord> realize_by_homeomorphism(
    const Triangulation& T, const std::vector<Coords>& gens,
    const ComplexSlice& domain, const VertexMap& target, int max_len) {
    int ng = (int)gens.size();
    std::vector<Coords> start = gens, goal;
    for (const Coords& g : gens) {
        auto it = std::find_if(
            domain.vertices.begin(), domain.vertices.end(),
            [&](const CurveClass& c) { return c.w == g; });
        if (it == domain.vertices.end())
            throw std::invalid_argument(
                "realize_by_homeomorphism: generator not in domain");
        const Coords& im = target.image[it - domain.vertices.begin()];
        if (im.empty())
            throw std::invalid_argument(
                "realize_by_homeomorphism: target undefined on a generator");
        goal.push_back(im);
    }

    // Letters: twist about generator g with sign s.
    auto act = [&](const std::vector<Coords>& t, int g, int s) {
        std::vector<Coords> out;
        out.reserve(t.size());
        for (const Coords& w : t) out.push_back(dehn_twist(T, w, gens[g], s));
        return out;
    };
    auto inverse_letter = [&](TwistLetter a, TwistLetter b) {
        return a.gen == b.gen && a.power == -b.power;
    };

    // Full-domain verification of a candidate word.
    auto verified = [&](const MappingClassWord& w) {
        for (int v = 0; v < (int)domain.vertices.size(); ++v) {
            if (target.image[v].empty()) continue;
            if (apply_word(T, gens, w, domain.vertices[v].w) !=
                target.image[v])
                return false;
        }
        return true;
    };

    // Meet in the middle on generator-image tuples: the word w = u then v
    // acts as act(v) after act(u), so forward states act(u)(gens) must meet
    // backward states act(v)^{-1}(goal).
    int fwd_depth = (max_len + 1) / 2, bwd_depth = max_len / 2;

    struct Node {
        std::vector<Coords> state;
        MappingClassWord word;
    };
    std::map<std::vector<int>, MappingClassWord> fwd;
    std::vector<Node> layer{{start, {}}};
    fwd.emplace(tuple_key(start), MappingClassWord{});
    std::vector<std::pair<MappingClassWord, MappingClassWord>> matches;
    auto try_match = [&](const Node& b) {
        auto it = fwd.find(tuple_key(b.state));
        if (it != fwd.end()) matches.push_back({it->second, b.word});
    };
    for (int d = 0; d < fwd_depth; ++d) {
        std::vector<Node> next;
        for (const Node& nd : layer)
            for (int g = 0; g < ng; ++g)
                for (int s : {1, -1}) {
                    TwistLetter l{g, s};
                    if (!nd.word.empty() && inverse_letter(nd.word.back(), l))
                        continue;
                    Node nn{act(nd.state, g, s), nd.word};
                    nn.word.push_back(l);
                    if (fwd.emplace(tuple_key(nn.state), nn.word).second)
                        next.push_back(std::move(nn));
                }
        layer = std::move(next);
    }

    std::map<std::vector<int>, char> bwd_seen;
    std::vector<Node> blayer{{goal, {}}};
    bwd_seen.emplace(tuple_key(goal), 1);
    try_match(blayer[0]);
    for (int d = 0; d < bwd_depth && matches.empty(); ++d) {
        std::vector<Node> next;
        for (const Node& nd : blayer)
            for (int g = 0; g < ng; ++g)
                for (int s : {1, -1}) {
                    // Prepend the letter: act(l v)^{-1} = act(v)^{-1} after
                    // act(l)^{-1}, so the state moves by the inverse twist.
                    TwistLetter l{g, s};
                    if (!nd.word.empty() && inverse_letter(l, nd.word.front()))
                        continue;
                    Node nn{act(nd.state, g, -s), {}};
                    nn.word.reserve(nd.word.size() + 1);
                    nn.word.push_back(l);
                    nn.word.insert(nn.word.end(), nd.word.begin(),
                                   nd.word.end());
                    if (!bwd_seen.emplace(tuple_key(nn.state), 1).second)
                        continue;
                    try_match(nn);
                    next.push_back(std::move(nn));
                }
        blayer = std::move(next);
    }

    std::sort(matches.begin(), matches.end(),
              [](const auto& a, const auto& b) {
                  return a.first.size() + a.second.size() <
                         b.first.size() + b.second.size();
              });
    for (const auto& [u, v] : matches) {
        MappingClassWord w = u;
        w.insert(w.end(), v.begin(), v.end());
        if (verified(w)) return w;
    }
    return std::nullopt;
}

}  // namespace curvecx
