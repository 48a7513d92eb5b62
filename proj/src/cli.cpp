// curvecx: enumeration, intersection queries, slice building/export, lemma
// verification suites, and realization search for curves on small surfaces.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "curvecx/map_harness.hpp"
#include "curvecx/overlay.hpp"
#include "curvecx/predicates.hpp"

using json = nlohmann::json;
using namespace curvecx;

namespace {

// ---------------------------------------------------------------- plumbing

struct RunConfig {
    std::string surface = "2,0";
    int weight = 2;
    int length = 4;
    std::string suite;
    std::string cache_dir;
    std::string format = "text";
    unsigned seed = 1;
    int jobs = 0;
};

SurfaceSignature parse_surface(const std::string& s) {
    int g = -1, p = -1;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> g >> comma >> p) || comma != ',' || g < 0 || p < 0)
        throw CLI::ValidationError("--surface expects g,p (e.g. 2,0)");
    return {g, p};
}

Triangulation make_surface(const SurfaceSignature& sig) {
    if (sig.genus == 0) return build_punctured_sphere(sig.punctures);
    return build_standard_surface(sig);
}

Coords parse_coords(const std::string& s, int edges) {
    Coords w;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
    if ((int)w.size() != edges)
        throw CLI::ValidationError("coordinate count does not match the surface");
    return w;
}

MappingClassWord parse_word(const std::string& s, int ngens) {
    MappingClassWord w;
    if (s.empty()) return w;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t colon = tok.find(':');
        int gen = std::stoi(tok.substr(0, colon));
        int pow = colon == std::string::npos ? 1 : std::stoi(tok.substr(colon + 1));
        if (gen < 0 || gen >= ngens || pow == 0)
            throw CLI::ValidationError("bad word letter: " + tok);
        w.push_back({gen, pow});
    }
    return w;
}

std::string word_str(const MappingClassWord& w) {
    std::string out;
    for (const TwistLetter& l : w) {
        if (!out.empty()) out += ",";
        out += std::to_string(l.gen) + ":" + std::to_string(l.power);
    }
    return out;
}

std::string resolve_cache(const RunConfig& cfg) {
    if (const char* env = std::getenv("CURVECX_CACHE")) return env;
    return cfg.cache_dir;
}

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
    if (cfg.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

// ------------------------------------------------------------ cached loads

json slice_json(const SurfaceSignature& sig, const ComplexSlice& s,
                bool with_itable) {
    json out;
    out["version"] = "slice-v1";
    out["surface"] = {sig.genus, sig.punctures};
    out["weight"] = s.weight_bound;
    out["kind"] = s.kind == SliceKind::C ? "C" : s.kind == SliceKind::N ? "N" : "G";
    json verts = json::array();
    for (const CurveClass& v : s.vertices)
        verts.push_back({{"coords", v.w}, {"nonseparating", v.nonseparating}});
    out["vertices"] = verts;
    out["edges"] = s.edges;
    if (with_itable) out["itable"] = s.itable;
    return out;
}

ComplexSlice load_or_build_slice(const Triangulation& T,
                                 const SurfaceSignature& sig, int maxw,
                                 SliceKind kind, int jobs,
                                 const std::string& cache) {
    std::string kname = kind == SliceKind::C ? "C" : kind == SliceKind::N ? "N" : "G";
    std::filesystem::path file;
    if (!cache.empty()) {
        file = std::filesystem::path(cache) /
               ("slice-v1-g" + std::to_string(sig.genus) + "p" +
                std::to_string(sig.punctures) + "-" + kname + "-w" +
                std::to_string(maxw) + ".json");
        std::ifstream in(file);
        if (in) {
            json j = json::parse(in);
            if (j.value("version", "") != "slice-v1" ||
                j.value("weight", -1) != maxw || j.value("kind", "") != kname)
                throw std::runtime_error("cache version mismatch: " + file.string());
            ComplexSlice s;
            s.kind = kind;
            s.weight_bound = maxw;
            for (const json& v : j["vertices"])
                s.vertices.push_back({v["coords"].get<Coords>(),
                                      v["nonseparating"].get<bool>()});
            s.itable = j["itable"].get<std::vector<std::vector<int>>>();
            s.edges = j["edges"].get<std::vector<std::array<int, 2>>>();
            return s;
        }
    }
    ComplexSlice s = build_slice(T, maxw, kind, jobs);
    if (!cache.empty()) {
        std::filesystem::create_directories(file.parent_path());
        std::ofstream out(file);
        out << slice_json(sig, s, true).dump();
    }
    return s;
}

// ------------------------------------------------------------ verify suites

struct SuiteResult {
    json report;
    bool pass = true;
    std::string text;
};

// Deterministic word sample: lengths 1..maxlen, no letter immediately
// followed by its inverse.
std::vector<MappingClassWord> sample_words(unsigned seed, int count, int maxlen,
                                           int ngens) {
    std::mt19937 rng(seed);
    std::vector<MappingClassWord> out;
    for (int i = 0; i < count; ++i) {
        int len = 1 + (int)(rng() % (unsigned)maxlen);
        MappingClassWord w;
        while ((int)w.size() < len) {
            TwistLetter l{(int)(rng() % (unsigned)ngens), rng() % 2 ? 1 : -1};
            if (!w.empty() && w.back().gen == l.gen && w.back().power == -l.power)
                continue;
            w.push_back(l);
        }
        out.push_back(w);
    }
    return out;
}

// Deterministic sample of up to `want` items out of n, without replacement.
std::vector<int> sample_indices(unsigned seed, int n, int want) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::mt19937 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    if ((int)idx.size() > want) idx.resize(want);
    std::sort(idx.begin(), idx.end());
    return idx;
}

struct SuiteContext {
    RunConfig cfg;
    SurfaceSignature sig;
    Triangulation T;
    std::string cache;
};

// Shared scaffolding for the word-based lemma suites: builds the slice,
// samples words, runs a per-word property check plus a sampled
// superinjectivity check, and collects violations.
SuiteResult run_word_suite(
    const SuiteContext& ctx, const std::string& id, SliceKind kind,
    const std::function<void(const MappingClassWord&, const ComplexSlice&,
                             const VertexMap&, json&, int&)>& property) {
    SuiteResult res;
    ComplexSlice S = load_or_build_slice(ctx.T, ctx.sig, ctx.cfg.weight, kind,
                                         ctx.cfg.jobs, ctx.cache);
    std::vector<Coords> gens = twist_chain(ctx.T);
    std::vector<MappingClassWord> words =
        sample_words(ctx.cfg.seed, 5, ctx.cfg.length, (int)gens.size());

    res.report["check-id"] = id;
    res.report["direction"] = "exact";
    res.report["surface"] = {ctx.sig.genus, ctx.sig.punctures};
    res.report["weight"] = ctx.cfg.weight;
    res.report["seed"] = ctx.cfg.seed;
    res.report["violations"] = json::array();
    json witnesses = json::array();

    std::ostringstream text;
    text << id << " on (" << ctx.sig.genus << "," << ctx.sig.punctures
         << ") W=" << ctx.cfg.weight << ", " << words.size() << " words\n";
    int wi = 0;
    for (const MappingClassWord& w : words) {
        VertexMap m = induced_map(ctx.T, gens, w, S);
        MapCheckReport chk =
            check_map_sampled(ctx.T, S, m, ctx.cfg.seed + 1000 + wi, 300);
        json wit;
        wit["word"] = word_str(w);
        wit["superinjective"] = chk.superinjective;
        wit["pairs-sampled"] = chk.pairs_checked;
        int checked = 0;
        property(w, S, m, res.report["violations"], checked);
        wit["property-checks"] = checked;
        witnesses.push_back(wit);
        if (!chk.superinjective) {
            res.pass = false;
            for (const std::array<int, 2>& v : chk.violations)
                res.report["violations"].push_back(
                    {{"word", word_str(w)}, {"pair", v}, {"kind", "superinjectivity"}});
        }
        text << "  word " << word_str(w)
             << ": superinjective=" << (chk.superinjective ? "yes" : "no")
             << " property-checks=" << checked << "\n";
        ++wi;
    }
    res.report["witnesses"] = witnesses;
    if (!res.report["violations"].empty()) res.pass = false;
    res.report["pass"] = res.pass;
    text << (res.pass ? "PASS" : "FAIL") << "\n";
    res.text = text.str();
    return res;
}

// Pants decompositions of the slice as vertex index triples/tuples.
std::vector<std::vector<int>> slice_decompositions(const Triangulation& T,
                                                   const ComplexSlice& S) {
    std::vector<std::vector<int>> out;
    for (const SliceClique& c : maximal_simplices(T, S))
        if (c.globally_maximal) out.push_back(c.vertices);
    return out;
}

SuiteResult suite_lemma_2_2(const SuiteContext& ctx) {
    return run_word_suite(
        ctx, "lemma-2.2", SliceKind::C,
        [&](const MappingClassWord& w, const ComplexSlice& S, const VertexMap& m,
            json& viol, int& checked) {
            std::vector<std::vector<int>> decs = slice_decompositions(ctx.T, S);
            std::vector<int> pick =
                sample_indices(ctx.cfg.seed + 7, (int)decs.size(), 15);
            for (int d : pick) {
                std::vector<Coords> img;
                for (int v : decs[d]) img.push_back(m.image[v]);
                ++checked;
                if (!is_pants_decomposition(ctx.T, img))
                    viol.push_back({{"word", word_str(w)},
                                    {"decomposition", decs[d]},
                                    {"kind", "image not a pants decomposition"}});
            }
        });
}

SuiteResult suite_lemma_2_3(const SuiteContext& ctx) {
    return run_word_suite(
        ctx, "lemma-2.3", SliceKind::C,
        [&](const MappingClassWord& w, const ComplexSlice& S, const VertexMap& m,
            json& viol, int& checked) {
            std::vector<std::vector<int>> decs = slice_decompositions(ctx.T, S);
            std::vector<int> pick =
                sample_indices(ctx.cfg.seed + 11, (int)decs.size(), 10);
            for (int d : pick) {
                std::vector<Coords> cur, img;
                for (int v : decs[d]) {
                    cur.push_back(S.vertices[v].w);
                    img.push_back(m.image[v]);
                }
                auto P = make_pants_decomposition(ctx.T, cur);
                auto Q = make_pants_decomposition(ctx.T, img);
                if (!P || !Q) {
                    viol.push_back({{"word", word_str(w)},
                                    {"decomposition", decs[d]},
                                    {"kind", "decomposition lost"}});
                    continue;
                }
                for (size_t a = 0; a < cur.size(); ++a)
                    for (size_t b = a + 1; b < cur.size(); ++b) {
                        ++checked;
                        if (pants_adjacent(*P, (int)a, (int)b) !=
                            pants_adjacent(*Q, (int)a, (int)b))
                            viol.push_back({{"word", word_str(w)},
                                            {"decomposition", decs[d]},
                                            {"pair", {a, b}},
                                            {"kind", "adjacency flipped"}});
                    }
            }
        });
}

SuiteResult suite_lemma_2_4(const SuiteContext& ctx) {
    return run_word_suite(
        ctx, "lemma-2.4", SliceKind::C,
        [&](const MappingClassWord& w, const ComplexSlice& S, const VertexMap& m,
            json& viol, int& checked) {
            // Pants-bounding triples are preserved.
            std::vector<std::vector<int>> decs = slice_decompositions(ctx.T, S);
            std::vector<int> pick =
                sample_indices(ctx.cfg.seed + 13, (int)decs.size(), 10);
            for (int d : pick) {
                const std::vector<int>& t = decs[d];
                if (t.size() < 3) continue;
                bool before = bounds_pants(ctx.T, S.vertices[t[0]].w,
                                           S.vertices[t[1]].w, S.vertices[t[2]].w);
                if (!before) continue;
                ++checked;
                if (!bounds_pants(ctx.T, m.image[t[0]], m.image[t[1]],
                                  m.image[t[2]]))
                    viol.push_back({{"word", word_str(w)},
                                    {"triple", {t[0], t[1], t[2]}},
                                    {"kind", "pants triple lost"}});
            }
            // Peripheral pairs are preserved (punctured surfaces only).
            if (ctx.sig.punctures == 0) return;
            int found = 0;
            for (size_t a = 0; a < S.vertices.size() && found < 10; ++a)
                for (size_t b = a + 1; b < S.vertices.size() && found < 10; ++b) {
                    if (S.itable[a][b] != 0) continue;
                    if (!is_peripheral_pair(ctx.T, S.vertices[a].w,
                                            S.vertices[b].w))
                        continue;
                    ++found;
                    ++checked;
                    if (!is_peripheral_pair(ctx.T, m.image[a], m.image[b]))
                        viol.push_back({{"word", word_str(w)},
                                        {"pair", {a, b}},
                                        {"kind", "peripheral pair lost"}});
                }
        });
}

SuiteResult suite_lemma_2_5(const SuiteContext& ctx) {
    return run_word_suite(
        ctx, "lemma-2.5", SliceKind::C,
        [&](const MappingClassWord& w, const ComplexSlice& S, const VertexMap& m,
            json& viol, int& checked) {
            std::vector<std::vector<int>> decs = slice_decompositions(ctx.T, S);
            std::vector<int> pick =
                sample_indices(ctx.cfg.seed + 17, (int)decs.size(), 10);
            for (int d : pick) {
                std::vector<Coords> cur, img;
                for (int v : decs[d]) {
                    cur.push_back(S.vertices[v].w);
                    img.push_back(m.image[v]);
                }
                auto P = make_pants_decomposition(ctx.T, cur);
                auto Q = make_pants_decomposition(ctx.T, img);
                if (!P || !Q) continue;
                std::vector<int> corr(cur.size());
                for (size_t i = 0; i < corr.size(); ++i) corr[i] = (int)i;
                ++checked;
                if (!topological_equivalence(*P, *Q, corr))
                    viol.push_back({{"word", word_str(w)},
                                    {"decomposition", decs[d]},
                                    {"kind", "topological equivalence lost"}});
            }
        });
}

SuiteResult suite_lemma_2_6(const SuiteContext& ctx) {
    SuiteResult res;
    ComplexSlice S = load_or_build_slice(ctx.T, ctx.sig, ctx.cfg.weight,
                                         SliceKind::N, ctx.cfg.jobs, ctx.cache);
    res.report["check-id"] = "lemma-2.6";
    res.report["direction"] = "exact";
    res.report["surface"] = {ctx.sig.genus, ctx.sig.punctures};
    res.report["weight"] = ctx.cfg.weight;
    res.report["seed"] = ctx.cfg.seed;
    res.report["violations"] = json::array();

    int n = (int)S.vertices.size();
    std::vector<std::array<int, 2>> ones, many;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (S.itable[i][j] == 1) ones.push_back({i, j});
            if (S.itable[i][j] >= 2) many.push_back({i, j});
        }
    std::vector<int> p1 = sample_indices(ctx.cfg.seed + 19, (int)ones.size(), 60);
    std::vector<int> p2 = sample_indices(ctx.cfg.seed + 23, (int)many.size(), 60);
    int certified = 0;
    for (int k : p1) {
        auto cert = find_intersection_one_certificate(ctx.T, S, ones[k][0],
                                                      ones[k][1]);
        if (cert) {
            ++certified;
            if (!check_intersection_one_certificate(ctx.T, S, cert->alpha))
                res.report["violations"].push_back(
                    {{"pair", ones[k]}, {"kind", "certificate fails recheck"}});
        }
    }
    int unsound = 0;
    for (int k : p2)
        if (find_intersection_one_certificate(ctx.T, S, many[k][0], many[k][1])) {
            ++unsound;
            res.report["violations"].push_back(
                {{"pair", many[k]}, {"kind", "certificate on i >= 2 pair"}});
        }
    res.report["witnesses"] = {{"i1-pairs-sampled", p1.size()},
                               {"certified", certified},
                               {"i2plus-pairs-sampled", p2.size()},
                               {"unsound", unsound}};
    res.pass = res.report["violations"].empty();
    res.report["pass"] = res.pass;
    std::ostringstream text;
    text << "lemma-2.6 on (" << ctx.sig.genus << "," << ctx.sig.punctures
         << ") W=" << ctx.cfg.weight << ": certified " << certified << "/"
         << p1.size() << " sampled i=1 pairs, " << unsound
         << " unsound certificates on " << p2.size() << " i>=2 pairs\n"
         << (res.pass ? "PASS" : "FAIL") << "\n";
    res.text = text.str();
    return res;
}

SuiteResult suite_lemma_2_7(const SuiteContext& ctx) {
    return run_word_suite(
        ctx, "lemma-2.7", SliceKind::N,
        [&](const MappingClassWord& w, const ComplexSlice& S, const VertexMap& m,
            json& viol, int& checked) {
            std::vector<std::array<int, 2>> ones;
            int n = (int)S.vertices.size();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (S.itable[i][j] == 1) ones.push_back({i, j});
            std::vector<int> pick =
                sample_indices(ctx.cfg.seed + 29, (int)ones.size(), 60);
            for (int k : pick) {
                ++checked;
                if (geometric_intersection(ctx.T, m.image[ones[k][0]],
                                           m.image[ones[k][1]]) != 1)
                    viol.push_back({{"word", word_str(w)},
                                    {"pair", ones[k]},
                                    {"kind", "i=1 not preserved"}});
            }
        });
}

SuiteResult suite_lemma_3_6(const SuiteContext& ctx) {
    return run_word_suite(
        ctx, "lemma-3.6", SliceKind::N,
        [&](const MappingClassWord& w, const ComplexSlice& S, const VertexMap& m,
            json& viol, int& checked) {
            std::vector<std::array<int, 2>> pairs;
            int n = (int)S.vertices.size();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (S.itable[i][j] == 2 &&
                        geo2_alg0(ctx.T, S.vertices[i].w, S.vertices[j].w))
                        pairs.push_back({i, j});
            std::vector<int> pick =
                sample_indices(ctx.cfg.seed + 31, (int)pairs.size(), 40);
            for (int k : pick) {
                ++checked;
                if (!geo2_alg0(ctx.T, m.image[pairs[k][0]], m.image[pairs[k][1]]))
                    viol.push_back({{"word", word_str(w)},
                                    {"pair", pairs[k]},
                                    {"kind", "geo2/alg0 not preserved"}});
            }
        });
}

SuiteResult suite_lemma_4_1(const SuiteContext& ctx) {
    SuiteResult res;
    ComplexSlice S = load_or_build_slice(ctx.T, ctx.sig, ctx.cfg.weight,
                                         SliceKind::C, ctx.cfg.jobs, ctx.cache);
    std::vector<Coords> gens = twist_chain(ctx.T);
    std::vector<MappingClassWord> words =
        sample_words(ctx.cfg.seed, 5, ctx.cfg.length, (int)gens.size());

    res.report["check-id"] = "lemma-4.1";
    res.report["direction"] = "exact";
    res.report["surface"] = {ctx.sig.genus, ctx.sig.punctures};
    res.report["weight"] = ctx.cfg.weight;
    res.report["seed"] = ctx.cfg.seed;
    res.report["violations"] = json::array();
    json witnesses = json::array();
    std::ostringstream text;
    text << "lemma-4.1 on (" << ctx.sig.genus << "," << ctx.sig.punctures
         << ") W=" << ctx.cfg.weight << ", " << words.size() << " words\n";

    for (const MappingClassWord& w : words) {
        VertexMap full = induced_map(ctx.T, gens, w, S);
        VertexMap lambda = full;
        std::vector<Coords> pool, direct;
        for (int i = 0; i < (int)S.vertices.size(); ++i) {
            if (S.vertices[i].nonseparating) continue;
            lambda.image[i].clear();
            pool.push_back(S.vertices[i].w);
            direct.push_back(full.image[i]);
        }
        for (const Coords& d : direct) {
            bool have = false;
            for (const Coords& p : pool) have |= p == d;
            if (!have) pool.push_back(d);
        }
        ExtendResult r = extend_to_C(ctx.T, S, lambda, pool);
        int agree = 0, total = 0, ambiguous = 0, nocand = 0, k = 0;
        for (int i = 0; i < (int)S.vertices.size(); ++i) {
            if (S.vertices[i].nonseparating) continue;
            ++total;
            if (r.candidate_counts[i] == 0) ++nocand;
            if (r.candidate_counts[i] > 1) ++ambiguous;
            if (r.map.image[i] == direct[k]) ++agree;
            else
                res.report["violations"].push_back(
                    {{"word", word_str(w)},
                     {"vertex", i},
                     {"candidates", r.candidate_counts[i]},
                     {"kind", "extension disagrees with direct action"}});
            ++k;
        }
        witnesses.push_back({{"word", word_str(w)},
                             {"separating", total},
                             {"agree", agree},
                             {"ambiguous", ambiguous},
                             {"no-candidate", nocand}});
        text << "  word " << word_str(w) << ": " << agree << "/" << total
             << " agree, ambiguous=" << ambiguous << " no-candidate=" << nocand
             << "\n";
    }
    res.report["witnesses"] = witnesses;
    res.pass = res.report["violations"].empty();
    res.report["pass"] = res.pass;
    text << (res.pass ? "PASS" : "FAIL") << "\n";
    res.text = text.str();
    return res;
}

SuiteResult suite_thm_4_4_kernel(const SuiteContext& ctx) {
    SuiteResult res;
    ComplexSlice S = load_or_build_slice(ctx.T, ctx.sig, ctx.cfg.weight,
                                         SliceKind::N, ctx.cfg.jobs, ctx.cache);
    std::vector<Coords> gens = twist_chain(ctx.T);
    MappingClassWord iota = hyperelliptic_word(ctx.T);
    VertexMap m = induced_map(ctx.T, gens, iota, S);
    int fixed = 0, n = (int)S.vertices.size();
    res.report["check-id"] = "thm-4.4-kernel";
    res.report["direction"] = "exact";
    res.report["surface"] = {ctx.sig.genus, ctx.sig.punctures};
    res.report["weight"] = ctx.cfg.weight;
    res.report["violations"] = json::array();
    for (int i = 0; i < n; ++i) {
        if (m.image[i] == S.vertices[i].w)
            ++fixed;
        else
            res.report["violations"].push_back(
                {{"vertex", i}, {"kind", "moved by the involution"}});
    }
    res.report["witnesses"] = {{"fixed", fixed}, {"vertices", n}};
    res.pass = fixed == n;
    res.report["pass"] = res.pass;
    std::ostringstream text;
    text << "thm-4.4-kernel on (" << ctx.sig.genus << "," << ctx.sig.punctures
         << ") W=" << ctx.cfg.weight << ": involution fixes " << fixed << "/"
         << n << " vertices\n"
         << (res.pass ? "PASS" : "FAIL") << "\n";
    res.text = text.str();
    return res;
}

// Signed homological pairing (the engine's public pairing is an absolute
// value; the determinant oracle needs signs, fixed by the surface
// orientation convention).
long long signed_pairing(const Triangulation& T, const Coords& a,
                         const Coords& b) {
    return Overlay(T, MCDiagram::trace(T, a), MCDiagram::trace(T, b))
        .signed_sum();
}

SuiteResult suite_engine_oracles(const SuiteContext& ctx) {
    SuiteResult res;
    res.report["check-id"] = "engine-oracles";
    res.report["direction"] = "exact";
    res.report["surface"] = {ctx.sig.genus, ctx.sig.punctures};
    res.report["weight"] = ctx.cfg.weight;
    res.report["violations"] = json::array();
    std::ostringstream text;
    json witnesses;

    if (ctx.sig.genus == 1 && ctx.sig.punctures == 1) {
        // Determinant oracle: on the punctured torus, the geometric
        // intersection number of primitive homology classes (p,q), (p',q')
        // is |pq' - qp'|.  Homology coordinates come from signed pairings
        // against a fixed basis pair.
        std::vector<CurveClass> cs = enumerate_curves(ctx.T, ctx.cfg.weight);
        int b1 = -1, b2 = -1;
        for (size_t i = 0; i < cs.size() && b1 < 0; ++i)
            for (size_t j = 0; j < cs.size() && b1 < 0; ++j)
                if (i != j &&
                    std::llabs(signed_pairing(ctx.T, cs[i].w, cs[j].w)) == 1) {
                    b1 = (int)i;
                    b2 = (int)j;
                }
        if (b1 < 0) throw std::runtime_error("no unimodular basis pair found");
        std::vector<long long> P(cs.size()), Q(cs.size());
        for (size_t i = 0; i < cs.size(); ++i) {
            P[i] = signed_pairing(ctx.T, cs[i].w, cs[b2].w);
            Q[i] = -signed_pairing(ctx.T, cs[i].w, cs[b1].w);
        }
        long long pairs = 0, mismatches = 0;
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j) {
                ++pairs;
                long long det = std::llabs(P[i] * Q[j] - Q[i] * P[j]);
                if (geometric_intersection(ctx.T, cs[i].w, cs[j].w) != det) {
                    ++mismatches;
                    res.report["violations"].push_back(
                        {{"pair", {i, j}}, {"kind", "determinant mismatch"}});
                }
            }
        witnesses["classes"] = cs.size();
        witnesses["determinant-pairs"] = pairs;
        witnesses["determinant-mismatches"] = mismatches;
        text << "engine-oracles (1,1) W=" << ctx.cfg.weight << ": "
             << cs.size() << " classes, " << pairs << " determinant pairs, "
             << mismatches << " mismatches\n";
    }

    // Twist identity oracle: i(t_c^n(a), a) = |n| * i(a,c)^2.
    std::vector<Coords> gens = twist_chain(ctx.T);
    int twist_checks = 0, twist_bad = 0;
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t c = 0; c < gens.size(); ++c) {
            if (a == c) continue;
            int iac = geometric_intersection(ctx.T, gens[a], gens[c]);
            Coords cur = gens[a];
            for (int n = 1; n <= 3; ++n) {
                cur = dehn_twist(ctx.T, cur, gens[c], 1);
                ++twist_checks;
                if (geometric_intersection(ctx.T, cur, gens[a]) !=
                    n * iac * iac) {
                    ++twist_bad;
                    res.report["violations"].push_back(
                        {{"generators", {a, c}},
                         {"power", n},
                         {"kind", "twist identity mismatch"}});
                }
            }
        }
    witnesses["twist-identity-checks"] = twist_checks;
    witnesses["twist-identity-mismatches"] = twist_bad;
    text << "twist identity: " << twist_checks << " checks, " << twist_bad
         << " mismatches\n";

    res.report["witnesses"] = witnesses;
    res.pass = res.report["violations"].empty();
    res.report["pass"] = res.pass;
    text << (res.pass ? "PASS" : "FAIL") << "\n";
    res.text = text.str();
    return res;
}

SuiteResult run_suite(const SuiteContext& ctx) {
    const std::string& s = ctx.cfg.suite;
    if (s == "lemma-2.2") return suite_lemma_2_2(ctx);
    if (s == "lemma-2.3") return suite_lemma_2_3(ctx);
    if (s == "lemma-2.4") return suite_lemma_2_4(ctx);
    if (s == "lemma-2.5") return suite_lemma_2_5(ctx);
    if (s == "lemma-2.6") return suite_lemma_2_6(ctx);
    if (s == "lemma-2.7") return suite_lemma_2_7(ctx);
    if (s == "lemma-3.6") return suite_lemma_3_6(ctx);
    if (s == "lemma-4.1") return suite_lemma_4_1(ctx);
    if (s == "thm-4.4-kernel") return suite_thm_4_4_kernel(ctx);
    if (s == "engine-oracles") return suite_engine_oracles(ctx);
    throw CLI::ValidationError("unknown suite: " + s);
}

// ---------------------------------------------------------------- commands

int cmd_surface(const RunConfig& cfg) {
    SurfaceSignature sig = parse_surface(cfg.surface);
    Triangulation T = make_surface(sig);
    json out;
    out["version"] = "tri-v1";
    out["triangles"] = T.num_triangles();
    json glue = json::array();
    for (int s = 0; s < 3 * T.num_triangles(); ++s) glue.push_back(T.glue(s));
    out["gluing"] = glue;
    json punct = json::array();
    for (int v : T.punctures()) punct.push_back(v);
    out["punctures"] = punct;
    out["signature"] = {sig.genus, sig.punctures};
    std::ostringstream text;
    text << "surface (" << sig.genus << "," << sig.punctures << "): "
         << T.num_triangles() << " triangles, " << T.num_edges() << " edges, "
         << T.punctures().size() << " punctures\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
    SurfaceSignature sig = parse_surface(cfg.surface);
    Triangulation T = make_surface(sig);
    std::string cache = resolve_cache(cfg);
    std::vector<CurveClass> cs;
    std::filesystem::path file;
    bool loaded = false;
    if (!cache.empty()) {
        file = std::filesystem::path(cache) /
               ("curves-v1-g" + std::to_string(sig.genus) + "p" +
                std::to_string(sig.punctures) + "-w" +
                std::to_string(cfg.weight) + ".json");
        std::ifstream in(file);
        if (in) {
            json j = json::parse(in);
            if (j.value("version", "") != "curves-v1" ||
                j.value("weight", -1) != cfg.weight)
                throw std::runtime_error("cache version mismatch: " +
                                         file.string());
            for (const json& v : j["classes"])
                cs.push_back({v["coords"].get<Coords>(),
                              v["nonseparating"].get<bool>()});
            loaded = true;
        }
    }
    if (!loaded) cs = enumerate_curves(T, cfg.weight);
    json out;
    out["version"] = "curves-v1";
    out["surface"] = {sig.genus, sig.punctures};
    out["weight"] = cfg.weight;
    json classes = json::array();
    int nonsep = 0;
    for (const CurveClass& c : cs) {
        classes.push_back(
            {{"coords", c.w}, {"nonseparating", c.nonseparating}});
        nonsep += c.nonseparating;
    }
    out["classes"] = classes;
    if (!loaded && !cache.empty()) {
        std::filesystem::create_directories(file.parent_path());
        std::ofstream o(file);
        o << out.dump();
    }
    std::ostringstream text;
    text << cs.size() << " classes (" << nonsep << " nonseparating) on ("
         << sig.genus << "," << sig.punctures << ") at W=" << cfg.weight
         << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_intersect(const RunConfig& cfg, const std::string& astr,
                  const std::string& bstr) {
    SurfaceSignature sig = parse_surface(cfg.surface);
    Triangulation T = make_surface(sig);
    Coords a = parse_coords(astr, T.num_edges());
    Coords b = parse_coords(bstr, T.num_edges());
    int geo = geometric_intersection(T, a, b);
    int alg = algebraic_pairing(T, a, b);
    json out{{"geometric", geo}, {"algebraic", alg}};
    std::ostringstream text;
    text << "geometric " << geo << ", algebraic " << alg << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_complex(const RunConfig& cfg, const std::string& kind_str) {
    SurfaceSignature sig = parse_surface(cfg.surface);
    Triangulation T = make_surface(sig);
    SliceKind kind = kind_str == "C"   ? SliceKind::C
                     : kind_str == "N" ? SliceKind::N
                                       : SliceKind::G;
    ComplexSlice S = load_or_build_slice(T, sig, cfg.weight, kind, cfg.jobs,
                                         resolve_cache(cfg));
    if (cfg.format == "dot") {
        std::cout << "graph slice {\n";
        for (size_t i = 0; i < S.vertices.size(); ++i) {
            std::cout << "  v" << i << " [label=\"";
            for (size_t e = 0; e < S.vertices[i].w.size(); ++e)
                std::cout << (e ? "," : "") << S.vertices[i].w[e];
            std::cout << "\"];\n";
        }
        for (const std::array<int, 2>& e : S.edges)
            std::cout << "  v" << e[0] << " -- v" << e[1] << ";\n";
        std::cout << "}\n";
        return 0;
    }
    std::ostringstream text;
    text << kind_str << "-slice on (" << sig.genus << "," << sig.punctures
         << ") W=" << cfg.weight << ": " << S.vertices.size() << " vertices, "
         << S.edges.size() << " edges\n";
    emit(cfg, slice_json(sig, S, false), text.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    SuiteContext ctx{cfg, parse_surface(cfg.surface),
                     make_surface(parse_surface(cfg.surface)),
                     resolve_cache(cfg)};
    SuiteResult res = run_suite(ctx);
    emit(cfg, res.report, res.text);
    return res.pass ? 0 : 1;
}

int cmd_realize(const RunConfig& cfg, const std::string& word_str_in) {
    SurfaceSignature sig = parse_surface(cfg.surface);
    Triangulation T = make_surface(sig);
    std::vector<Coords> gens = twist_chain(T);
    MappingClassWord w = parse_word(word_str_in, (int)gens.size());
    ComplexSlice S = load_or_build_slice(T, sig, cfg.weight, SliceKind::N,
                                         cfg.jobs, resolve_cache(cfg));
    VertexMap target = induced_map(T, gens, w, S);
    auto got = realize_by_homeomorphism(T, gens, S, target, cfg.length);
    json out;
    out["version"] = "mcg-v1";
    out["target-word"] = word_str(w);
    out["length-bound"] = cfg.length;
    out["found"] = got.has_value();
    if (got) out["witness"] = word_str(*got);
    std::ostringstream text;
    if (got)
        text << "realized by \"" << word_str(*got) << "\" (length "
             << got->size() << ")\n";
    else
        text << "no witness within length " << cfg.length
             << " (bound-relative, not a refutation)\n";
    emit(cfg, out, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "curvecx: curves, intersection numbers, curve-complex slices and "
        "verification suites on small surfaces.\n"
        "Suites: lemma-2.2 lemma-2.3 lemma-2.4 lemma-2.5 lemma-2.6 lemma-2.7 "
        "lemma-3.6 lemma-4.1 thm-4.4-kernel engine-oracles"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--surface", cfg.surface, "surface signature g,p");
        c->add_option("--weight", cfg.weight, "edge-weight bound W");
        c->add_option("--length", cfg.length, "word length bound L");
        c->add_option("--format", cfg.format, "output format: json|dot|text");
        c->add_option("--cache", cfg.cache_dir,
                      "cache directory (CURVECX_CACHE overrides)");
        c->add_option("--seed", cfg.seed, "random seed");
        c->add_option("--jobs", cfg.jobs, "worker count (0 = all cores)");
    };

    CLI::App* c_surface = app.add_subcommand("surface", "dump the triangulation");
    add_common(c_surface);

    CLI::App* c_enum = app.add_subcommand("enumerate", "enumerate curve classes");
    add_common(c_enum);

    std::string astr, bstr;
    CLI::App* c_int = app.add_subcommand("intersect", "intersection numbers");
    add_common(c_int);
    c_int->add_option("--a", astr, "first class, comma-separated coordinates")
        ->required();
    c_int->add_option("--b", bstr, "second class")->required();

    std::string kind = "C";
    CLI::App* c_cx = app.add_subcommand("complex", "build and export a slice");
    add_common(c_cx);
    c_cx->add_option("--kind", kind, "slice kind: C|N|G");

    CLI::App* c_ver = app.add_subcommand("verify", "run a verification suite");
    add_common(c_ver);
    c_ver->add_option("--suite", cfg.suite, "suite name")->required();

    std::string wordstr;
    CLI::App* c_rz = app.add_subcommand("realize", "realization search");
    add_common(c_rz);
    c_rz->add_option("--word", wordstr,
                     "target word, letters gen:power (e.g. 0:1,2:-1)")
        ->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (c_surface->parsed()) return cmd_surface(cfg);
        if (c_enum->parsed()) return cmd_enumerate(cfg);
        if (c_int->parsed()) return cmd_intersect(cfg, astr, bstr);
        if (c_cx->parsed()) return cmd_complex(cfg, kind);
        if (c_ver->parsed()) return cmd_verify(cfg);
        if (c_rz->parsed()) return cmd_realize(cfg, wordstr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
