#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "completions.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "isomorphism.hpp"
#include "report.hpp"
#include "tournament.hpp"
#include "transitive.hpp"

namespace dicolor {

// Long-running scenarios split their outermost loop round-robin over shards;
// shard i of n owns the items congruent to i mod n.
struct Shard {
    int index = 0;
    int count = 1;

    bool owns(std::uint64_t item) const {
        return item % static_cast<std::uint64_t>(count) == static_cast<std::uint64_t>(index);
    }
    std::string text() const { return std::to_string(index) + "/" + std::to_string(count); }
};

struct ScenarioOptions {
    Shard shard;
    std::filesystem::path checkpoint_dir; // empty: checkpointing off
    bool resume = false;
    std::filesystem::path out_dir;        // empty: list and certificate files are not written
    std::uint64_t checkpoint_nodes = 1000000;
    double checkpoint_seconds = 60.0;
    // Truncation knobs for smoke runs.  Hitting either limit downgrades the
    // report to "partial"; they cap work per process and are deliberately not
    // part of the checkpoint configuration, so a truncated run can be resumed
    // without them and still converge to the untruncated report.
    std::uint64_t limit_outer = 0; // owned outer items processed per run (0 = all)
    std::uint64_t limit_inner = 0; // per item search node budget (0 = off)
    std::uint64_t rand_trials = 100000; // sample size for randomized property records
    bool section1_order = false; // two-tt5: filter pairs by whole-glue splits instead of types
    std::uint64_t rng_seed = 0x5eed1c01;
};

namespace detail {

inline std::string shard_config(const ScenarioOptions& o) { return "shard=" + o.shard.text(); }

inline void check_shard(const Shard& s) {
    if (s.count < 1 || s.index < 0 || s.index >= s.count)
        throw usage_error("shard index must lie in 0..count-1");
}

inline std::filesystem::path checkpoint_file(const ScenarioOptions& o, const std::string& id) {
    return o.checkpoint_dir /
           (id + "-shard" + std::to_string(o.shard.index) + "of" + std::to_string(o.shard.count) +
            ".ckpt");
}

// Owns the checkpoint of one scenario run: loads it on resume (refusing a
// mismatched configuration), saves it at the node-or-time cadence, and keeps
// everything in memory when no checkpoint directory was given.
class CheckpointDriver {
public:
    CheckpointDriver(const ScenarioOptions& o, const std::string& id, const std::string& config)
        : throttle_(o.checkpoint_nodes, o.checkpoint_seconds) {
        ck_.scenario = id;
        ck_.config = config;
        if (!o.checkpoint_dir.empty()) {
            std::filesystem::create_directories(o.checkpoint_dir);
            path_ = checkpoint_file(o, id);
        }
        if (o.resume) {
            if (path_.empty()) throw usage_error("resume requires a checkpoint directory");
            auto loaded = Checkpoint::load(path_);
            if (!loaded) throw usage_error("no checkpoint to resume at " + path_.string());
            if (loaded->scenario != id || loaded->config != config)
                throw usage_error("checkpoint at " + path_.string() +
                                  " was written under a different configuration");
            ck_ = *loaded;
        }
    }

    Checkpoint& ck() { return ck_; }
    void maybe_save() {
        if (!path_.empty() && throttle_.due(ck_.progress)) ck_.save(path_);
    }
    void save() const {
        if (!path_.empty()) ck_.save(path_);
    }

private:
    Checkpoint ck_;
    Throttle throttle_;
    std::filesystem::path path_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string fixed_digits(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Writes a list or certificate file under out_dir and returns its path, or
// nothing when no output directory was requested.
inline std::optional<std::string> emit_file(const ScenarioOptions& o, const std::string& name,
                                            const std::string& content) {
    if (o.out_dir.empty()) return std::nullopt;
    std::filesystem::create_directories(o.out_dir);
    std::filesystem::path p = o.out_dir / name;
    atomic_write(p, content);
    return p.string();
}

inline unsigned subset_mask(std::initializer_list<int> vs) {
    unsigned m = 0;
    for (int v : vs) m |= 1u << v;
    return m;
}

// Lexicographic i <= j pairs over m items; r-th pair of m*(m+1)/2.
inline std::pair<int, int> unrank_pair(std::uint64_t r, int m) {
    int i = 0;
    while (r >= static_cast<std::uint64_t>(m - i)) {
        r -= static_cast<std::uint64_t>(m - i);
        ++i;
    }
    return {i, i + static_cast<int>(r)};
}

// Lexicographic i <= j <= k triples over m items.
inline std::uint64_t triple_count(std::uint64_t m) { return m * (m + 1) * (m + 2) / 6; }

inline std::array<int, 3> unrank_triple(std::uint64_t r, int m) {
    int i = 0;
    while (true) {
        std::uint64_t rem = static_cast<std::uint64_t>(m - i);
        std::uint64_t block = rem * (rem + 1) / 2;
        if (r < block) break;
        r -= block;
        ++i;
    }
    int j = i;
    while (r >= static_cast<std::uint64_t>(m - j)) {
        r -= static_cast<std::uint64_t>(m - j);
        ++j;
    }
    return {i, j, j + static_cast<int>(r)};
}

} // namespace detail

// The 11-vertex frame shared by the 17- and 18-vertex arguments: W_1 under its
// hub labelling on 0..6 plus a transitive chain on 7..10, joined by the unique
// cross arcs that make the whole tournament a copy of paley(11).
inline Tournament skeleton_w1_tt4() {
    Tournament b = tournament_w1();
    // beats[v] bit q set: hub vertex v beats chain vertex 7+q
    static constexpr unsigned beats[7] = {0b0011u, 0b0010u, 0b1001u, 0b0101u,
                                          0b1011u, 0b0101u, 0b0110u};
    return Tournament(11, [&](int i, int j) {
        if (j < 7) return b.arc(i, j);
        if (i >= 7) return true; // chain is transitive in label order
        return ((beats[i] >> (j - 7)) & 1u) != 0;
    });
}

// Re-derives the same frame from paley(11) alone: take the transitive 4-set
// {0,1,4,5}, send it to the chain, and relabel the 7 remaining vertices by the
// unique isomorphism onto the hub labelling of W_1.  Uniqueness holds because
// W_1 has a trivial automorphism group.
inline Tournament derived_skeleton() {
    Tournament p11 = paley(11);
    const std::array<int, 4> chain{0, 1, 4, 5};
    if (!is_transitive(p11, VertexSet::of({0, 1, 4, 5})))
        throw structural_error("skeleton: {0,1,4,5} is not transitive in paley(11)");
    VertexSet rest = p11.vertices() - VertexSet::of({0, 1, 4, 5});
    Tournament res = induced(p11, rest);
    Tournament w1 = tournament_w1();
    LabeledForm lr = canonical_form_labeled(res);
    LabeledForm lw = canonical_form_labeled(w1);
    if (lr.form.code != lw.form.code)
        throw structural_error("skeleton: residual of the transitive 4-set is not W_1");
    std::array<int, 7> inv_w{};
    for (int v = 0; v < 7; ++v) inv_w[static_cast<std::size_t>(lw.labeling[v])] = v;
    Permutation m(11);
    int k = 0;
    for (int v : rest) m[v] = inv_w[static_cast<std::size_t>(lr.labeling[k++])];
    for (int r = 0; r < 4; ++r) m[chain[r]] = 7 + r;
    return relabel(p11, m);
}

// Frame plus a 12th vertex x: rank in 0..4 places x within the chain (rank 0
// puts x above all four chain vertices), and bit v of arcs_to_hub set means
// x beats hub vertex v.
inline Tournament skeleton_with_x(const Tournament& skel, int rank, unsigned arcs_to_hub) {
    if (skel.size() != 11) throw parameter_error("skeleton_with_x: frame must have 11 vertices");
    if (rank < 0 || rank > 4 || arcs_to_hub >= 128)
        throw parameter_error("skeleton_with_x: rank in 0..4, hub arcs in 0..127");
    return Tournament(12, [&](int i, int j) {
        if (j < 11) return skel.arc(i, j);
        if (i < 7) return ((arcs_to_hub >> i) & 1u) == 0;
        return (i - 7) < rank;
    });
}

// ---------------------------------------------------------------------------
// Scenarios.  Each returns a ScenarioReport whose status is "verified" only if
// every asserted quantity matched exactly, "refuted" when a counterexample or
// count mismatch was found, and "partial" when a limit truncated the run.
// ---------------------------------------------------------------------------

inline ScenarioReport scenario_t7_census(const ScenarioOptions&) {
    Stopwatch sw;
    ScenarioReport r{"t7-census", "none", "verified", {}, 0};
    bool ok = true;

    std::vector<Tournament> sixes = enumerate_tournaments(6);
    std::uint64_t two_col = 0;
    for (const Tournament& t : sixes)
        if (k_colorable(t, 2)) ++two_col;
    r.add("census6", sixes.size());
    r.add("census6_2colorable", two_col);
    ok = ok && sixes.size() == 56 && two_col == 56;

    std::vector<Tournament> sevens = enumerate_tournaments(7);
    r.add("census7", sevens.size());
    ok = ok && sevens.size() == 456;

    std::vector<std::vector<std::uint8_t>> hits;
    for (const Tournament& t : sevens)
        if (!k_colorable(t, 2) && k_colorable(t, 3)) hits.push_back(canonical_form(t).code);
    std::sort(hits.begin(), hits.end());
    std::vector<std::vector<std::uint8_t>> expected;
    for (const Tournament& t :
         {paley(7), tournament_w(), tournament_w0(), tournament_w1()})
        expected.push_back(canonical_form(t).code);
    std::sort(expected.begin(), expected.end());
    r.add("census7_3chromatic", hits.size());
    r.add("named_forms_match", detail::yes_no(hits == expected));
    ok = ok && hits.size() == 4 && hits == expected;

    int chi_w = dichromatic_number(tournament_w());
    int chi_w0 = dichromatic_number(tournament_w0());
    int chi_w1 = dichromatic_number(tournament_w1());
    int chi_hub = dichromatic_number(paley7_hub_labelling());
    r.add("chi_w", static_cast<std::uint64_t>(chi_w));
    r.add("chi_w0", static_cast<std::uint64_t>(chi_w0));
    r.add("chi_w1", static_cast<std::uint64_t>(chi_w1));
    r.add("chi_pal7_hub", static_cast<std::uint64_t>(chi_hub));
    r.add("hub_is_pal7", detail::yes_no(isomorphic(paley(7), paley7_hub_labelling())));
    ok = ok && chi_w == 3 && chi_w0 == 3 && chi_w1 == 3 && chi_hub == 3 &&
         isomorphic(paley(7), paley7_hub_labelling());

    if (!ok) r.status = "refuted";
    r.wall_ms = sw.ms();
    return r;
}

inline ScenarioReport scenario_x13_structure(const ScenarioOptions& o) {
    Stopwatch sw;
    ScenarioReport r{"x13-structure", "trials=" + std::to_string(o.rand_trials), "verified", {}, 0};
    bool ok = true;
    Tournament t = x13();

    bool tt5_free = !contains_tt(t, 5).has_value();
    r.add("tt5_free", detail::yes_no(tt5_free));
    ok = ok && tt5_free;

    int chi = dichromatic_number(t);
    r.add("chi", static_cast<std::uint64_t>(chi));
    ok = ok && chi == 4;

    std::vector<Permutation> auts = automorphisms(t);
    r.add("aut_order", auts.size());
    ok = ok && auts.size() == 39;

    VertexSet orbit0{0};
    for (const Permutation& g : auts) orbit0.add(g[0]);
    bool vtx_transitive = orbit0 == t.vertices();
    r.add("vertex_transitive", detail::yes_no(vtx_transitive));
    ok = ok && vtx_transitive;

    // every arc maps to 0->1 or 0->2 under some automorphism
    int arcs_ok = 0, arcs_total = 0;
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) {
            if (i == j || !t.arc(i, j)) continue;
            ++arcs_total;
            for (const Permutation& g : auts)
                if (g[i] == 0 && (g[j] == 1 || g[j] == 2)) {
                    ++arcs_ok;
                    break;
                }
        }
    r.add("arc_orbit_reachable", static_cast<std::uint64_t>(arcs_ok));
    ok = ok && arcs_total == 78 && arcs_ok == 78;

    // transitive 4-sets whose two most dominant vertices are {0,1} or {0,2}
    std::vector<VertexSet> found;
    for (std::uint32_t m = 0; m < (1u << 13); ++m) {
        if (std::popcount(m) != 4 || !is_transitive(t, VertexSet(m))) continue;
        int top = -1, second = -1;
        for (int v : VertexSet(m)) {
            int d = (t.out(v) & VertexSet(m)).size();
            if (d == 3) top = v;
            if (d == 2) second = v;
        }
        VertexSet pair = VertexSet::of({top, second});
        if (pair == VertexSet::of({0, 1}) || pair == VertexSet::of({0, 2}))
            found.push_back(VertexSet(m));
    }
    std::sort(found.begin(), found.end());
    const std::array<VertexSet, 4> tops{VertexSet::of({0, 1, 2, 3}), VertexSet::of({0, 1, 3, 6}),
                                        VertexSet::of({0, 1, 2, 6}), VertexSet::of({0, 2, 3, 5})};
    std::vector<VertexSet> expected(tops.begin(), tops.end());
    std::sort(expected.begin(), expected.end());
    r.add("tt4_with_top_01_02", found.size());
    r.add("tt4_sets_match", detail::yes_no(found == expected));
    ok = ok && found == expected;

    // the four residual tournaments: pairwise non-isomorphic, all rigid
    std::vector<std::vector<std::uint8_t>> codes;
    bool rigid = true;
    for (const VertexSet& a : tops) {
        Tournament res = induced(t, t.vertices() - a);
        codes.push_back(canonical_form(res).code);
        rigid = rigid && automorphisms(res).size() == 1;
    }
    std::sort(codes.begin(), codes.end());
    bool distinct = std::adjacent_find(codes.begin(), codes.end()) == codes.end();
    r.add("residuals_distinct", detail::yes_no(distinct));
    r.add("residuals_rigid", detail::yes_no(rigid));
    ok = ok && distinct && rigid;

    // in-degree bands of the first residual: the images of 4,5,6 have
    // in-degree 3, of 7,8,9 in-degree 4, of 10,11,12 in-degree 5
    Tournament t1 = induced(t, t.vertices() - VertexSet::of({0, 1, 2, 3}));
    bool bands = true;
    for (int v = 0; v < 9; ++v) bands = bands && t1.in_degree(v) == 3 + v / 3;
    r.add("residual1_indegree_bands", detail::yes_no(bands));
    ok = ok && bands;

    // every random 14-vertex tournament contains a transitive 5-set
    std::mt19937_64 rng(o.rng_seed);
    std::uint64_t with_tt5 = 0;
    for (std::uint64_t i = 0; i < o.rand_trials; ++i) {
        Tournament s(14, [&](int, int) { return (rng() & 1u) != 0; });
        if (contains_tt(s, 5)) ++with_tt5;
    }
    r.add("rand14_trials", o.rand_trials);
    r.add("rand14_with_tt5", with_tt5);
    ok = ok && with_tt5 == o.rand_trials;

    if (!ok) r.status = "refuted";
    r.wall_ms = sw.ms();
    return r;
}

inline ScenarioReport scenario_19_certificate(const ScenarioOptions& o) {
    Stopwatch sw;
    ScenarioReport r{"19-certificate", "memo=on", "verified", {}, 0};
    bool ok = true;
    Tournament t = blowup_pal7();
    ColoringOptions memo{true};

    bool not4 = !k_colorable(t, 4, memo).has_value();
    r.add("four_colorable", detail::yes_no(!not4));
    ok = ok && not4;

    auto five = k_colorable(t, 5, memo);
    bool five_ok = five.has_value() && valid_partition(t, *five, 5);
    r.add("five_coloring_valid", detail::yes_no(five_ok));
    ok = ok && five_ok;
    if (five_ok) {
        std::string cert;
        for (const VertexSet& c : five->classes) {
            for (int v : c) cert += std::to_string(v) + " ";
            cert += "\n";
        }
        if (auto p = detail::emit_file(o, "blowup19-5coloring.txt", cert)) r.add("coloring_file", *p);
    }

    std::uint64_t rev_ok = 0, rev_total = 0;
    for (int i = 0; i < 19 && ok; ++i)
        for (int j = i + 1; j < 19; ++j) {
            ++rev_total;
            Tournament flipped(19, [&](int a, int b) {
                bool arc = t.arc(a, b);
                return (a == i && b == j) ? !arc : arc;
            });
            auto w = k_colorable(flipped, 4, memo);
            if (w && valid_partition(flipped, *w, 4)) ++rev_ok;
        }
    r.add("arc_reversals", rev_total);
    r.add("arc_reversals_4colorable", rev_ok);
    ok = ok && rev_total == 171 && rev_ok == rev_total;

    std::uint64_t del_ok = 0;
    for (int v = 0; v < 19; ++v) {
        Tournament sub = induced(t, t.vertices() - VertexSet::of({v}));
        auto w = k_colorable(sub, 4, memo);
        if (w && valid_partition(sub, *w, 4)) ++del_ok;
    }
    r.add("vertex_deletions_4colorable", del_ok);
    ok = ok && del_ok == 19;

    if (!ok) r.status = "refuted";
    r.wall_ms = sw.ms();
    return r;
}

inline ScenarioReport scenario_t17_split(const ScenarioOptions&) {
    Stopwatch sw;
    ScenarioReport r{"t17-split", "none", "verified", {}, 0};
    bool ok = true;

    Tournament skel = skeleton_w1_tt4();
    if (!(skel == derived_skeleton()))
        throw structural_error("t17-split: hard-coded frame differs from the derived one");
    r.add("skeleton_rederived", "match");

    // all transitive 4-sets of paley(11) lie in one automorphism orbit, which
    // is what makes the frame unique
    Tournament p11 = paley(11);
    std::vector<Permutation> auts = automorphisms(p11);
    std::uint64_t tt4s = 0, in_orbit = 0;
    for (std::uint32_t m = 0; m < (1u << 11); ++m) {
        if (std::popcount(m) != 4 || !is_transitive(p11, VertexSet(m))) continue;
        ++tt4s;
        for (const Permutation& g : auts) {
            VertexSet img{0};
            for (int v : VertexSet(m)) img.add(g[v]);
            if (img == VertexSet::of({0, 1, 4, 5})) {
                ++in_orbit;
                break;
            }
        }
    }
    r.add("pal11_tt4_count", tt4s);
    r.add("pal11_tt4_single_orbit", detail::yes_no(tt4s == in_orbit));
    ok = ok && tt4s == in_orbit;

    // 640 placements of x; sets[c] holds, per hub subset, whether the chain
    // plus x plus that subset is 2-colorable
    const int configs = 5 * 128;
    std::vector<std::bitset<128>> sets(configs);
    std::uint64_t c_014 = 0, c_0123_0456 = 0, c_024_1356 = 0, c_016_2345 = 0;
    const VertexSet a1 = VertexSet::of({7, 8, 9, 10, 11});
    for (int c = 0; c < configs; ++c) {
        Tournament cfg = skeleton_with_x(skel, c / 128, static_cast<unsigned>(c % 128));
        for (unsigned m = 0; m < 128; ++m)
            if (chromatic_of_subset(cfg, VertexSet(m) | a1) <= 2) sets[c].set(m);
        auto in = [&](std::initializer_list<int> vs) { return sets[c][detail::subset_mask(vs)]; };
        if (in({0, 1, 4})) ++c_014;
        if (in({0, 1, 2, 3}) || in({0, 4, 5, 6})) ++c_0123_0456;
        if (in({4, 5, 6}) || in({2, 3, 5, 6}) || (in({0, 2, 4}) && in({1, 3, 5, 6}))) ++c_024_1356;
        if (in({1, 2, 3}) || in({2, 3, 5, 6}) || (in({0, 1, 6}) && in({2, 3, 4, 5}))) ++c_016_2345;
    }
    r.add("configs", static_cast<std::uint64_t>(configs));
    r.add("claim_014", c_014);
    r.add("claim_0123_or_0456", c_0123_0456);
    r.add("claim_024_1356", c_024_1356);
    r.add("claim_016_2345", c_016_2345);
    ok = ok && c_014 == 640 && c_0123_0456 == 640 && c_024_1356 == 640 && c_016_2345 == 640;

    // split check: for every pair of placements some hub subset works on one
    // side while its complement works on the other
    std::vector<std::bitset<128>> comp(configs);
    for (int c = 0; c < configs; ++c)
        for (unsigned m = 0; m < 128; ++m)
            if (sets[c][m]) comp[c].set(127u ^ m);
    std::uint64_t pairs = 0, split_ok = 0;
    for (int c1 = 0; c1 < configs; ++c1)
        for (int c2 = 0; c2 < configs; ++c2) {
            ++pairs;
            if ((sets[c1] & comp[c2]).any()) ++split_ok;
        }
    r.add("pairs", pairs);
    r.add("pairs_with_split", split_ok);
    ok = ok && pairs == 409600 && split_ok == pairs;

    if (!ok) r.status = "refuted";
    r.wall_ms = sw.ms();
    return r;
}

inline ScenarioReport scenario_t12_pal11(const ScenarioOptions& o) {
    Stopwatch sw;
    const std::array<const char*, 4> names{"pal7", "w", "w0", "w1"};
    const std::array<Tournament, 4> xs{paley(7), tournament_w(), tournament_w0(), tournament_w1()};
    Pruner pr = Pruner::chi(3);
    std::string config =
        detail::shard_config(o) + ";prune=" + pr.config() + ";strategy=guided";
    detail::CheckpointDriver drv(o, "t12-pal11", config);
    Checkpoint& ck = drv.ck();
    ScenarioReport r{"t12-pal11", config, "verified", {}, 0};
    Tournament p11 = paley(11);
    bool ok = true, truncated = false;
    std::uint64_t processed = 0;

    for (std::uint64_t item = ck.item; item < 4; ++item) {
        if (!o.shard.owns(item)) {
            ck.item = item + 1;
            ck.frontier.clear();
            continue;
        }
        if (o.limit_outer && processed >= o.limit_outer) {
            truncated = true;
            break;
        }
        std::string name = names[item];
        CompletionSearch search =
            !ck.frontier.empty()
                ? CompletionSearch::restore(ck.frontier, pr, BranchStrategy::guided)
                : CompletionSearch(
                      PartialTournament::disjoint_parts(xs[item], transitive_tournament(5)), pr,
                      BranchStrategy::guided);
        std::uint64_t outputs = ck.counter("outputs_" + name);
        std::uint64_t contained = ck.counter("contained_" + name);
        std::uint64_t item_nodes = ck.counter("item_nodes");
        bool done = false;
        while (!done) {
            if (o.limit_inner && item_nodes >= o.limit_inner) {
                truncated = true;
                break;
            }
            std::vector<Tournament> got;
            std::uint64_t before = search.stats().nodes;
            done = search.advance(4096, got);
            std::uint64_t delta = search.stats().nodes - before;
            item_nodes += delta;
            ck.progress += delta;
            for (const Tournament& t : got) {
                std::string text = to_text(t);
                ck.digest = fnv1a(ck.digest, text);
                ++outputs;
                if (item == 3) {
                    if (contains_subtournament(t, p11)) {
                        ++contained;
                    } else {
                        ok = false;
                        if (auto p = detail::emit_file(o, "t12-w1-missing-pal11.txt", text + "\n"))
                            r.add("certificate", *p);
                    }
                } else {
                    ok = false;
                    if (auto p = detail::emit_file(o, "t12-" + name + "-output.txt", text + "\n"))
                        r.add("certificate", *p);
                }
            }
            ck.set_counter("outputs_" + name, outputs);
            ck.set_counter("contained_" + name, contained);
            ck.set_counter("item_nodes", item_nodes);
            if (!done) {
                ck.frontier = search.frontier();
                drv.maybe_save();
            }
        }
        if (!done) break; // truncated mid-item, frontier already holds the rest
        ck.frontier.clear();
        ck.set_counter("item_nodes", 0);
        ck.item = item + 1;
        ++processed;
        drv.maybe_save();
    }
    drv.save();

    bool finished = ck.item == 4 && !truncated;
    for (std::uint64_t item = 0; item < 4; ++item) {
        if (!o.shard.owns(item) || item >= ck.item) continue;
        std::string name = names[item];
        std::uint64_t outputs = ck.counter("outputs_" + name);
        r.add("outputs_" + name, outputs);
        if (item == 3) {
            std::uint64_t contained = ck.counter("contained_" + name);
            r.add("pal11_contained_w1", contained);
            ok = ok && contained == outputs && outputs > 0;
        } else {
            ok = ok && outputs == 0;
        }
    }
    r.add("nodes", ck.progress);
    r.add("digest", ck.digest);
    r.status = !ok ? "refuted" : (finished ? "verified" : "partial");
    r.wall_ms = sw.ms();
    return r;
}

inline ScenarioReport scenario_census8(const ScenarioOptions& o) {
    Stopwatch sw;
    ScenarioReport r{"census8", "none", "verified", {}, 0};
    bool ok = true;

    std::vector<Tournament> all = enumerate_tournaments(8);
    r.add("census8", all.size());
    ok = ok && all.size() == 6880;

    std::string chi3_list, tt5free_list;
    std::uint64_t chi3 = 0, chi3_tt5free = 0;
    for (const Tournament& t : all) {
        if (k_colorable(t, 2) || !k_colorable(t, 3)) continue;
        ++chi3;
        chi3_list += to_text(t) + "\n";
        if (!contains_tt(t, 5)) {
            ++chi3_tt5free;
            tt5free_list += to_text(t) + "\n";
        }
    }
    r.add("chromatic3", chi3);
    r.add("chromatic3_tt5free", chi3_tt5free);
    ok = ok && chi3 == 258 && chi3_tt5free == 94;

    if (auto p = detail::emit_file(o, "census8-chi3.txt", chi3_list)) r.add("chi3_file", *p);
    if (auto p = detail::emit_file(o, "census8-chi3-tt5free.txt", tt5free_list))
        r.add("tt5free_file", *p);

    if (!ok) r.status = "refuted";
    r.wall_ms = sw.ms();
    return r;
}

inline ScenarioReport scenario_completions8(const ScenarioOptions& o) {
    Stopwatch sw;
    ScenarioReport r{"completions8", "none", "verified", {}, 0};
    bool ok = true;

    std::vector<Completion> cs = eight_completions();
    r.add("count", cs.size());
    ok = ok && cs.size() == 256;

    std::string list;
    bool members_ok = true;
    for (const Completion& c : cs) {
        validate_completion(c);
        members_ok = members_ok && !k_colorable(c.t, 2) && k_colorable(c.t, 3).has_value();
        list += to_text(c.t) + "\n";
    }
    r.add("all_3chromatic", detail::yes_no(members_ok));
    ok = ok && members_ok;
    if (auto p = detail::emit_file(o, "completions8.txt", list)) r.add("list_file", *p);

    if (!ok) r.status = "refuted";
    r.wall_ms = sw.ms();
    return r;
}

namespace detail {

// Root of the two-triangle identification used for 13-vertex joins: a's eight
// vertices keep their labels, b's transitive part lands on 8..12, b's triangle
// vertex 5+t is identified with a's 5+((t+rotation)%3).
inline PartialTournament thirteen_root(const Completion& a, const Completion& b, int rotation) {
    if (rotation < 0 || rotation > 2)
        throw parameter_error("thirteen_root: rotation must be 0..2");
    std::vector<std::pair<int, int>> matching;
    for (int t = 0; t < 3; ++t) matching.push_back({5 + (t + rotation) % 3, 5 + t});
    return glue_identify(a.t, VertexSet::of({5, 6, 7}), b.t, VertexSet::of({5, 6, 7}), matching).p;
}

} // namespace detail

inline ScenarioReport scenario_completions13_stats(const ScenarioOptions& o) {
    Stopwatch sw;
    Pruner pr = Pruner::chi(3);
    std::string config = detail::shard_config(o) + ";prune=" + pr.config() + ";strategy=guided";
    detail::CheckpointDriver drv(o, "completions13-stats", config);
    Checkpoint& ck = drv.ck();
    ScenarioReport r{"completions13-stats", config, "verified", {}, 0};

    std::vector<Completion> cs = eight_completions();
    if (cs.size() != 256) {
        r.add("count", cs.size());
        r.status = "refuted";
        r.wall_ms = sw.ms();
        return r;
    }
    const int m = static_cast<int>(cs.size());
    const std::uint64_t total = static_cast<std::uint64_t>(m) * (m + 1) / 2;
    bool truncated = false;
    std::uint64_t processed = 0;

    // accounting conventions: a = rotation with the least root text, b = sum
    // over rotations, c = max over rotations, d = each (pair, rotation) as its
    // own item
    for (std::uint64_t item = ck.item; item < total; ++item) {
        if (!o.shard.owns(item)) {
            ck.item = item + 1;
            continue;
        }
        if (o.limit_outer && processed >= o.limit_outer) {
            truncated = true;
            break;
        }
        auto [i, j] = detail::unrank_pair(item, m);
        std::array<std::uint64_t, 3> n{};
        int least_rot = 0;
        std::string least_text;
        for (int rot = 0; rot < 3; ++rot) {
            PartialTournament root = detail::thirteen_root(cs[i], cs[j], rot);
            std::string text = to_text(root);
            if (rot == 0 || text < least_text) {
                least_text = text;
                least_rot = rot;
            }
            CompletionSearch search(root, pr, BranchStrategy::guided);
            while (search.next()) ++n[rot];
            ck.progress += search.stats().nodes;
        }
        std::uint64_t a = n[least_rot];
        std::uint64_t b = n[0] + n[1] + n[2];
        std::uint64_t c = std::max({n[0], n[1], n[2]});
        auto bump = [&](const std::string& tag, std::uint64_t v) {
            if (v > 0) ck.set_counter("nonempty_" + tag, ck.counter("nonempty_" + tag) + 1);
            ck.set_counter("sum_" + tag, ck.counter("sum_" + tag) + v);
            ck.set_counter("max_" + tag, std::max(ck.counter("max_" + tag), v));
            if (v == 1) ck.set_counter("one_" + tag, ck.counter("one_" + tag) + 1);
        };
        bump("a", a);
        bump("b", b);
        bump("c", c);
        for (int rot = 0; rot < 3; ++rot) bump("d", n[rot]);
        std::string line = std::to_string(i) + "," + std::to_string(j) + ":" +
                           std::to_string(n[0]) + "," + std::to_string(n[1]) + "," +
                           std::to_string(n[2]);
        ck.digest = fnv1a(ck.digest, line);
        ck.set_counter("pairs_done", ck.counter("pairs_done") + 1);
        ck.item = item + 1;
        ++processed;
        drv.maybe_save();
    }
    drv.save();

    bool finished = ck.item == total && !truncated;
    r.add("pairs_done", ck.counter("pairs_done"));
    bool any_match = false;
    for (const std::string tag : {"a", "b", "c", "d"}) {
        std::uint64_t nonempty = ck.counter("nonempty_" + tag);
        std::uint64_t sum = ck.counter("sum_" + tag);
        std::uint64_t mx = ck.counter("max_" + tag);
        std::uint64_t ones = ck.counter("one_" + tag);
        r.add("nonempty_" + tag, nonempty);
        r.add("max_" + tag, mx);
        r.add("exactly_one_" + tag, ones);
        if (nonempty > 0) {
            double mean = static_cast<double>(sum) / static_cast<double>(nonempty);
            double frac = static_cast<double>(ones) / static_cast<double>(nonempty);
            r.add("mean_" + tag, detail::fixed_digits(mean, 3));
            r.add("one_fraction_" + tag, detail::fixed_digits(frac, 4));
            if (finished && o.shard.count == 1) {
                bool match = nonempty == 4508 && mx == 2072 && std::abs(mean - 47.6) <= 0.05 &&
                             std::abs(frac - 0.25) <= 0.05;
                r.add("targets_match_" + tag, detail::yes_no(match));
                any_match = any_match || match;
            }
        }
    }
    r.add("nodes", ck.progress);
    r.add("digest", ck.digest);
    bool ok = finished && o.shard.count == 1 ? any_match : true;
    r.status = !ok ? "refuted" : (finished ? "verified" : "partial");
    r.wall_ms = sw.ms();
    return r;
}

namespace detail {

struct GlueProfile {
    std::bitset<256> any;  // hub subsets 2-colorable together with the 5-set
    std::bitset<256> mid;  // the size 3..5 slice of the same
};

// For a 13-vertex join with transitive part on 8..12 and glue 0..7: which glue
// subsets extend the transitive part 2-colorably.
inline GlueProfile glue_profile(const Tournament& t) {
    GlueProfile g;
    const VertexSet tt5 = VertexSet::of({8, 9, 10, 11, 12});
    for (unsigned m = 0; m < 256; ++m)
        if (k_colorable(induced(t, tt5 | VertexSet(m)), 2)) g.any.set(m);
    for (unsigned m = 0; m < 256; ++m) {
        int sz = std::popcount(m);
        if (sz >= 3 && sz <= 5 && g.any[m]) g.mid.set(m);
    }
    // cross-check against the member list computed independently
    CompletionType ty =
        completion_type(Completion{t, VertexSet::of({8, 9, 10, 11, 12}), VertexSet::of({0, 1, 2, 3, 4, 5, 6, 7})});
    std::bitset<256> from_type;
    for (VertexSet mvs : ty.members) from_type.set(mvs.bits);
    if (from_type != g.mid) throw structural_error("glue_profile: type slice mismatch");
    return g;
}

inline std::bitset<256> complement_index(const std::bitset<256>& b) {
    std::bitset<256> r;
    for (unsigned m = 0; m < 256; ++m)
        if (b[m]) r.set(255u ^ m);
    return r;
}

} // namespace detail

inline ScenarioReport scenario_t18_two_tt5(const ScenarioOptions& o) {
    Stopwatch sw;
    Pruner gen = Pruner::chi(3).also_two_tt5();
    std::string config = detail::shard_config(o) + ";prune=" + gen.config() +
                         ";strategy=guided;order=" +
                         (o.section1_order ? "postglue" : "typefirst") +
                         ";seed=" + std::to_string(o.rng_seed);
    detail::CheckpointDriver drv(o, "t18-two-tt5", config);
    Checkpoint& ck = drv.ck();
    ScenarioReport r{"t18-two-tt5", config, "verified", {}, 0};

    std::vector<Tournament> bases;
    for (const Tournament& t : enumerate_tournaments(8))
        if (!k_colorable(t, 2) && !contains_tt(t, 5)) bases.push_back(t);
    if (bases.size() != 94) {
        r.add("bases", bases.size());
        r.status = "refuted";
        r.wall_ms = sw.ms();
        return r;
    }

    bool ok = true, truncated = false;
    std::uint64_t processed = 0;
    const Pruner glue_pr = Pruner::chi(4);

    for (std::uint64_t item = ck.item; item < bases.size(); ++item) {
        if (!o.shard.owns(item)) {
            ck.item = item + 1;
            ck.frontier.clear();
            continue;
        }
        if (o.limit_outer && processed >= o.limit_outer) {
            truncated = true;
            break;
        }
        std::string bi = "b" + std::to_string(item);

        // rebuild the joins emitted so far for this base from the checkpoint
        std::vector<Tournament> joins;
        std::vector<std::string> open;
        for (const std::string& line : ck.frontier) {
            if (line.rfind("done ", 0) == 0)
                joins.push_back(tournament_from_text(line.substr(5)));
            else if (line.rfind("open ", 0) == 0)
                open.push_back(line.substr(5));
            else
                throw structural_error("t18-two-tt5: malformed frontier line");
        }
        std::vector<detail::GlueProfile> profiles;
        profiles.reserve(joins.size());
        for (const Tournament& t : joins) profiles.push_back(detail::glue_profile(t));

        std::uint64_t phase = ck.counter("phase", 1);
        auto snapshot_frontier = [&](const std::vector<std::string>& open_lines) {
            ck.frontier.clear();
            for (const Tournament& t : joins) ck.frontier.push_back("done " + to_text(t));
            for (const std::string& l : open_lines) ck.frontier.push_back("open " + l);
        };

        if (phase == 1) {
            CompletionSearch search =
                !open.empty() ? CompletionSearch::restore(open, gen, BranchStrategy::guided)
                              : CompletionSearch(PartialTournament::disjoint_parts(
                                                     bases[item], transitive_tournament(5)),
                                                 gen, BranchStrategy::guided);
            std::uint64_t item_nodes = ck.counter("item_nodes");
            bool done = false;
            while (!done) {
                if (o.limit_inner && item_nodes >= o.limit_inner) {
                    truncated = true;
                    break;
                }
                std::vector<Tournament> got;
                std::uint64_t before = search.stats().nodes;
                done = search.advance(4096, got);
                std::uint64_t delta = search.stats().nodes - before;
                item_nodes += delta;
                ck.progress += delta;
                for (const Tournament& t : got) {
                    ck.digest = fnv1a(ck.digest, to_text(t));
                    joins.push_back(t);
                    profiles.push_back(detail::glue_profile(t));
                }
                ck.set_counter("item_nodes", item_nodes);
                snapshot_frontier(search.frontier());
                drv.maybe_save();
            }
            if (!done) break; // truncated mid-generation, pairing would be incomplete
            phase = 2;
            ck.set_counter("phase", 2);
            ck.set_counter("pu", 0);
            ck.set_counter("pv", 0);
            snapshot_frontier({});
            drv.maybe_save();
        }

        // pair phase: search incompatible pairs, spot-check skipped ones
        const std::size_t jn = joins.size();
        std::vector<std::bitset<256>> comp_any(jn), comp_mid(jn);
        for (std::size_t v = 0; v < jn; ++v) {
            comp_any[v] = detail::complement_index(profiles[v].any);
            comp_mid[v] = detail::complement_index(profiles[v].mid);
        }
        std::uint64_t searched = ck.counter(bi + "_searched");
        std::uint64_t skipped = ck.counter(bi + "_skipped");
        std::uint64_t cross = ck.counter("crosscheck_searched");
        std::uint64_t spots = ck.counter("spot_checks");
        std::uint64_t survivors_b = ck.counter(bi + "_survivors");
        std::uint64_t item_nodes = ck.counter("item_nodes");
        std::size_t pu = ck.counter("pu");
        std::size_t pv = std::max<std::uint64_t>(ck.counter("pv"), pu);
        bool stop = false;
        for (std::size_t u = pu; u < jn && !stop; ++u) {
            for (std::size_t v = (u == pu ? pv : u); v < jn; ++v) {
                if (o.limit_inner && item_nodes >= o.limit_inner) {
                    truncated = true;
                    stop = true;
                    break;
                }
                bool split_mid = (profiles[u].mid & comp_mid[v]).any();
                bool split_any = (profiles[u].any & comp_any[v]).any();
                if (split_mid && !split_any)
                    throw structural_error("t18-two-tt5: size-restricted split without a split");
                bool skip = o.section1_order ? split_any : split_mid;
                if (skip) {
                    ++skipped;
                    std::mt19937_64 rng(o.rng_seed ^ (item << 42) ^ (static_cast<std::uint64_t>(u) << 21) ^ v);
                    if ((rng() & 63u) == 0) {
                        // random orientation of the open pairs must stay 4-colorable
                        Glued g = glue_identify(joins[u], VertexSet::of({0, 1, 2, 3, 4, 5, 6, 7}),
                                                joins[v], VertexSet::of({0, 1, 2, 3, 4, 5, 6, 7}),
                                                {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}});
                        PartialTournament p = g.p;
                        for (auto [x, y] : p.undecided_pairs())
                            p = (rng() & 1u) ? add_arc(p, x, y) : add_arc(p, y, x);
                        Tournament t18 = p.to_tournament();
                        ++spots;
                        if (!k_colorable(t18, 4)) {
                            ok = false;
                            if (auto pth = detail::emit_file(o, "t18-two-tt5-spot-failure.txt",
                                                             to_text(t18) + "\n"))
                                r.add("certificate", *pth);
                        }
                    }
                } else {
                    if (!o.section1_order && split_any) ++cross;
                    Glued g = glue_identify(joins[u], VertexSet::of({0, 1, 2, 3, 4, 5, 6, 7}),
                                            joins[v], VertexSet::of({0, 1, 2, 3, 4, 5, 6, 7}),
                                            {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}});
                    CompletionSearch search(g.p, glue_pr, BranchStrategy::guided);
                    while (auto t = search.next()) {
                        ok = false;
                        ++survivors_b;
                        ck.digest = fnv1a(ck.digest, to_text(*t));
                        if (auto pth = detail::emit_file(
                                o, "t18-two-tt5-survivor-" + std::to_string(item) + ".txt",
                                to_text(*t) + "\n"))
                            r.add("certificate", *pth);
                    }
                    ck.progress += search.stats().nodes;
                    item_nodes += search.stats().nodes;
                    ++searched;
                }
                ck.set_counter(bi + "_searched", searched);
                ck.set_counter(bi + "_skipped", skipped);
                ck.set_counter(bi + "_survivors", survivors_b);
                ck.set_counter("crosscheck_searched", cross);
                ck.set_counter("spot_checks", spots);
                ck.set_counter("item_nodes", item_nodes);
                std::size_t nv = v + 1, nu = u;
                if (nv == jn) {
                    ++nu;
                    nv = nu;
                }
                ck.set_counter("pu", nu);
                ck.set_counter("pv", nv);
                drv.maybe_save();
            }
        }
        if (stop) break;

        ck.set_counter(bi + "_joins", jn);
        ck.set_counter(bi + "_done", 1);
        auto agg = [&](const std::string& key, std::uint64_t v) {
            ck.set_counter(key, ck.counter(key) + v);
        };
        agg("agg_joins", jn);
        agg("agg_searched", searched);
        agg("agg_skipped", skipped);
        agg("agg_survivors", survivors_b);
        agg("bases_done", 1);
        ck.set_counter("phase", 1);
        ck.set_counter("pu", 0);
        ck.set_counter("pv", 0);
        ck.set_counter("item_nodes", 0);
        ck.frontier.clear();
        ck.item = item + 1;
        ++processed;
        drv.maybe_save();
    }
    drv.save();

    bool finished = ck.item == bases.size() && !truncated;
    for (std::uint64_t item = 0; item < bases.size(); ++item) {
        std::string bi = "b" + std::to_string(item);
        if (ck.counter(bi + "_done") != 1) continue;
        r.add(bi + "_joins", ck.counter(bi + "_joins"));
        r.add(bi + "_searched", ck.counter(bi + "_searched"));
        r.add(bi + "_skipped", ck.counter(bi + "_skipped"));
        if (ck.counter(bi + "_survivors") > 0) r.add(bi + "_survivors", ck.counter(bi + "_survivors"));
    }
    r.add("bases_done", ck.counter("bases_done"));
    r.add("joins", ck.counter("agg_joins"));
    r.add("pairs_searched", ck.counter("agg_searched"));
    r.add("pairs_skipped", ck.counter("agg_skipped"));
    r.add("crosscheck_searched", ck.counter("crosscheck_searched"));
    r.add("spot_checks", ck.counter("spot_checks"));
    r.add("survivors", ck.counter("agg_survivors"));
    if (!finished) {
        std::uint64_t inflight = 0;
        for (const std::string& line : ck.frontier)
            if (line.rfind("done ", 0) == 0) ++inflight;
        r.add("inflight_joins", inflight);
    }
    r.add("nodes", ck.progress);
    r.add("digest", ck.digest);
    ok = ok && ck.counter("agg_survivors") == 0;
    r.status = !ok ? "refuted" : (finished ? "verified" : "partial");
    r.wall_ms = sw.ms();
    return r;
}

namespace detail {

// 18-vertex assembly from three pairwise 13-vertex joins sharing one triangle:
// 0..4 first 5-set, 5..7 triangle, 8..12 second, 13..17 third.  c12 joins the
// first completion with the second, c13 with the third (both in the first
// one's frame), c23 the second with the third in the second one's frame, its
// triangle rotated by r12 against the shared frame.
inline Tournament assemble_t18(const Tournament& c12, const Tournament& c13, const Tournament& c23,
                               int r12) {
    std::array<std::array<signed char, 18>, 18> dir{};
    for (auto& row : dir) row.fill(-1);
    auto put = [&](int u, int v, bool a) {
        signed char w = a ? 1 : 0;
        if (dir[u][v] != -1 && dir[u][v] != w)
            throw structural_error("assemble_t18: joins disagree on a shared arc");
        dir[u][v] = w;
        dir[v][u] = static_cast<signed char>(1 - w);
    };
    auto weave = [&](const Tournament& t, auto&& label) {
        for (int p = 0; p < 13; ++p)
            for (int q = p + 1; q < 13; ++q) put(label(p), label(q), t.arc(p, q));
    };
    weave(c12, [](int p) { return p; });
    weave(c13, [](int p) { return p < 8 ? p : p + 5; });
    weave(c23, [&](int p) {
        if (p < 5) return 8 + p;
        if (p < 8) return 5 + (p - 5 + r12) % 3;
        return 13 + (p - 8);
    });
    for (int u = 0; u < 18; ++u)
        for (int v = 0; v < 18; ++v)
            if (u != v && dir[u][v] == -1)
                throw structural_error("assemble_t18: an arc stayed undecided");
    return Tournament(18, [&](int i, int j) { return dir[i][j] == 1; });
}

} // namespace detail

inline ScenarioReport scenario_t18_three_tt5(const ScenarioOptions& o) {
    Stopwatch sw;
    Pruner pr = Pruner::chi(3);
    std::string config = detail::shard_config(o) + ";prune=" + pr.config() + ";strategy=guided";
    detail::CheckpointDriver drv(o, "t18-three-tt5", config);
    Checkpoint& ck = drv.ck();
    ScenarioReport r{"t18-three-tt5", config, "verified", {}, 0};

    std::vector<Completion> cs = eight_completions();
    if (cs.size() != 256) {
        r.add("count", cs.size());
        r.status = "refuted";
        r.wall_ms = sw.ms();
        return r;
    }
    const int m = static_cast<int>(cs.size());
    const std::uint64_t total = detail::triple_count(static_cast<std::uint64_t>(m));
    bool ok = true, truncated = false;
    std::uint64_t processed = 0;

    // join lists are pure functions of (first, second, rotation); cache them
    std::map<std::tuple<int, int, int>, std::vector<Tournament>> cache;
    bool lists_truncated = false;
    auto join_list = [&](int a, int b, int rot) -> const std::vector<Tournament>& {
        auto key = std::make_tuple(a, b, rot);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        if (cache.size() > 128) cache.clear();
        std::vector<Tournament> out;
        CompletionSearch search(detail::thirteen_root(cs[a], cs[b], rot), pr,
                                BranchStrategy::guided);
        bool done = false;
        while (!done) {
            if (o.limit_inner && search.stats().nodes >= o.limit_inner) {
                lists_truncated = true;
                break;
            }
            done = search.advance(4096, out);
        }
        ck.progress += search.stats().nodes;
        return cache.emplace(key, std::move(out)).first->second;
    };

    for (std::uint64_t item = ck.item; item < total; ++item) {
        if (!o.shard.owns(item)) {
            ck.item = item + 1;
            continue;
        }
        if (o.limit_outer && processed >= o.limit_outer) {
            truncated = true;
            break;
        }
        auto [i, j, k] = detail::unrank_triple(item, m);
        std::uint64_t checked = 0;
        bool used = false;
        for (int r12 = 0; r12 < 3; ++r12)
            for (int r13 = 0; r13 < 3; ++r13) {
                int r23 = (r13 - r12 + 3) % 3;
                const std::vector<Tournament>& l12 = join_list(i, j, r12);
                if (l12.empty()) continue;
                const std::vector<Tournament>& l13 = join_list(i, k, r13);
                if (l13.empty()) continue;
                const std::vector<Tournament>& l23 = join_list(j, k, r23);
                if (l23.empty()) continue;
                used = true;
                for (const Tournament& c12 : l12)
                    for (const Tournament& c13 : l13)
                        for (const Tournament& c23 : l23) {
                            Tournament t18 = detail::assemble_t18(c12, c13, c23, r12);
                            ++checked;
                            auto w = k_colorable(t18, 4, ColoringOptions{true});
                            if (!w || !valid_partition(t18, *w, 4)) {
                                ok = false;
                                ck.set_counter("survivors", ck.counter("survivors") + 1);
                                if (auto pth = detail::emit_file(
                                        o, "t18-three-tt5-survivor-" + std::to_string(item) + ".txt",
                                        to_text(t18) + "\n"))
                                    r.add("certificate", *pth);
                            }
                        }
            }
        std::string line = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                           ":" + std::to_string(checked);
        ck.digest = fnv1a(ck.digest, line);
        ck.set_counter("triples_scanned", ck.counter("triples_scanned") + 1);
        if (used) ck.set_counter("triples_used", ck.counter("triples_used") + 1);
        ck.set_counter("t18_checked", ck.counter("t18_checked") + checked);
        ck.item = item + 1;
        ++processed;
        drv.maybe_save();
    }
    drv.save();

    bool finished = ck.item == total && !truncated && !lists_truncated;
    r.add("triples_scanned", ck.counter("triples_scanned"));
    r.add("triples_used", ck.counter("triples_used"));
    r.add("t18_checked", ck.counter("t18_checked"));
    r.add("survivors", ck.counter("survivors"));
    if (lists_truncated) r.add("join_lists_truncated", detail::yes_no(true));
    r.add("nodes", ck.progress);
    r.add("digest", ck.digest);
    ok = ok && ck.counter("survivors") == 0;
    r.status = !ok ? "refuted" : (finished ? "verified" : "partial");
    r.wall_ms = sw.ms();
    return r;
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

struct ScenarioEntry {
    const char* id;
    bool longrun;
    ScenarioReport (*run)(const ScenarioOptions&);
};

inline const std::array<ScenarioEntry, 10>& scenario_registry() {
    static const std::array<ScenarioEntry, 10> table{{
        {"t7-census", false, scenario_t7_census},
        {"x13-structure", false, scenario_x13_structure},
        {"19-certificate", false, scenario_19_certificate},
        {"t17-split", false, scenario_t17_split},
        {"t12-pal11", true, scenario_t12_pal11},
        {"census8", false, scenario_census8},
        {"completions8", false, scenario_completions8},
        {"completions13-stats", true, scenario_completions13_stats},
        {"t18-two-tt5", true, scenario_t18_two_tt5},
        {"t18-three-tt5", true, scenario_t18_three_tt5},
    }};
    return table;
}

inline ScenarioReport run_scenario(const std::string& id, const ScenarioOptions& o = {}) {
    detail::check_shard(o.shard);
    for (const ScenarioEntry& e : scenario_registry())
        if (id == e.id) return e.run(o);
    throw usage_error("unknown scenario: " + id);
}

} // namespace dicolor
