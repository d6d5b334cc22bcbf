#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "format.hpp"
#include "isomorphism.hpp"
#include "tournament.hpp"
#include "transitive.hpp"

namespace dicolor {

// Soundness-preserving cuts applied at every search node.  The chi cut removes
// a branch when the decided arcs already partition all vertices into at most
// chi_cut transitive classes, which every completion of the branch inherits.
// The tt5 cut removes a branch once two vertex-disjoint decided transitive
// 5-sets exist.
struct Pruner {
    int chi_cut = 0; // 0 = off
    bool two_tt5 = false;

    static Pruner none() { return {}; }
    static Pruner chi(int k) { return {k, false}; }
    static Pruner two_disjoint_tt5() { return {0, true}; }
    Pruner also_two_tt5() const { return {chi_cut, true}; }

    std::string config() const {
        std::string s;
        if (chi_cut > 0) s = "chi" + std::to_string(chi_cut);
        if (two_tt5) s += std::string(s.empty() ? "" : "+") + "tt5x2";
        return s.empty() ? "none" : s;
    }
};

enum class BranchStrategy {
    lexicographic, // first undecided pair
    guided,        // pair completing the largest decided transitive set
};

inline std::string to_string(BranchStrategy s) {
    return s == BranchStrategy::lexicographic ? "lex" : "guided";
}

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t chi_cuts = 0;
    std::uint64_t tt5_cuts = 0;
    std::uint64_t emitted = 0;
};

// Depth-first completion of a partial tournament under a pruner, one arc per
// level.  The stack is explicit so the unexplored frontier can be serialised
// and resumed byte-identically later.
class CompletionSearch {
public:
    CompletionSearch(const PartialTournament& root, Pruner pruner,
                     BranchStrategy strategy = BranchStrategy::guided)
        : pruner_(pruner), strategy_(strategy) {
        stack_.push_back(Node{root, maximal_transitive_sets(root), 0});
    }

    // Explore only the subtree whose first `depth` orientation choices follow
    // the low bits of `index` (bit d = 1 means the reversed arc at depth d).
    // Completions reached above that depth belong to the all-zero-padded slice.
    void restrict_subtree(std::uint64_t index, int depth) {
        if (started_) throw usage_error("restrict_subtree: search already started");
        if (depth < 0 || depth > 63 || (depth < 64 && (index >> depth) != 0))
            throw parameter_error("restrict_subtree: index does not fit in depth bits");
        slice_index_ = index;
        slice_depth_ = depth;
    }

    bool exhausted() const { return stack_.empty(); }
    const SearchStats& stats() const { return stats_; }

    std::optional<Tournament> next() {
        started_ = true;
        while (!stack_.empty())
            if (auto t = expand_top()) return t;
        return std::nullopt;
    }

    // Bounded variant of next() for checkpointed drivers: expands at most
    // `budget` nodes, appending emitted completions to `out`, and reports
    // whether the whole tree has now been explored.
    bool advance(std::uint64_t budget, std::vector<Tournament>& out) {
        started_ = true;
        for (std::uint64_t i = 0; i < budget && !stack_.empty(); ++i)
            if (auto t = expand_top()) out.push_back(*t);
        return stack_.empty();
    }

    std::vector<std::string> frontier() const {
        std::vector<std::string> out;
        out.reserve(stack_.size());
        for (const Node& nd : stack_) out.push_back(to_text(nd.p) + " " + std::to_string(nd.depth));
        return out;
    }

    static CompletionSearch restore(const std::vector<std::string>& frontier, Pruner pruner,
                                    BranchStrategy strategy) {
        CompletionSearch s(pruner, strategy);
        for (const std::string& line : frontier) {
            std::size_t sp = line.rfind(' ');
            if (sp == std::string::npos) throw parameter_error("restore: malformed frontier line");
            PartialTournament p = partial_from_text(line.substr(0, sp));
            int depth = std::stoi(line.substr(sp + 1));
            s.stack_.push_back(Node{p, maximal_transitive_sets(p), depth});
        }
        return s;
    }

private:
    struct Node {
        PartialTournament p;
        TransitiveSetList list;
        int depth;
    };

    CompletionSearch(Pruner pruner, BranchStrategy strategy)
        : pruner_(pruner), strategy_(strategy) {}

    std::optional<Tournament> expand_top() {
        Node nd = std::move(stack_.back());
        stack_.pop_back();
        ++stats_.nodes;
        if (pruner_.chi_cut > 0 &&
            detail::cover_exists(VertexSet::full(nd.p.size()).bits, pruner_.chi_cut, nd.list)) {
            ++stats_.chi_cuts;
            return std::nullopt;
        }
        if (pruner_.two_tt5) {
            std::vector<VertexSet> acc;
            if (detail::pack_tts(detail::AdjView::of(nd.p), VertexSet::full(nd.p.size()).bits, 5, 2,
                                 acc)) {
                ++stats_.tt5_cuts;
                return std::nullopt;
            }
        }
        if (nd.p.complete()) {
            if (nd.depth < slice_depth_ && (slice_index_ >> nd.depth) != 0) return std::nullopt;
            Tournament t = nd.p.to_tournament();
            if (pruner_.chi_cut > 0 && k_colorable(t, pruner_.chi_cut))
                throw structural_error("completion search emitted a colorable tournament");
            ++stats_.emitted;
            return t;
        }
        auto [a, b] = pick_pair(nd);
        bool forced = nd.depth < slice_depth_;
        bool reverse_only = forced && ((slice_index_ >> nd.depth) & 1u);
        if (!forced || reverse_only) stack_.push_back(child(nd, b, a));
        if (!forced || !reverse_only) stack_.push_back(child(nd, a, b));
        return std::nullopt;
    }

    Node child(const Node& nd, int from, int to) const {
        PartialTournament p = add_arc(nd.p, from, to);
        return Node{p, update_transitive_sets(nd.list, p, from, to), nd.depth + 1};
    }

    std::pair<int, int> pick_pair(const Node& nd) const {
        if (strategy_ == BranchStrategy::guided) {
            std::vector<int> by_size(nd.list.size());
            for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = static_cast<int>(i);
            std::stable_sort(by_size.begin(), by_size.end(), [&](int x, int y) {
                return nd.list[x].size() > nd.list[y].size();
            });
            int best_score = 0;
            std::pair<int, int> best{-1, -1};
            for (int idx : by_size) {
                VertexSet s = nd.list[idx];
                if (s.size() < best_score) break;
                for (int a : s)
                    for (int b : nd.p.undecided_with(a)) {
                        // b must already be decided against the rest of s
                        if (s.bits & ~nd.p.adjacent(b).bits & ~(1u << a)) continue;
                        std::pair<int, int> pr{std::min(a, b), std::max(a, b)};
                        if (s.size() > best_score || (s.size() == best_score && pr < best)) {
                            best_score = s.size();
                            best = pr;
                        }
                    }
            }
            if (best_score > 0) return best;
        }
        for (auto [i, j] : nd.p.undecided_pairs()) return {i, j};
        throw usage_error("pick_pair: no undecided pair left");
    }

    Pruner pruner_;
    BranchStrategy strategy_;
    std::vector<Node> stack_;
    SearchStats stats_;
    std::uint64_t slice_index_ = 0;
    int slice_depth_ = 0;
    bool started_ = false;
};

// A completed tournament together with its distinguished transitive 5-set and
// the glue part shared with later identifications.
struct Completion {
    Tournament t;
    VertexSet tt5;
    VertexSet glue;
};

inline void validate_completion(const Completion& c) {
    if ((c.tt5 | c.glue) != c.t.vertices() || c.tt5.intersects(c.glue))
        throw structural_error("completion parts do not partition the vertices");
    if (c.tt5.size() != 5 || !is_transitive(c.t, c.tt5))
        throw structural_error("distinguished part is not a transitive 5-set");
}

// Rotations of the triangle 5 -> 6 -> 7 -> 5 on 8 labels, identity first.
inline std::vector<Permutation> triangle_rotations() {
    std::vector<Permutation> g;
    for (int r = 0; r < 3; ++r) {
        Permutation p = identity_perm(8);
        for (int t = 0; t < 3; ++t) p[5 + t] = 5 + (t + r) % 3;
        g.push_back(std::move(p));
    }
    return g;
}

// All gluings of a transitive 5-set (labels 0..4) on top of a directed
// triangle (5 -> 6 -> 7 -> 5) that are not 2-colorable, one representative per
// triangle-rotation class, sorted by adjacency code.
inline std::vector<Completion> eight_completions() {
    std::vector<Permutation> rots = triangle_rotations();
    std::map<std::vector<std::uint8_t>, Tournament> reps;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        Tournament t(8, [&](int i, int j) {
            if (j <= 4) return true;                              // transitive 5-set
            if (i >= 5) return j - i == 1;                        // triangle, 7 -> 5 reversed
            return ((mask >> (i * 3 + (j - 5))) & 1u) != 0;       // glue arcs
        });
        if (k_colorable(t, 2)) continue;
        Tournament best = t;
        std::vector<std::uint8_t> best_code = adjacency_code(t);
        for (const Permutation& g : rots) {
            Tournament cand = relabel(t, g);
            std::vector<std::uint8_t> code = adjacency_code(cand);
            if (code < best_code) {
                best_code = std::move(code);
                best = cand;
            }
        }
        reps.emplace(std::move(best_code), best);
    }
    std::vector<Completion> out;
    out.reserve(reps.size());
    for (auto& [code, t] : reps)
        out.push_back(Completion{t, VertexSet::of({0, 1, 2, 3, 4}), VertexSet::of({5, 6, 7})});
    return out;
}

// Which small chunks of the glue can join the distinguished 5-set in a
// 2-colorable piece.  Two glued completions admit a 4-coloring exactly when
// the 8-vertex glue splits into a member of one type and the complement in
// the other, so only subsets of size 3..5 matter.
struct CompletionType {
    VertexSet glue;
    std::vector<VertexSet> members; // sorted by bit pattern
};

inline CompletionType completion_type(const Completion& c) {
    if (c.glue.size() != 8) throw parameter_error("completion_type: glue must have 8 vertices");
    validate_completion(c);
    std::vector<int> gv(c.glue.begin(), c.glue.end());
    CompletionType ty{c.glue, {}};
    for (std::uint32_t m = 0; m < 256; ++m) {
        int sz = std::popcount(m);
        if (sz < 3 || sz > 5) continue;
        VertexSet sub{0};
        for (int i = 0; i < 8; ++i)
            if (m & (1u << i)) sub.add(gv[i]);
        if (k_colorable(induced(c.t, c.tt5 | sub), 2)) ty.members.push_back(sub);
    }
    std::sort(ty.members.begin(), ty.members.end());
    return ty;
}

inline bool types_compatible(const CompletionType& x, const CompletionType& y) {
    if (x.glue != y.glue) throw parameter_error("types_compatible: differing glue universes");
    for (VertexSet m : x.members) {
        VertexSet rest = x.glue - m;
        if (std::binary_search(y.members.begin(), y.members.end(), rest)) return true;
    }
    return false;
}

struct Glued {
    PartialTournament p;
    std::vector<int> second_labels; // label of each vertex of the second tournament
};

// Identify s1 in a with s2 in b along an arc-preserving matching.  Vertices of
// a keep their labels, the rest of b follows in ascending order, and exactly
// the (a minus s1) x (b minus s2) pairs stay undecided.
inline Glued glue_identify(const Tournament& a, VertexSet s1, const Tournament& b, VertexSet s2,
                           const std::vector<std::pair<int, int>>& matching) {
    if (!s1.subset_of(a.vertices()) || !s2.subset_of(b.vertices()))
        throw parameter_error("glue_identify: identified sets out of range");
    if (s1.size() != s2.size() || static_cast<int>(matching.size()) != s1.size())
        throw parameter_error("glue_identify: matching size mismatch");
    std::vector<int> map2(static_cast<std::size_t>(b.size()), -1);
    VertexSet seen1{0}, seen2{0};
    for (auto [v1, v2] : matching) {
        if (!s1.contains(v1) || !s2.contains(v2) || seen1.contains(v1) || seen2.contains(v2))
            throw parameter_error("glue_identify: matching is not a bijection of the identified sets");
        seen1.add(v1);
        seen2.add(v2);
        map2[v2] = v1;
    }
    for (auto [u1, u2] : matching)
        for (auto [v1, v2] : matching)
            if (u2 != v2 && a.arc(u1, v1) != b.arc(u2, v2))
                throw parameter_error("glue_identify: matching does not preserve arcs");
    int next = a.size();
    for (int v = 0; v < b.size(); ++v)
        if (map2[v] < 0) map2[v] = next++;

    PartialTournament g = PartialTournament::empty(next);
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            g = add_arc(g, a.arc(i, j) ? i : j, a.arc(i, j) ? j : i);
    for (int u = 0; u < b.size(); ++u)
        for (int v = u + 1; v < b.size(); ++v) {
            if (s2.contains(u) && s2.contains(v)) continue; // already present via a
            int gu = map2[u], gv = map2[v];
            g = add_arc(g, b.arc(u, v) ? gu : gv, b.arc(u, v) ? gv : gu);
        }
    return Glued{std::move(g), std::move(map2)};
}

// Glue two 8-vertex completions along their triangles, b's triangle rotated by
// `rotation` against a's, and return every completion of the 25 open pairs
// that is not 3-colorable.  Layout: a on 0..7, b's transitive part on 8..12.
inline std::vector<Tournament> thirteen_completions(const Completion& a, const Completion& b,
                                                    int rotation,
                                                    BranchStrategy strategy = BranchStrategy::guided) {
    if (rotation < 0 || rotation > 2) throw parameter_error("thirteen_completions: rotation must be 0..2");
    if (a.t.size() != 8 || b.t.size() != 8 || a.glue != VertexSet::of({5, 6, 7}) ||
        b.glue != VertexSet::of({5, 6, 7}))
        throw parameter_error("thirteen_completions: inputs must be triangle-glued 8-vertex completions");
    std::vector<std::pair<int, int>> matching;
    for (int t = 0; t < 3; ++t) matching.push_back({5 + (t + rotation) % 3, 5 + t});
    Glued g = glue_identify(a.t, VertexSet::of({5, 6, 7}), b.t, VertexSet::of({5, 6, 7}), matching);
    CompletionSearch search(g.p, Pruner::chi(3), strategy);
    std::vector<Tournament> out;
    while (auto t = search.next()) out.push_back(*t);
    return out;
}

} // namespace dicolor
