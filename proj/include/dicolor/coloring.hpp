#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tournament.hpp"
#include "transitive.hpp"

namespace dicolor {

// Vertex classes, each spanning a transitive subtournament.
struct ColorPartition {
    std::vector<VertexSet> classes;
};

struct ColoringOptions {
    bool memo = false; // cache refuted (remaining, k) states of the cover search
};

namespace detail {

// Restrict a maximal-set list to a sub-universe and drop duplicates and sets
// contained in a larger survivor.  The survivors are exactly the maximal
// transitive sets of the induced sub-universe.
inline void restrict_and_reduce(const std::vector<VertexSet>& in, std::uint32_t remaining,
                                std::vector<VertexSet>& out) {
    out.clear();
    for (VertexSet s : in) {
        std::uint32_t r = s.bits & remaining;
        if (r) out.push_back(VertexSet(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::stable_sort(out.begin(), out.end(),
                     [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    std::size_t kept = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool sub = false;
        for (std::size_t j = 0; j < kept && !sub; ++j) sub = out[i].subset_of(out[j]);
        if (!sub) out[kept++] = out[i];
    }
    out.resize(kept);
    std::sort(out.begin(), out.end());
}

// Cover `remaining` with at most k sets drawn from the maximal-set list of its
// induced sub-universe.  The lowest uncovered vertex must sit in the first
// class picked, which kills permutations of the same cover.  Only refuted
// states are memoised so a hit never needs a witness rebuilt.
inline bool cover_rec(std::uint32_t remaining, int k, const std::vector<VertexSet>& list,
                      std::vector<VertexSet>* wit, std::unordered_map<std::uint64_t, char>* memo) {
    if (!remaining) return true;
    if (k == 0) return false;
    int need = std::popcount(remaining);
    int widest = 0;
    for (VertexSet s : list) widest = std::max(widest, s.size());
    if (widest * k < need) return false;
    std::uint64_t key = static_cast<std::uint64_t>(remaining) | (static_cast<std::uint64_t>(k) << 32);
    if (memo && memo->count(key)) return false;

    int v0 = std::countr_zero(remaining);
    std::vector<VertexSet> cands;
    for (VertexSet s : list)
        if (s.contains(v0)) cands.push_back(s);
    std::sort(cands.begin(), cands.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.bits < b.bits;
    });
    std::vector<VertexSet> sub;
    for (VertexSet c : cands) {
        std::uint32_t rest = remaining & ~c.bits;
        restrict_and_reduce(list, rest, sub);
        if (cover_rec(rest, k - 1, sub, wit, memo)) {
            if (wit) wit->push_back(c);
            return true;
        }
    }
    if (memo) memo->emplace(key, 1);
    return false;
}

// Strict cover test against an already maintained maximal-set list.  Used by
// completion pruning, where the list is updated arc by arc.
inline bool cover_exists(std::uint32_t universe, int k, const std::vector<VertexSet>& list,
                         std::unordered_map<std::uint64_t, char>* memo = nullptr) {
    return cover_rec(universe, k, list, nullptr, memo);
}

} // namespace detail

// Classes must be nonempty, pairwise disjoint, cover all vertices, each span a
// transitive subtournament, and number at most k.
inline bool valid_partition(const Tournament& t, const ColorPartition& p, int k) {
    if (static_cast<int>(p.classes.size()) > k) return false;
    std::uint32_t seen = 0;
    for (VertexSet c : p.classes) {
        if (c.empty()) return false;
        if (!c.subset_of(t.vertices())) return false;
        if (c.bits & seen) return false;
        if (!is_transitive(t, c)) return false;
        seen |= c.bits;
    }
    return seen == t.vertices().bits;
}

inline std::optional<ColorPartition> k_colorable(const Tournament& t, int k, ColoringOptions opts = {}) {
    if (k < 1) throw parameter_error("k_colorable: k must be >= 1");
    TransitiveSetList list = maximal_transitive_sets(t);
    std::unordered_map<std::uint64_t, char> memo;
    std::vector<VertexSet> wit;
    if (!detail::cover_rec(t.vertices().bits, k, list, &wit, opts.memo ? &memo : nullptr))
        return std::nullopt;
    std::reverse(wit.begin(), wit.end());
    return ColorPartition{std::move(wit)};
}

inline int dichromatic_number(const Tournament& t, ColoringOptions opts = {}) {
    for (int k = 1;; ++k)
        if (k_colorable(t, k, opts)) return k;
}

inline int chromatic_of_subset(const Tournament& t, VertexSet s, ColoringOptions opts = {}) {
    return dichromatic_number(induced(t, s), opts);
}

// Relaxed reading on partials: classes need only be acyclic under the decided
// arcs.  True exactly when some completion of p is k-colorable.
inline bool k_colorable_partial(const PartialTournament& p, int k) {
    if (k < 1) throw parameter_error("k_colorable_partial: k must be >= 1");
    int n = p.size();
    std::array<std::uint32_t, 32> inm{};
    for (int u = 0; u < n; ++u)
        for (int v : p.out(u)) inm[v] |= 1u << u;

    auto acyclic = [&](std::uint32_t mask) {
        std::uint32_t m = mask;
        while (m) {
            std::uint32_t removable = 0;
            std::uint32_t rest = m;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if ((inm[v] & m) == 0) removable |= 1u << v;
            }
            if (!removable) return false;
            m &= ~removable;
        }
        return true;
    };

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.adjacent(a).size() > p.adjacent(b).size(); });

    std::vector<std::uint32_t> cls(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == n) return true;
        std::uint32_t bit = 1u << order[i];
        for (int c = 0; c < used; ++c) {
            if (!acyclic(cls[c] | bit)) continue;
            cls[c] |= bit;
            if (self(self, i + 1, used)) return true;
            cls[c] &= ~bit;
        }
        if (used < k) {
            cls[used] = bit;
            if (self(self, i + 1, used + 1)) return true;
            cls[used] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace dicolor
