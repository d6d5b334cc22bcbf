#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "tournament.hpp"

namespace dicolor {

// Maximal transitive vertex sets, kept sorted by bit pattern.
using TransitiveSetList = std::vector<VertexSet>;

namespace detail {

// Uniform view over Tournament / PartialTournament: decided out-arcs plus the
// symmetric decided-adjacency mask.  In a tournament every pair is decided.
struct AdjView {
    int n = 0;
    std::array<std::uint32_t, 32> out{};
    std::array<std::uint32_t, 32> adj{};

    static AdjView of(const Tournament& t) {
        AdjView g;
        g.n = t.size();
        std::uint32_t full = VertexSet::full(g.n).bits;
        for (int v = 0; v < g.n; ++v) {
            g.out[v] = t.out(v).bits;
            g.adj[v] = full & ~(1u << v);
        }
        return g;
    }
    static AdjView of(const PartialTournament& p) {
        AdjView g;
        g.n = p.size();
        for (int v = 0; v < g.n; ++v) {
            g.out[v] = p.out(v).bits;
            g.adj[v] = p.adjacent(v).bits;
        }
        return g;
    }
};

// S spans a transitive subtournament: every pair inside is decided and the
// out-degrees within S are pairwise distinct.
inline bool set_transitive(const AdjView& g, std::uint32_t s) {
    std::uint32_t degs = 0;
    std::uint32_t rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (s & ~(g.adj[v] | (1u << v))) return false;
        std::uint32_t bit = 1u << std::popcount(g.out[v] & s);
        if (degs & bit) return false;
        degs |= bit;
    }
    return true;
}

// Every transitive set has a unique domination order, so enumerating ordered
// chains (next vertex dominated by the whole chain) visits each set once.
inline void maximal_sets_rec(const AdjView& g, std::uint32_t universe, std::uint32_t chain,
                             std::uint32_t cands, std::vector<VertexSet>& acc) {
    if (cands == 0) {
        std::uint32_t others = universe & ~chain;
        while (others) {
            int w = std::countr_zero(others);
            others &= others - 1;
            if ((chain & ~g.adj[w]) == 0 && set_transitive(g, chain | (1u << w))) return;
        }
        acc.push_back(VertexSet(chain));
        return;
    }
    std::uint32_t rest = cands;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        maximal_sets_rec(g, universe, chain | (1u << v), cands & g.out[v], acc);
    }
}

inline std::vector<VertexSet> maximal_sets(const AdjView& g, std::uint32_t universe) {
    std::vector<VertexSet> acc;
    std::uint32_t rest = universe;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        maximal_sets_rec(g, universe, 1u << v, universe & g.out[v], acc);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

// Visit every transitive k-set within the universe; cb returning true stops.
template <class Cb>
inline bool visit_tts(const AdjView& g, std::uint32_t universe, int k, std::uint32_t chain, int len,
                      std::uint32_t cands, Cb&& cb) {
    if (len == k) return cb(VertexSet(chain));
    if (len + std::popcount(cands) < k) return false;
    // most dominant candidate first
    int order[32], m = 0;
    std::uint32_t rest = cands;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        order[m++] = v;
    }
    std::stable_sort(order, order + m, [&](int a, int b) {
        return std::popcount(g.out[a] & cands) > std::popcount(g.out[b] & cands);
    });
    for (int i = 0; i < m; ++i) {
        int v = order[i];
        if (visit_tts(g, universe, k, chain | (1u << v), len + 1, cands & g.out[v], cb)) return true;
    }
    return false;
}

inline std::optional<VertexSet> find_tt(const AdjView& g, std::uint32_t universe, int k) {
    std::optional<VertexSet> hit;
    visit_tts(g, universe, k, 0, 0, universe, [&](VertexSet s) {
        hit = s;
        return true;
    });
    return hit;
}

inline bool pack_tts(const AdjView& g, std::uint32_t universe, int k, int count,
                     std::vector<VertexSet>& acc) {
    if (count == 0) return true;
    if (std::popcount(universe) < k * count) return false;
    bool ok = false;
    visit_tts(g, universe, k, 0, 0, universe, [&](VertexSet s) {
        acc.push_back(s);
        if (pack_tts(g, universe & ~s.bits, k, count - 1, acc)) {
            ok = true;
            return true;
        }
        acc.pop_back();
        return false;
    });
    return ok;
}

} // namespace detail

inline bool is_transitive(const Tournament& t, VertexSet s) {
    if (!s.subset_of(t.vertices())) throw parameter_error("is_transitive: vertex set out of range");
    return detail::set_transitive(detail::AdjView::of(t), s.bits);
}

// Strict reading on partials: all pairs inside must be decided and acyclic.
inline bool is_transitive(const PartialTournament& p, VertexSet s) {
    if (!s.subset_of(VertexSet::full(p.size()))) throw parameter_error("is_transitive: vertex set out of range");
    return detail::set_transitive(detail::AdjView::of(p), s.bits);
}

inline TransitiveSetList maximal_transitive_sets(const Tournament& t) {
    return detail::maximal_sets(detail::AdjView::of(t), t.vertices().bits);
}

inline TransitiveSetList maximal_transitive_sets(const PartialTournament& p) {
    return detail::maximal_sets(detail::AdjView::of(p), VertexSet::full(p.size()).bits);
}

inline std::optional<VertexSet> contains_tt(const Tournament& t, int k) {
    if (k < 1) throw parameter_error("contains_tt: k must be >= 1");
    if (k > t.size()) return std::nullopt;
    return detail::find_tt(detail::AdjView::of(t), t.vertices().bits, k);
}

// Up to `count` pairwise disjoint transitive 5-sets, or nullopt.
inline std::optional<std::vector<VertexSet>> disjoint_tt5_packing(const Tournament& t, int count) {
    if (count < 1 || count > 3) throw parameter_error("disjoint_tt5_packing: count must be in 1..3");
    std::vector<VertexSet> acc;
    if (detail::pack_tts(detail::AdjView::of(t), t.vertices().bits, 5, count, acc)) return acc;
    return std::nullopt;
}

// Refresh a maximal-set list after orienting {a,b} as a -> b in `after`.
// Only sets containing both endpoints can be new, and they live inside the
// common decided neighbourhood, so the rest of the list is reused.
inline TransitiveSetList update_transitive_sets(const TransitiveSetList& before,
                                                const PartialTournament& after, int a, int b) {
    if (a < 0 || b < 0 || a >= after.size() || b >= after.size() || a == b)
        throw parameter_error("update_transitive_sets: endpoints out of range");
    if (!after.decided(a, b) || !after.arc(a, b))
        throw parameter_error("update_transitive_sets: arc a->b not present in the updated tournament");
    detail::AdjView g = detail::AdjView::of(after);
    std::uint32_t pair = (1u << a) | (1u << b);
    std::uint32_t sub = (g.adj[a] & g.adj[b]) | pair;
    std::vector<VertexSet> fresh;
    for (VertexSet s : detail::maximal_sets(g, sub))
        if ((s.bits & pair) == pair) fresh.push_back(s);

    TransitiveSetList merged;
    merged.reserve(before.size() + fresh.size());
    for (VertexSet old : before) {
        bool covered = false;
        for (VertexSet s : fresh)
            if (old.subset_of(s)) {
                covered = true;
                break;
            }
        if (!covered) merged.push_back(old);
    }
    merged.insert(merged.end(), fresh.begin(), fresh.end());
    std::sort(merged.begin(), merged.end());
    return merged;
}

} // namespace dicolor
