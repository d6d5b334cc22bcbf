#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace dicolor {

// A tournament on n <= 32 vertices.  Row v holds the out-neighbourhood of v
// as a bit mask, so every pair query is one shift and one AND.
// Immutable once constructed; the constructor asks the predicate for each
// pair (i, j) with i < j exactly once, which makes an inconsistent
// orientation unrepresentable.
class Tournament {
public:
    template <class Pred>
    Tournament(int n, Pred&& arc_i_to_j) : n_(n) {
        if (n < 1 || n > 32) throw parameter_error("tournament order must be in 1..32, got " + std::to_string(n));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (arc_i_to_j(i, j))
                    out_[i] |= 1u << j;
                else
                    out_[j] |= 1u << i;
            }
    }

    int size() const { return n_; }
    bool arc(int i, int j) const { return (out_[i] >> j) & 1u; }
    VertexSet out(int v) const { return VertexSet(out_[v]); }
    VertexSet in(int v) const { return VertexSet(VertexSet::full(n_).bits & ~out_[v] & ~(1u << v)); }
    int out_degree(int v) const { return out(v).size(); }
    int in_degree(int v) const { return n_ - 1 - out_degree(v); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Tournament& a, const Tournament& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.out_[v] != b.out_[v]) return false;
        return true;
    }

private:
    int n_;
    std::array<std::uint32_t, 32> out_{};
};

// A tournament with some pairs still unoriented.  Decided arcs live in out
// rows exactly as in Tournament; undecided pairs are tracked symmetrically.
class PartialTournament {
public:
    explicit PartialTournament(const Tournament& t) : n_(t.size()) {
        for (int v = 0; v < n_; ++v) out_[v] = t.out(v).bits;
    }

    // every pair undecided
    static PartialTournament empty(int n) {
        if (n < 1 || n > 32) throw parameter_error("order must be in 1..32, got " + std::to_string(n));
        PartialTournament p;
        p.n_ = n;
        for (int v = 0; v < n; ++v) p.undec_[v] = VertexSet::full(n).bits & ~(1u << v);
        return p;
    }

    // a on vertices 0..a.size()-1, b shifted above it, cross pairs undecided
    static PartialTournament disjoint_parts(const Tournament& a, const Tournament& b) {
        int n = a.size() + b.size();
        if (n > 32) throw parameter_error("combined order exceeds 32");
        PartialTournament p;
        p.n_ = n;
        int off = a.size();
        for (int v = 0; v < off; ++v) {
            p.out_[v] = a.out(v).bits;
            p.undec_[v] = (VertexSet::full(n) - VertexSet::full(off)).bits;
        }
        for (int v = 0; v < b.size(); ++v) {
            p.out_[off + v] = b.out(v).bits << off;
            p.undec_[off + v] = VertexSet::full(off).bits;
        }
        return p;
    }

    int size() const { return n_; }
    bool arc(int i, int j) const { return (out_[i] >> j) & 1u; }
    bool decided(int i, int j) const { return !((undec_[i] >> j) & 1u); }
    VertexSet out(int v) const { return VertexSet(out_[v]); }
    VertexSet in(int v) const {
        return VertexSet(VertexSet::full(n_).bits & ~out_[v] & ~undec_[v] & ~(1u << v));
    }
    // decided neighbours of v, both directions
    VertexSet adjacent(int v) const {
        return VertexSet((VertexSet::full(n_).bits & ~undec_[v] & ~(1u << v)));
    }
    VertexSet undecided_with(int v) const { return VertexSet(undec_[v]); }

    int undecided_count() const {
        int c = 0;
        for (int v = 0; v < n_; ++v) c += VertexSet(undec_[v]).size();
        return c / 2;
    }
    bool complete() const { return undecided_count() == 0; }

    // sorted lexicographically, i < j, no duplicates
    std::vector<std::pair<int, int>> undecided_pairs() const {
        std::vector<std::pair<int, int>> ps;
        for (int i = 0; i < n_; ++i)
            for (int j : VertexSet(undec_[i]))
                if (i < j) ps.emplace_back(i, j);
        return ps;
    }

    Tournament to_tournament() const {
        if (!complete()) throw usage_error("partial tournament still has undecided pairs");
        return Tournament(n_, [&](int i, int j) { return arc(i, j); });
    }

    friend bool operator==(const PartialTournament& a, const PartialTournament& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.out_[v] != b.out_[v] || a.undec_[v] != b.undec_[v]) return false;
        return true;
    }

    friend PartialTournament add_arc(const PartialTournament& p, int a, int b);

private:
    PartialTournament() = default;
    int n_ = 0;
    std::array<std::uint32_t, 32> out_{};
    std::array<std::uint32_t, 32> undec_{};
};

// Orient the undecided pair {a,b} as a -> b.
[[nodiscard]] inline PartialTournament add_arc(const PartialTournament& p, int a, int b) {
    if (a < 0 || b < 0 || a >= p.size() || b >= p.size() || a == b)
        throw parameter_error("add_arc: endpoints out of range");
    if (p.decided(a, b)) throw usage_error("add_arc: pair already decided");
    PartialTournament q = p;
    q.out_[a] |= 1u << b;
    q.undec_[a] &= ~(1u << b);
    q.undec_[b] &= ~(1u << a);
    return q;
}

// Transitive tournament: arc i -> j iff i < j.
inline Tournament transitive_tournament(int k) {
    if (k < 1) throw parameter_error("transitive_tournament: order must be >= 1");
    return Tournament(k, [](int, int) { return true; });
}

namespace detail {
inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
} // namespace detail

// Quadratic-residue tournament: arc i -> j iff (j - i) mod n is a nonzero
// square.  Requires n prime and n = 3 (mod 4), so that exactly one of
// (j - i), (i - j) is a residue.
inline Tournament paley(int n) {
    if (!detail::is_prime(n)) throw parameter_error("paley: order must be prime, got " + std::to_string(n));
    if (n % 4 != 3) throw parameter_error("paley: order must be 3 mod 4, got " + std::to_string(n));
    if (n > 31) throw parameter_error("paley: order must fit in 32 vertices");
    std::uint32_t residues = 0;
    for (int x = 1; x < n; ++x) residues |= 1u << (x * x % n);
    return Tournament(n, [&](int i, int j) { return (residues >> ((j - i) % n)) & 1u; });
}

// The unique 13-vertex tournament with no transitive subtournament on five
// vertices: arc i -> j iff (j - i) mod 13 lies in {1,2,3,5,6,9}.
inline Tournament x13() {
    constexpr std::uint32_t diffs = (1u << 1) | (1u << 2) | (1u << 3) | (1u << 5) | (1u << 6) | (1u << 9);
    return Tournament(13, [&](int i, int j) { return (diffs >> ((j - i) % 13)) & 1u; });
}

namespace detail {

inline Tournament seven_from_cross(const int (*cross)[2]) {
    // common frame: 0 beats 1,2,3 and loses to 4,5,6; 1->2->3->1; 4->5->6->4
    std::array<std::uint32_t, 7> rows{};
    auto put = [&](int a, int b) { rows[a] |= 1u << b; };
    put(0, 1), put(0, 2), put(0, 3), put(4, 0), put(5, 0), put(6, 0);
    put(1, 2), put(2, 3), put(3, 1), put(4, 5), put(5, 6), put(6, 4);
    for (int k = 0; k < 9; ++k) put(cross[k][0], cross[k][1]);
    return Tournament(7, [&](int i, int j) { return (rows[i] >> j) & 1u; });
}

} // namespace detail

// The three 3-chromatic 7-vertex tournaments besides the residue tournament,
// and the residue tournament itself in the same hub-and-triangles labelling.
inline Tournament tournament_w() {
    static const int cross[9][2] = {{1, 5}, {1, 6}, {1, 4}, {2, 5}, {2, 4}, {2, 6}, {3, 4}, {3, 6}, {3, 5}};
    return detail::seven_from_cross(cross);
}
inline Tournament tournament_w0() {
    static const int cross[9][2] = {{1, 5}, {1, 6}, {4, 1}, {2, 6}, {2, 4}, {5, 2}, {3, 4}, {3, 5}, {6, 3}};
    return detail::seven_from_cross(cross);
}
inline Tournament tournament_w1() {
    static const int cross[9][2] = {{1, 5}, {1, 6}, {1, 4}, {2, 6}, {2, 4}, {5, 2}, {3, 4}, {3, 5}, {6, 3}};
    return detail::seven_from_cross(cross);
}
inline Tournament paley7_hub_labelling() {
    static const int cross[9][2] = {{1, 5}, {1, 6}, {4, 1}, {2, 5}, {2, 4}, {6, 2}, {3, 4}, {3, 6}, {5, 3}};
    return detail::seven_from_cross(cross);
}

// Blow up every vertex of paley(7) except 0 into a directed triangle.
// Vertex 0 keeps index 0; base vertex i in 1..6 becomes indices
// 3i-2, 3i-1, 3i with internal cycle (3i-2) -> (3i-1) -> (3i) -> (3i-2).
// Arcs between distinct triangles, and with vertex 0, follow the base arcs.
inline Tournament blowup_pal7() {
    Tournament base = paley(7);
    auto base_of = [](int v) { return v == 0 ? 0 : (v + 2) / 3; };
    auto pos_of = [](int v) { return (v + 2) % 3; }; // position inside its triangle
    return Tournament(19, [&](int u, int v) {
        int bu = base_of(u), bv = base_of(v);
        if (bu != bv) return base.arc(bu, bv);
        return (pos_of(v) - pos_of(u) + 3) % 3 == 1;
    });
}

// Subtournament induced on S, relabelled order-preservingly to 0..|S|-1.
inline Tournament induced(const Tournament& t, VertexSet s) {
    if (s.empty()) throw parameter_error("induced: vertex set is empty");
    if (!s.subset_of(t.vertices())) throw parameter_error("induced: vertex set out of range");
    std::array<int, 32> orig{};
    int k = 0;
    for (int v : s) orig[k++] = v;
    return Tournament(k, [&](int i, int j) { return t.arc(orig[i], orig[j]); });
}

// Relabel: vertex v of t becomes perm[v] of the result.
inline Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
    if ((int)perm.size() != t.size()) throw parameter_error("relabel: permutation length mismatch");
    std::uint32_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= t.size() || (seen & (1u << v)))
            throw parameter_error("relabel: not a permutation");
        seen |= 1u << v;
    }
    std::array<int, 32> inv{};
    for (int v = 0; v < t.size(); ++v) inv[perm[v]] = v;
    return Tournament(t.size(), [&](int i, int j) { return t.arc(inv[i], inv[j]); });
}

inline Tournament reverse(const Tournament& t) {
    return Tournament(t.size(), [&](int i, int j) { return t.arc(j, i); });
}

} // namespace dicolor
