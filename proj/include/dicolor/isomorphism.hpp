#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tournament.hpp"
#include "transitive.hpp"

namespace dicolor {

// perm[v] is the image of v.
using Permutation = std::vector<int>;

inline Permutation identity_perm(int n) {
    Permutation p(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p[v] = v;
    return p;
}

inline bool is_isomorphism(const Tournament& a, const Tournament& b, const Permutation& perm) {
    int n = a.size();
    if (b.size() != n || static_cast<int>(perm.size()) != n) return false;
    std::uint32_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= n) return false;
        seen |= 1u << v;
    }
    if (seen != VertexSet::full(n).bits) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.arc(i, j) != b.arc(perm[i], perm[j])) return false;
    return true;
}

// Adjacency bits in colex pair order: pair (i,j), i<j, sits at bit j(j-1)/2+i,
// packed MSB-first so byte-wise comparison matches bit-string comparison.
// Assigning labels 0,1,...,m appends bits, which is what lets the canonical
// search prune on prefixes.
inline std::vector<std::uint8_t> adjacency_code(const Tournament& t) {
    int n = t.size();
    std::vector<std::uint8_t> code(static_cast<std::size_t>((n * (n - 1) / 2 + 7) / 8), 0);
    int pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++pos)
            if (t.arc(i, j)) code[pos >> 3] |= static_cast<std::uint8_t>(0x80u >> (pos & 7));
    return code;
}

struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> code;
    auto operator<=>(const CanonicalForm&) const = default;
};

inline std::string to_hex(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

namespace detail {

inline constexpr int kCanonicalCap = 13;

// Branch and bound over label assignments.  Placing label m writes the bits
// for pairs (i,m), i<m, directly after everything already written, so a block
// comparison against the incumbent decides the whole subtree.  Pruning is only
// sound while the current prefix equals the incumbent's prefix; once an
// ancestor descended a strictly smaller branch every leaf below wins, the
// first one reached becomes the incumbent, and pruning resumes from there.
struct CanonSearch {
    const Tournament& t;
    int n;
    std::vector<std::uint8_t> cur, best; // one byte per bit
    std::array<int, 32> assign{};        // assign[label] = original vertex
    std::uint32_t used = 0;
    bool have = false;
    std::array<int, 32> best_assign{};

    explicit CanonSearch(const Tournament& tt)
        : t(tt), n(tt.size()), cur(static_cast<std::size_t>(n * (n - 1) / 2), 0),
          best(cur.size(), 0) {}

    void run() { rec(0); }

    void rec(int m) {
        if (m == n) {
            if (!have || cur < best) {
                best = cur;
                best_assign = assign;
            }
            have = true;
            return;
        }
        int base = m * (m - 1) / 2;
        struct Cand {
            int v;
            std::uint32_t key;
        };
        std::array<Cand, 32> cand{};
        int cnt = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint32_t key = 0;
            for (int i = 0; i < m; ++i)
                key = (key << 1) | (t.arc(assign[i], v) ? 1u : 0u);
            cand[cnt++] = {v, key};
        }
        std::sort(cand.begin(), cand.begin() + cnt, [](const Cand& a, const Cand& b) {
            if (a.key != b.key) return a.key < b.key;
            return a.v < b.v;
        });
        for (int c = 0; c < cnt; ++c) {
            if (have && std::equal(cur.begin(), cur.begin() + base, best.begin())) {
                std::uint32_t bkey = 0;
                for (int i = 0; i < m; ++i) bkey = (bkey << 1) | best[base + i];
                if (cand[c].key > bkey) break; // sorted, rest are worse
            }
            int v = cand[c].v;
            for (int i = 0; i < m; ++i)
                cur[base + i] = static_cast<std::uint8_t>((cand[c].key >> (m - 1 - i)) & 1u);
            assign[m] = v;
            used |= 1u << v;
            rec(m + 1);
            used &= ~(1u << v);
        }
    }
};

inline std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
    return out;
}

inline void check_perm(const Permutation& p, int n, const char* who) {
    if (static_cast<int>(p.size()) != n) throw parameter_error(std::string(who) + ": permutation size mismatch");
    std::uint32_t seen = 0;
    for (int v : p) {
        if (v < 0 || v >= n || (seen & (1u << v))) throw parameter_error(std::string(who) + ": not a permutation");
        seen |= 1u << v;
    }
}

} // namespace detail

struct LabeledForm {
    CanonicalForm form;
    Permutation labeling; // labeling[original] = canonical label
};

inline LabeledForm canonical_form_labeled(const Tournament& t) {
    if (t.size() > detail::kCanonicalCap)
        throw capability_error("canonical_form: order above supported bound 13");
    detail::CanonSearch s(t);
    s.run();
    Permutation lab(static_cast<std::size_t>(t.size()));
    for (int m = 0; m < t.size(); ++m) lab[s.best_assign[m]] = m;
    return {CanonicalForm{t.size(), detail::pack_bits(s.best)}, std::move(lab)};
}

inline CanonicalForm canonical_form(const Tournament& t) { return canonical_form_labeled(t).form; }

inline bool isomorphic(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

inline std::vector<Permutation> automorphisms(const Tournament& t) {
    if (t.size() > detail::kCanonicalCap)
        throw capability_error("automorphisms: order above supported bound 13");
    int n = t.size();
    std::vector<Permutation> out;
    Permutation img(static_cast<std::size_t>(n));
    std::uint32_t used = 0;
    auto rec = [&](auto&& self, int m) -> void {
        if (m == n) {
            out.push_back(img);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            if (t.out_degree(v) != t.out_degree(m)) continue;
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) ok = t.arc(i, m) == t.arc(img[i], v);
            if (!ok) continue;
            img[m] = v;
            used |= 1u << v;
            self(self, m + 1);
            used &= ~(1u << v);
        }
    };
    rec(rec, 0);
    return out; // lexicographic; identity first
}

// First embedding of pattern into host in lexicographic image order.
// mapping[p] is the host vertex playing pattern vertex p.
inline std::optional<std::vector<int>> contains_subtournament(const Tournament& host,
                                                              const Tournament& pattern) {
    int n = host.size(), k = pattern.size();
    if (k > n) throw parameter_error("contains_subtournament: pattern larger than host");
    std::vector<int> map(static_cast<std::size_t>(k));
    std::uint32_t used = 0;
    auto rec = [&](auto&& self, int m) -> bool {
        if (m == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            if (host.out_degree(v) < pattern.out_degree(m)) continue;
            if (host.in_degree(v) < pattern.in_degree(m)) continue;
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) ok = host.arc(map[i], v) == pattern.arc(i, m);
            if (!ok) continue;
            map[m] = v;
            used |= 1u << v;
            if (self(self, m + 1)) return true;
            used &= ~(1u << v);
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

// One tournament per isomorphism class, grown one vertex at a time.  A child
// is kept exactly when its new vertex lies in the automorphism orbit of the
// vertex its canonical labeling places last, so each class survives once.
inline std::vector<Tournament> enumerate_tournaments(int n) {
    if (n < 1) throw parameter_error("enumerate_tournaments: order must be >= 1");
    if (n > 8) throw capability_error("enumerate_tournaments: order above supported bound 8");
    std::vector<Tournament> level;
    level.push_back(Tournament(1, [](int, int) { return true; }));
    for (int m = 2; m <= n; ++m) {
        std::vector<Tournament> next;
        for (const Tournament& parent : level) {
            std::vector<Permutation> pauts = automorphisms(parent);
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                std::uint32_t lo = mask; // orbit representative under Aut(parent)
                for (const Permutation& g : pauts) {
                    std::uint32_t img = 0;
                    for (int i = 0; i < m - 1; ++i)
                        if (mask & (1u << i)) img |= 1u << g[i];
                    lo = std::min(lo, img);
                }
                if (lo != mask) continue;
                Tournament child(m, [&](int i, int j) {
                    if (j < m - 1) return parent.arc(i, j);
                    return (mask & (1u << i)) != 0; // bit i set: i beats the new vertex
                });
                LabeledForm lf = canonical_form_labeled(child);
                int d = 0;
                while (lf.labeling[d] != m - 1) ++d;
                bool keep = false;
                for (const Permutation& g : automorphisms(child))
                    if (g[m - 1] == d) {
                        keep = true;
                        break;
                    }
                if (keep) next.push_back(relabel(child, lf.labeling));
            }
        }
        std::sort(next.begin(), next.end(), [](const Tournament& a, const Tournament& b) {
            return adjacency_code(a) < adjacency_code(b);
        });
        level = std::move(next);
    }
    return level;
}

// Canonical code of t under a restricted symmetry group.  The fixed set is
// normalised to labels 0..|fixed|-1 in domination order, the rest keep their
// relative order, and the code is the minimum over the given relabelings.
inline CanonicalForm canonical_form_fixing(const Tournament& t, VertexSet fixed,
                                           const std::vector<Permutation>& group) {
    if (fixed.empty() || !fixed.subset_of(t.vertices()))
        throw parameter_error("canonical_form_fixing: fixed set empty or out of range");
    if (!is_transitive(t, fixed))
        throw parameter_error("canonical_form_fixing: fixed set must span a transitive subtournament");
    if (group.empty()) throw parameter_error("canonical_form_fixing: empty symmetry group");
    int n = t.size();
    std::vector<int> fv(fixed.begin(), fixed.end());
    std::stable_sort(fv.begin(), fv.end(), [&](int a, int b) {
        return (t.out(a) & fixed).size() > (t.out(b) & fixed).size();
    });
    Permutation rho(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : fv) rho[v] = next++;
    for (int v = 0; v < n; ++v)
        if (rho[v] < 0) rho[v] = next++;
    Tournament t0 = relabel(t, rho);
    std::optional<std::vector<std::uint8_t>> lo;
    for (const Permutation& g : group) {
        detail::check_perm(g, n, "canonical_form_fixing");
        std::vector<std::uint8_t> code = adjacency_code(relabel(t0, g));
        if (!lo || code < *lo) lo = std::move(code);
    }
    return CanonicalForm{n, std::move(*lo)};
}

} // namespace dicolor
