#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>

namespace dicolor {

// A set of vertices 0..31, one bit per vertex.
struct VertexSet {
    std::uint32_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t raw) : bits(raw) {}

    static constexpr VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet single(int v) { return VertexSet(1u << v); }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 32 ? 0xffffffffu : (1u << n) - 1u);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    constexpr VertexSet& add(int v) {
        bits |= 1u << v;
        return *this;
    }
    constexpr VertexSet& remove(int v) {
        bits &= ~(1u << v);
        return *this;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits ^ b.bits); }
    // set difference
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }

    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

    // iterate over members in increasing order
    struct iterator {
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        std::uint32_t rest = 0;
        constexpr int operator*() const { return std::countr_zero(rest); }
        constexpr iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            rest &= rest - 1;
            return old;
        }
        constexpr bool operator==(const iterator& o) const { return rest == o.rest; }
        constexpr bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    constexpr iterator begin() const { return {bits}; }
    constexpr iterator end() const { return {0}; }
};

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace dicolor
