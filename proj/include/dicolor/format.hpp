#pragma once

#include <string>
#include <string_view>

#include "errors.hpp"
#include "tournament.hpp"

namespace dicolor {

// Text form "n:<bits>" with one char per pair (i,j), i < j, in
// lexicographic pair order; '1' means i -> j, '0' means j -> i,
// '?' (partial form only) means undecided.

namespace detail {

inline int parse_header(std::string_view text, std::size_t& pos) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw parameter_error("tournament text: missing ':'");
    int n = 0;
    if (colon == 0 || colon > 2) throw parameter_error("tournament text: bad order field");
    for (std::size_t i = 0; i < colon; ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw parameter_error("tournament text: bad order field");
        n = n * 10 + (c - '0');
    }
    if (n < 1 || n > 32) throw parameter_error("tournament text: order must be in 1..32");
    if (text.size() - colon - 1 != std::size_t(n) * (n - 1) / 2)
        throw parameter_error("tournament text: expected " + std::to_string(n * (n - 1) / 2) + " pair chars");
    pos = colon + 1;
    return n;
}

} // namespace detail

inline std::string to_text(const Tournament& t) {
    std::string s = std::to_string(t.size()) + ":";
    for (int i = 0; i < t.size(); ++i)
        for (int j = i + 1; j < t.size(); ++j) s += t.arc(i, j) ? '1' : '0';
    return s;
}

inline std::string to_text(const PartialTournament& p) {
    std::string s = std::to_string(p.size()) + ":";
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            s += !p.decided(i, j) ? '?' : (p.arc(i, j) ? '1' : '0');
    return s;
}

inline Tournament tournament_from_text(std::string_view text) {
    std::size_t pos = 0;
    int n = detail::parse_header(text, pos);
    std::size_t k = pos;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (text[k] != '0' && text[k] != '1')
                throw parameter_error("tournament text: pair chars must be 0 or 1");
    k = pos;
    // capture positions up front; the constructor visits pairs in the same order
    return Tournament(n, [&, base = text.substr(pos)](int i, int j) {
        std::size_t idx = 0;
        // offset of pair (i,j) in lexicographic pair order
        idx = std::size_t(i) * n - std::size_t(i) * (i + 1) / 2 + (j - i - 1);
        return base[idx] == '1';
    });
}

inline PartialTournament partial_from_text(std::string_view text) {
    std::size_t pos = 0;
    int n = detail::parse_header(text, pos);
    PartialTournament p = PartialTournament::empty(n);
    std::size_t k = pos;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            char c = text[k];
            if (c == '1')
                p = add_arc(p, i, j);
            else if (c == '0')
                p = add_arc(p, j, i);
            else if (c != '?')
                throw parameter_error("tournament text: pair chars must be 0, 1 or ?");
        }
    return p;
}

} // namespace dicolor
