#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dagsets/digraph.hpp"
#include "dagsets/errors.hpp"

namespace dagsets {

// Edge-list text format, shared by directed and undirected inputs:
//   - lines whose first non-blank character is '#' are comments
//   - first significant line: "n m"
//   - then exactly m lines "u v", whitespace-separated decimal integers
// Whether "u v" means an arc or an edge is the reader's choice.

namespace detail {

struct EdgeListText {
    int n = 0;
    std::vector<Arc> pairs;
};

inline bool blank_or_comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

inline EdgeListText read_edge_list(std::istream& is, bool reject_self_loops) {
    EdgeListText out;
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;

    while (std::getline(is, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            throw parse_error(lineno, "expected header \"n m\"");
        if (n < 0 || m < 0) throw parse_error(lineno, "negative count in header");
        break;
    }
    if (n < 0) throw parse_error(lineno ? lineno : 1, "missing header \"n m\"");

    out.n = static_cast<int>(n);
    out.pairs.reserve(static_cast<std::size_t>(m));
    long long seen = 0;
    while (seen < m && std::getline(is, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw parse_error(lineno, "expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex out of range 0.." + std::to_string(n - 1));
        if (reject_self_loops && u == v) throw parse_error(lineno, "self-loop");
        out.pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen < m)
        throw parse_error(lineno + 1, "expected " + std::to_string(m) + " pairs, got " +
                                          std::to_string(seen));
    return out;
}

}  // namespace detail

inline Digraph parse_digraph(std::istream& is) {
    auto text = detail::read_edge_list(is, /*reject_self_loops=*/true);
    return Digraph(text.n, std::move(text.pairs));
}

inline Digraph parse_digraph(const std::string& text) {
    std::istringstream ss(text);
    return parse_digraph(ss);
}

inline UndirectedGraph parse_undirected(std::istream& is) {
    auto text = detail::read_edge_list(is, /*reject_self_loops=*/true);
    return UndirectedGraph(text.n, std::move(text.pairs));
}

inline UndirectedGraph parse_undirected(const std::string& text) {
    std::istringstream ss(text);
    return parse_undirected(ss);
}

inline void write_edge_list(std::ostream& os, const Digraph& d) {
    os << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
}

inline void write_edge_list(std::ostream& os, const UndirectedGraph& g) {
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

}  // namespace dagsets
