#pragma once

#include <stdexcept>

#include "dagsets/digraph.hpp"
#include "dagsets/transitive_closure.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

// A nonempty set is convex when no directed path joins two of its members
// through an outside vertex. Equivalently, via the closure: no outside
// vertex is both reached from the set and reaches back into it.
inline bool is_convex(const ClosureDigraph& tc, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("is_convex: empty set");
    int n = tc.order();
    for (int z = 0; z < n; ++z) {
        if (s.contains(z)) continue;
        if (tc.pred(z).intersects(s) && tc.succ(z).intersects(s)) return false;
    }
    return true;
}

inline bool is_convex(const Digraph& d, const VertexSet& s) {
    return is_convex(transitive_closure(d), s);
}

namespace detail {

template <class NeighborsOf>
bool connected_in(const VertexSet& s, NeighborsOf&& neighbors_of) {
    if (s.empty()) throw std::invalid_argument("is_connected_set: empty set");
    VertexSet seen(s.universe_size());
    std::vector<int> stack{s.min()};
    seen.insert(s.min());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        neighbors_of(v, [&](int w) {
            if (s.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        });
    }
    return seen.size() == s.size();
}

}  // namespace detail

// True when the subgraph induced by s is connected, arc directions ignored.
inline bool is_connected_set(const Digraph& d, const VertexSet& s) {
    return detail::connected_in(s, [&](int v, auto&& visit) {
        for (int w : d.out_neighbors(v)) visit(w);
        for (int w : d.in_neighbors(v)) visit(w);
    });
}

inline bool is_connected_set(const UndirectedGraph& g, const VertexSet& s) {
    return detail::connected_in(s, [&](int v, auto&& visit) {
        for (int w : g.neighbors(v)) visit(w);
    });
}

}  // namespace dagsets
