#pragma once

#include <queue>
#include <vector>

#include "dagsets/digraph.hpp"
#include "dagsets/errors.hpp"

namespace dagsets {

// Vertex permutation with every arc pointing from lower to higher rank.
struct AcyclicOrdering {
    std::vector<int> order;  // order[r] = vertex with rank r
    std::vector<int> rank;   // rank[v]  = position of v; inverse of order

    static AcyclicOrdering identity(int n) {
        AcyclicOrdering o;
        o.order.resize(n);
        o.rank.resize(n);
        for (int v = 0; v < n; ++v) o.order[v] = o.rank[v] = v;
        return o;
    }
};

namespace detail {

// Vertices left with positive residual in-degree after Kahn's algorithm are
// exactly the unordered ones, and each keeps an in-neighbor among them, so a
// backward walk must revisit itself. The revisited slice, reversed, is a
// cycle in arc order.
inline std::vector<int> find_cycle(const Digraph& d, const std::vector<int>& indeg) {
    int n = d.order();
    std::vector<int> pos_on_walk(n, -1);
    std::vector<int> walk;
    int v = -1;
    for (int u = 0; u < n; ++u)
        if (indeg[u] > 0) { v = u; break; }
    for (;;) {
        pos_on_walk[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        int prev = -1;
        for (int w : d.in_neighbors(v))
            if (indeg[w] > 0) { prev = w; break; }
        if (pos_on_walk[prev] >= 0) {
            std::vector<int> cycle(walk.begin() + pos_on_walk[prev], walk.end());
            std::reverse(cycle.begin(), cycle.end());
            return cycle;
        }
        v = prev;
    }
}

}  // namespace detail

// Deterministic topological order: among vertices whose remaining in-degree
// is zero, the lowest original index goes first. Throws cycle_error with a
// witness when the input is not acyclic.
inline AcyclicOrdering acyclic_ordering(const Digraph& d) {
    int n = d.order();
    std::vector<int> indeg(n);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v) {
        indeg[v] = static_cast<int>(d.in_neighbors(v).size());
        if (indeg[v] == 0) ready.push(v);
    }

    AcyclicOrdering ord;
    ord.order.reserve(n);
    ord.rank.assign(n, -1);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        ord.rank[v] = static_cast<int>(ord.order.size());
        ord.order.push_back(v);
        for (int w : d.out_neighbors(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(ord.order.size()) != n) throw cycle_error(detail::find_cycle(d, indeg));
    return ord;
}

inline bool is_valid_ordering(const Digraph& d, const AcyclicOrdering& ord) {
    if (static_cast<int>(ord.order.size()) != d.order()) return false;
    for (int r = 0; r < d.order(); ++r)
        if (ord.rank[ord.order[r]] != r) return false;
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out_neighbors(u))
            if (ord.rank[u] >= ord.rank[v]) return false;
    return true;
}

}  // namespace dagsets
