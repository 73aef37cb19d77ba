#pragma once

#include <vector>

#include "dagsets/acyclic_ordering.hpp"
#include "dagsets/digraph.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

// Reachability closure of a DAG: succ(v) holds every vertex a directed path
// from v can reach (v excluded), pred(v) every vertex that can reach v.
// Built by one bitset sweep per direction, O(n*m/64) word operations.
class ClosureDigraph {
public:
    ClosureDigraph(Digraph base, const AcyclicOrdering& ord) : base_(std::move(base)) {
        int n = base_.order();
        succ_.assign(n, VertexSet(n));
        pred_.assign(n, VertexSet(n));
        for (int r = n - 1; r >= 0; --r) {
            int u = ord.order[r];
            for (int v : base_.out_neighbors(u)) {
                succ_[u] |= succ_[v];
                succ_[u].insert(v);
            }
        }
        for (int r = 0; r < n; ++r) {
            int v = ord.order[r];
            for (int u : base_.in_neighbors(v)) {
                pred_[v] |= pred_[u];
                pred_[v].insert(u);
            }
        }
    }

    const Digraph& base() const { return base_; }
    int order() const { return base_.order(); }

    const VertexSet& succ(int v) const { return succ_[v]; }
    const VertexSet& pred(int v) const { return pred_[v]; }

    bool reaches(int u, int v) const { return succ_[u].contains(v); }

    // Materializes the closure itself as a digraph (arc u->v iff u reaches v).
    Digraph as_digraph() const {
        std::vector<Arc> arcs;
        for (int u = 0; u < order(); ++u)
            for (int v : succ_[u]) arcs.emplace_back(u, v);
        return Digraph(order(), std::move(arcs));
    }

private:
    Digraph base_;
    std::vector<VertexSet> succ_;
    std::vector<VertexSet> pred_;
};

inline ClosureDigraph transitive_closure(const Digraph& d, const AcyclicOrdering& ord) {
    return ClosureDigraph(d, ord);
}

inline ClosureDigraph transitive_closure(const Digraph& d) {
    return ClosureDigraph(d, acyclic_ordering(d));
}

}  // namespace dagsets
