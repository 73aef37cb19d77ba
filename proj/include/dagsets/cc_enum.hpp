#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "dagsets/acyclic_ordering.hpp"
#include "dagsets/digraph.hpp"
#include "dagsets/sink.hpp"
#include "dagsets/transitive_closure.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

// Recursion state for enumerating the connected convex sets S with
// X ⊆ S ⊆ X ∪ Y. The frontiers are the closure neighborhoods of x clipped
// to y; keeping them incremental is what makes each node O(n/64 + |Y|).
//
// Invariants: x ∩ y = ∅, both frontiers ⊆ y, x is connected and convex,
// x ∪ y is convex. Convexity of x also forces the two frontiers disjoint.
struct EnumFrame {
    VertexSet x;             // committed set
    VertexSet y;             // candidate pool
    VertexSet out_frontier;  // closure out-neighbors of x inside y
    VertexSet in_frontier;   // closure in-neighbors of x inside y
};

// Builds a frame from scratch (union of per-vertex closure neighborhoods).
inline EnumFrame make_frame(const ClosureDigraph& tc, VertexSet x, VertexSet y) {
    EnumFrame f{std::move(x), std::move(y), VertexSet(tc.order()), VertexSet(tc.order())};
    for (int v : f.x) {
        f.out_frontier |= tc.succ(v);
        f.in_frontier |= tc.pred(v);
    }
    f.out_frontier &= f.y;
    f.in_frontier &= f.y;
    return f;
}

// Which vertex to branch on next, and which companions convexity drags in
// with it. Requires vertex ids to already follow an acyclic ordering: the
// pivot is the highest id in the out-frontier when that is nonempty,
// otherwise the lowest id in the in-frontier.
struct BranchChoice {
    int pivot;
    VertexSet forced;  // pivot plus everything that must join x alongside it
    bool via_out;
};

inline BranchChoice select_branch(const EnumFrame& f, const ClosureDigraph& tc) {
    assert(!f.out_frontier.empty() || !f.in_frontier.empty());
    BranchChoice c;
    c.via_out = !f.out_frontier.empty();
    c.pivot = c.via_out ? f.out_frontier.max() : f.in_frontier.min();
    c.forced = c.via_out ? tc.pred(c.pivot) & f.out_frontier
                         : tc.succ(c.pivot) & f.in_frontier;
    c.forced.insert(c.pivot);
    return c;
}

// Call-tree counters. In a full (unstopped) run every node of the binary
// call tree is either a leaf (one set emitted) or has exactly two children,
// so internals = leaves - 1 for each seed vertex.
struct CcStats {
    std::vector<std::uint64_t> leaves_per_seed;
    std::vector<std::uint64_t> internals_per_seed;

    std::uint64_t total_leaves() const {
        std::uint64_t t = 0;
        for (auto v : leaves_per_seed) t += v;
        return t;
    }
    std::uint64_t total_internals() const {
        std::uint64_t t = 0;
        for (auto v : internals_per_seed) t += v;
        return t;
    }
};

namespace detail {

struct CcCounters {
    std::uint64_t leaves = 0;
    std::uint64_t internals = 0;
};

template <class Sink>
bool cc_recurse(EnumFrame& f, const ClosureDigraph& tc, Sink& sink, CcCounters* counters) {
#ifdef DAGSETS_HEAVY_CHECKS
    assert(!f.x.intersects(f.y));
    assert(f.out_frontier.is_subset_of(f.y));
    assert(f.in_frontier.is_subset_of(f.y));
    assert(!f.out_frontier.intersects(f.in_frontier));
#endif
    if (f.out_frontier.empty() && f.in_frontier.empty()) {
        if (counters) ++counters->leaves;
        VertexSet snapshot = f.x;
        return sink(snapshot);
    }
    if (counters) ++counters->internals;

    BranchChoice c = select_branch(f, tc);
    VertexSet& near = c.via_out ? f.out_frontier : f.in_frontier;
    VertexSet& far = c.via_out ? f.in_frontier : f.out_frontier;
    const VertexSet& pivot_nbhd = c.via_out ? tc.pred(c.pivot) : tc.succ(c.pivot);

    // Members of the pivot's other-side neighborhood that enter the far
    // frontier now. forced ⊆ near, so near is restored by re-adding it.
    VertexSet far_added = pivot_nbhd;
    far_added &= f.y;
    far_added -= c.forced;
    far_added -= far;

    f.x |= c.forced;
    f.y -= c.forced;
    near -= c.forced;
    far |= far_added;
    bool keep_going = cc_recurse(f, tc, sink, counters);
    far -= far_added;
    near |= c.forced;
    f.y |= c.forced;
    f.x -= c.forced;
    if (!keep_going) return false;

    f.y.erase(c.pivot);
    near.erase(c.pivot);
    keep_going = cc_recurse(f, tc, sink, counters);
    near.insert(c.pivot);
    f.y.insert(c.pivot);
    return keep_going;
}

}  // namespace detail

// Emits every connected convex set S with X ⊆ S ⊆ X ∪ Y exactly once: the
// branch that includes the pivot runs first, then the branch without it.
// Returns false as soon as the sink asks to stop; the frame is restored to
// its entry state either way.
template <SetSink Sink>
bool expand_frame(EnumFrame& frame, const ClosureDigraph& tc, Sink&& sink) {
    return detail::cc_recurse(frame, tc, sink, nullptr);
}

// Streams every connected convex set of the DAG `d` exactly once, seeded
// per vertex in a deterministic acyclic order (lowest-index-first
// topological). With a limit k, exactly min(k, total) sets are emitted and
// they form a prefix of the unlimited run.
template <SetSink Sink>
std::uint64_t enumerate_cc(const Digraph& d, Sink&& sink,
                           std::optional<std::uint64_t> limit = {},
                           CcStats* stats = nullptr) {
    AcyclicOrdering ord = acyclic_ordering(d);  // throws cycle_error when cyclic
    int n = d.order();
    if (limit && *limit == 0) return 0;

    // Relabel so vertex id == rank; frontier word scans then pick pivots by
    // rank directly. Emitted sets are translated back to the original ids.
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (int u = 0; u < n; ++u)
        for (int v : d.out_neighbors(u)) arcs.emplace_back(ord.rank[u], ord.rank[v]);
    ClosureDigraph tc(Digraph(n, std::move(arcs)), AcyclicOrdering::identity(n));

    std::uint64_t emitted = 0;
    bool stopped = false;
    auto emit = [&](const VertexSet& ranked) -> bool {
        VertexSet original(n);
        for (int r : ranked) original.insert(ord.order[r]);
        ++emitted;
        bool more = sink(original);
        if (limit && emitted >= *limit) more = false;
        if (!more) stopped = true;
        return more;
    };

    for (int i = 0; i < n && !stopped; ++i) {
        EnumFrame f;
        f.x = VertexSet(n);
        f.x.insert(i);
        f.y = VertexSet::range(n, i + 1, n);
        f.out_frontier = tc.succ(i) & f.y;
        f.in_frontier = tc.pred(i) & f.y;
        detail::CcCounters counters;
        detail::cc_recurse(f, tc, emit, stats ? &counters : nullptr);
        if (stats) {
            stats->leaves_per_seed.push_back(counters.leaves);
            stats->internals_per_seed.push_back(counters.internals);
        }
    }
    return emitted;
}

inline std::uint64_t count_cc(const Digraph& d) {
    CountingSink sink;
    return enumerate_cc(d, sink);
}

}  // namespace dagsets
