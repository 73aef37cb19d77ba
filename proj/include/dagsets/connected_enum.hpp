#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "dagsets/digraph.hpp"
#include "dagsets/sink.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

// Recursion state for enumerating connected sets S with X ⊆ S ⊆ X ∪ Y.
// frontier is N(x) ∩ y; once it empties no candidate can extend x, so x is
// emitted. Invariants: x ∩ y = ∅, frontier ⊆ y, x connected and nonempty.
struct ConnFrame {
    VertexSet x;
    VertexSet y;
    VertexSet frontier;
};

inline ConnFrame make_conn_frame(const UndirectedGraph& g, VertexSet x, VertexSet y) {
    ConnFrame f{std::move(x), std::move(y), VertexSet(g.order())};
    for (int v : f.x)
        for (int u : g.neighbors(v)) f.frontier.insert(u);
    f.frontier &= f.y;
    return f;
}

namespace detail {

template <class Sink>
bool connected_recurse(ConnFrame& f, const UndirectedGraph& g, Sink& sink) {
#ifdef DAGSETS_HEAVY_CHECKS
    assert(!f.x.intersects(f.y));
    assert(f.frontier.is_subset_of(f.y));
    {
        VertexSet check(g.order());
        for (int v : f.x)
            for (int u : g.neighbors(v)) check.insert(u);
        check &= f.y;
        assert(check == f.frontier);
    }
#endif
    if (f.frontier.empty()) {
        VertexSet snapshot = f.x;
        return sink(snapshot);
    }
    const int v = f.frontier.min();

    f.y.erase(v);
    f.frontier.erase(v);
    f.x.insert(v);
    std::vector<int> added;
    for (int u : g.neighbors(v))
        if (f.y.contains(u) && !f.frontier.contains(u)) {
            f.frontier.insert(u);
            added.push_back(u);
        }
    bool keep_going = connected_recurse(f, g, sink);
    for (int u : added) f.frontier.erase(u);
    f.x.erase(v);
    f.frontier.insert(v);
    f.y.insert(v);
    if (!keep_going) return false;

    f.y.erase(v);
    f.frontier.erase(v);
    keep_going = connected_recurse(f, g, sink);
    f.frontier.insert(v);
    f.y.insert(v);
    return keep_going;
}

}  // namespace detail

// Emits every connected set S with X ⊆ S ⊆ X ∪ Y exactly once, the branch
// including the lowest frontier vertex first. Restores the frame on return.
template <SetSink Sink>
bool expand_conn_frame(ConnFrame& frame, const UndirectedGraph& g, Sink&& sink) {
    return detail::connected_recurse(frame, g, sink);
}

// Streams every nonempty connected set of g exactly once, seeding x = {i}
// with candidate pool {i+1..n-1} for i ascending. Limit semantics match
// enumerate_cc: min(k, total) sets forming a prefix of the unlimited run.
template <SetSink Sink>
std::uint64_t enumerate_connected(const UndirectedGraph& g, Sink&& sink,
                                  std::optional<std::uint64_t> limit = {}) {
    const int n = g.order();
    if (limit && *limit == 0) return 0;

    std::uint64_t emitted = 0;
    bool stopped = false;
    auto emit = [&](const VertexSet& s) -> bool {
        ++emitted;
        bool more = sink(s);
        if (limit && emitted >= *limit) more = false;
        if (!more) stopped = true;
        return more;
    };

    for (int i = 0; i < n && !stopped; ++i) {
        ConnFrame f;
        f.x = VertexSet(n);
        f.x.insert(i);
        f.y = VertexSet::range(n, i + 1, n);
        f.frontier = VertexSet(n);
        for (int u : g.neighbors(i))
            if (u > i) f.frontier.insert(u);
        detail::connected_recurse(f, g, emit);
    }
    return emitted;
}

inline std::uint64_t count_connected(const UndirectedGraph& g) {
    CountingSink sink;
    return enumerate_connected(g, sink);
}

}  // namespace dagsets
