#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "dagsets/cc_enum.hpp"
#include "dagsets/connected_enum.hpp"
#include "dagsets/sink.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

namespace detail {

// Outer-loop parallelism with deterministic output: workers claim seed
// indices from a shared counter and buffer each seed's emissions as raw
// word blocks; the merge then replays seeds in ascending order, so the
// stream is identical to the single-threaded one. Buffers hold the whole
// family until the merge, which is the price of determinism.
template <class RunSeed, class Emit>
std::uint64_t buffered_parallel(int seeds, int universe, unsigned workers, RunSeed&& run_seed,
                                Emit&& emit, std::optional<std::uint64_t> limit) {
    const std::size_t block = static_cast<std::size_t>((universe + 63) / 64);
    std::vector<std::vector<std::uint64_t>> buffers(static_cast<std::size_t>(seeds));
    std::atomic<int> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    int i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= seeds) break;
                    auto& buf = buffers[static_cast<std::size_t>(i)];
                    std::uint64_t kept = 0;
                    run_seed(i, [&](const VertexSet& s) -> bool {
                        const auto& w = s.words();
                        buf.insert(buf.end(), w.begin(), w.end());
                        ++kept;
                        return !(limit && kept >= *limit);
                    });
                }
            });
    }

    std::uint64_t emitted = 0;
    VertexSet scratch(universe);
    for (const auto& buf : buffers) {
        const std::size_t nsets = block ? buf.size() / block : 0;
        for (std::size_t k = 0; k < nsets; ++k) {
            scratch.assign_words(buf.data() + k * block);
            ++emitted;
            bool more = emit(scratch);
            if (limit && emitted >= *limit) more = false;
            if (!more) return emitted;
        }
    }
    return emitted;
}

}  // namespace detail

// Parallel enumerate_cc. Same stream, same limit semantics; worker count 0
// or 1 falls back to the single-threaded path.
template <SetSink Sink>
std::uint64_t enumerate_cc_parallel(const Digraph& d, unsigned workers, Sink&& sink,
                                    std::optional<std::uint64_t> limit = {}) {
    if (workers <= 1) return enumerate_cc(d, sink, limit);
    AcyclicOrdering ord = acyclic_ordering(d);
    const int n = d.order();
    if (limit && *limit == 0) return 0;

    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (int u = 0; u < n; ++u)
        for (int v : d.out_neighbors(u)) arcs.emplace_back(ord.rank[u], ord.rank[v]);
    const ClosureDigraph tc(Digraph(n, std::move(arcs)), AcyclicOrdering::identity(n));

    auto run_seed = [&](int i, auto&& append) {
        EnumFrame f;
        f.x = VertexSet(n);
        f.x.insert(i);
        f.y = VertexSet::range(n, i + 1, n);
        f.out_frontier = tc.succ(i) & f.y;
        f.in_frontier = tc.pred(i) & f.y;
        auto translate = [&](const VertexSet& ranked) -> bool {
            VertexSet original(n);
            for (int r : ranked) original.insert(ord.order[r]);
            return append(original);
        };
        detail::cc_recurse(f, tc, translate, nullptr);
    };
    return detail::buffered_parallel(n, n, workers, run_seed, sink, limit);
}

// Parallel enumerate_connected, same contract.
template <SetSink Sink>
std::uint64_t enumerate_connected_parallel(const UndirectedGraph& g, unsigned workers,
                                           Sink&& sink,
                                           std::optional<std::uint64_t> limit = {}) {
    if (workers <= 1) return enumerate_connected(g, sink, limit);
    const int n = g.order();
    if (limit && *limit == 0) return 0;

    auto run_seed = [&](int i, auto&& append) {
        ConnFrame f;
        f.x = VertexSet(n);
        f.x.insert(i);
        f.y = VertexSet::range(n, i + 1, n);
        f.frontier = VertexSet(n);
        for (int u : g.neighbors(i))
            if (u > i) f.frontier.insert(u);
        detail::connected_recurse(f, g, append);
    };
    return detail::buffered_parallel(n, n, workers, run_seed, sink, limit);
}

}  // namespace dagsets
