#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dagsets/acyclic_ordering.hpp"
#include "dagsets/digraph.hpp"
#include "dagsets/sink.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

// Mutable view of the input DAG shrinking under source/sink deletions.
// live is always a convex set of the original digraph: removing a source or
// sink of the induced subgraph cannot cut a directed path between two
// remaining vertices. fixed marks vertices barred from deletion so each
// convex set is reached exactly once.
class PeelState {
public:
    struct Undo {
        int vertex;
        std::vector<int> live_out;  // live out-neighbors at deletion time
        std::vector<int> live_in;
    };

    explicit PeelState(const Digraph& d)
        : graph_(&d),
          live_(VertexSet::full(d.order())),
          fixed_(d.order()),
          in_deg_(static_cast<std::size_t>(d.order())),
          out_deg_(static_cast<std::size_t>(d.order())) {
        for (int v = 0; v < d.order(); ++v) {
            in_deg_[v] = static_cast<int>(d.in_neighbors(v).size());
            out_deg_[v] = static_cast<int>(d.out_neighbors(v).size());
        }
    }

    const VertexSet& live() const { return live_; }
    const VertexSet& fixed() const { return fixed_; }
    int in_degree(int v) const { return in_deg_[v]; }
    int out_degree(int v) const { return out_deg_[v]; }

    // A deletion candidate: live, not fixed, and a source or sink of the
    // live induced subgraph. An isolated vertex qualifies once, not twice.
    bool is_candidate(int s) const {
        return live_.contains(s) && !fixed_.contains(s) &&
               (in_deg_[s] == 0 || out_deg_[s] == 0);
    }

    const Undo& peel_step(int s) {
        if (!is_candidate(s)) throw std::invalid_argument("peel_step: not a deletable source/sink");
        Undo rec;
        rec.vertex = s;
        for (int w : graph_->out_neighbors(s))
            if (live_.contains(w)) {
                --in_deg_[w];
                rec.live_out.push_back(w);
            }
        for (int u : graph_->in_neighbors(s))
            if (live_.contains(u)) {
                --out_deg_[u];
                rec.live_in.push_back(u);
            }
        live_.erase(s);
        undo_.push_back(std::move(rec));
        return undo_.back();
    }

    void restore_step() {
        if (undo_.empty()) throw std::invalid_argument("restore_step: nothing to restore");
        Undo rec = std::move(undo_.back());
        undo_.pop_back();
        live_.insert(rec.vertex);
        for (int w : rec.live_out) ++in_deg_[w];
        for (int u : rec.live_in) ++out_deg_[u];
    }

    void fix(int s) {
        if (!live_.contains(s) || fixed_.contains(s))
            throw std::invalid_argument("fix: vertex not live or already fixed");
        fixed_.insert(s);
    }

    void unfix(int s) {
        if (!fixed_.contains(s)) throw std::invalid_argument("unfix: vertex not fixed");
        fixed_.erase(s);
    }

private:
    const Digraph* graph_;
    VertexSet live_;
    VertexSet fixed_;
    std::vector<int> in_deg_;
    std::vector<int> out_deg_;
    std::vector<Undo> undo_;
};

namespace detail {

template <class Sink>
bool convex_recurse(PeelState& st, bool include_empty, Sink& sink) {
    if (!st.live().empty() || include_empty) {
        VertexSet snapshot = st.live();
        if (!sink(snapshot)) return false;
    }
    // Candidates are snapshotted at entry; fixing earlier candidates does
    // not disturb later ones since the graph is restored between branches.
    std::vector<int> candidates;
    for (int s : st.live())
        if (st.is_candidate(s)) candidates.push_back(s);

    bool keep_going = true;
    std::size_t fixed_here = 0;
    for (int s : candidates) {
        st.peel_step(s);
        keep_going = convex_recurse(st, include_empty, sink);
        st.restore_step();
        if (!keep_going) break;
        st.fix(s);
        ++fixed_here;
    }
    for (std::size_t k = fixed_here; k-- > 0;) st.unfix(candidates[k]);
    return keep_going;
}

}  // namespace detail

// Streams every convex set of the DAG `d` exactly once by recursive
// source/sink deletion; the full vertex set comes first. The empty set is
// emitted only when include_empty is set (it bottoms out the recursion but
// is excluded from the convex family by default). Limit semantics match
// enumerate_cc.
template <SetSink Sink>
std::uint64_t enumerate_convex(const Digraph& d, Sink&& sink, bool include_empty = false,
                               std::optional<std::uint64_t> limit = {}) {
    acyclic_ordering(d);  // validates the input; throws cycle_error when cyclic
    if (limit && *limit == 0) return 0;

    std::uint64_t emitted = 0;
    auto emit = [&](const VertexSet& s) -> bool {
        ++emitted;
        bool more = sink(s);
        if (limit && emitted >= *limit) more = false;
        return more;
    };

    PeelState st(d);
    detail::convex_recurse(st, include_empty, emit);
    return emitted;
}

inline std::uint64_t count_convex(const Digraph& d) {
    CountingSink sink;
    return enumerate_convex(d, sink);
}

}  // namespace dagsets
