#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

#include "dagsets/vertex_set.hpp"

namespace dagsets {

// Streaming consumer of emitted sets. Each call receives a stable snapshot
// (never mutated afterwards) and answers whether enumeration may continue.
template <class S>
concept SetSink = requires(S s, const VertexSet& v) {
    { s(v) } -> std::convertible_to<bool>;
};

struct CountingSink {
    std::uint64_t count = 0;
    bool operator()(const VertexSet&) {
        ++count;
        return true;
    }
};

struct CollectingSink {
    std::vector<VertexSet> sets;
    bool operator()(const VertexSet& s) {
        sets.push_back(s);
        return true;
    }
};

}  // namespace dagsets
