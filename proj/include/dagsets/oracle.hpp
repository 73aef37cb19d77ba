#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dagsets/acyclic_ordering.hpp"
#include "dagsets/digraph.hpp"
#include "dagsets/errors.hpp"
#include "dagsets/predicates.hpp"
#include "dagsets/transitive_closure.hpp"
#include "dagsets/vertex_set.hpp"

namespace dagsets {

// Canonical form for comparing set families: each set as an ascending
// vertex list, the lists sorted lexicographically, duplicates removed.
struct SetFamily {
    std::vector<std::vector<int>> sets;

    static SetFamily from_vectors(std::vector<std::vector<int>> lists) {
        for (auto& s : lists) std::sort(s.begin(), s.end());
        std::sort(lists.begin(), lists.end());
        lists.erase(std::unique(lists.begin(), lists.end()), lists.end());
        return SetFamily{std::move(lists)};
    }

    static SetFamily from_sets(const std::vector<VertexSet>& collected) {
        std::vector<std::vector<int>> lists;
        lists.reserve(collected.size());
        for (const auto& s : collected) lists.push_back(s.to_vector());
        return from_vectors(std::move(lists));
    }

    std::size_t size() const { return sets.size(); }
    bool contains(const std::vector<int>& s) const {
        return std::binary_search(sets.begin(), sets.end(), s);
    }
    bool operator==(const SetFamily&) const = default;
};

// Sets present in one family but not the other, capped per side so verify
// failures stay readable.
struct FamilyDiff {
    std::vector<std::vector<int>> only_left;
    std::vector<std::vector<int>> only_right;
    bool empty() const { return only_left.empty() && only_right.empty(); }
};

inline FamilyDiff family_diff(const SetFamily& left, const SetFamily& right,
                              std::size_t cap_each = 5) {
    FamilyDiff d;
    for (const auto& s : left.sets) {
        if (d.only_left.size() >= cap_each) break;
        if (!right.contains(s)) d.only_left.push_back(s);
    }
    for (const auto& s : right.sets) {
        if (d.only_right.size() >= cap_each) break;
        if (!left.contains(s)) d.only_right.push_back(s);
    }
    return d;
}

namespace detail {

inline VertexSet set_from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.insert(v);
    return s;
}

inline void check_oracle_cap(int n, int cap) {
    if (n > cap) throw capacity_error(n, cap);
}

}  // namespace detail

// Reference implementations: test every nonempty subset against the
// definitional predicates. Exponential on purpose; cap keeps callers honest.

inline SetFamily brute_cc(const Digraph& d, int cap = 20) {
    detail::check_oracle_cap(d.order(), cap);
    ClosureDigraph tc = transitive_closure(d);  // throws cycle_error when cyclic
    std::vector<std::vector<int>> lists;
    const int n = d.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = detail::set_from_mask(n, mask);
        if (is_convex(tc, s) && is_connected_set(d, s)) lists.push_back(s.to_vector());
    }
    return SetFamily::from_vectors(std::move(lists));
}

inline SetFamily brute_convex(const Digraph& d, int cap = 20) {
    detail::check_oracle_cap(d.order(), cap);
    ClosureDigraph tc = transitive_closure(d);
    std::vector<std::vector<int>> lists;
    const int n = d.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = detail::set_from_mask(n, mask);
        if (is_convex(tc, s)) lists.push_back(s.to_vector());
    }
    return SetFamily::from_vectors(std::move(lists));
}

inline SetFamily brute_connected(const UndirectedGraph& g, int cap = 20) {
    detail::check_oracle_cap(g.order(), cap);
    std::vector<std::vector<int>> lists;
    const int n = g.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = detail::set_from_mask(n, mask);
        if (is_connected_set(g, s)) lists.push_back(s.to_vector());
    }
    return SetFamily::from_vectors(std::move(lists));
}

}  // namespace dagsets
