#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dagsets/errors.hpp"

namespace dagsets {

using Arc = std::pair<int, int>;

// Simple digraph on vertices 0..n-1. Adjacency lists are kept sorted and
// deduplicated; self-loops are rejected at construction.
class Digraph {
public:
    Digraph() = default;

    Digraph(int n, std::vector<Arc> arcs) : n_(n), out_(n), in_(n) {
        for (auto [u, v] : arcs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("arc endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop");
        }
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        for (auto [u, v] : arcs) {
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
        for (auto& a : in_) std::sort(a.begin(), a.end());
        m_ = static_cast<int>(arcs.size());
    }

    int order() const { return n_; }
    int arc_count() const { return m_; }

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    std::vector<Arc> arcs() const {
        std::vector<Arc> a;
        a.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : out_[u]) a.emplace_back(u, v);
        return a;
    }

    bool has_arc(int u, int v) const {
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

using Edge = std::pair<int, int>;

// Undirected graph on vertices 0..n-1, same storage conventions.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    UndirectedGraph(int n, std::vector<Edge> edges) : n_(n), adj_(n) {
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (auto [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        m_ = static_cast<int>(edges.size());
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    std::vector<Edge> edges() const {
        std::vector<Edge> e;
        e.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

}  // namespace dagsets
