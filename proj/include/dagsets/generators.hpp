#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dagsets/digraph.hpp"

namespace dagsets {

// splitmix64: tiny PRNG with published constants, bit-identical everywhere.
// Chosen over <random> engines because the standard leaves distribution
// mapping unspecified; reproducibility of generated instances is part of
// the contract here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform-enough in [0,bound); modulo bias is irrelevant for instance supply
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Complete bipartite digraph: p sources 0..p-1, q sinks p..p+q-1, all arcs
// oriented source to sink. Near-balanced parts maximize the cc-set count
// over all n-vertex DAGs.
inline Digraph gen_kpq(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("gen_kpq: both parts need a vertex");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(p) * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) arcs.emplace_back(i, p + j);
    return Digraph(p + q, std::move(arcs));
}

// Directed path 0 → 1 → ... → n-1, the cc-count minimizer among connected DAGs.
inline Digraph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: need at least one vertex");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, std::move(arcs));
}

// Random DAG: a random permutation fixes a hidden topological order, then
// each forward pair is kept independently with the given probability.
inline Digraph gen_random_dag(int n, double density, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_random_dag: negative order");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_random_dag: density outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < density) arcs.emplace_back(perm[i], perm[j]);
    return Digraph(n, std::move(arcs));
}

// Random connected graph: random attachment tree (vertex v hangs off a
// uniform earlier vertex) plus independent extra edges. Connected by
// construction for every density.
inline UndirectedGraph gen_random_connected_graph(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_connected_graph: need at least one vertex");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_random_connected_graph: density outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        auto parent = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
        edges.emplace_back(parent, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < density) edges.emplace_back(u, v);
    return UndirectedGraph(n, std::move(edges));  // constructor dedups tree/extra overlap
}

// Closed-form extremes for the n-vertex cc-set count: a directed path gives
// the minimum n(n+1)/2 over connected DAGs; a near-balanced complete
// bipartite digraph attains the maximum 2^n + n + 1 - d_n, where d_n is
// 2·2^(n/2) for even n and 3·2^((n-1)/2) for odd n.
struct ExtremalPrediction {
    int n;
    std::uint64_t lower;
    std::uint64_t upper;
};

inline ExtremalPrediction predict(int n) {
    if (n < 1) throw std::invalid_argument("predict: need at least one vertex");
    if (n > 62) throw std::overflow_error("predict: count exceeds 64 bits beyond n=62");
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t d =
        (n % 2 == 0) ? std::uint64_t{2} << (n / 2) : std::uint64_t{3} << ((n - 1) / 2);
    ExtremalPrediction p;
    p.n = n;
    p.lower = un * (un + 1) / 2;
    p.upper = (std::uint64_t{1} << n) + un + 1 - d;
    return p;
}

}  // namespace dagsets
