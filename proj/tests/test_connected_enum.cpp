#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "dagsets/cc_enum.hpp"
#include "dagsets/connected_enum.hpp"
#include "dagsets/generators.hpp"
#include "dagsets/oracle.hpp"
#include "dagsets/parallel.hpp"
#include "dagsets/predicates.hpp"
#include "support/bipartite.hpp"

using namespace dagsets;

namespace {

VertexSet set_of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
}

std::vector<std::vector<int>> collect_connected(const UndirectedGraph& g,
                                                std::optional<std::uint64_t> limit = {}) {
    std::vector<std::vector<int>> out;
    enumerate_connected(g, [&](const VertexSet& s) {
        out.push_back(s.to_vector());
        return true;
    }, limit);
    return out;
}

}  // namespace

TEST_CASE("path of three vertices, exact stream") {
    UndirectedGraph g(3, {{0, 1}, {1, 2}});
    CHECK(collect_connected(g) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {0, 1}, {0}, {1, 2}, {1}, {2}});
    CHECK(count_connected(g) == 6);
}

TEST_CASE("frozen counts for small graphs") {
    CHECK(count_connected(UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 7);
    CHECK(count_connected(UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}})) == 11);
    CHECK(count_connected(
              UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 15);
    CHECK(count_connected(UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}})) == 10);
    CHECK(count_connected(UndirectedGraph(1, {})) == 1);
}

TEST_CASE("disconnected input still enumerates per component") {
    UndirectedGraph g(4, {{0, 1}, {2, 3}});
    CHECK(SetFamily::from_vectors(collect_connected(g)) == brute_connected(g));
}

TEST_CASE("family equals the oracle on random graphs") {
    for (int i = 0; i < 60; ++i) {
        int n = 4 + i % 9;
        double density = (i % 3 == 0) ? 0.1 : (i % 3 == 1) ? 0.3 : 0.6;
        UndirectedGraph g = gen_random_connected_graph(n, density, 6000 + static_cast<std::uint64_t>(i));
        auto sets = collect_connected(g);
        REQUIRE(SetFamily::from_vectors(sets) == brute_connected(g));
        CHECK(sets.size() == brute_connected(g).size());
    }
}

TEST_CASE("every emitted set is connected") {
    UndirectedGraph g = gen_random_connected_graph(12, 0.3, 11);
    enumerate_connected(g, [&](const VertexSet& s) {
        CHECK(is_connected_set(g, s));
        return true;
    });
}

TEST_CASE("expand_conn_frame restores its frame") {
    UndirectedGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});  // 5-cycle
    ConnFrame f = make_conn_frame(g, set_of(5, {0}), VertexSet::range(5, 1, 5));
    CHECK(f.frontier == set_of(5, {1, 4}));
    ConnFrame before = f;

    CollectingSink sink;
    CHECK(expand_conn_frame(f, g, sink));
    CHECK(f.x == before.x);
    CHECK(f.y == before.y);
    CHECK(f.frontier == before.frontier);
    // contiguous runs through vertex 0 in a 5-cycle: 11 of the 21 connected sets
    CHECK(sink.sets.size() == 11);
    for (const auto& s : sink.sets) CHECK(s.contains(0));

    SECTION("early stop restores too") {
        int seen = 0;
        CHECK_FALSE(expand_conn_frame(f, g, [&](const VertexSet&) { return ++seen < 2; }));
        CHECK(f.x == before.x);
        CHECK(f.y == before.y);
        CHECK(f.frontier == before.frontier);
    }
}

TEST_CASE("one-way bipartite orientation preserves the family") {
    for (int i = 0; i < 12; ++i) {
        auto [graph, oriented] =
            testsupport::gen_bipartite_pair(4 + i % 8, 0.4, 8800 + static_cast<std::uint64_t>(i));
        CollectingSink conn, cc;
        enumerate_connected(graph, conn);
        enumerate_cc(oriented, cc);
        CHECK(SetFamily::from_sets(conn.sets) == SetFamily::from_sets(cc.sets));
    }
}

TEST_CASE("connected limit yields a prefix of the full stream") {
    UndirectedGraph g = gen_random_connected_graph(7, 0.4, 3);
    auto full = collect_connected(g);
    for (std::uint64_t k = 0; k <= full.size() + 1; ++k) {
        auto prefix = collect_connected(g, k);
        REQUIRE(prefix.size() == std::min<std::size_t>(k, full.size()));
        CHECK(std::equal(prefix.begin(), prefix.end(), full.begin()));
    }
}

TEST_CASE("connected sink can stop the stream") {
    int calls = 0;
    UndirectedGraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(enumerate_connected(g, [&](const VertexSet&) { return ++calls < 5; }) == 5);
    CHECK(calls == 5);
}

TEST_CASE("parallel connected replays the single-threaded stream") {
    for (int i = 0; i < 6; ++i) {
        UndirectedGraph g = gen_random_connected_graph(11, 0.3, 7700 + static_cast<std::uint64_t>(i));
        CollectingSink single, par;
        enumerate_connected(g, single);
        enumerate_connected_parallel(g, 4, par);
        CHECK(par.sets == single.sets);
    }
    CollectingSink full, capped;
    UndirectedGraph g = gen_random_connected_graph(8, 0.5, 21);
    enumerate_connected(g, full);
    enumerate_connected_parallel(g, 3, capped, std::uint64_t{17});
    REQUIRE(capped.sets.size() == 17);
    CHECK(std::equal(capped.sets.begin(), capped.sets.end(), full.sets.begin()));
}
