#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dagsets/errors.hpp"
#include "dagsets/generators.hpp"
#include "dagsets/oracle.hpp"

using namespace dagsets;

namespace {

Digraph example() { return Digraph(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}}); }

}  // namespace

TEST_CASE("set family canonicalization") {
    SetFamily f = SetFamily::from_vectors({{2, 0}, {1}, {0, 2}, {1}});
    CHECK(f.sets == std::vector<std::vector<int>>{{0, 2}, {1}});
    CHECK(f.size() == 2);
    CHECK(f.contains({1}));
    CHECK_FALSE(f.contains({0}));

    std::vector<VertexSet> vs;
    VertexSet a(4);
    a.insert(3);
    a.insert(1);
    vs.push_back(a);
    CHECK(SetFamily::from_sets(vs).sets == std::vector<std::vector<int>>{{1, 3}});
}

TEST_CASE("family diff samples both sides") {
    SetFamily l = SetFamily::from_vectors({{0}, {1}, {2}});
    SetFamily r = SetFamily::from_vectors({{1}, {3}});
    FamilyDiff d = family_diff(l, r);
    CHECK(d.only_left == std::vector<std::vector<int>>{{0}, {2}});
    CHECK(d.only_right == std::vector<std::vector<int>>{{3}});
    CHECK_FALSE(d.empty());
    CHECK(family_diff(l, l).empty());

    SetFamily wide = SetFamily::from_vectors({{0}, {1}, {2}, {3}, {4}, {5}, {6}});
    CHECK(family_diff(wide, SetFamily{}, 5).only_left.size() == 5);
}

TEST_CASE("brute cc on the example") {
    SetFamily f = brute_cc(example());
    CHECK(f.size() == 17);
    CHECK(f.contains({0, 1, 2, 3, 4}));
    CHECK(f.contains({0, 3}));
    CHECK(f.contains({2, 3, 4}));
    CHECK_FALSE(f.contains({0, 2}));     // convex fails
    CHECK_FALSE(f.contains({1, 3}));     // connected fails
    CHECK_FALSE(f.contains({0, 1, 4}));  // both fail
}

TEST_CASE("brute families on tiny graphs") {
    Digraph arc(2, {{0, 1}});
    CHECK(brute_cc(arc).sets == std::vector<std::vector<int>>{{0}, {0, 1}, {1}});
    CHECK(brute_convex(arc).size() == 3);

    CHECK(brute_convex(gen_path(3)).sets ==
          std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}, {1}, {1, 2}, {2}});

    UndirectedGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(brute_connected(tri).size() == 7);

    UndirectedGraph p3(3, {{0, 1}, {1, 2}});
    CHECK(brute_connected(p3).sets ==
          std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}, {1}, {1, 2}, {2}});

    UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(brute_connected(star).size() == 11);

    UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(brute_connected(k4).size() == 15);

    UndirectedGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(brute_connected(p4).size() == 10);
}

TEST_CASE("oracles respect their cap") {
    CHECK_THROWS_AS(brute_cc(gen_path(21)), capacity_error);
    CHECK_THROWS_AS(brute_convex(gen_path(21)), capacity_error);
    CHECK_THROWS_AS(brute_connected(UndirectedGraph(21, {}), 20), capacity_error);
    CHECK_THROWS_AS(brute_cc(gen_path(5), 4), capacity_error);
    CHECK_NOTHROW(brute_cc(gen_path(5), 5));
}

TEST_CASE("brute cc rejects cyclic input") {
    CHECK_THROWS_AS(brute_cc(Digraph(2, {{0, 1}, {1, 0}})), cycle_error);
}
