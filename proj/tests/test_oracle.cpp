#include <doctest.h>

#include "planar/generator.hpp"
#include "planar/oracle.hpp"

using namespace planar;

namespace {

std::vector<std::vector<int>> cycle_adjacency(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = {(i + n - 1) % n, (i + 1) % n};
    return adj;
}

}  // namespace

TEST_CASE("C5 is its own odd hole") {
    auto r = find_odd_hole_bruteforce(cycle_adjacency(5));
    REQUIRE(r.hole_found);
    CHECK(r.hole == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("even cycles and small cliques have no odd hole") {
    CHECK(!find_odd_hole_bruteforce(cycle_adjacency(6)).hole_found);
    CHECK(!find_odd_hole_bruteforce(cycle_adjacency(4)).hole_found);
    CHECK(!find_odd_hole_bruteforce(named_fixture("k4")).hole_found);
}

TEST_CASE("C7 with a short chord still holds a C5") {
    auto adj = cycle_adjacency(7);
    adj[0].push_back(3);  // chord 0-3 splits C7 into C4 and C5
    adj[3].push_back(0);
    auto r = find_odd_hole_bruteforce(adj);
    REQUIRE(r.hole_found);
    CHECK(r.hole == std::vector<int>{0, 3, 4, 5, 6});
}

TEST_CASE("triforce7 contains exactly the rim hole") {
    auto r = find_odd_hole_bruteforce(named_fixture("triforce7"));
    REQUIRE(r.hole_found);
    CHECK(r.hole == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

    auto r5 = find_odd_hole_bruteforce(named_fixture("triforce5"));
    REQUIRE(r5.hole_found);
    CHECK(r5.hole == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("w5 hole is the rim") {
    auto r = find_odd_hole_bruteforce(named_fixture("w5"));
    REQUIRE(r.hole_found);
    CHECK(r.hole == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("perfect fixtures have no hole") {
    for (const char* name : {"k4", "octahedron", "stackedK4", "pentagon_fan"})
        CHECK(!find_odd_hole_bruteforce(named_fixture(name)).hole_found);
}

TEST_CASE("oracle the limit guard trips") {
    std::vector<std::vector<int>> big(17);
    CHECK_THROWS_AS(find_odd_hole_bruteforce(big), GraphError);
    CHECK_NOTHROW(find_odd_hole_bruteforce(std::vector<std::vector<int>>(17), 20));
}

TEST_CASE("returned holes verify themselves") {
    for (const char* name : {"w5", "triforce5", "triforce7"}) {
        PlaneGraph g = named_fixture(name);
        auto r = find_odd_hole_bruteforce(g);
        REQUIRE(r.hole_found);
        CHECK(r.hole.size() % 2 == 1);
        CHECK(r.hole.size() >= 5);
        const int len = static_cast<int>(r.hole.size());
        std::vector<char> on(g.n, 0);
        for (int v : r.hole) on[v] = 1;
        for (int i = 0; i < len; ++i) {
            CHECK(g.adjacent(r.hole[i], r.hole[(i + 1) % len]));
            int inside = 0;
            for (int w : g.rotation[r.hole[i]])
                if (on[w]) ++inside;
            CHECK(inside == 2);
        }
    }
}
