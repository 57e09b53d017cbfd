#include <doctest.h>

#include "planar/generator.hpp"
#include "planar/oracle.hpp"
#include "support.hpp"

using namespace planar;

TEST_CASE("fixture inventory") {
    auto names = fixture_names();
    CHECK(names.size() == 8);
    CHECK_THROWS_AS(named_fixture("nonesuch"), GraphError);
}

TEST_CASE("triforce7 structure") {
    PlaneGraph g = named_fixture("triforce7");
    CHECK(g.n == 10);
    CHECK(g.num_edges() == 20);
    // the three inner vertices have even degrees 4, 6, 6
    CHECK(g.degree(7) == 4);
    CHECK(g.degree(8) == 6);
    CHECK(g.degree(9) == 6);
    CHECK(canonical_cycle(g.outer_face) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(validate_near_triangulation(g).ok);
}

TEST_CASE("stackedK4 and w5 structure") {
    PlaneGraph s = named_fixture("stackedK4");
    CHECK(s.n == 5);
    CHECK(validate_near_triangulation(s).ok);

    PlaneGraph w = named_fixture("w5");
    CHECK(w.n == 6);
    CHECK(w.degree(5) == 5);  // hub
    CHECK(validate_near_triangulation(w).ok);
}

TEST_CASE("random triangulation: n=4 is k4 for every seed") {
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 193ull}) {
        PlaneGraph g = random_triangulation(4, seed);
        CHECK(g.n == 4);
        CHECK(g.num_edges() == 6);
    }
}

TEST_CASE("random triangulation validates and is deterministic") {
    PlaneGraph a = random_triangulation(10, 42);
    PlaneGraph b = random_triangulation(10, 42);
    CHECK(a.rotation == b.rotation);
    CHECK(a.outer_face == b.outer_face);
    CHECK(validate_near_triangulation(a).ok);
    CHECK(a.outer_face.size() == 3);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        PlaneGraph g = random_triangulation(4 + static_cast<int>(seed % 10), seed);
        validate_plane_graph(g);
        CHECK(validate_near_triangulation(g).ok);
        CHECK(g.num_edges() == 3 * g.n - 6);
    }
}

TEST_CASE("random near-triangulations validate") {
    int with_big_boundary = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 5 + static_cast<int>(seed % 9);
        PlaneGraph g = random_near_triangulation(n, seed);
        validate_plane_graph(g);
        CHECK(validate_near_triangulation(g).ok);
        PlaneGraph again = random_near_triangulation(n, seed);
        CHECK(g.rotation == again.rotation);
        if (g.outer_face.size() > 3) ++with_big_boundary;
    }
    CHECK(with_big_boundary > 0);  // the corpus exercises real near-triangulations
}

TEST_CASE("generate dispatches on the spec kind") {
    GenSpec fixture{"w5", 0, 0};
    CHECK(generate(fixture).n == 6);

    GenSpec random{"random", 9, 5};
    PlaneGraph a = generate(random);
    CHECK(a.rotation == random_triangulation(9, 5).rotation);

    GenSpec near{"random-near", 9, 5};
    CHECK(generate(near).rotation == random_near_triangulation(9, 5).rotation);

    CHECK_THROWS_AS(generate(GenSpec{"mystery", 0, 0}), GraphError);
}

TEST_CASE("flips change the stacked shape") {
    // with flips disabled every graph would be a 3-tree; a 3-tree on >= 5
    // vertices always has a separating triangle, so some flipped graph
    // should be 4-connected for variety
    int triple_free = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        PlaneGraph g = random_triangulation(8, seed);
        if (!support::has_separating_triple(g)) ++triple_free;
    }
    CHECK(triple_free > 0);
}
