#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

struct GenSpec {
    std::string kind;  // a fixture name, "random" or "random-near"
    int n = 0;
    std::uint64_t seed = 0;
};

std::vector<std::string> fixture_names();

/// Deterministic hand-built graphs: k4, w5, octahedron, stackedK4,
/// pentagon_fan, triforce5, triforce7, fig9_like.
PlaneGraph named_fixture(const std::string& name);

/// Seeded plane triangulation: repeated face splits from K4 followed by
/// random edge flips. Identical output for identical (n, seed).
PlaneGraph random_triangulation(int n, std::uint64_t seed);

/// Seeded near-triangulation: a triangulation with up to two vertices
/// deleted and the vacated region re-declared as the outer face.
PlaneGraph random_near_triangulation(int n, std::uint64_t seed);

PlaneGraph generate(const GenSpec& spec);

}  // namespace planar
