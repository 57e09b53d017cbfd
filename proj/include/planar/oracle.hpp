#pragma once

#include <string>
#include <vector>

#include "planar/checker.hpp"
#include "planar/plane_graph.hpp"

namespace planar {

struct OracleResult {
    bool hole_found = false;
    std::vector<int> hole;  // lexicographically least odd hole, canonical form
};

/// Exhaustive search for a chordless odd cycle of length >= 5, over the
/// adjacency structure only. Exponential worst case; guarded by `limit`.
OracleResult find_odd_hole_bruteforce(const std::vector<std::vector<int>>& adjacency,
                                      int limit = 16);
OracleResult find_odd_hole_bruteforce(const PlaneGraph& g, int limit = 16);

struct WitnessCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

/// Recomputes everything a witness claims: valid ids, clique kernel, simple
/// odd chordless cycle of length >= 5 in g, every hole vertex in N[kernel],
/// and equality with the exterior boundary walk of the kernel's closed
/// neighborhood inside the named W-component.
WitnessCheck verify_witness(const PlaneGraph& g, const Witness& w);

}  // namespace planar
