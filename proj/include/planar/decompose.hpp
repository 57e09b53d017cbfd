#pragma once

#include <array>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

/// A triangle of the graph that is not a face: both sides hold vertices.
struct SeparatingTriangle {
    std::array<int, 3> vertices;  // sorted ascending
};

/// Induced subgraph that is 2-connected with no edge separator and no
/// separating triangle, mapped back to the graph it was carved from.
struct WComponent {
    PlaneGraph graph;
    std::vector<int> parent_ids;  // local id -> id in the original graph
    bool apex_removed = false;    // true if the augmentation apex was deleted
};

/// Blocks (2-connected components) with inherited rotations and recomputed
/// outer faces. Single-edge blocks are dropped as trivially perfect.
std::vector<InducedSubgraph> biconnected_split(const PlaneGraph& g);

/// Adds a vertex v0 in the outer region adjacent to the whole outer cycle,
/// turning a 2-connected near-triangulation into a triangulation.
PlaneGraph apex_augment(const PlaneGraph& g);

/// All triangles of a plane triangulation that are not faces.
/// Empty exactly when the triangulation is 4-connected (n >= 5).
std::vector<SeparatingTriangle> find_separating_triangles(const PlaneGraph& g);

/// Full reduction of a near-triangulation: biconnected split, apex
/// augmentation of blocks whose outer face is not a triangle, recursive
/// splitting along separating triangles, apex removal. Components are
/// ordered by their smallest parent vertex id.
std::vector<WComponent> w_components(const PlaneGraph& g);

}  // namespace planar
