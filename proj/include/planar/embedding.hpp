#pragma once

#include <string>
#include <vector>

#include "planar/plane_graph.hpp"

namespace planar {

struct GridPoint {
    int x = 0;
    int y = 0;

    bool operator==(const GridPoint&) const = default;
};

/// Integer coordinates of a straight-line plane drawing, indexed by vertex id.
struct GridEmbedding {
    std::vector<GridPoint> coords;
};

struct SlopeOrderedAdjacency {
    std::vector<std::vector<int>> neighbors;
};

struct BoundaryCycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

long long cross(const GridPoint& a, const GridPoint& b);

/// Strict "steeper than" order on direction vectors: vertical-up first,
/// then finite slopes descending; opposite directions of equal slope are
/// split by direction sign (rightward before leftward, up before down).
bool slope_greater(const GridPoint& d1, const GridPoint& d2);

/// Straight-line drawing of a plane triangulation on the (n-1) x (n-1) grid
/// from a Schnyder realizer built over a canonical vertex ordering.
/// Orientation is normalized so rotation-trace walks and coordinates agree.
GridEmbedding schnyder_embed(const PlaneGraph& g);

/// Each neighbor list re-sorted by descending edge slope; a permutation of
/// the rotation. Comparisons are exact integer cross products.
SlopeOrderedAdjacency sort_by_slope(const PlaneGraph& g, const GridEmbedding& e);

/// Outer face of `sub` (coords indexed by sub's vertex ids): starts at the
/// leftmost vertex (ties by smaller y, then id), seeds the trace with its
/// largest-slope edge, then follows rotation-system face tracing. The result
/// is a closed walk; it is a simple cycle whenever the outer face is one.
BoundaryCycle exterior_boundary_walk(const PlaneGraph& sub, const GridEmbedding& e);

struct DrawingCheck {
    bool ok = true;
    std::string problem;
};

/// Exact verification that the drawing is plane: distinct coordinates, no
/// zero-length edges, no improper crossings or overlaps between edges.
DrawingCheck verify_plane_drawing(const PlaneGraph& g, const GridEmbedding& e);

}  // namespace planar
