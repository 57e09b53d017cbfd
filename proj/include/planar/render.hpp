#pragma once

#include <string>

#include "planar/checker.hpp"
#include "planar/embedding.hpp"
#include "planar/plane_graph.hpp"

namespace planar {

/// Graphviz export (one-way; rotation order is not representable in DOT).
/// A witness, when given, highlights its kernel and hole.
std::string to_dot(const PlaneGraph& g, const Witness* witness = nullptr);

/// Diagnostic SVG of the straight-line drawing. Hole vertices/edges carry
/// class "hole", kernel vertices class "kernel".
std::string to_svg(const PlaneGraph& g, const GridEmbedding& e, const Witness* witness = nullptr);

}  // namespace planar
