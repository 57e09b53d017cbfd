#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planar/checker.hpp"
#include "planar/decompose.hpp"
#include "planar/embedding.hpp"
#include "planar/oracle.hpp"

namespace planar {

struct GraphDocument {
    int format_version = 1;
    PlaneGraph graph;
    std::optional<GridEmbedding> coords;
};

/// Parses and fully validates a graph document. Malformed JSON raises
/// GraphErrorCode::parse_error (with the position the parser reports);
/// structural problems raise validation errors naming the offender. Supplied
/// coordinates are checked to be a plane straight-line drawing.
GraphDocument parse_graph(const std::string& text);

std::string emit_graph(const PlaneGraph& g, const GridEmbedding* coords = nullptr);

std::string emit_verdict(const Verdict& v);
Verdict parse_verdict(const std::string& text);

std::string emit_components(const std::vector<WComponent>& comps);
std::string emit_oracle(const OracleResult& r);

}  // namespace planar
