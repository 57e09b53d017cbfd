#pragma once

#include <optional>
#include <vector>

#include "planar/decompose.hpp"
#include "planar/embedding.hpp"
#include "planar/plane_graph.hpp"

namespace planar {

enum class KernelKind { vertex, edge, triangle };

struct Kernel {
    KernelKind kind = KernelKind::vertex;
    std::vector<int> vertices;  // 1 to 3 pairwise adjacent vertices
};

/// A self-certifying non-perfectness certificate: the odd hole is the
/// exterior boundary of the kernel's closed neighborhood inside the
/// component, reported in the ids of the original graph.
struct Witness {
    Kernel kernel;
    std::vector<int> hole;  // canonical cycle form, parent ids
    int component_index = -1;
};

enum class Status { perfect, not_perfect };

struct StageTimings {
    double validate_ms = 0;
    double decompose_ms = 0;
    double embed_ms = 0;
    double vertex_ms = 0;
    double edge_ms = 0;
    double triangle_ms = 0;
    double total_ms = 0;
};

struct Verdict {
    Status status = Status::perfect;
    std::optional<Witness> witness;
    StageTimings timings;
};

struct CheckOptions {
    int jobs = 1;
};

/// Scans internal (non-boundary) vertices in ascending id order for odd
/// degree; the rim of such a vertex's wheel is the hole.
std::optional<Witness> check_vertex_parity(const WComponent& h);

/// Walks the exterior boundary of N[uv] for every edge in lexicographic
/// order. An edge whose closed neighborhood spans the whole component is
/// skipped: its boundary is the component's own outer face and the adjacent
/// facial triangle reports it instead.
std::optional<Witness> edge_neighborhood_check(const WComponent& h, const GridEmbedding& e,
                                               const CheckOptions& options = {});

/// Same walk for N[uvw] over every inner triangular face in lexicographic
/// order.
std::optional<Witness> triangle_neighborhood_check(const WComponent& h, const GridEmbedding& e,
                                                   const CheckOptions& options = {});

/// The full decision procedure: decompose into W-components, embed each,
/// run the vertex / edge / triangle stages in order, return the first
/// witness in canonical order or Perfect.
Verdict is_perfect(const PlaneGraph& g, const CheckOptions& options = {});

}  // namespace planar
