#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planar {

enum class GraphErrorCode {
    asymmetric_adjacency,
    duplicate_neighbor,
    self_loop,
    outer_face_not_a_face,
    euler_violation,
    not_near_triangulation,
    kernel_not_clique,
    empty_set,
    not_a_triangulation,
    not_biconnected,
    too_small,
    disconnected,
    too_large,
    unknown_fixture,
    parse_error,
    validation_error,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    GraphErrorCode code() const { return code_; }

private:
    GraphErrorCode code_;
};

/// Plane graph given as a rotation system: for every vertex the cyclic
/// clockwise order of its neighbors, plus the traced cycle of the face
/// chosen as the unbounded one. Immutable once built.
struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer_face;

    int degree(int v) const { return static_cast<int>(rotation[v].size()); }

    int num_edges() const {
        std::size_t total = 0;
        for (const auto& r : rotation) total += r.size();
        return static_cast<int>(total / 2);
    }

    bool adjacent(int u, int v) const {
        for (int w : rotation[u])
            if (w == v) return true;
        return false;
    }
};

struct Face {
    std::vector<int> vertices;
    bool is_outer = false;

    int length() const { return static_cast<int>(vertices.size()); }
};

/// Membership flags over 0..n-1.
struct VertexSet {
    std::vector<char> in;
    int count = 0;

    explicit VertexSet(int n = 0) : in(n, 0) {}

    bool contains(int v) const { return in[v] != 0; }

    void add(int v) {
        if (!in[v]) {
            in[v] = 1;
            ++count;
        }
    }
};

/// Successor rule for face tracing: the directed edge following (u -> v)
/// belongs to the same face and leaves v toward the neighbor right after u
/// in v's clockwise rotation.
std::pair<int, int> next_in_face(const PlaneGraph& g, int u, int v);

/// The face cycle containing directed edge (u -> v), starting at u.
std::vector<int> trace_face_from(const PlaneGraph& g, int u, int v);

std::vector<Face> trace_faces(const PlaneGraph& g);

/// True if a and b are the same cyclic sequence traversed in the same
/// direction (b is some rotation of a).
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b);

/// Canonical form of a cycle: rotated to start at the smallest element,
/// direction chosen so the second element is the smaller of the two
/// possible successors. Used to compare holes irrespective of start/direction.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

/// Throws GraphError if the rotation system is not a connected plane graph
/// with the declared outer face. Checks symmetry, self-loops, duplicates,
/// Euler's formula and that outer_face is one of the traced faces.
void validate_plane_graph(const PlaneGraph& g);

PlaneGraph build_plane_graph(int vertex_count,
                             std::vector<std::vector<int>> rotations,
                             std::vector<int> outer_face);

struct NearTriangulationReport {
    bool ok = false;
    std::vector<Face> offending_faces;
};

/// Accepts iff every non-outer face is a triangle.
NearTriangulationReport validate_near_triangulation(const PlaneGraph& g);

/// N[kernel] for a kernel of 1..3 pairwise adjacent vertices.
VertexSet closed_neighborhood(const PlaneGraph& g, const std::vector<int>& kernel);

struct InducedSubgraph {
    PlaneGraph graph;            // outer_face left empty, recomputed downstream
    std::vector<int> parent_ids; // local id -> parent id
};

/// Induced subgraph with rotations inherited in order. Vertices are
/// renumbered densely, preserving the relative order of parent ids.
InducedSubgraph induced_subgraph(const PlaneGraph& g, const VertexSet& s);

/// Connected component of `seed` within the subgraph spanned by `s`.
VertexSet component_of(const PlaneGraph& g, const VertexSet& s, int seed);

/// Deletes one vertex and re-derives the outer face of the remainder: for an
/// interior vertex the vacated region (its link cycle) becomes the outer
/// face; for a vertex of the outer face the old outer region and the link
/// merge into one face.
InducedSubgraph remove_vertex(const PlaneGraph& g, int victim);

}  // namespace planar
