#include "planar/plane_graph.hpp"

#include <algorithm>
#include <queue>

namespace planar {

namespace {

int position_of(const std::vector<int>& rot, int u) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::pair<int, int> next_in_face(const PlaneGraph& g, int u, int v) {
    const auto& rot = g.rotation[v];
    int pos = position_of(rot, u);
    if (pos < 0)
        throw GraphError(GraphErrorCode::asymmetric_adjacency,
                         "no directed edge (" + std::to_string(u) + " -> " + std::to_string(v) + ")");
    int w = rot[(pos + 1) % rot.size()];
    return {v, w};
}

std::vector<int> trace_face_from(const PlaneGraph& g, int u, int v) {
    std::vector<int> cycle;
    int cu = u, cv = v;
    do {
        cycle.push_back(cu);
        auto [nu, nv] = next_in_face(g, cu, cv);
        cu = nu;
        cv = nv;
    } while (cu != u || cv != v);
    return cycle;
}

std::vector<Face> trace_faces(const PlaneGraph& g) {
    // Slot (v, k) stands for the directed edge v -> rotation[v][k].
    std::vector<int> offset(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + g.degree(v);
    std::vector<char> used(offset[g.n], 0);

    std::vector<Face> faces;
    for (int v = 0; v < g.n; ++v) {
        for (int k = 0; k < g.degree(v); ++k) {
            if (used[offset[v] + k]) continue;
            Face face;
            int cu = v, cpos = k;
            do {
                used[offset[cu] + cpos] = 1;
                face.vertices.push_back(cu);
                int cv = g.rotation[cu][cpos];
                int pos = position_of(g.rotation[cv], cu);
                if (pos < 0)
                    throw GraphError(GraphErrorCode::asymmetric_adjacency,
                                     "no directed edge (" + std::to_string(cu) + " -> " +
                                         std::to_string(cv) + ")");
                int npos = (pos + 1) % g.degree(cv);
                cu = cv;
                cpos = npos;
            } while (!(cu == v && cpos == k));
            face.is_outer = cyclic_equal(face.vertices, g.outer_face);
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t len = a.size();
    for (std::size_t shift = 0; shift < len; ++shift) {
        bool all = true;
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] != b[(i + shift) % len]) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
    if (cycle.empty()) return {};
    const std::size_t len = cycle.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i < len; ++i)
        if (cycle[i] < cycle[start]) start = i;
    std::vector<int> fwd(len), bwd(len);
    for (std::size_t i = 0; i < len; ++i) {
        fwd[i] = cycle[(start + i) % len];
        bwd[i] = cycle[(start + len - i) % len];
    }
    return std::min(fwd, bwd);
}

void validate_plane_graph(const PlaneGraph& g) {
    if (g.n < 0 || static_cast<int>(g.rotation.size()) != g.n)
        throw GraphError(GraphErrorCode::validation_error, "rotation list count does not match n");

    for (int v = 0; v < g.n; ++v) {
        std::vector<char> seen(g.n, 0);
        for (int w : g.rotation[v]) {
            if (w < 0 || w >= g.n)
                throw GraphError(GraphErrorCode::validation_error,
                                 "vertex " + std::to_string(v) + " lists out-of-range neighbor " +
                                     std::to_string(w));
            if (w == v)
                throw GraphError(GraphErrorCode::self_loop,
                                 "vertex " + std::to_string(v) + " lists itself");
            if (seen[w])
                throw GraphError(GraphErrorCode::duplicate_neighbor,
                                 "vertex " + std::to_string(v) + " lists neighbor " +
                                     std::to_string(w) + " twice");
            seen[w] = 1;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        for (int w : g.rotation[v]) {
            if (!g.adjacent(w, v))
                throw GraphError(GraphErrorCode::asymmetric_adjacency,
                                 "edge (" + std::to_string(v) + ", " + std::to_string(w) +
                                     ") missing from rotation of " + std::to_string(w));
        }
    }

    if (g.outer_face.empty())
        throw GraphError(GraphErrorCode::validation_error, "outer face is empty");

    if (g.n == 0) return;

    // Connectivity; Euler's formula below assumes one component.
    std::vector<char> reached(g.n, 0);
    std::queue<int> queue;
    queue.push(0);
    reached[0] = 1;
    int reachable = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.rotation[v]) {
            if (!reached[w]) {
                reached[w] = 1;
                ++reachable;
                queue.push(w);
            }
        }
    }
    if (reachable != g.n)
        throw GraphError(GraphErrorCode::euler_violation,
                         "graph is disconnected (" + std::to_string(reachable) + " of " +
                             std::to_string(g.n) + " vertices reachable)");

    auto faces = trace_faces(g);
    int m = g.num_edges();
    int f = static_cast<int>(faces.size());
    if (g.n - m + f != 2)
        throw GraphError(GraphErrorCode::euler_violation,
                         "n - m + f = " + std::to_string(g.n) + " - " + std::to_string(m) + " + " +
                             std::to_string(f) + " != 2");

    bool found = false;
    for (const auto& face : faces)
        if (face.is_outer) found = true;
    if (!found)
        throw GraphError(GraphErrorCode::outer_face_not_a_face,
                         "declared outer face is not a traced face");
}

PlaneGraph build_plane_graph(int vertex_count,
                             std::vector<std::vector<int>> rotations,
                             std::vector<int> outer_face) {
    PlaneGraph g;
    g.n = vertex_count;
    g.rotation = std::move(rotations);
    g.outer_face = std::move(outer_face);
    validate_plane_graph(g);
    return g;
}

NearTriangulationReport validate_near_triangulation(const PlaneGraph& g) {
    NearTriangulationReport report;
    for (auto& face : trace_faces(g)) {
        if (!face.is_outer && face.length() != 3) report.offending_faces.push_back(face);
    }
    report.ok = report.offending_faces.empty();
    return report;
}

VertexSet closed_neighborhood(const PlaneGraph& g, const std::vector<int>& kernel) {
    if (kernel.empty() || kernel.size() > 3)
        throw GraphError(GraphErrorCode::kernel_not_clique,
                         "kernel must have 1 to 3 vertices");
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = i + 1; j < kernel.size(); ++j)
            if (!g.adjacent(kernel[i], kernel[j]))
                throw GraphError(GraphErrorCode::kernel_not_clique,
                                 "kernel vertices " + std::to_string(kernel[i]) + " and " +
                                     std::to_string(kernel[j]) + " are not adjacent");
    VertexSet set(g.n);
    for (int v : kernel) {
        set.add(v);
        for (int w : g.rotation[v]) set.add(w);
    }
    return set;
}

InducedSubgraph induced_subgraph(const PlaneGraph& g, const VertexSet& s) {
    if (s.count == 0) throw GraphError(GraphErrorCode::empty_set, "induced subgraph of empty set");
    InducedSubgraph sub;
    std::vector<int> local(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (s.contains(v)) {
            local[v] = static_cast<int>(sub.parent_ids.size());
            sub.parent_ids.push_back(v);
        }
    }
    sub.graph.n = s.count;
    sub.graph.rotation.resize(s.count);
    for (int v = 0; v < g.n; ++v) {
        if (local[v] < 0) continue;
        auto& rot = sub.graph.rotation[local[v]];
        rot.reserve(g.rotation[v].size());
        for (int w : g.rotation[v])
            if (local[w] >= 0) rot.push_back(local[w]);
    }
    return sub;
}

InducedSubgraph remove_vertex(const PlaneGraph& g, int victim) {
    bool on_outer = false;
    for (int v : g.outer_face)
        if (v == victim) on_outer = true;

    VertexSet keep(g.n);
    for (int v = 0; v < g.n; ++v)
        if (v != victim) keep.add(v);
    InducedSubgraph sub = induced_subgraph(g, keep);
    auto local = [&](int parent) { return parent < victim ? parent : parent - 1; };

    if (!on_outer) {
        // vacated region becomes the outer face; its cycle is the victim's
        // link, traversed opposite to the rotation
        std::vector<int> cycle;
        for (auto it = g.rotation[victim].rbegin(); it != g.rotation[victim].rend(); ++it)
            cycle.push_back(local(*it));
        if (!cyclic_equal(trace_face_from(sub.graph, cycle[0], cycle[1]), cycle))
            std::reverse(cycle.begin(), cycle.end());
        sub.graph.outer_face = trace_face_from(sub.graph, cycle[0], cycle[1]);
        if (!cyclic_equal(sub.graph.outer_face, cycle))
            throw GraphError(GraphErrorCode::validation_error,
                             "link of removed vertex " + std::to_string(victim) +
                                 " is not a face");
        return sub;
    }
    // old outer region and the victim's faces merge; pick up the merged face
    // from a surviving directed edge of the old outer cycle
    const auto& of = g.outer_face;
    const int len = static_cast<int>(of.size());
    for (int i = 0; i < len; ++i) {
        int a = of[i], b = of[(i + 1) % len];
        if (a == victim || b == victim) continue;
        sub.graph.outer_face = trace_face_from(sub.graph, local(a), local(b));
        return sub;
    }
    throw GraphError(GraphErrorCode::validation_error,
                     "outer face vanished with vertex " + std::to_string(victim));
}

VertexSet component_of(const PlaneGraph& g, const VertexSet& s, int seed) {
    VertexSet comp(g.n);
    if (!s.contains(seed)) return comp;
    std::queue<int> queue;
    queue.push(seed);
    comp.add(seed);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.rotation[v]) {
            if (s.contains(w) && !comp.contains(w)) {
                comp.add(w);
                queue.push(w);
            }
        }
    }
    return comp;
}

}  // namespace planar
