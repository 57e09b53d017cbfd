#include "planar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "planar/decompose.hpp"
#include "planar/embedding.hpp"

namespace planar {

namespace {

struct HoleSearch {
    const std::vector<std::uint32_t>& adj;
    int n;
    std::vector<int> path;
    std::vector<int> best;

    void consider(const std::vector<int>& cycle) {
        auto canon = canonical_cycle(cycle);
        if (best.empty() || canon < best) best = std::move(canon);
    }

    // path holds an induced path p0..pk; forbid = N(p1) | ... | N(p_{k-1}),
    // the neighborhoods of the interior vertices. Neighbors of p0 stay
    // allowed: they are exactly the vertices that can close a chordless
    // cycle.
    void extend(std::uint32_t path_mask, std::uint32_t forbid) {
        int tail = path.back();
        int start = path.front();
        std::uint32_t candidates = adj[tail] & ~path_mask & ~forbid;
        // minimum-vertex canonicalization: never walk below the start vertex
        candidates &= ~((1u << (start + 1)) - 1);
        std::uint32_t next_forbid = path.size() >= 2 ? forbid | adj[tail] : forbid;
        while (candidates) {
            int w = std::countr_zero(candidates);
            candidates &= candidates - 1;
            path.push_back(w);
            bool closes = (adj[w] & (1u << start)) != 0;
            if (path.size() == 2 || !closes) {
                extend(path_mask | (1u << w), next_forbid);
            } else {
                // cycle closes; extending past w would carry the chord w-p0
                std::size_t len = path.size();
                if (len >= 5 && (len % 2) == 1 && path[1] < w) consider(path);
            }
            path.pop_back();
        }
    }
};

OracleResult search(const std::vector<std::uint32_t>& adj, int n) {
    HoleSearch s{adj, n, {}, {}};
    for (int v = 0; v < n; ++v) {
        s.path = {v};
        s.extend(1u << v, 0);
    }
    OracleResult result;
    if (!s.best.empty()) {
        result.hole_found = true;
        result.hole = std::move(s.best);
    }
    return result;
}

}  // namespace

OracleResult find_odd_hole_bruteforce(const std::vector<std::vector<int>>& adjacency, int limit) {
    int n = static_cast<int>(adjacency.size());
    if (n > limit || n > 31)
        throw GraphError(GraphErrorCode::too_large,
                         "brute-force oracle limited to " + std::to_string(std::min(limit, 31)) +
                             " vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : adjacency[v]) adj[v] |= 1u << w;
    return search(adj, n);
}

OracleResult find_odd_hole_bruteforce(const PlaneGraph& g, int limit) {
    return find_odd_hole_bruteforce(g.rotation, limit);
}

namespace {

WitnessCheck fail(const std::string& reason) { return {false, reason}; }

}  // namespace

WitnessCheck verify_witness(const PlaneGraph& g, const Witness& w) {
    const auto& hole = w.hole;
    const auto& kernel = w.kernel.vertices;

    for (int v : kernel)
        if (v < 0 || v >= g.n) return fail("kernel vertex out of range");
    for (int v : hole)
        if (v < 0 || v >= g.n) return fail("hole vertex out of range");

    std::size_t expected = w.kernel.kind == KernelKind::vertex   ? 1
                           : w.kernel.kind == KernelKind::edge   ? 2
                                                                 : 3;
    if (kernel.size() != expected) return fail("kernel size does not match its kind");
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = i + 1; j < kernel.size(); ++j)
            if (!g.adjacent(kernel[i], kernel[j])) return fail("kernel is not a clique");

    if (hole.size() < 5) return fail("hole shorter than 5");
    if (hole.size() % 2 == 0) return fail("hole has even length");

    std::vector<char> on_hole(g.n, 0);
    for (int v : hole) {
        if (on_hole[v]) return fail("hole repeats a vertex");
        on_hole[v] = 1;
    }
    const int len = static_cast<int>(hole.size());
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(hole[i], hole[(i + 1) % len])) return fail("hole is not a cycle");
    for (int v : hole) {
        int inside = 0;
        for (int u : g.rotation[v])
            if (on_hole[u]) ++inside;
        if (inside != 2) return fail("hole has a chord at vertex " + std::to_string(v));
    }

    VertexSet closed(g.n);
    for (int v : kernel) {
        closed.add(v);
        for (int u : g.rotation[v]) closed.add(u);
    }
    for (int v : hole)
        if (!closed.contains(v))
            return fail("hole vertex " + std::to_string(v) + " not in the kernel's neighborhood");

    // Re-derive the boundary walk inside the claimed component.
    auto comps = w_components(g);
    if (w.component_index < 0 || w.component_index >= static_cast<int>(comps.size()))
        return fail("component index out of range");
    const WComponent& comp = comps[w.component_index];

    std::vector<int> local(g.n, -1);
    for (std::size_t i = 0; i < comp.parent_ids.size(); ++i) local[comp.parent_ids[i]] = static_cast<int>(i);
    for (int v : kernel)
        if (local[v] < 0) return fail("kernel not contained in the named component");

    std::vector<int> local_kernel;
    for (int v : kernel) local_kernel.push_back(local[v]);

    PlaneGraph comp_tri = comp.graph;
    bool augmented = false;
    if (static_cast<int>(comp_tri.outer_face.size()) != 3) {
        comp_tri = apex_augment(comp_tri);
        augmented = true;
    }
    GridEmbedding full = schnyder_embed(comp_tri);
    if (augmented) full.coords.resize(comp.graph.n);

    VertexSet neighborhood = closed_neighborhood(comp.graph, local_kernel);
    VertexSet connected = component_of(comp.graph, neighborhood, local_kernel.front());
    InducedSubgraph sub = induced_subgraph(comp.graph, connected);
    if (sub.graph.n < 3) return fail("kernel neighborhood too small for a boundary walk");
    GridEmbedding restricted;
    restricted.coords.reserve(sub.graph.n);
    for (int pid : sub.parent_ids) restricted.coords.push_back(full.coords[pid]);

    BoundaryCycle walked = exterior_boundary_walk(sub.graph, restricted);
    std::vector<int> walked_parent;
    walked_parent.reserve(walked.vertices.size());
    for (int v : walked.vertices) walked_parent.push_back(comp.parent_ids[sub.parent_ids[v]]);

    if (canonical_cycle(walked_parent) != canonical_cycle(hole))
        return fail("hole differs from the boundary walk of the kernel neighborhood");

    return {true, ""};
}

}  // namespace planar
