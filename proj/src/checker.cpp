#include "planar/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace planar {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Validates a candidate cycle as an odd hole of the component: simple, odd,
/// length >= 5, chordless, and disjoint from the kernel that produced it.
bool is_odd_hole_of(const PlaneGraph& comp, const std::vector<int>& cycle,
                    const std::vector<int>& kernel) {
    if (cycle.size() < 5 || cycle.size() % 2 == 0) return false;
    std::vector<char> on_cycle(comp.n, 0);
    for (int v : cycle) {
        if (on_cycle[v]) return false;  // walk revisited a cut vertex
        on_cycle[v] = 1;
    }
    for (int v : kernel)
        if (on_cycle[v]) return false;
    for (int v : cycle) {
        int inside = 0;
        for (int w : comp.rotation[v])
            if (on_cycle[w]) ++inside;
        if (inside != 2) return false;  // chord
    }
    return true;
}

/// Boundary walk of the kernel's closed neighborhood, validated as a hole.
/// Returns the cycle in component-local ids.
std::optional<std::vector<int>> neighborhood_hole(const PlaneGraph& comp, const GridEmbedding& e,
                                                  const std::vector<int>& kernel,
                                                  bool skip_whole_component) {
    VertexSet nbhd = closed_neighborhood(comp, kernel);
    if (skip_whole_component && nbhd.count == comp.n) return std::nullopt;
    VertexSet conn = component_of(comp, nbhd, kernel.front());
    InducedSubgraph sub = induced_subgraph(comp, conn);
    if (sub.graph.n < 3) return std::nullopt;

    GridEmbedding restricted;
    restricted.coords.reserve(sub.graph.n);
    for (int pid : sub.parent_ids) restricted.coords.push_back(e.coords[pid]);

    BoundaryCycle walk = exterior_boundary_walk(sub.graph, restricted);
    std::vector<int> cycle;
    cycle.reserve(walk.vertices.size());
    for (int v : walk.vertices) cycle.push_back(sub.parent_ids[v]);

    if (!is_odd_hole_of(comp, cycle, kernel)) return std::nullopt;
    return cycle;
}

Witness make_witness(const WComponent& h, KernelKind kind, const std::vector<int>& kernel_local,
                     const std::vector<int>& hole_local) {
    Witness w;
    w.kernel.kind = kind;
    for (int v : kernel_local) w.kernel.vertices.push_back(h.parent_ids[v]);
    std::sort(w.kernel.vertices.begin(), w.kernel.vertices.end());
    std::vector<int> hole;
    hole.reserve(hole_local.size());
    for (int v : hole_local) hole.push_back(h.parent_ids[v]);
    w.hole = canonical_cycle(hole);
    return w;
}

/// Runs `probe` over 0..count-1 and returns the smallest index that yields a
/// witness, scanning in parallel when jobs > 1. The winner is the canonical
/// (least-index) one no matter how threads interleave.
template <typename Probe>
std::optional<Witness> scan_for_witness(std::size_t count, int jobs, Probe&& probe) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto w = probe(i)) return w;
        return std::nullopt;
    }
    int workers = std::min<std::size_t>(jobs, count);
    std::atomic<std::size_t> bound{count};
    std::vector<std::optional<Witness>> found(workers);
    std::vector<std::size_t> found_at(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < count; i += workers) {
                if (i >= bound.load(std::memory_order_relaxed)) break;
                if (auto w = probe(i)) {
                    found[t] = std::move(w);
                    found_at[t] = i;
                    std::size_t cur = bound.load(std::memory_order_relaxed);
                    while (i < cur && !bound.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    int best = -1;
    for (int t = 0; t < workers; ++t)
        if (found[t] && (best < 0 || found_at[t] < found_at[best])) best = t;
    if (best < 0) return std::nullopt;
    return found[best];
}

std::vector<char> outer_flags(const PlaneGraph& g) {
    std::vector<char> flags(g.n, 0);
    for (int v : g.outer_face) flags[v] = 1;
    return flags;
}

}  // namespace

std::optional<Witness> check_vertex_parity(const WComponent& h) {
    const PlaneGraph& g = h.graph;
    auto on_outer = outer_flags(g);
    for (int v = 0; v < g.n; ++v) {
        if (on_outer[v] || g.degree(v) % 2 == 0) continue;
        // N[v] induces a wheel in a W-component, so the boundary of N[v] is
        // the rotation cycle itself
        const auto& rim = g.rotation[v];
        bool closed = true;
        for (std::size_t i = 0; i < rim.size() && closed; ++i)
            closed = g.adjacent(rim[i], rim[(i + 1) % rim.size()]);
        if (!closed) continue;
        if (!is_odd_hole_of(g, rim, {v})) continue;
        return make_witness(h, KernelKind::vertex, {v}, rim);
    }
    return std::nullopt;
}

std::optional<Witness> edge_neighborhood_check(const WComponent& h, const GridEmbedding& e,
                                               const CheckOptions& options) {
    const PlaneGraph& g = h.graph;
    std::vector<std::array<int, 2>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.rotation[u])
            if (u < v) edges.push_back({u, v});
    std::sort(edges.begin(), edges.end());

    return scan_for_witness(edges.size(), options.jobs, [&](std::size_t i) -> std::optional<Witness> {
        std::vector<int> kernel{edges[i][0], edges[i][1]};
        if (auto hole = neighborhood_hole(g, e, kernel, /*skip_whole_component=*/true))
            return make_witness(h, KernelKind::edge, kernel, *hole);
        return std::nullopt;
    });
}

std::optional<Witness> triangle_neighborhood_check(const WComponent& h, const GridEmbedding& e,
                                                   const CheckOptions& options) {
    const PlaneGraph& g = h.graph;
    std::vector<std::array<int, 3>> faces;
    for (const auto& face : trace_faces(g)) {
        if (face.is_outer || face.length() != 3) continue;
        auto t = face.vertices;
        std::sort(t.begin(), t.end());
        faces.push_back({t[0], t[1], t[2]});
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    return scan_for_witness(faces.size(), options.jobs, [&](std::size_t i) -> std::optional<Witness> {
        std::vector<int> kernel{faces[i][0], faces[i][1], faces[i][2]};
        if (auto hole = neighborhood_hole(g, e, kernel, /*skip_whole_component=*/false))
            return make_witness(h, KernelKind::triangle, kernel, *hole);
        return std::nullopt;
    });
}

Verdict is_perfect(const PlaneGraph& g, const CheckOptions& options) {
    Verdict verdict;
    auto total_start = Clock::now();

    auto stage = Clock::now();
    auto near = validate_near_triangulation(g);
    if (!near.ok)
        throw GraphError(GraphErrorCode::not_near_triangulation,
                         "input has an inner face of length " +
                             std::to_string(near.offending_faces.front().length()));
    verdict.timings.validate_ms = ms_since(stage);

    stage = Clock::now();
    auto comps = w_components(g);
    verdict.timings.decompose_ms = ms_since(stage);

    for (std::size_t idx = 0; idx < comps.size(); ++idx) {
        const WComponent& comp = comps[idx];

        stage = Clock::now();
        std::optional<Witness> witness = check_vertex_parity(comp);
        verdict.timings.vertex_ms += ms_since(stage);

        if (!witness) {
            // coordinates are only needed by the boundary walks of the edge
            // and triangle stages
            stage = Clock::now();
            GridEmbedding embedding;
            if (comp.graph.outer_face.size() == 3) {
                embedding = schnyder_embed(comp.graph);
            } else {
                PlaneGraph augmented = apex_augment(comp.graph);
                embedding = schnyder_embed(augmented);
                embedding.coords.resize(comp.graph.n);
            }
            verdict.timings.embed_ms += ms_since(stage);

            stage = Clock::now();
            witness = edge_neighborhood_check(comp, embedding, options);
            verdict.timings.edge_ms += ms_since(stage);

            if (!witness) {
                stage = Clock::now();
                witness = triangle_neighborhood_check(comp, embedding, options);
                verdict.timings.triangle_ms += ms_since(stage);
            }
        }
        if (witness) {
            witness->component_index = static_cast<int>(idx);
            verdict.status = Status::not_perfect;
            verdict.witness = std::move(witness);
            break;
        }
    }

    verdict.timings.total_ms = ms_since(total_start);
    return verdict;
}

}  // namespace planar
