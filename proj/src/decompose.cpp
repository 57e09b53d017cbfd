#include "planar/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace planar {

namespace {

std::uint64_t triple_key(int n, int a, int b, int c) {
    auto nn = static_cast<std::uint64_t>(n);
    return (static_cast<std::uint64_t>(a) * nn + static_cast<std::uint64_t>(b)) * nn +
           static_cast<std::uint64_t>(c);
}

}  // namespace

std::vector<InducedSubgraph> biconnected_split(const PlaneGraph& g) {
    const int n = g.n;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child(n, 0);
    std::vector<std::array<int, 2>> edge_stack;
    std::vector<std::vector<std::array<int, 2>>> block_edges;

    int timer = 0;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            if (child[v] < g.degree(v)) {
                int w = g.rotation[v][child[v]++];
                if (w == parent[v]) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({v, w});
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) continue;
                int u = stack.back();
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::array<int, 2>> block;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e[0] == u && e[1] == v) break;
                    }
                    block_edges.push_back(std::move(block));
                }
            }
        }
    }

    // map every edge to its block so the block inheriting a stretch of the
    // outer walk can be identified
    std::unordered_map<std::uint64_t, int> block_of_edge;
    auto ekey = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
               static_cast<std::uint64_t>(b);
    };

    std::vector<InducedSubgraph> blocks;
    for (auto& edges : block_edges) {
        if (edges.size() < 2) continue;  // bridges are trivially perfect
        int id = static_cast<int>(blocks.size());
        VertexSet verts(n);
        for (auto& e : edges) {
            verts.add(e[0]);
            verts.add(e[1]);
            block_of_edge[ekey(e[0], e[1])] = id;
        }
        blocks.push_back(induced_subgraph(g, verts));
    }

    if (blocks.size() == 1 && blocks[0].graph.n == g.n) {
        blocks[0].graph.outer_face = g.outer_face;
        return blocks;
    }

    // each block's outer face is the face holding the block's stretch of the
    // original outer walk
    std::vector<int> to_local(n, -1);
    const int olen = static_cast<int>(g.outer_face.size());
    for (int i = 0; i < olen; ++i) {
        int a = g.outer_face[i], b = g.outer_face[(i + 1) % olen];
        auto it = block_of_edge.find(ekey(a, b));
        if (it == block_of_edge.end()) continue;
        auto& block = blocks[it->second];
        if (!block.graph.outer_face.empty()) continue;
        for (std::size_t k = 0; k < block.parent_ids.size(); ++k)
            to_local[block.parent_ids[k]] = static_cast<int>(k);
        block.graph.outer_face = trace_face_from(block.graph, to_local[a], to_local[b]);
    }
    for (const auto& block : blocks)
        if (block.graph.outer_face.empty())
            throw GraphError(GraphErrorCode::validation_error,
                             "block without any outer-walk edge");
    return blocks;
}

PlaneGraph apex_augment(const PlaneGraph& g) {
    const auto& outer = g.outer_face;
    const int k = static_cast<int>(outer.size());
    {
        std::vector<char> seen(g.n, 0);
        for (int v : outer) {
            if (seen[v])
                throw GraphError(GraphErrorCode::not_biconnected,
                                 "outer face revisits vertex " + std::to_string(v) +
                                     "; apex augmentation needs a 2-connected input");
            seen[v] = 1;
        }
    }
    if (k < 3)
        throw GraphError(GraphErrorCode::not_biconnected, "outer cycle shorter than 3");

    PlaneGraph out = g;
    const int apex = g.n;
    out.n = g.n + 1;
    out.rotation.emplace_back(outer.rbegin(), outer.rend());
    for (int i = 0; i < k; ++i) {
        int vi = outer[i];
        int prev = outer[(i + k - 1) % k];
        auto& rot = out.rotation[vi];
        auto it = std::find(rot.begin(), rot.end(), prev);
        if (it == rot.end())
            throw GraphError(GraphErrorCode::not_biconnected, "outer cycle is not a cycle");
        rot.insert(it + 1, apex);
    }
    out.outer_face = {outer[0], apex, outer[k - 1]};
    return out;
}

std::vector<SeparatingTriangle> find_separating_triangles(const PlaneGraph& g) {
    const int n = g.n;
    std::unordered_set<std::uint64_t> face_triples;
    for (const auto& face : trace_faces(g)) {
        if (face.length() != 3)
            throw GraphError(GraphErrorCode::not_a_triangulation,
                             "separating-triangle scan requires a triangulation");
        auto t = face.vertices;
        std::sort(t.begin(), t.end());
        face_triples.insert(triple_key(n, t[0], t[1], t[2]));
    }

    std::vector<SeparatingTriangle> result;
    std::vector<int> stamp(n, -1);
    for (int u = 0; u < n; ++u) {
        for (int v : g.rotation[u]) {
            if (v <= u) continue;
            for (int w : g.rotation[u]) stamp[w] = 1;
            for (int w : g.rotation[v]) {
                if (w > v && stamp[w] == 1 &&
                    !face_triples.count(triple_key(n, u, v, w)))
                    result.push_back({{u, v, w}});
            }
            for (int w : g.rotation[u]) stamp[w] = -1;
        }
    }
    return result;
}

namespace {

struct Part {
    PlaneGraph graph;
    std::vector<int> to_original;  // local id -> original id, apex mapped to -1
};

// Peels W-components off a triangulation by carving out separating-triangle
// interiors, innermost first. Splitting neither creates nor destroys
// separating triangles, and interiors of nested triangles are strictly
// smaller, so sorting the one upfront enumeration by interior size yields a
// valid carving order. The working graph is mutated in place; only the
// vertices of the current triangle ever need their rotations cleaned,
// because interior vertices have no neighbors beyond the triangle.
struct Carver {
    PlaneGraph work;
    std::vector<char> alive;
    std::vector<char> on_outer;
    std::vector<int> stamp;
    int counter = 0;

    explicit Carver(PlaneGraph g) : work(std::move(g)) {
        alive.assign(work.n, 1);
        on_outer.assign(work.n, 0);
        for (int v : work.outer_face) on_outer[v] = 1;
        stamp.assign(work.n, -1);
    }

    int third_vertex(int u, int v) const {
        const auto& rot = work.rotation[v];
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == u) return rot[(i + 1) % rot.size()];
        return -1;
    }

    // Alternating flood fill of both sides of the triangle; the side that
    // exhausts first without touching the outer face is the interior, else
    // the opposite side is finished off. Cost stays proportional to the
    // interior size plus the smaller side.
    std::vector<int> interior_side(int x, int y, int z) {
        int block = counter++, mark_a = counter++, mark_b = counter++;
        stamp[x] = stamp[y] = stamp[z] = block;
        int w1 = third_vertex(x, y), w2 = third_vertex(y, x);
        if (w1 < 0 || w2 < 0 || w1 == w2)
            throw GraphError(GraphErrorCode::validation_error,
                             "triangle is no longer separating");

        std::vector<int> seen_a{w1}, seen_b{w2};
        stamp[w1] = mark_a;
        stamp[w2] = mark_b;
        std::size_t head_a = 0, head_b = 0;
        bool outer_a = on_outer[w1], outer_b = on_outer[w2];

        auto expand = [&](std::vector<int>& seen, std::size_t& head, int mark, bool& outer) {
            int v = seen[head++];
            for (int w : work.rotation[v]) {
                if (stamp[w] >= block) continue;
                stamp[w] = mark;
                outer = outer || on_outer[w];
                seen.push_back(w);
            }
        };
        while (head_a < seen_a.size() && head_b < seen_b.size()) {
            expand(seen_a, head_a, mark_a, outer_a);
            expand(seen_b, head_b, mark_b, outer_b);
        }
        if (head_a >= seen_a.size() && !outer_a) return seen_a;
        if (head_b >= seen_b.size() && !outer_b) return seen_b;
        // the exhausted side holds the outer face: flood the other to the end
        if (head_a >= seen_a.size()) {
            while (head_b < seen_b.size()) expand(seen_b, head_b, mark_b, outer_b);
            if (outer_b)
                throw GraphError(GraphErrorCode::validation_error,
                                 "both triangle sides touch the outer face");
            return seen_b;
        }
        while (head_a < seen_a.size()) expand(seen_a, head_a, mark_a, outer_a);
        if (outer_a)
            throw GraphError(GraphErrorCode::validation_error,
                             "both triangle sides touch the outer face");
        return seen_a;
    }

    // Carves Int(xyz) out of the working graph and returns it, with the
    // triangle, as a standalone part whose outer face is the triangle.
    PlaneGraph carve(int x, int y, int z, std::vector<int>& members) {
        std::vector<int> interior = interior_side(x, y, z);
        members = interior;
        members.push_back(x);
        members.push_back(y);
        members.push_back(z);
        std::sort(members.begin(), members.end());

        int local_mark = counter++;
        std::vector<int> local(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            stamp[members[i]] = local_mark;
            local[i] = static_cast<int>(i);
        }
        auto to_local = [&](int v) {
            return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) -
                                    members.begin());
        };

        PlaneGraph part;
        part.n = static_cast<int>(members.size());
        part.rotation.resize(part.n);
        for (std::size_t i = 0; i < members.size(); ++i) {
            int v = members[i];
            auto& rot = part.rotation[i];
            for (int w : work.rotation[v])
                if (stamp[w] == local_mark) rot.push_back(to_local(w));
        }

        bool found = false;
        std::array<int, 3> want{to_local(x), to_local(y), to_local(z)};
        std::sort(want.begin(), want.end());
        for (const auto& face : trace_faces(part)) {
            if (face.length() != 3) continue;
            auto t = face.vertices;
            std::sort(t.begin(), t.end());
            if (std::equal(t.begin(), t.end(), want.begin())) {
                part.outer_face = face.vertices;
                found = true;
                break;
            }
        }
        if (!found)
            throw GraphError(GraphErrorCode::validation_error,
                             "separating triangle does not bound its interior part");

        for (int v : interior) {
            alive[v] = 0;
            work.rotation[v].clear();
        }
        for (int v : {x, y, z}) {
            auto& rot = work.rotation[v];
            rot.erase(std::remove_if(rot.begin(), rot.end(), [&](int w) { return !alive[w]; }),
                      rot.end());
        }
        return part;
    }

    // What is left after all carves, densely renumbered.
    PlaneGraph remainder(std::vector<int>& members) {
        members.clear();
        for (int v = 0; v < work.n; ++v)
            if (alive[v]) members.push_back(v);
        std::vector<int> to_local(work.n, -1);
        for (std::size_t i = 0; i < members.size(); ++i) to_local[members[i]] = static_cast<int>(i);
        PlaneGraph part;
        part.n = static_cast<int>(members.size());
        part.rotation.resize(part.n);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int w : work.rotation[members[i]]) part.rotation[i].push_back(to_local[w]);
        for (int v : work.outer_face) part.outer_face.push_back(to_local[v]);
        return part;
    }
};

void split_all(Part top, std::vector<Part>& out) {
    auto triangles = find_separating_triangles(top.graph);
    if (triangles.empty()) {
        out.push_back(std::move(top));
        return;
    }

    Carver carver(top.graph);

    struct Plan {
        int interior_size;
        std::array<int, 3> order_key;
        std::array<int, 3> vertices;
    };
    std::vector<Plan> plans;
    plans.reserve(triangles.size());
    {
        // interior sizes in the unmodified graph give the innermost-first order
        Carver probe(top.graph);
        for (const auto& t : triangles) {
            auto [x, y, z] = t.vertices;
            int size = static_cast<int>(probe.interior_side(x, y, z).size());
            std::array<int, 3> key{top.to_original[x], top.to_original[y], top.to_original[z]};
            std::sort(key.begin(), key.end());
            plans.push_back({size, key, t.vertices});
        }
    }
    std::sort(plans.begin(), plans.end(), [](const Plan& a, const Plan& b) {
        if (a.interior_size != b.interior_size) return a.interior_size < b.interior_size;
        return a.order_key < b.order_key;
    });

    for (const auto& plan : plans) {
        Part part;
        std::vector<int> members;
        part.graph = carver.carve(plan.vertices[0], plan.vertices[1], plan.vertices[2], members);
        part.to_original.reserve(members.size());
        for (int v : members) part.to_original.push_back(top.to_original[v]);
        out.push_back(std::move(part));
    }

    Part rest;
    std::vector<int> members;
    rest.graph = carver.remainder(members);
    rest.to_original.reserve(members.size());
    for (int v : members) rest.to_original.push_back(top.to_original[v]);
    out.push_back(std::move(rest));
}

}  // namespace

std::vector<WComponent> w_components(const PlaneGraph& g) {
    auto near = validate_near_triangulation(g);
    if (!near.ok)
        throw GraphError(GraphErrorCode::not_near_triangulation,
                         "inner face of length " +
                             std::to_string(near.offending_faces.front().length()) +
                             " found; input is not a near-triangulation");

    std::vector<WComponent> components;
    for (auto& block : biconnected_split(g)) {
        Part top;
        if (block.graph.outer_face.size() == 3) {
            top.graph = std::move(block.graph);
            top.to_original = block.parent_ids;
        } else {
            top.graph = apex_augment(block.graph);
            top.to_original = block.parent_ids;
            top.to_original.push_back(-1);
        }
        std::vector<Part> parts;
        split_all(std::move(top), parts);

        for (auto& part : parts) {
            WComponent comp;
            int apex_local = -1;
            for (std::size_t i = 0; i < part.to_original.size(); ++i)
                if (part.to_original[i] == -1) apex_local = static_cast<int>(i);
            if (apex_local >= 0) {
                InducedSubgraph reduced = remove_vertex(part.graph, apex_local);
                comp.graph = std::move(reduced.graph);
                comp.parent_ids.reserve(reduced.parent_ids.size());
                for (int pid : reduced.parent_ids)
                    comp.parent_ids.push_back(part.to_original[pid]);
                comp.apex_removed = true;
            } else {
                comp.graph = std::move(part.graph);
                comp.parent_ids = std::move(part.to_original);
            }
            validate_plane_graph(comp.graph);
            components.push_back(std::move(comp));
        }
    }

    std::sort(components.begin(), components.end(), [](const WComponent& a, const WComponent& b) {
        auto sa = a.parent_ids, sb = b.parent_ids;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa < sb;
    });
    return components;
}

}  // namespace planar
