#include "planar/generator.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace planar {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // modulo is biased but deterministic across platforms, which is what matters here
    int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
};

PlaneGraph k4() {
    return build_plane_graph(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}}, {0, 1, 2});
}

PlaneGraph w5() {
    std::vector<std::vector<int>> rot(6);
    for (int i = 0; i < 5; ++i) rot[i] = {5, (i + 1) % 5, (i + 4) % 5};
    rot[5] = {4, 3, 2, 1, 0};
    return build_plane_graph(6, std::move(rot), {0, 4, 3, 2, 1});
}

PlaneGraph octahedron() {
    return build_plane_graph(6,
                             {{2, 3, 4, 1},
                              {0, 4, 5, 2},
                              {1, 5, 3, 0},
                              {0, 2, 5, 4},
                              {1, 0, 3, 5},
                              {1, 4, 3, 2}},
                             {0, 2, 1});
}

PlaneGraph stacked_k4() {
    return build_plane_graph(
        5, {{1, 3, 2}, {2, 4, 3, 0}, {0, 3, 4, 1}, {2, 0, 1, 4}, {2, 3, 1}}, {0, 1, 2});
}

PlaneGraph pentagon_fan() {
    return build_plane_graph(5, {{1, 2, 3, 4}, {0, 2}, {0, 1, 3}, {4, 0, 2}, {0, 3}},
                             {0, 1, 2, 3, 4});
}

// 7-rim c0..c6 = ids 0..6, inner triangle x=7, y=8, z=9;
// x covers rim arc {c0,c1}, y covers {c1..c4}, z covers {c4..c6,c0}.
PlaneGraph triforce7() {
    return build_plane_graph(10,
                             {{6, 9, 7, 1},
                              {7, 8, 2, 0},
                              {8, 3, 1},
                              {2, 8, 4},
                              {3, 8, 9, 5},
                              {4, 9, 6},
                              {5, 9, 0},
                              {9, 8, 1, 0},
                              {4, 3, 2, 1, 7, 9},
                              {5, 4, 8, 7, 0, 6}},
                             {0, 6, 5, 4, 3, 2, 1});
}

// 5-rim c0..c4 = ids 0..4, inner triangle x=5, y=6, z=7;
// arcs {c0,c1}, {c1,c2}, {c2,c3,c4,c0} keep all internal degrees even.
PlaneGraph triforce5() {
    return build_plane_graph(8,
                             {{4, 7, 5, 1},
                              {6, 2, 0, 5},
                              {1, 6, 7, 3},
                              {2, 7, 4},
                              {3, 7, 0},
                              {7, 6, 1, 0},
                              {2, 1, 5, 7},
                              {3, 2, 6, 5, 0, 4}},
                             {0, 4, 3, 2, 1});
}

PlaneGraph fig9_like();  // defined below, frozen from a seeded search

// Splits face (a,b,c) of a triangulation with a fresh vertex adjacent to all
// three. `faces` holds directed inner-face triples and is kept in sync.
void split_face(std::vector<std::vector<int>>& rot, std::vector<std::array<int, 3>>& faces,
                int face_index) {
    auto [a, b, c] = faces[face_index];
    int w = static_cast<int>(rot.size());
    rot.push_back({c, b, a});
    auto insert_after = [&](int vertex, int prev, int added) {
        auto& r = rot[vertex];
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == prev) {
                r.insert(r.begin() + static_cast<long>(i) + 1, added);
                return;
            }
        }
    };
    insert_after(a, c, w);
    insert_after(b, a, w);
    insert_after(c, b, w);
    faces[face_index] = {a, b, w};
    faces.push_back({b, c, w});
    faces.push_back({c, a, w});
}

int succ_in_rotation(const std::vector<std::vector<int>>& rot, int of, int around) {
    const auto& r = rot[around];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == of) return r[(i + 1) % r.size()];
    return -1;
}

bool lists(const std::vector<int>& r, int v) {
    return std::find(r.begin(), r.end(), v) != r.end();
}

// Flips inner edge (u,v) to the opposite diagonal (p,q) when legal.
bool try_flip(std::vector<std::vector<int>>& rot, const std::vector<int>& outer, int u, int v) {
    int p = succ_in_rotation(rot, u, v);  // face u -> v -> p
    int q = succ_in_rotation(rot, v, u);  // face v -> u -> q
    if (p < 0 || q < 0 || p == q) return false;
    if (rot[u].size() <= 3 || rot[v].size() <= 3) return false;
    if (lists(rot[p], q)) return false;
    if (cyclic_equal({u, v, p}, outer) || cyclic_equal({v, u, q}, outer)) return false;

    auto remove_from = [&](int vertex, int gone) {
        auto& r = rot[vertex];
        r.erase(std::find(r.begin(), r.end(), gone));
    };
    auto insert_after = [&](int vertex, int prev, int added) {
        auto& r = rot[vertex];
        auto it = std::find(r.begin(), r.end(), prev);
        r.insert(it + 1, added);
    };
    remove_from(u, v);
    remove_from(v, u);
    insert_after(p, v, q);
    insert_after(q, u, p);
    return true;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"k4",          "w5",        "octahedron", "stackedK4",
            "pentagon_fan", "triforce5", "triforce7",  "fig9_like"};
}

PlaneGraph named_fixture(const std::string& name) {
    if (name == "k4") return k4();
    if (name == "w5") return w5();
    if (name == "octahedron") return octahedron();
    if (name == "stackedK4") return stacked_k4();
    if (name == "pentagon_fan") return pentagon_fan();
    if (name == "triforce5") return triforce5();
    if (name == "triforce7") return triforce7();
    if (name == "fig9_like") return fig9_like();
    throw GraphError(GraphErrorCode::unknown_fixture, "unknown fixture: " + name);
}

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
    if (n < 4)
        throw GraphError(GraphErrorCode::too_small, "random triangulation needs n >= 4");
    SplitMix64 rng(seed);
    PlaneGraph base = k4();
    std::vector<std::vector<int>> rot = base.rotation;
    std::vector<std::array<int, 3>> faces = {{0, 3, 1}, {1, 3, 2}, {0, 2, 3}};

    while (static_cast<int>(rot.size()) < n) split_face(rot, faces, rng.below(static_cast<int>(faces.size())));

    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : rot[v])
            if (v < w) edges.push_back({v, w});

    // enough flips to walk away from the stacked 3-tree shape
    int attempts = 3 * static_cast<int>(edges.size());
    for (int i = 0; i < attempts; ++i) {
        auto& e = edges[rng.below(static_cast<int>(edges.size()))];
        int u = e[0], v = e[1];
        int p = succ_in_rotation(rot, u, v);
        int q = succ_in_rotation(rot, v, u);
        if (try_flip(rot, base.outer_face, u, v)) e = {std::min(p, q), std::max(p, q)};
    }

    return build_plane_graph(n, std::move(rot), base.outer_face);
}

PlaneGraph random_near_triangulation(int n, std::uint64_t seed) {
    if (n < 4)
        throw GraphError(GraphErrorCode::too_small, "random near-triangulation needs n >= 4");
    SplitMix64 rng(seed);
    int removals = rng.below(3);
    PlaneGraph g = random_triangulation(n + removals, rng.next());

    for (int r = 0; r < removals; ++r) {
        bool is_triangulation = g.outer_face.size() == 3;
        std::vector<int> candidates;
        if (is_triangulation) {
            for (int v = 0; v < g.n; ++v) candidates.push_back(v);
        } else {
            // keep a single non-triangular face: only peel the outer boundary
            candidates.assign(g.outer_face.begin(), g.outer_face.end());
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        }
        int offset = rng.below(static_cast<int>(candidates.size()));
        bool removed = false;
        for (std::size_t i = 0; i < candidates.size() && !removed; ++i) {
            int victim = candidates[(offset + i) % candidates.size()];
            try {
                PlaneGraph next = remove_vertex(g, victim).graph;
                validate_plane_graph(next);
                if (!validate_near_triangulation(next).ok) continue;
                g = std::move(next);
                removed = true;
            } catch (const GraphError&) {
                // deleting this vertex disconnects the graph; try another
            }
        }
        if (!removed) break;
    }
    return g;
}

PlaneGraph generate(const GenSpec& spec) {
    if (spec.kind == "random") return random_triangulation(spec.n, spec.seed);
    if (spec.kind == "random-near") return random_near_triangulation(spec.n, spec.seed);
    return named_fixture(spec.kind);
}

namespace {

// Even W-near-triangulation on which the boundary walk finds an odd hole
// while the induced-neighbor-set shortcut finds none for any vertex, edge or
// face kernel. Structure: edge 0-1 whose top pole 2 is tucked away inside
// N[{0,1}] together with the chain 4, 5 under a fan of caps from 9; the
// chordless pentagon 3 7 8 9 6 is both the boundary of that neighborhood
// and the outer face. All six internal vertices have even degree.
PlaneGraph fig9_like() {
    return build_plane_graph(10,
                             {{1, 3, 6, 5, 4, 2},
                              {0, 2, 9, 8, 7, 3},
                              {0, 4, 9, 1},
                              {0, 1, 7, 6},
                              {0, 5, 9, 2},
                              {0, 6, 9, 4},
                              {0, 3, 9, 5},
                              {1, 8, 3},
                              {1, 9, 7},
                              {1, 2, 4, 5, 6, 8}},
                             {9, 8, 7, 3, 6});
}

}  // namespace

}  // namespace planar
