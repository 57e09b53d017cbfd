#pragma once

// Brute-force oracles shared by the unit and acceptance suites. Everything
// here works from plain adjacency (plus raw coordinates for the geometric
// walk) and stays independent of the library's rotation-trace machinery.

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

#include "planar/embedding.hpp"
#include "planar/plane_graph.hpp"

namespace support {

inline std::vector<std::set<int>> adjacency_sets(const planar::PlaneGraph& g) {
    std::vector<std::set<int>> adj(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.rotation[v]) adj[v].insert(w);
    return adj;
}

inline bool connected_without(const planar::PlaneGraph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.n, 0);
    for (int v : removed) gone[v] = 1;
    int start = -1, expect = 0;
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) {
            if (start < 0) start = v;
            ++expect;
        }
    if (start < 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.rotation[v])
            if (!gone[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == expect;
}

inline bool has_cut_vertex(const planar::PlaneGraph& g) {
    for (int v = 0; v < g.n; ++v)
        if (!connected_without(g, {v})) return true;
    return false;
}

/// An edge separator: two adjacent vertices whose joint removal disconnects.
inline bool has_edge_separator(const planar::PlaneGraph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.rotation[u])
            if (u < v && !connected_without(g, {u, v})) return true;
    return false;
}

/// A separating triangle probe: a pairwise-adjacent triple whose removal
/// disconnects the graph.
inline bool has_separating_triple(const planar::PlaneGraph& g) {
    auto adj = adjacency_sets(g);
    for (int u = 0; u < g.n; ++u)
        for (int v : adj[u]) {
            if (v <= u) continue;
            for (int w : adj[v]) {
                if (w <= v || !adj[u].count(w)) continue;
                if (!connected_without(g, {u, v, w})) return true;
            }
        }
    return false;
}

/// Every chordless odd cycle of length >= 5, as canonical vertex sequences.
/// Plain recursive enumeration, usable up to n ~ 16.
inline std::vector<std::vector<int>> all_odd_holes(const planar::PlaneGraph& g) {
    auto adj = adjacency_sets(g);
    std::set<std::vector<int>> found;
    std::vector<int> path;

    auto chordless_extension = [&](int w) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (i > 0 && adj[path[i]].count(w)) return false;
        return true;
    };
    std::function<void()> grow = [&]() {
        int tail = path.back(), start = path.front();
        for (int w : adj[tail]) {
            if (w <= start) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (!chordless_extension(w)) continue;
            path.push_back(w);
            if (path.size() >= 3 && adj[w].count(start)) {
                if (path.size() >= 5 && path.size() % 2 == 1)
                    found.insert(planar::canonical_cycle(path));
            } else {
                grow();
            }
            path.pop_back();
        }
    };
    for (int s = 0; s < g.n; ++s) {
        path = {s};
        grow();
    }
    return {found.begin(), found.end()};
}

/// The test-only shortcut the boundary walk replaces: does the open
/// neighbor set of the kernel induce exactly a chordless odd cycle (>= 5)?
inline bool neighbor_set_induces_odd_hole(const planar::PlaneGraph& g,
                                          const std::vector<int>& kernel) {
    std::vector<char> in_kernel(g.n, 0), in_set(g.n, 0);
    for (int v : kernel) in_kernel[v] = 1;
    std::vector<int> set;
    for (int v : kernel)
        for (int w : g.rotation[v])
            if (!in_kernel[w] && !in_set[w]) {
                in_set[w] = 1;
                set.push_back(w);
            }
    if (set.size() < 5 || set.size() % 2 == 0) return false;
    // the induced subgraph must be 2-regular and a single cycle
    for (int v : set) {
        int deg = 0;
        for (int w : g.rotation[v])
            if (in_set[w]) ++deg;
        if (deg != 2) return false;
    }
    std::vector<char> seen(g.n, 0);
    int count = 0, cur = set.front(), prev = -1;
    while (!seen[cur]) {
        seen[cur] = 1;
        ++count;
        int next = -1;
        for (int w : g.rotation[cur])
            if (in_set[w] && w != prev && !seen[w]) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
    }
    return count == static_cast<int>(set.size());
}

/// Geometric gift-wrap walk of the outer face, driven purely by coordinates
/// and adjacency: starts at the leftmost vertex, first step along the
/// steepest edge, then always takes the sharpest clockwise turn available.
/// Cross-checks the rotation-trace walk.
inline std::vector<int> geometric_outer_face(const planar::PlaneGraph& g,
                                             const planar::GridEmbedding& e) {
    using planar::GridPoint;
    int l = 0;
    for (int v = 1; v < g.n; ++v) {
        const auto &p = e.coords[v], &q = e.coords[l];
        if (p.x < q.x || (p.x == q.x && (p.y < q.y || (p.y == q.y && v < l)))) l = v;
    }
    auto dir = [&](int from, int to) {
        return GridPoint{e.coords[to].x - e.coords[from].x, e.coords[to].y - e.coords[from].y};
    };
    int first = -1;
    for (int w : g.rotation[l])
        if (first < 0 || planar::slope_greater(dir(l, w), dir(l, first))) first = w;

    // angle of d measured clockwise from `ref`, in (0, 2pi]; pick the smallest
    auto cw_less = [&](const GridPoint& ref, const GridPoint& a, const GridPoint& b) {
        auto half = [&](const GridPoint& d) {
            long long c = planar::cross(ref, d);
            if (c < 0) return 0;  // strictly clockwise side
            if (c > 0) return 2;
            long long dot = static_cast<long long>(ref.x) * d.x +
                            static_cast<long long>(ref.y) * d.y;
            return dot < 0 ? 1 : 3;  // opposite first, same direction last
        };
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return planar::cross(a, b) < 0;
    };

    // stops at the first return to l, which is all the simple-outer-face
    // comparisons in the tests need
    std::vector<int> cycle{l};
    const std::size_t step_limit = 4 * static_cast<std::size_t>(g.num_edges()) + 8;
    int prev = l, cur = first;
    while (cur != l && cycle.size() <= step_limit) {
        cycle.push_back(cur);
        GridPoint back = dir(cur, prev);
        int next = -1;
        for (int w : g.rotation[cur]) {
            if (w == prev) continue;
            if (next < 0 || cw_less(back, dir(cur, w), dir(cur, next))) next = w;
        }
        if (next < 0) next = prev;  // dead end: bounce back
        prev = cur;
        cur = next;
    }
    return cycle;
}

}  // namespace support
