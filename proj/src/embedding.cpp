#include "planar/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <unordered_map>

namespace planar {

long long cross(const GridPoint& a, const GridPoint& b) {
    return static_cast<long long>(a.x) * b.y - static_cast<long long>(a.y) * b.x;
}

bool slope_greater(const GridPoint& d1, const GridPoint& d2) {
    bool v1 = d1.x == 0, v2 = d2.x == 0;
    if (v1 && v2) return d1.y > 0 && d2.y < 0;  // straight up precedes straight down
    if (v1) return true;                        // verticals precede every finite slope
    if (v2) return false;
    long long lhs = static_cast<long long>(d1.y) * d2.x;
    long long rhs = static_cast<long long>(d2.y) * d1.x;
    if (lhs != rhs) {
        bool same_side = (d1.x > 0) == (d2.x > 0);
        return same_side ? lhs > rhs : lhs < rhs;
    }
    // equal slope: opposite directions split by sign, rightward first
    return d1.x > 0 && d2.x < 0;
}

namespace {

int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
    long long v = cross({b.x - a.x, b.y - a.y}, {c.x - a.x, c.y - a.y});
    return v > 0 ? 1 : v < 0 ? -1 : 0;
}

bool on_segment(const GridPoint& a, const GridPoint& b, const GridPoint& p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// ---------------------------------------------------------------------------
// Schnyder realizer via a canonical vertex ordering.
//
// The triangulation is peeled from the outside: at every step a boundary
// vertex with no chord to the rest of the boundary is removed and its
// interior neighbors are exposed. Removing vk with boundary predecessor p
// and successor s assigns vk's outgoing tree edges (toward outer[0] via s,
// toward outer[1] via p) and gives every exposed vertex its outgoing edge
// toward outer[2].
// ---------------------------------------------------------------------------

struct Realizer {
    std::array<int, 3> root;
    std::array<std::vector<int>, 3> out;  // out[t][v]: parent of v in tree t, -1 at roots
};

Realizer build_realizer(const PlaneGraph& g) {
    const int n = g.n;
    Realizer r;
    r.root = {g.outer_face[0], g.outer_face[1], g.outer_face[2]};
    for (auto& tree : r.out) tree.assign(n, -1);

    std::vector<char> alive(n, 1), on_boundary(n, 0);
    std::vector<int> next_b(n, -1), prev_b(n, -1), chords(n, 0), batch(n, -1);
    std::set<int> candidates;

    for (int i = 0; i < 3; ++i) {
        int u = g.outer_face[i], v = g.outer_face[(i + 1) % 3];
        next_b[u] = v;
        prev_b[v] = u;
        on_boundary[u] = 1;
    }
    candidates.insert(r.root[2]);

    int alive_count = n;
    int step = 0;
    while (alive_count > 2) {
        if (candidates.empty())
            throw GraphError(GraphErrorCode::not_a_triangulation,
                             "canonical ordering stalled; input is not a plane triangulation");
        int vk = *candidates.begin();
        candidates.erase(candidates.begin());
        int p = prev_b[vk], s = next_b[vk];

        std::vector<int> ring;
        for (int w : g.rotation[vk])
            if (alive[w]) ring.push_back(w);
        auto pit = std::find(ring.begin(), ring.end(), p);
        std::rotate(ring.begin(), pit, ring.end());
        if (ring.size() < 2 || ring[0] != p || ring[1] != s)
            throw GraphError(GraphErrorCode::not_a_triangulation,
                             "boundary neighbors out of rotation order at vertex " +
                                 std::to_string(vk));

        r.out[0][vk] = s;
        r.out[1][vk] = p;

        alive[vk] = 0;
        on_boundary[vk] = 0;
        --alive_count;

        // exposed interior neighbors, in rotation order from the s side
        std::vector<int> mid(ring.begin() + 2, ring.end());
        for (int x : mid) {
            if (on_boundary[x])
                throw GraphError(GraphErrorCode::not_a_triangulation,
                                 "chord at supposedly chord-free vertex " + std::to_string(vk));
            on_boundary[x] = 1;
            batch[x] = step;
            r.out[2][x] = vk;
        }
        // new boundary path p -> mid(reversed) -> s
        int prev = p;
        for (auto it = mid.rbegin(); it != mid.rend(); ++it) {
            next_b[prev] = *it;
            prev_b[*it] = prev;
            prev = *it;
        }
        next_b[prev] = s;
        prev_b[s] = prev;

        if (mid.empty()) {
            // p and s are now consecutive on the boundary, so the edge
            // between them stops being a chord
            for (int w : {p, s}) {
                --chords[w];
                if (chords[w] == 0 && w != r.root[0] && w != r.root[1]) candidates.insert(w);
            }
        }

        for (int x : mid) {
            int own = 0;
            for (int w : g.rotation[x]) {
                if (!alive[w] || !on_boundary[w]) continue;
                if (w == prev_b[x] || w == next_b[x]) continue;
                ++own;
                if (batch[w] != step) {
                    if (chords[w] == 0) candidates.erase(w);
                    ++chords[w];
                }
            }
            chords[x] = own;
        }
        for (int x : mid)
            if (chords[x] == 0 && x != r.root[0] && x != r.root[1]) candidates.insert(x);
        ++step;
    }
    return r;
}

// Face incidence structure used by the region flood fills.
struct FaceIndex {
    std::vector<int> offset;          // directed-edge slot base per vertex
    std::vector<int> slot_tail;       // slot -> tail vertex u of the edge (u->v)
    std::vector<int> face_of_slot;    // slot -> face id
    std::vector<int> reverse_slot;    // slot of (u->v) -> slot of (v->u)
    std::vector<std::vector<int>> face_vertices;
    std::vector<std::vector<int>> face_slots;
    int outer_face_id = -1;
};

FaceIndex build_face_index(const PlaneGraph& g) {
    FaceIndex fi;
    const int n = g.n;
    fi.offset.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) fi.offset[v + 1] = fi.offset[v] + g.degree(v);
    const int slots = fi.offset[n];
    fi.slot_tail.assign(slots, -1);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < g.degree(v); ++k) fi.slot_tail[fi.offset[v] + k] = v;
    fi.face_of_slot.assign(slots, -1);
    fi.reverse_slot.assign(slots, -1);

    std::unordered_map<std::uint64_t, int> slot_of;
    slot_of.reserve(static_cast<std::size_t>(slots) * 2);
    auto key = [n](int u, int v) {
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
    };
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < g.degree(v); ++k) slot_of[key(v, g.rotation[v][k])] = fi.offset[v] + k;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < g.degree(v); ++k)
            fi.reverse_slot[fi.offset[v] + k] = slot_of[key(g.rotation[v][k], v)];

    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < g.degree(v); ++k) {
            if (fi.face_of_slot[fi.offset[v] + k] >= 0) continue;
            int id = static_cast<int>(fi.face_vertices.size());
            fi.face_vertices.emplace_back();
            fi.face_slots.emplace_back();
            int cu = v, cpos = k;
            do {
                int cslot = fi.offset[cu] + cpos;
                fi.face_of_slot[cslot] = id;
                fi.face_vertices[id].push_back(cu);
                fi.face_slots[id].push_back(cslot);
                int cv = g.rotation[cu][cpos];
                int back = fi.reverse_slot[cslot] - fi.offset[cv];
                cpos = (back + 1) % g.degree(cv);
                cu = cv;
            } while (!(cu == v && cpos == k));
            if (fi.outer_face_id < 0 && cyclic_equal(fi.face_vertices[id], g.outer_face))
                fi.outer_face_id = id;
        }
    }
    return fi;
}

// Region sizes around one interior vertex: for each tree t, the number of
// vertices in the region opposite root t, not counting the path P_{t+2}.
struct RegionCounter {
    const PlaneGraph& g;
    const Realizer& r;
    const FaceIndex& fi;

    std::vector<int> path_pos[3];
    std::vector<int> path_epoch[3];
    std::vector<int> face_epoch;
    std::vector<int> vert_epoch;
    int epoch = 0;
    std::vector<int> paths[3];
    std::vector<int> stack;

    explicit RegionCounter(const PlaneGraph& graph, const Realizer& real, const FaceIndex& faces)
        : g(graph), r(real), fi(faces) {
        for (int t = 0; t < 3; ++t) {
            path_pos[t].assign(g.n, 0);
            path_epoch[t].assign(g.n, -1);
        }
        face_epoch.assign(fi.face_vertices.size(), -1);
        vert_epoch.assign(g.n, -1);
    }

    bool on_path(int t, int v) const { return path_epoch[t][v] == epoch; }

    bool blocked(int t, int u, int v) const {
        int ta = (t + 1) % 3, tb = (t + 2) % 3;
        if (on_path(ta, u) && on_path(ta, v) &&
            std::abs(path_pos[ta][u] - path_pos[ta][v]) == 1)
            return true;
        if (on_path(tb, u) && on_path(tb, v) &&
            std::abs(path_pos[tb][u] - path_pos[tb][v]) == 1)
            return true;
        int ra = r.root[ta], rb = r.root[tb];
        return (u == ra && v == rb) || (u == rb && v == ra);
    }

    void stamp_paths() {
        for (int t = 0; t < 3; ++t) {
            for (std::size_t idx = 0; idx < paths[t].size(); ++idx) {
                path_epoch[t][paths[t][idx]] = epoch;
                path_pos[t][paths[t][idx]] = static_cast<int>(idx);
            }
        }
    }

    std::array<int, 3> count(int v) {
        for (int t = 0; t < 3; ++t) {
            paths[t].clear();
            int cur = v;
            while (cur != -1) {
                paths[t].push_back(cur);
                cur = r.out[t][cur];
            }
            if (paths[t].back() != r.root[t])
                throw GraphError(GraphErrorCode::not_a_triangulation,
                                 "realizer path does not reach its root");
        }

        std::array<int, 3> eta{};
        const auto& rot = g.rotation[v];
        const int deg = static_cast<int>(rot.size());
        auto pos_of = [&](int w) {
            for (int k = 0; k < deg; ++k)
                if (rot[k] == w) return k;
            return -1;
        };

        for (int t = 0; t < 3; ++t) {
            ++epoch;  // fresh face/vertex stamps per region
            stamp_paths();

            int ta = (t + 1) % 3, tb = (t + 2) % 3;
            int from = r.out[ta][v], to = r.out[tb][v], avoid = r.out[t][v];

            // walk the rotation arc between the two bounding tree edges on
            // the side away from out_t; the faces in the arc's corners seed
            // the flood
            auto arc_faces = [&](int lo, int hi) {
                std::vector<int> seeds;
                int k = pos_of(lo);
                while (rot[k] != hi) {
                    k = (k + 1) % deg;
                    seeds.push_back(fi.face_of_slot[fi.offset[v] + k]);
                }
                return seeds;
            };
            bool forward_clean = true;
            for (int k = pos_of(from); rot[k] != to;) {
                k = (k + 1) % deg;
                if (rot[k] == avoid) {
                    forward_clean = false;
                    break;
                }
            }
            std::vector<int> seeds = forward_clean ? arc_faces(from, to) : arc_faces(to, from);

            int strict = 0;
            stack.clear();
            for (int f : seeds) {
                if (face_epoch[f] == epoch) continue;
                face_epoch[f] = epoch;
                stack.push_back(f);
            }
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                if (f == fi.outer_face_id)
                    throw GraphError(GraphErrorCode::not_a_triangulation,
                                     "region flood escaped to the outer face");
                for (int u : fi.face_vertices[f]) {
                    if (vert_epoch[u] != epoch && !on_path(0, u) && !on_path(1, u) &&
                        !on_path(2, u)) {
                        vert_epoch[u] = epoch;
                        ++strict;
                    }
                }
                for (int slot : fi.face_slots[f]) {
                    int rev = fi.reverse_slot[slot];
                    int nf = fi.face_of_slot[rev];
                    if (face_epoch[nf] == epoch) continue;
                    int x = fi.slot_tail[slot];
                    int y = fi.slot_tail[rev];
                    if (blocked(t, x, y)) continue;
                    face_epoch[nf] = epoch;
                    stack.push_back(nf);
                }
            }
            // region vertices off the path P_{tb}: the strict interior plus
            // the bounding path toward root ta, its origin v excluded
            eta[t] = strict + static_cast<int>(paths[ta].size()) - 1;
        }
        return eta;
    }
};

}  // namespace

GridEmbedding schnyder_embed(const PlaneGraph& g) {
    if (g.n < 3)
        throw GraphError(GraphErrorCode::too_small, "embedding needs at least 3 vertices");
    if (g.outer_face.size() != 3 || !validate_near_triangulation(g).ok)
        throw GraphError(GraphErrorCode::not_a_triangulation,
                         "Schnyder embedding requires a plane triangulation");

    const int n = g.n;
    GridEmbedding e;
    e.coords.assign(n, {0, 0});
    e.coords[g.outer_face[0]] = {n - 1, 0};
    e.coords[g.outer_face[1]] = {0, n - 1};
    e.coords[g.outer_face[2]] = {0, 0};

    if (n > 3) {
        Realizer r = build_realizer(g);
        FaceIndex fi = build_face_index(g);
        RegionCounter counter(g, r, fi);
        for (int v = 0; v < n; ++v) {
            if (v == r.root[0] || v == r.root[1] || v == r.root[2]) continue;
            auto eta = counter.count(v);
            if (eta[0] + eta[1] + eta[2] != n - 1)
                throw GraphError(GraphErrorCode::not_a_triangulation,
                                 "region sizes of vertex " + std::to_string(v) +
                                     " do not add up to n-1");
            e.coords[v] = {eta[0], eta[1]};
        }
    }

    // normalize the drawing's orientation to the rotation system: the traced
    // outer cycle must run clockwise (negative signed area)
    const auto& of = g.outer_face;
    GridPoint d1{e.coords[of[1]].x - e.coords[of[0]].x, e.coords[of[1]].y - e.coords[of[0]].y};
    GridPoint d2{e.coords[of[2]].x - e.coords[of[0]].x, e.coords[of[2]].y - e.coords[of[0]].y};
    if (cross(d1, d2) > 0)
        for (auto& p : e.coords) p.x = (n - 1) - p.x;
    return e;
}

SlopeOrderedAdjacency sort_by_slope(const PlaneGraph& g, const GridEmbedding& e) {
    SlopeOrderedAdjacency s;
    s.neighbors = g.rotation;
    for (int v = 0; v < g.n; ++v) {
        std::sort(s.neighbors[v].begin(), s.neighbors[v].end(), [&](int a, int b) {
            GridPoint da{e.coords[a].x - e.coords[v].x, e.coords[a].y - e.coords[v].y};
            GridPoint db{e.coords[b].x - e.coords[v].x, e.coords[b].y - e.coords[v].y};
            return slope_greater(da, db);
        });
    }
    return s;
}

BoundaryCycle exterior_boundary_walk(const PlaneGraph& sub, const GridEmbedding& e) {
    if (sub.n < 3)
        throw GraphError(GraphErrorCode::too_small, "boundary walk needs at least 3 vertices");

    std::vector<char> reached(sub.n, 0);
    std::queue<int> queue;
    queue.push(0);
    reached[0] = 1;
    int seen = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : sub.rotation[v])
            if (!reached[w]) {
                reached[w] = 1;
                ++seen;
                queue.push(w);
            }
    }
    if (seen != sub.n)
        throw GraphError(GraphErrorCode::disconnected, "boundary walk requires a connected graph");

    int leftmost = 0;
    for (int v = 1; v < sub.n; ++v) {
        const auto &p = e.coords[v], &q = e.coords[leftmost];
        if (p.x < q.x || (p.x == q.x && (p.y < q.y || (p.y == q.y && v < leftmost)))) leftmost = v;
    }

    int start = -1;
    GridPoint best{0, 0};
    for (int w : sub.rotation[leftmost]) {
        GridPoint d{e.coords[w].x - e.coords[leftmost].x, e.coords[w].y - e.coords[leftmost].y};
        if (start < 0 || slope_greater(d, best)) {
            start = w;
            best = d;
        }
    }

    BoundaryCycle cycle;
    cycle.vertices = trace_face_from(sub, leftmost, start);
    return cycle;
}

DrawingCheck verify_plane_drawing(const PlaneGraph& g, const GridEmbedding& e) {
    if (static_cast<int>(e.coords.size()) != g.n) return {false, "coordinate count differs from n"};
    for (int v = 0; v < g.n; ++v)
        for (int w = v + 1; w < g.n; ++w)
            if (e.coords[v] == e.coords[w])
                return {false, "vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                   " share a grid point"};

    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < g.n; ++v)
        for (int w : g.rotation[v])
            if (v < w) edges.push_back({v, w});

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int a = edges[i][0], b = edges[i][1], c = edges[j][0], d = edges[j][1];
            const GridPoint &pa = e.coords[a], &pb = e.coords[b], &pc = e.coords[c],
                            &pd = e.coords[d];
            auto name = [&]() {
                return "edges (" + std::to_string(a) + "," + std::to_string(b) + ") and (" +
                       std::to_string(c) + "," + std::to_string(d) + ")";
            };
            if (a == c || a == d || b == c || b == d) {
                int shared = (a == c || a == d) ? a : b;
                int u = a == shared ? b : a;
                int w = c == shared ? d : c;
                GridPoint du{e.coords[u].x - e.coords[shared].x, e.coords[u].y - e.coords[shared].y};
                GridPoint dw{e.coords[w].x - e.coords[shared].x, e.coords[w].y - e.coords[shared].y};
                if (cross(du, dw) == 0 &&
                    static_cast<long long>(du.x) * dw.x + static_cast<long long>(du.y) * dw.y > 0)
                    return {false, name() + " overlap at their shared endpoint"};
                continue;
            }
            int d1 = orient(pc, pd, pa), d2 = orient(pc, pd, pb);
            int d3 = orient(pa, pb, pc), d4 = orient(pa, pb, pd);
            if (d1 * d2 < 0 && d3 * d4 < 0) return {false, name() + " cross"};
            if ((d1 == 0 && on_segment(pc, pd, pa)) || (d2 == 0 && on_segment(pc, pd, pb)) ||
                (d3 == 0 && on_segment(pa, pb, pc)) || (d4 == 0 && on_segment(pa, pb, pd)))
                return {false, name() + " touch improperly"};
        }
    }
    return {true, ""};
}

}  // namespace planar
