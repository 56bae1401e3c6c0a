#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "crossangle/graph.hpp"
#include "crossangle/rng.hpp"

namespace crossangle {

// Per-edge crossing counts in the generator's witness (drawing or embedding),
// aligned with the graph's edge list, plus the crossing pairs themselves.
struct OnePlanarCertificate {
    std::vector<int> per_edge_crossings;
    std::vector<std::pair<int, int>> crossing_pairs;  // (edge id, edge id)

    int max_crossings() const {
        int best = 0;
        for (int c : per_edge_crossings) best = std::max(best, c);
        return best;
    }

    friend bool operator==(const OnePlanarCertificate&, const OnePlanarCertificate&) = default;
};

namespace detail {

struct FaceSplitTriangulation {
    Graph graph;
    std::vector<std::array<int, 3>> faces;  // includes the outer face
};

// Random maximal planar graph by iterated face splitting: place each new
// vertex in a uniformly random face and connect it to the face's corners.
// n >= 3; yields m = 3n - 6 and 2n - 4 triangular faces.
inline FaceSplitTriangulation random_triangulation(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("triangulation needs n >= 3");
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        const std::size_t pick = rng.index(faces.size());
        const auto [a, b, c] = faces[pick];
        faces[pick] = faces.back();
        faces.pop_back();
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        faces.push_back({a, b, v});
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    return {make_graph(n, std::move(edges)), std::move(faces)};
}

}  // namespace detail

struct TriangulationPlusX {
    Graph graph;
    int base_edge_count = 0;  // edges[0..base_edge_count) form the triangulation
    int extra_edges = 0;      // x
};

// Random n-vertex triangulation plus x extra uniformly random edges,
// x ~ Uniform[ceil(0.1 n), floor(0.15 n)], capped by the number of
// non-edges still available.
inline TriangulationPlusX gen_triangulation_plus_x(int n, Rng& rng) {
    if (n < 4) throw std::invalid_argument("triangulation+x needs n >= 4");
    auto tri = detail::random_triangulation(n, rng);
    const int base = tri.graph.m();

    const long long lo = (n + 9) / 10;                       // ceil(0.1 n)
    const long long hi = std::max(lo, 3LL * n / 20);         // floor(0.15 n)
    long long x = rng.uniform_int(lo, hi);
    const long long capacity = static_cast<long long>(n) * (n - 1) / 2 - base;
    x = std::min(x, capacity);

    std::set<std::pair<int, int>> present(tri.graph.edges.begin(), tri.graph.edges.end());
    std::vector<std::pair<int, int>> edges = tri.graph.edges;
    int added = 0;
    while (added < x) {
        int u = static_cast<int>(rng.index(n));
        int v = static_cast<int>(rng.index(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!present.insert({u, v}).second) continue;
        edges.emplace_back(u, v);
        ++added;
    }
    return {make_graph(n, std::move(edges)), base, added};
}

struct GeometricOnePlanar {
    Graph graph;
    Drawing drawing;  // the witness
    OnePlanarCertificate certificate;
};

// Greedy geometric 1-planar generator: over a random permutation of all point
// pairs, keep an edge iff the induced straight-line drawing stays simple (no
// point on an edge interior) and every edge keeps at most one crossing.
inline GeometricOnePlanar gen_1planar_geometric(int n, Rng& rng, double box_side = 1000.0) {
    if (n < 2) throw std::invalid_argument("geometric 1-planar needs n >= 2");

    std::vector<Point> points;
    for (bool ok = false; !ok;) {
        points.clear();
        for (int i = 0; i < n; ++i)
            points.push_back({rng.uniform(0.0, box_side), rng.uniform(0.0, box_side)});
        ok = true;
        for (int i = 0; ok && i < n; ++i)
            for (int j = i + 1; ok && j < n; ++j)
                if (points[i] == points[j]) ok = false;
    }

    std::vector<std::pair<int, int>> candidates;
    candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
    rng.shuffle(candidates);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> crossings_of;
    std::vector<std::pair<int, int>> crossing_pairs;

    for (auto [u, v] : candidates) {
        const Segment cand(points[u], points[v]);

        bool rejected = false;
        for (int w = 0; w < n && !rejected; ++w) {
            if (w == u || w == v) continue;
            if (point_in_segment_interior(points[w], cand)) rejected = true;
        }
        if (rejected) continue;

        std::vector<int> crossed;
        for (std::size_t e = 0; e < edges.size() && !rejected; ++e) {
            const Segment s(points[edges[e].first], points[edges[e].second]);
            if (!properly_cross(cand, s)) continue;
            if (crossings_of[e] >= 1 || !crossed.empty()) rejected = true;
            crossed.push_back(static_cast<int>(e));
        }
        if (rejected) continue;

        const int id = static_cast<int>(edges.size());
        edges.emplace_back(u, v);
        crossings_of.push_back(static_cast<int>(crossed.size()));
        for (int e : crossed) {
            ++crossings_of[e];
            crossing_pairs.emplace_back(e, id);
        }
    }

    Graph g = make_graph(n, std::move(edges));
    Drawing d{g, std::move(points)};
    validate_drawing(d);
    return {std::move(g), std::move(d), {std::move(crossings_of), std::move(crossing_pairs)}};
}

// How the topological generator's repetition count x is interpreted.
enum class InsertionCount { attempts, successes };

// One inserted chord: uv, drawn across base edge (x, y) through the two faces
// that share it.
struct ChordRecord {
    int u = 0, v = 0;
    std::pair<int, int> crossed_edge;       // (x, y), by vertex ids
    std::array<int, 3> face_a, face_b;      // the two host faces

    friend bool operator==(const ChordRecord&, const ChordRecord&) = default;
};

struct TopologicalOnePlanar {
    Graph graph;
    int base_edge_count = 0;
    std::vector<std::array<int, 3>> faces;  // embedding of the base triangulation
    std::vector<ChordRecord> chords;
    OnePlanarCertificate certificate;
    long long attempts = 0;
};

// Topological 1-planar generator: starts from a random planar triangulation
// with its embedding and repeatedly tries to insert a chord uv across a base
// edge xy shared by the two faces (v,x,y) and (x,y,u). An insertion is kept
// only when uv is absent and both host faces are still unused; chords in a
// shared face would be forced to cross each other, which would give an edge
// two crossings. x ~ Uniform[ceil(0.3 n), floor(0.4 n)].
inline TopologicalOnePlanar gen_1planar_topological(int n, Rng& rng,
                                                    InsertionCount mode = InsertionCount::attempts) {
    if (n < 4) throw std::invalid_argument("topological 1-planar needs n >= 4");
    auto tri = detail::random_triangulation(n, rng);
    const int base = tri.graph.m();

    // edge (u, v) -> ids of the two faces containing it
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (std::size_t f = 0; f < tri.faces.size(); ++f) {
        const auto [a, b, c] = tri.faces[f];
        edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
        edge_faces[{std::min(b, c), std::max(b, c)}].push_back(static_cast<int>(f));
        edge_faces[{std::min(a, c), std::max(a, c)}].push_back(static_cast<int>(f));
    }
    std::vector<std::vector<int>> faces_of_vertex(n);
    for (std::size_t f = 0; f < tri.faces.size(); ++f)
        for (int v : tri.faces[f]) faces_of_vertex[v].push_back(static_cast<int>(f));

    std::set<std::pair<int, int>> present(tri.graph.edges.begin(), tri.graph.edges.end());
    std::map<std::pair<int, int>, int> edge_id;
    for (int e = 0; e < base; ++e) edge_id[tri.graph.edges[e]] = e;

    std::vector<std::pair<int, int>> edges = tri.graph.edges;
    std::vector<char> face_used(tri.faces.size(), 0);
    std::vector<ChordRecord> chords;
    std::vector<std::pair<int, int>> crossing_pairs;
    std::vector<int> crossings_of(base, 0);

    const long long lo = (3LL * n + 9) / 10;                 // ceil(0.3 n)
    const long long hi = std::max(lo, 2LL * n / 5);          // floor(0.4 n)
    const long long x = rng.uniform_int(lo, hi);

    long long attempts = 0;
    long long successes = 0;
    const long long attempt_cap = mode == InsertionCount::attempts ? x : 100 * x + 1000;
    while (attempts < attempt_cap && (mode == InsertionCount::attempts || successes < x)) {
        ++attempts;
        const int v = static_cast<int>(rng.index(n));
        const auto& around = faces_of_vertex[v];
        const int fa = around[rng.index(around.size())];
        if (face_used[fa]) continue;

        // edge of face fa opposite to v
        int ex = -1, ey = -1;
        for (int corner : tri.faces[fa]) {
            if (corner == v) continue;
            if (ex == -1)
                ex = corner;
            else
                ey = corner;
        }
        if (ex > ey) std::swap(ex, ey);

        const auto& hosts = edge_faces[{ex, ey}];
        const int fb = hosts[0] == fa ? hosts[1] : hosts[0];
        if (face_used[fb]) continue;

        int u = -1;
        for (int corner : tri.faces[fb])
            if (corner != ex && corner != ey) u = corner;
        if (u == v || u == -1) continue;

        const std::pair<int, int> chord{std::min(u, v), std::max(u, v)};
        if (!present.insert(chord).second) continue;

        const int chord_eid = static_cast<int>(edges.size());
        edges.push_back(chord);
        crossings_of.push_back(1);
        ++crossings_of[edge_id[{ex, ey}]];
        crossing_pairs.emplace_back(edge_id[{ex, ey}], chord_eid);
        face_used[fa] = face_used[fb] = 1;
        chords.push_back({chord.first, chord.second, {ex, ey}, tri.faces[fa], tri.faces[fb]});
        ++successes;
    }

    return {make_graph(n, std::move(edges)),
            base,
            std::move(tri.faces),
            std::move(chords),
            {std::move(crossings_of), std::move(crossing_pairs)},
            attempts};
}

}  // namespace crossangle
