#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "crossangle/graph.hpp"
#include "crossangle/rng.hpp"

namespace crossangle {

enum class CrossingForces { none, cosine, cage_angular };

struct ForceConfig {
    double k_cos = 1.0;
    double k_cage = 1.0;
    double k_ang = 1.0;
    int iterations = 500;
    double frame_side = 1e4;  // FR frame; ideal edge length k = sqrt(side^2 / n)
    // linear cooling from this temperature down to zero; default frame_side / 10
    std::optional<double> initial_temperature;
    CrossingForces forces = CrossingForces::cosine;
};

struct StressConfig {
    int max_iterations = 200;
    double tolerance = 1e-4;  // relative stress change
    double weight_exponent = -2.0;
    double ideal_edge_length = 1.0;
    // per-iteration stress values, appended component by component
    std::vector<double>* stress_log = nullptr;
};

// Forces on the four endpoints of a crossing edge pair (u, v) x (x, y).
struct QuadForce {
    Point on_u, on_v, on_x, on_y;
};

namespace detail {

struct PairGeometry {
    Point p;           // intersection point
    Point u, v, x, y;  // endpoint positions
};

inline PairGeometry pair_geometry(const Drawing& d, int uv, int xy) {
    const Segment s1 = d.segment(uv);
    const Segment s2 = d.segment(xy);
    const auto p = interior_intersection(s1, s2);
    if (!p) throw std::invalid_argument("edges do not interiorly cross");
    return {*p, s1.a, s1.b, s2.a, s2.b};
}

inline bool exactly_perpendicular(const PairGeometry& g) {
    return dot(g.v - g.u, g.x - g.y) == 0.0;
}

// One cage component: pulls w toward z with magnitude k * log(l_wz / l*),
// where l* = hypot(l_wp, l_zp) is the distance the pair would have if the
// crossing at p were a right angle. Zeroed when either length underflows.
inline Point cage_component(Point w, Point z, Point p, double k) {
    const double l_wz = norm(z - w);
    const double l_star = std::hypot(norm(w - p), norm(z - p));
    if (l_wz < 1e-12 || l_star < 1e-12) return {};
    return k * std::log(l_wz / l_star) * normalized(z - w);
}

}  // namespace detail

// Cosine force: each endpoint is pushed along the other edge's direction,
// oriented away from the angularly nearer endpoint, with magnitude
// k * cos(alpha) for crossing angle alpha. The four forces cancel pairwise.
inline QuadForce cosine_force(const Drawing& d, int uv, int xy, double k) {
    const auto g = detail::pair_geometry(d, uv, xy);
    if (detail::exactly_perpendicular(g)) return {};

    const Point d1 = g.v - g.u;
    const Point d2 = g.x - g.y;
    const double cos_alpha = std::abs(dot(d1, d2)) / (norm(d1) * norm(d2));

    const auto push = [&](Point w, Point c1, Point c2) {
        // c1, c2 are the other edge's endpoints; push w toward the angularly
        // farther of the two, which opens the crossing angle at w's side.
        const Point along = c1 - c2;
        const Point dir = dot(w - g.p, along) >= 0.0 ? normalized(c2 - c1) : normalized(c1 - c2);
        return k * cos_alpha * dir;
    };
    return {push(g.u, g.x, g.y), push(g.v, g.x, g.y), push(g.x, g.u, g.v), push(g.y, g.u, g.v)};
}

// Cage force: pulls each endpoint w toward each endpoint z of the other edge
// with magnitude k * log(l_wz / l*_wz), where l*_wz is the hypotenuse-free
// distance the pair would have if the crossing were at a right angle.
inline QuadForce cage_force(const Drawing& d, int uv, int xy, double k) {
    const auto g = detail::pair_geometry(d, uv, xy);
    if (detail::exactly_perpendicular(g)) return {};

    const auto component = [&](Point w, Point z) { return detail::cage_component(w, z, g.p, k); };
    return {component(g.u, g.x) + component(g.u, g.y), component(g.v, g.x) + component(g.v, g.y),
            component(g.x, g.u) + component(g.x, g.v), component(g.y, g.u) + component(g.y, g.v)};
}

// |pi/2 - alpha'| / alpha' for alpha' in (0, pi).
inline double angular_magnitude(double alpha_prime) {
    return std::abs(kHalfPi - alpha_prime) / alpha_prime;
}

// Angular force: each endpoint w receives, for both orientations of the other
// edge, a component perpendicular to the bisector of the two edge directions,
// scaled by sign(alpha' - pi/2) * |pi/2 - alpha'| / alpha'. The handedness is
// fixed so that every component rotates the pair toward a right angle.
inline QuadForce angular_force(const Drawing& d, int uv, int xy, double k) {
    const auto g = detail::pair_geometry(d, uv, xy);
    if (detail::exactly_perpendicular(g)) return {};

    // toward: unit vector of w's edge pointing at w. other: a unit
    // orientation of the other edge.
    const auto component = [&](Point toward, Point other) -> Point {
        const double dt = dot(toward, other);
        if (dt == 0.0) return {};
        const double cr = cross(other, toward);
        const double alpha_prime = std::atan2(std::abs(cr), dt);
        const double sign = dt < 0.0 ? 1.0 : -1.0;  // sign(alpha' - pi/2)
        const Point a0 = perp(normalized(toward + other));
        const Point a = cr > 0.0 ? -1.0 * a0 : a0;
        return k * sign * angular_magnitude(alpha_prime) * a;
    };
    const auto endpoint = [&](Point w, Point o, Point c1, Point c2) {
        const Point toward = normalized(w - o);
        const Point d2 = normalized(c1 - c2);
        return component(toward, d2) + component(toward, -1.0 * d2);
    };
    return {endpoint(g.u, g.v, g.x, g.y), endpoint(g.v, g.u, g.x, g.y),
            endpoint(g.x, g.y, g.u, g.v), endpoint(g.y, g.x, g.u, g.v)};
}

namespace detail {

// Deterministically jitters vertices that violate drawing validity. Keeps all
// other coordinates untouched; gives up after a bounded number of rounds.
inline void nudge_until_valid(Drawing& d, double scale, Rng& rng) {
    for (int round = 0; round < 1000; ++round) {
        const int n = d.graph.n;
        std::vector<char> bad(n, 0);
        bool any = false;
        for (int u = 0; u < n; ++u) {
            if (!finite(d.coords[u])) {
                bad[u] = 1;
                any = true;
            }
            for (int v = u + 1; v < n; ++v)
                if (d.coords[u] == d.coords[v]) {
                    bad[v] = 1;
                    any = true;
                }
        }
        for (int e = 0; e < d.graph.m(); ++e) {
            const auto [a, b] = d.graph.edges[e];
            if (d.coords[a] == d.coords[b]) continue;  // handled as coincidence
            const Segment s = d.segment(e);
            for (int w = 0; w < n; ++w) {
                if (w == a || w == b) continue;
                if (point_in_segment_interior(d.coords[w], s)) {
                    bad[w] = 1;
                    any = true;
                }
            }
        }
        if (!any) return;
        for (int v = 0; v < n; ++v)
            if (bad[v]) {
                if (!finite(d.coords[v])) d.coords[v] = {0.0, 0.0};
                d.coords[v] = d.coords[v] + Point{scale * (rng.unit() - 0.5), scale * (rng.unit() - 0.5)};
            }
    }
    throw ValidationError("could not repair degenerate layout");
}

}  // namespace detail

// n i.i.d. uniform points in the square [0, box_side]^2; resampled wholesale
// until the induced drawing is valid.
inline Drawing random_layout(const Graph& g, double box_side, Rng& rng) {
    while (true) {
        Drawing d{g, {}};
        d.coords.reserve(g.n);
        for (int v = 0; v < g.n; ++v)
            d.coords.push_back({rng.uniform(0.0, box_side), rng.uniform(0.0, box_side)});
        if (drawing_valid(d)) return d;
    }
}

// Fruchterman-Reingold with optional crossing-angle forces summed over the
// currently crossing edge pairs. Linear cooling; displacement per iteration
// capped by the temperature.
inline Drawing fr_layout(const Graph& g, const Drawing& init, const ForceConfig& cfg, Rng& rng) {
    Drawing d = init;
    if (cfg.iterations <= 0 || g.n == 0) return d;
    const double ideal = std::sqrt(cfg.frame_side * cfg.frame_side / std::max(1, g.n));
    const double t0 = cfg.initial_temperature.value_or(cfg.frame_side / 10.0);

    std::vector<Point> disp(g.n);
    for (int it = 0; it < cfg.iterations; ++it) {
        const double temp = t0 * (1.0 - static_cast<double>(it) / cfg.iterations);
        std::fill(disp.begin(), disp.end(), Point{});

        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                Point delta = d.coords[u] - d.coords[v];
                double dist = norm(delta);
                if (dist < 1e-9) {  // coincident: separate along a fixed direction
                    delta = {1e-9 * (u + 1), 2e-9 * (v + 1)};
                    dist = norm(delta);
                }
                const double f = ideal * ideal / dist;
                const Point push = (f / dist) * delta;
                disp[u] = disp[u] + push;
                disp[v] = disp[v] - push;
            }
        for (auto [u, v] : g.edges) {
            const Point delta = d.coords[v] - d.coords[u];
            const double dist = std::max(norm(delta), 1e-9);
            const double f = dist * dist / ideal;
            const Point pull = (f / dist) * delta;
            disp[u] = disp[u] + pull;
            disp[v] = disp[v] - pull;
        }

        if (cfg.forces != CrossingForces::none) {
            for (int e = 0; e < g.m(); ++e) {
                const Segment se = d.segment(e);
                for (int f = e + 1; f < g.m(); ++f) {
                    if (!properly_cross(se, d.segment(f))) continue;
                    const auto apply = [&](const QuadForce& q) {
                        disp[g.edges[e].first] = disp[g.edges[e].first] + q.on_u;
                        disp[g.edges[e].second] = disp[g.edges[e].second] + q.on_v;
                        disp[g.edges[f].first] = disp[g.edges[f].first] + q.on_x;
                        disp[g.edges[f].second] = disp[g.edges[f].second] + q.on_y;
                    };
                    if (cfg.forces == CrossingForces::cosine) {
                        apply(cosine_force(d, e, f, cfg.k_cos));
                    } else {
                        apply(cage_force(d, e, f, cfg.k_cage));
                        apply(angular_force(d, e, f, cfg.k_ang));
                    }
                }
            }
        }

        for (int v = 0; v < g.n; ++v) {
            const double len = norm(disp[v]);
            if (len < 1e-12) continue;
            const double step = std::min(len, temp);
            d.coords[v] = d.coords[v] + (step / len) * disp[v];
        }
    }
    detail::nudge_until_valid(d, cfg.frame_side * 1e-6, rng);
    return d;
}

namespace detail {

inline std::vector<int> component_labels(const Graph& g, int& count) {
    std::vector<int> label(g.n, -1);
    const auto adj = g.adjacency();
    count = 0;
    for (int s = 0; s < g.n; ++s) {
        if (label[s] != -1) continue;
        std::deque<int> queue{s};
        label[s] = count;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[u])
                if (label[v] == -1) {
                    label[v] = count;
                    queue.push_back(v);
                }
        }
        ++count;
    }
    return label;
}

// BFS hop distances from source, restricted to one component.
inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj[u])
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace detail

// Stress majorization over all-pairs shortest-path distances with weights
// dist^weight_exponent. Components are laid out independently, then packed
// side by side. Stress is non-increasing across iterations.
inline Drawing stress_layout(const Graph& g, const Drawing& init, const StressConfig& cfg) {
    Drawing d = init;
    if (cfg.max_iterations <= 0 || g.n == 0) return d;

    int component_count = 0;
    const auto label = detail::component_labels(g, component_count);
    const auto adj = g.adjacency();

    std::vector<std::vector<int>> members(component_count);
    for (int v = 0; v < g.n; ++v) members[label[v]].push_back(v);

    // ideal[i][j] and weight per component, indexed by local vertex order
    for (int c = 0; c < component_count; ++c) {
        const auto& verts = members[c];
        const int k = static_cast<int>(verts.size());
        if (k <= 1) continue;

        std::vector<std::vector<double>> ideal(k, std::vector<double>(k, 0.0));
        std::vector<std::vector<double>> weight(k, std::vector<double>(k, 0.0));
        for (int i = 0; i < k; ++i) {
            const auto dist = detail::bfs_distances(adj, verts[i]);
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                const double hops = static_cast<double>(dist[verts[j]]);
                ideal[i][j] = hops * cfg.ideal_edge_length;
                weight[i][j] = std::pow(hops, cfg.weight_exponent);
            }
        }

        std::vector<Point> pos(k);
        for (int i = 0; i < k; ++i) pos[i] = d.coords[verts[i]];

        const auto stress_value = [&]() {
            double s = 0.0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    const double gap = norm(pos[i] - pos[j]) - ideal[i][j];
                    s += weight[i][j] * gap * gap;
                }
            return s;
        };

        double previous = stress_value();
        if (cfg.stress_log) cfg.stress_log->push_back(previous);
        for (int it = 0; it < cfg.max_iterations; ++it) {
            for (int i = 0; i < k; ++i) {
                double wsum = 0.0;
                Point acc{};
                for (int j = 0; j < k; ++j) {
                    if (j == i) continue;
                    const double w = weight[i][j];
                    Point dir = pos[i] - pos[j];
                    const double dist = norm(dir);
                    dir = dist > 1e-12 ? (1.0 / dist) * dir : Point{1.0, 0.0};
                    acc = acc + w * (pos[j] + ideal[i][j] * dir);
                    wsum += w;
                }
                if (wsum > 0.0) pos[i] = (1.0 / wsum) * acc;
            }
            const double current = stress_value();
            if (cfg.stress_log) cfg.stress_log->push_back(current);
            if (previous > 0.0 && (previous - current) / previous < cfg.tolerance) {
                previous = current;
                break;
            }
            previous = current;
        }
        for (int i = 0; i < k; ++i) d.coords[verts[i]] = pos[i];
    }

    // Pack components left to right on a shared baseline.
    if (component_count > 1) {
        double offset = 0.0;
        for (int c = 0; c < component_count; ++c) {
            double min_x = std::numeric_limits<double>::infinity();
            double max_x = -std::numeric_limits<double>::infinity();
            double min_y = std::numeric_limits<double>::infinity();
            for (int v : members[c]) {
                min_x = std::min(min_x, d.coords[v].x);
                max_x = std::max(max_x, d.coords[v].x);
                min_y = std::min(min_y, d.coords[v].y);
            }
            const double width = max_x - min_x;
            for (int v : members[c]) d.coords[v] = d.coords[v] + Point{offset - min_x, -min_y};
            offset += width + std::max(1.0, 0.25 * width) + cfg.ideal_edge_length;
        }
    }

    Rng nudge_rng(0x5ca1ab1e);  // deterministic repair stream
    detail::nudge_until_valid(d, cfg.ideal_edge_length * 1e-6, nudge_rng);
    return d;
}

}  // namespace crossangle
