#pragma once

#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "crossangle/min_angle.hpp"
#include "crossangle/rng.hpp"

namespace crossangle {

enum class MinPairEngine { bucketed, bruteforce };

struct SamplerConfig {
    int levels = 5;               // L
    int samples_per_level = 400;  // T
    double initial_side = 1e5;    // s
    double scaling = 0.2;         // b, in (0, 1)
    std::optional<long long> max_iterations;  // default resolves to 2n
    std::optional<double> max_seconds;
    std::uint64_t seed = 0;
    bool snap_integer = false;
    MinPairEngine engine = MinPairEngine::bucketed;
};

enum class Preset { sloppy, medium, precise };

inline Preset preset_from_name(const std::string& name) {
    if (name == "sloppy") return Preset::sloppy;
    if (name == "medium") return Preset::medium;
    if (name == "precise") return Preset::precise;
    throw std::invalid_argument("unknown preset '" + name + "'");
}

// Sloppy (3, 50), Medium (4, 175), Precise (5, 400); b = 0.2, s = 1e5.
inline SamplerConfig preset_config(Preset p) {
    SamplerConfig cfg;
    switch (p) {
        case Preset::sloppy: cfg.levels = 3; cfg.samples_per_level = 50; break;
        case Preset::medium: cfg.levels = 4; cfg.samples_per_level = 175; break;
        case Preset::precise: cfg.levels = 5; cfg.samples_per_level = 400; break;
    }
    cfg.initial_side = 1e5;
    cfg.scaling = 0.2;
    return cfg;
}

// Local crossing angle of vertex v: minimum crossing angle over all pairs
// (edge incident to v, any other edge). pi/2 for crossing-free or isolated
// vertices. O(deg(v) * m) angle tests.
inline double local_crossing_angle(const Drawing& d, int v) {
    double best = kHalfPi;
    const int m = d.graph.m();
    for (int e = 0; e < m; ++e) {
        const auto [a, b] = d.graph.edges[e];
        if (a != v && b != v) continue;
        const Segment se = d.segment(e);
        for (int f = 0; f < m; ++f) {
            if (f == e) continue;
            const auto [c, w] = d.graph.edges[f];
            if (c == v || w == v) continue;  // shares v: cannot interiorly cross
            best = std::min(best, crossing_angle(se, d.segment(f)));
        }
    }
    return best;
}

namespace detail {

// Local crossing angle as if v were moved to q, without mutating the drawing.
inline double local_crossing_angle_at(const Drawing& d, int v, Point q) {
    double best = kHalfPi;
    const int m = d.graph.m();
    for (int e = 0; e < m; ++e) {
        const auto [a, b] = d.graph.edges[e];
        if (a != v && b != v) continue;
        const Point other = a == v ? d.coords[b] : d.coords[a];
        if (other == q) return 0.0;  // degenerate candidate, never accepted
        const Segment se(q, other);
        for (int f = 0; f < m; ++f) {
            if (f == e) continue;
            const auto [c, w] = d.graph.edges[f];
            if (c == v || w == v) continue;
            best = std::min(best, crossing_angle(se, d.segment(f)));
        }
    }
    return best;
}

// True if moving v to q keeps the drawing valid: q coincides with no other
// vertex, q lies on no non-incident edge, and no third vertex lands in the
// interior of a moved incident edge.
inline bool move_keeps_drawing_valid(const Drawing& d, int v, Point q) {
    const int n = d.graph.n;
    for (int w = 0; w < n; ++w)
        if (w != v && d.coords[w] == q) return false;
    const int m = d.graph.m();
    for (int e = 0; e < m; ++e) {
        const auto [a, b] = d.graph.edges[e];
        if (a == v || b == v) {
            const Point other = a == v ? d.coords[b] : d.coords[a];
            const Segment moved(q, other);
            for (int w = 0; w < n; ++w) {
                if (w == v || w == a || w == b) continue;
                if (point_in_segment_interior(d.coords[w], moved)) return false;
            }
        } else {
            if (point_in_segment_interior(q, d.segment(e))) return false;
        }
    }
    return true;
}

}  // namespace detail

// count i.i.d. uniform points in the axis-aligned square of the given side
// centered at center; with snap, rounded to the nearest integer grid point.
inline std::vector<Point> sample_square(Point center, double side, int count, Rng& rng,
                                        bool snap = false) {
    std::vector<Point> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Point q{center.x + side * (rng.unit() - 0.5), center.y + side * (rng.unit() - 0.5)};
        if (snap) q = {std::round(q.x), std::round(q.y)};
        out.push_back(q);
    }
    return out;
}

struct StepReport {
    bool converged = false;        // drawing is crossing-free; nothing moved
    CrossingPair worst_pair;       // minimum-angle pair at step start
    double global_angle = kHalfPi; // crossing angle of the drawing at step start
    int vertex = -1;               // endpoint chosen for repositioning
    double pre_local_angle = kHalfPi;
    double post_local_angle = kHalfPi;
    int accepted_moves = 0;
};

// One iteration of the random-sampling search: reposition one endpoint of the
// worst crossing pair by multilevel shrinking-square sampling. A candidate is
// accepted only if it strictly improves the vertex's local crossing angle and
// keeps the drawing valid; accepted moves take effect immediately.
inline StepReport optimize_step(Drawing& d, const SamplerConfig& cfg, Rng& rng,
                                QueryStats* stats = nullptr) {
    StepReport report;
    const auto pair = cfg.engine == MinPairEngine::bucketed ? min_pair_bucketed(d, stats)
                                                            : min_pair_bruteforce(d, stats);
    if (!pair) {
        report.converged = true;
        return report;
    }
    report.worst_pair = *pair;
    report.global_angle = pair->angle;

    const int endpoints[4] = {d.graph.edges[pair->e].first, d.graph.edges[pair->e].second,
                              d.graph.edges[pair->f].first, d.graph.edges[pair->f].second};
    const int v = endpoints[rng.index(4)];
    report.vertex = v;

    // v belongs to an interiorly crossing pair, so its local angle is
    // attained by a real crossing and bounded by the pair's angle.
    double current = local_crossing_angle(d, v);
    assert(current <= pair->angle);
    report.pre_local_angle = current;

    for (int level = 0; level < cfg.levels; ++level) {
        const double side = cfg.initial_side * std::pow(cfg.scaling, level);
        const Point center = d.coords[v];  // square fixed for the whole level
        for (const Point q : sample_square(center, side, cfg.samples_per_level, rng,
                                           cfg.snap_integer)) {
            const double candidate = detail::local_crossing_angle_at(d, v, q);
            if (candidate <= current) continue;
            if (!detail::move_keeps_drawing_valid(d, v, q)) continue;
            d.coords[v] = q;
            current = candidate;
            ++report.accepted_moves;
        }
    }
    report.post_local_angle = current;
    return report;
}

struct IterationRecord {
    long long iteration = 0;
    int vertex = -1;
    double pre_local_angle = 0.0;
    double post_local_angle = 0.0;
    double global_angle = 0.0;  // crossing angle at iteration start
    int accepted_moves = 0;
};

struct IterationTrace {
    std::vector<IterationRecord> rows;
};

struct OptimizeResult {
    IterationTrace trace;
    long long iterations = 0;
    bool converged = false;
    double final_angle = kHalfPi;  // crossing angle after the last iteration
    QueryStats stats;              // min-pair query work summed over the run
};

// Runs optimize_step until the iteration budget, the wall-clock budget, or
// convergence. Without any explicit budget the iteration cap defaults to 2n;
// a pure wall-clock budget leaves iterations uncapped. Mutates d in place.
inline OptimizeResult optimize(Drawing& d, const SamplerConfig& cfg) {
    Rng rng(cfg.seed);
    OptimizeResult result;
    const long long budget = cfg.max_iterations
                                 ? *cfg.max_iterations
                                 : (cfg.max_seconds ? std::numeric_limits<long long>::max()
                                                    : 2LL * d.graph.n);
    const auto start = std::chrono::steady_clock::now();
    for (long long it = 0; it < budget; ++it) {
        if (cfg.max_seconds) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() >= *cfg.max_seconds) break;
        }
        const StepReport step = optimize_step(d, cfg, rng, &result.stats);
        if (step.converged) {
            result.converged = true;
            break;
        }
        result.trace.rows.push_back({it, step.vertex, step.pre_local_angle, step.post_local_angle,
                                     step.global_angle, step.accepted_moves});
        ++result.iterations;
    }
    result.final_angle = crossing_angle_of(d);
    return result;
}

}  // namespace crossangle
