#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "crossangle/graph.hpp"

namespace crossangle {

// Pair of interiorly crossing edges, e < f, with their crossing angle.
struct CrossingPair {
    int e = -1;
    int f = -1;
    double angle = 0.0;

    friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

// Tie-break: smaller angle first, then lexicographically smallest edge pair.
inline bool pair_less(const CrossingPair& a, const CrossingPair& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    if (a.e != b.e) return a.e < b.e;
    return a.f < b.f;
}

// P = edge pairs tested for an angle, C = crossings seen among them.
// Both counters are monotone within one query.
struct QueryStats {
    std::uint64_t tested_pairs = 0;
    std::uint64_t crossings = 0;
};

// Edges partitioned by slope into t intervals of width pi/t: edge e lands in
// bucket i iff i*pi/t <= slope(e) + pi/2 < (i+1)*pi/t.
struct BucketIndex {
    int t = 0;
    std::vector<std::vector<int>> buckets;
};

namespace detail {

inline int bucket_of_slope(double slope_value, int t) {
    const int i = static_cast<int>(std::floor((slope_value + kHalfPi) * t / kPi));
    return std::clamp(i, 0, t - 1);
}

// Tests one edge pair and keeps the better candidate under pair_less.
inline void consider_pair(const Drawing& d, int e, int f, std::optional<CrossingPair>& best,
                          QueryStats* stats) {
    if (e > f) std::swap(e, f);
    if (stats) ++stats->tested_pairs;
    const Segment se = d.segment(e);
    const Segment sf = d.segment(f);
    if (!properly_cross(se, sf)) return;
    if (stats) ++stats->crossings;
    const CrossingPair cand{e, f, acute_angle(se.dir(), sf.dir())};
    if (!best || pair_less(cand, *best)) best = cand;
}

// Ids of the r longest edges (r = 50 for m <= 5000, else 300), longest
// first, ties broken by edge id.
inline std::vector<int> longest_edges(const Drawing& d) {
    const int m = d.graph.m();
    const int r = m <= 5000 ? 50 : 300;
    std::vector<int> ids(m);
    for (int e = 0; e < m; ++e) ids[e] = e;
    std::vector<double> len2(m);
    for (int e = 0; e < m; ++e) {
        const Point dir = d.segment(e).dir();
        len2[e] = dot(dir, dir);
    }
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (len2[a] != len2[b]) return len2[a] > len2[b];
        return a < b;
    });
    ids.resize(std::min(m, r));
    return ids;
}

}  // namespace detail

// Exhaustive scan over all edge pairs; the oracle every other query must match.
inline std::optional<CrossingPair> min_pair_bruteforce(const Drawing& d, QueryStats* stats = nullptr) {
    const int m = d.graph.m();
    std::optional<CrossingPair> best;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) detail::consider_pair(d, e, f, best, stats);
    return best;
}

// Estimate delta as the minimal crossing angle among the r longest edges;
// nullopt when no two of them cross.
inline std::optional<double> estimate_delta(const Drawing& d, QueryStats* stats = nullptr) {
    const auto top = detail::longest_edges(d);
    std::optional<CrossingPair> best;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j)
            detail::consider_pair(d, top[i], top[j], best, stats);
    if (!best) return std::nullopt;
    return best->angle;
}

// t = floor(pi / delta) buckets, delta clamped to (0, pi/2] so t >= 2.
inline BucketIndex build_buckets(const Drawing& d, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("bucket delta must be positive");
    const double clamped = std::min(delta, kHalfPi);
    const int t = static_cast<int>(std::floor(kPi / clamped));
    BucketIndex index;
    index.t = t;
    index.buckets.resize(t);
    for (int e = 0; e < d.graph.m(); ++e)
        index.buckets[detail::bucket_of_slope(slope(d.segment(e)), t)].push_back(e);
    return index;
}

// Minimum-angle crossing pair via slope buckets. Same result contract as
// min_pair_bruteforce, including the tie-break.
//
// Any pair crossing at an angle below the bucket width pi/t lies in the same
// or in adjacent buckets (mod t), so a best candidate with angle < pi/t found
// in the adjacent-bucket scan is certified optimal. Otherwise the scan
// completes over the remaining pairs. Every unordered pair is tested at most
// once, so tested_pairs never exceeds m(m-1)/2.
inline std::optional<CrossingPair> min_pair_bucketed(const Drawing& d, QueryStats* stats = nullptr) {
    const int m = d.graph.m();
    std::optional<CrossingPair> best;

    const auto top = detail::longest_edges(d);
    std::vector<char> in_top(m, 0);
    for (int e : top) in_top[e] = 1;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j)
            detail::consider_pair(d, top[i], top[j], best, stats);
    if (static_cast<int>(top.size()) == m) return best;

    // Scans every pair not already covered by the top-r phase.
    const auto full_rest = [&]() {
        for (int e = 0; e < m; ++e)
            for (int f = e + 1; f < m; ++f) {
                if (in_top[e] && in_top[f]) continue;
                detail::consider_pair(d, e, f, best, stats);
            }
    };

    if (!best) {  // no delta estimate: plain exhaustive scan
        full_rest();
        return best;
    }

    // Flooring delta keeps t <= 8m + 8; finer buckets than that only cost
    // memory, and the certification threshold pi/t adapts either way.
    const double delta = std::max(best->angle, kPi / (8.0 * m + 8.0));
    const int t = static_cast<int>(std::floor(kPi / std::min(delta, kHalfPi)));
    if (t <= 2) {  // buckets too coarse to exclude anything
        full_rest();
        return best;
    }

    const BucketIndex index = build_buckets(d, delta);
    std::vector<int> bucket_of(m);
    for (int b = 0; b < index.t; ++b)
        for (int e : index.buckets[b]) bucket_of[e] = b;

    for (int b = 0; b < index.t; ++b) {
        const auto& cur = index.buckets[b];
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (in_top[cur[i]] && in_top[cur[j]]) continue;
                detail::consider_pair(d, cur[i], cur[j], best, stats);
            }
        const auto& next = index.buckets[(b + 1) % index.t];
        for (int e : cur)
            for (int f : next) {
                if (in_top[e] && in_top[f]) continue;
                detail::consider_pair(d, e, f, best, stats);
            }
    }

    const double guarantee = kPi / index.t;
    if (best->angle < guarantee) return best;

    // Nothing below the bucket guarantee: finish the scan over pairs more
    // than one bucket apart.
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            if (in_top[e] && in_top[f]) continue;
            const int diff = std::abs(bucket_of[e] - bucket_of[f]);
            const int circ = std::min(diff, index.t - diff);
            if (circ <= 1) continue;
            detail::consider_pair(d, e, f, best, stats);
        }
    return best;
}

}  // namespace crossangle
