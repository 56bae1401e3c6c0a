#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace crossangle {

// Crossing angles (degrees) of one drawing per graph, produced by one
// algorithm.
struct DrawingFamily {
    std::string label;
    std::vector<std::pair<std::string, double>> entries;  // (graph id, angle in degrees)
};

namespace detail {

// Per-graph differences a - b, ordered by graph id. Throws when the two
// families do not cover the same graphs.
inline std::vector<double> paired_differences(const DrawingFamily& a, const DrawingFamily& b) {
    std::map<std::string, double> right;
    for (const auto& [id, angle] : b.entries)
        if (!right.emplace(id, angle).second)
            throw std::invalid_argument("duplicate graph id '" + id + "' in family " + b.label);
    if (a.entries.size() != right.size())
        throw std::invalid_argument("families cover different graph sets");
    std::map<std::string, double> diffs;
    for (const auto& [id, angle] : a.entries) {
        const auto it = right.find(id);
        if (it == right.end()) throw std::invalid_argument("graph '" + id + "' missing from family " + b.label);
        if (!diffs.emplace(id, angle - it->second).second)
            throw std::invalid_argument("duplicate graph id '" + id + "' in family " + a.label);
    }
    std::vector<double> out;
    out.reserve(diffs.size());
    for (const auto& [id, diff] : diffs) out.push_back(diff);
    return out;
}

}  // namespace detail

// True iff family a beats family b strictly on every graph of the subset.
inline bool outperforms(const DrawingFamily& a, const DrawingFamily& b,
                        std::span<const std::string> subset) {
    std::map<std::string, double> left, right;
    for (const auto& [id, angle] : a.entries) left[id] = angle;
    for (const auto& [id, angle] : b.entries) right[id] = angle;
    for (const auto& id : subset) {
        const auto la = left.find(id);
        const auto rb = right.find(id);
        if (la == left.end() || rb == right.end())
            throw std::invalid_argument("subset graph '" + id + "' missing from a family");
        if (!(la->second > rb->second)) return false;
    }
    return true;
}

// Largest margin by which family a beats family b on some subset of relative
// size at least p: the ceil(p*k)-th largest per-graph difference. Positive
// values are advantages of a; the signed value is always returned.
inline double advantage(const DrawingFamily& a, const DrawingFamily& b, double p) {
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("relative size p must be in (0, 1]");
    auto diffs = detail::paired_differences(a, b);
    const auto k = static_cast<long long>(diffs.size());
    if (k == 0) throw std::invalid_argument("empty families");
    long long need = static_cast<long long>(std::ceil(p * static_cast<double>(k) - 1e-9));
    need = std::clamp(need, 1LL, k);
    std::sort(diffs.begin(), diffs.end(), std::greater<>());
    return diffs[need - 1];
}

struct AdvantagePoint {
    double p = 0.0;
    double delta = 0.0;  // degrees
};

// Advantage of b over a per grid value, the paper's "a vs b" reading:
// positive delta means b has that advantage over a.
inline std::vector<AdvantagePoint> advantage_curve(const DrawingFamily& a, const DrawingFamily& b,
                                                   std::span<const double> p_grid) {
    if (p_grid.empty()) throw std::invalid_argument("empty p grid");
    std::vector<AdvantagePoint> curve;
    curve.reserve(p_grid.size());
    for (double p : p_grid) curve.push_back({p, advantage(b, a, p)});
    return curve;
}

inline std::vector<double> default_p_grid() { return {0.1, 0.3, 0.5, 0.7, 0.9}; }

struct WelchResult {
    double t = 0.0;
    double p_value = 1.0;
    double degrees_of_freedom = 0.0;
};

// Welch's unequal-variance two-sample t-test, two-sided p-value.
inline WelchResult welch_t_test(std::span<const double> sample1, std::span<const double> sample2) {
    const auto n1 = static_cast<double>(sample1.size());
    const auto n2 = static_cast<double>(sample2.size());
    if (sample1.size() < 2 || sample2.size() < 2)
        throw std::invalid_argument("welch test needs at least two values per sample");

    const double m1 = std::accumulate(sample1.begin(), sample1.end(), 0.0) / n1;
    const double m2 = std::accumulate(sample2.begin(), sample2.end(), 0.0) / n2;
    double s1 = 0.0, s2 = 0.0;
    for (double v : sample1) s1 += (v - m1) * (v - m1);
    for (double v : sample2) s2 += (v - m2) * (v - m2);
    s1 /= n1 - 1.0;
    s2 /= n2 - 1.0;

    const double se1 = s1 / n1;
    const double se2 = s2 / n2;
    if (se1 + se2 == 0.0)
        throw std::domain_error("both samples have zero variance; t statistic undefined");

    const double t = (m1 - m2) / std::sqrt(se1 + se2);
    const double df = (se1 + se2) * (se1 + se2) /
                      (se1 * se1 / (n1 - 1.0) + se2 * se2 / (n2 - 1.0));
    const boost::math::students_t dist(df);
    const double p = 2.0 * boost::math::cdf(dist, -std::abs(t));
    return {t, p, df};
}

struct Summary {
    double min = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
};

// Order/central statistics; median of even-size input is the midpoint of the
// two central values.
inline Summary summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("cannot summarize an empty family");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t k = sorted.size();
    Summary s;
    s.min = sorted.front();
    s.max = sorted.back();
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(k);
    s.median = k % 2 == 1 ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
    return s;
}

}  // namespace crossangle
