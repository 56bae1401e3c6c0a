#pragma once

#include <set>
#include <utility>
#include <vector>

#include "crossangle/graph.hpp"
#include "crossangle/layout.hpp"
#include "crossangle/rng.hpp"

namespace test_support {

using namespace crossangle;

// Random simple graph with exactly m edges (m capped at n choose 2).
inline Graph random_graph(int n, int m, Rng& rng) {
    const long long cap = static_cast<long long>(n) * (n - 1) / 2;
    m = static_cast<int>(std::min<long long>(m, cap));
    std::set<std::pair<int, int>> picked;
    while (static_cast<int>(picked.size()) < m) {
        int u = static_cast<int>(rng.index(n));
        int v = static_cast<int>(rng.index(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        picked.insert({u, v});
    }
    return make_graph(n, {picked.begin(), picked.end()});
}

// Random connected simple graph: a random spanning tree plus random extras
// up to m edges total.
inline Graph random_connected_graph(int n, int m, Rng& rng) {
    std::set<std::pair<int, int>> picked;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    for (int i = 1; i < n; ++i) {
        int u = order[i];
        int v = order[rng.index(i)];
        if (u > v) std::swap(u, v);
        picked.insert({u, v});
    }
    const long long cap = static_cast<long long>(n) * (n - 1) / 2;
    m = static_cast<int>(std::min<long long>(std::max<long long>(m, n - 1), cap));
    while (static_cast<int>(picked.size()) < m) {
        int u = static_cast<int>(rng.index(n));
        int v = static_cast<int>(rng.index(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        picked.insert({u, v});
    }
    return make_graph(n, {picked.begin(), picked.end()});
}

inline Drawing random_drawing(const Graph& g, Rng& rng, double side = 1000.0) {
    return random_layout(g, side, rng);
}

inline Drawing random_instance(int n, int m, Rng& rng, double side = 1000.0) {
    const Graph g = random_graph(n, m, rng);
    return random_drawing(g, rng, side);
}

}  // namespace test_support
