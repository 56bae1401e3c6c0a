#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crossangle/geometry.hpp"

namespace crossangle {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph: vertex ids 0..n-1, edges stored as (u, v) with
// u < v, no self-loops, no duplicates. Immutable after construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int m() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    // Edge ids incident to each vertex.
    std::vector<std::vector<int>> incident_edges() const {
        std::vector<std::vector<int>> inc(n);
        for (int e = 0; e < m(); ++e) {
            inc[edges[e].first].push_back(e);
            inc[edges[e].second].push_back(e);
        }
        return inc;
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
    }

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Validates and normalizes an edge list into a Graph.
inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ValidationError("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") references a vertex outside [0, " + std::to_string(n) + ")");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ValidationError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    return Graph{n, std::move(edges)};
}

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline long long parse_int(const std::string& tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
    return value;
}

inline double parse_real(const std::string& tok, int line_no) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected number, got '" + tok + "'");
    return value;
}

// Shortest decimal form that parses back to the same double.
inline std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace detail

// Format: line 1 "n m", then m lines "u v" with 0-based vertex ids.
inline Graph load_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            auto toks = detail::tokenize(line);
            if (!toks.empty()) return toks;
        }
        throw ParseError("line " + std::to_string(line_no + 1) + ": unexpected end of input");
    };

    auto header = next_line();
    if (header.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n m' header");
    const long long n = detail::parse_int(header[0], line_no);
    const long long m = detail::parse_int(header[1], line_no);
    if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative header counts");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        auto toks = next_line();
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        edges.emplace_back(static_cast<int>(detail::parse_int(toks[0], line_no)),
                           static_cast<int>(detail::parse_int(toks[1], line_no)));
    }
    return make_graph(static_cast<int>(n), std::move(edges));
}

inline void save_graph(const Graph& g, std::ostream& out) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

// Straight-line drawing: one point per vertex. Valid drawings have finite
// coordinates, pairwise distinct vertex positions, and no vertex in the
// interior of a non-incident edge.
struct Drawing {
    Graph graph;
    std::vector<Point> coords;

    Segment segment(int e) const {
        auto [u, v] = graph.edges[e];
        return Segment(coords[u], coords[v]);
    }

    friend bool operator==(const Drawing&, const Drawing&) = default;
};

// Returns an error message, or empty string if the drawing is valid.
inline std::string drawing_violation(const Drawing& d) {
    const int n = d.graph.n;
    if (static_cast<int>(d.coords.size()) != n) return "coordinate count does not match vertex count";
    for (int v = 0; v < n; ++v)
        if (!finite(d.coords[v])) return "non-finite coordinate at vertex " + std::to_string(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (d.coords[u] == d.coords[v])
                return "vertices " + std::to_string(u) + " and " + std::to_string(v) + " coincide";
    for (int e = 0; e < d.graph.m(); ++e) {
        const auto [a, b] = d.graph.edges[e];
        const Segment s = d.segment(e);
        for (int v = 0; v < n; ++v) {
            if (v == a || v == b) continue;
            if (point_in_segment_interior(d.coords[v], s))
                return "vertex " + std::to_string(v) + " lies inside edge (" + std::to_string(a) +
                       ", " + std::to_string(b) + ")";
        }
    }
    return {};
}

inline bool drawing_valid(const Drawing& d) { return drawing_violation(d).empty(); }

inline void validate_drawing(const Drawing& d) {
    if (auto msg = drawing_violation(d); !msg.empty()) throw ValidationError(msg);
}

// Format: n lines "id x y"; ids must be a permutation of 0..n-1.
inline Drawing load_drawing(const Graph& g, std::istream& in) {
    std::vector<Point> coords(g.n);
    std::vector<char> seen(g.n, 0);
    std::string line;
    int line_no = 0;
    int rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'id x y'");
        const long long id = detail::parse_int(toks[0], line_no);
        if (id < 0 || id >= g.n)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
        if (seen[id])
            throw ParseError("line " + std::to_string(line_no) + ": duplicate vertex id " + std::to_string(id));
        seen[id] = 1;
        coords[id] = {detail::parse_real(toks[1], line_no), detail::parse_real(toks[2], line_no)};
        ++rows;
    }
    if (rows != g.n)
        throw ParseError("expected " + std::to_string(g.n) + " coordinate rows, got " + std::to_string(rows));
    Drawing d{g, std::move(coords)};
    validate_drawing(d);
    return d;
}

inline void save_drawing(const Drawing& d, std::ostream& out) {
    for (int v = 0; v < d.graph.n; ++v)
        out << v << ' ' << detail::format_real(d.coords[v].x) << ' '
            << detail::format_real(d.coords[v].y) << '\n';
}

// Number of unordered edge pairs with an interior intersection.
inline long long crossing_count(const Drawing& d) {
    const int m = d.graph.m();
    long long count = 0;
    for (int e = 0; e < m; ++e) {
        const Segment se = d.segment(e);
        for (int f = e + 1; f < m; ++f)
            if (properly_cross(se, d.segment(f))) ++count;
    }
    return count;
}

// Minimum crossing angle of the whole drawing, pi/2 if crossing-free.
inline double crossing_angle_of(const Drawing& d) {
    const int m = d.graph.m();
    double best = kHalfPi;
    for (int e = 0; e < m; ++e) {
        const Segment se = d.segment(e);
        for (int f = e + 1; f < m; ++f)
            best = std::min(best, crossing_angle(se, d.segment(f)));
    }
    return best;
}

}  // namespace crossangle
