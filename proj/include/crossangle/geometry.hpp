#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace crossangle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point normalized(Point p) {
    double n = norm(p);
    return {p.x / n, p.y / n};
}

// Rotated 90 degrees counterclockwise.
constexpr Point perp(Point p) { return {-p.y, p.x}; }

struct Segment {
    Point a;
    Point b;

    Segment(Point a_, Point b_) : a(a_), b(b_) {
        if (a == b) throw std::invalid_argument("zero-length segment");
    }

    Point dir() const { return b - a; }
    double length() const { return norm(b - a); }
};

// Sign of cross(q-p, r-p). Values within 1e-12 relative noise count as
// collinear; on small-integer coordinates the cross product is exact and the
// threshold never fires.
inline int orientation(Point p, Point q, Point r) {
    const Point u = q - p;
    const Point v = r - p;
    const double c = cross(u, v);
    const double noise2 = 1e-24 * (dot(u, u) * dot(v, v));
    if (c * c <= noise2) return 0;
    return c > 0.0 ? 1 : -1;
}

inline bool properly_cross(const Segment& s1, const Segment& s2) {
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    if (o1 * o2 >= 0) return false;
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);
    return o3 * o4 < 0;
}

// Single interior crossing point of two segments, or nullopt. Shared
// endpoints, endpoint-on-interior contact and collinear overlap are not
// interior intersections.
inline std::optional<Point> interior_intersection(const Segment& s1, const Segment& s2) {
    if (!properly_cross(s1, s2)) return std::nullopt;
    const Point d1 = s1.dir();
    const Point d2 = s2.dir();
    const double t = cross(s2.a - s1.a, d2) / cross(d1, d2);
    return s1.a + t * d1;
}

// Acute (or right) angle between two direction vectors, in [0, pi/2].
inline double acute_angle(Point d1, Point d2) {
    return std::atan2(std::abs(cross(d1, d2)), std::abs(dot(d1, d2)));
}

// Smallest angle formed by two interiorly crossing segments, in (0, pi/2];
// exactly pi/2 for non-crossing pairs, by definition.
inline double crossing_angle(const Segment& s1, const Segment& s2) {
    if (!properly_cross(s1, s2)) return kHalfPi;
    return acute_angle(s1.dir(), s2.dir());
}

// Angle between the segment and the x-axis: atan(dy/dx), or -pi/2 for
// vertical segments. Independent of endpoint order.
inline double slope(const Segment& s) {
    const Point d = s.dir();
    if (d.x == 0.0) return -kHalfPi;
    return std::atan(d.y / d.x);
}

// True if p lies strictly inside segment s (collinear and strictly between
// the endpoints).
inline bool point_in_segment_interior(Point p, const Segment& s) {
    if (p == s.a || p == s.b) return false;
    if (orientation(s.a, s.b, p) != 0) return false;
    const Point d = s.dir();
    const double t = dot(p - s.a, d) / dot(d, d);
    return t > 0.0 && t < 1.0;
}

inline constexpr double degrees(double radians) { return radians * 180.0 / kPi; }
inline constexpr double radians(double deg) { return deg * kPi / 180.0; }

}  // namespace crossangle
