#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace chainkit {

// Global comparison tolerances. All geometric predicates derive their
// cutoffs from these two values, scaled by the magnitude of the inputs.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double dist(Point p, Point q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Absolute floor for distance comparisons near the given points.
double dist_floor(std::initializer_list<Point> pts);

struct Segment {
    Point a;
    Point b;
};

enum class Orientation { Left, Right, Collinear };

// Doubled signed area of the triangle (p, q, r); positive when r lies to
// the left of the directed line p->q.
inline double signed_area2(Point p, Point q, Point r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// Area tolerance used to snap near-zero signed areas to Collinear.
double orientation_tol(Point p, Point q, Point r);

Orientation orientation(Point p, Point q, Point r);
Orientation orientation(Point p, Point q, Point r, double tol_abs);

// True when p lies on segment [a, b] within tolerance.
bool on_segment(Point p, Point a, Point b);

enum class IntersectPolicy {
    Strict,                // any common point counts
    IgnoreSharedEndpoint,  // contact at exactly one shared endpoint is allowed
};

bool segments_intersect(const Segment& s1, const Segment& s2, IntersectPolicy policy);

// Ellipse as the locus of points whose focal distance sum is at most
// c * |f1 f2| (closed containment).
struct FocalEllipse {
    Point f1;
    Point f2;
    double c = 1.0;
};

// Threshold on the focal distance sum implied by the ellipse, including the
// relative slack and the degenerate point-ellipse floor. Shared by the
// direct predicate and the range-search kernels so all paths agree exactly.
double ellipse_sum_limit(const FocalEllipse& e, double tol_rel = kRelTol);

bool ellipse_contains(const FocalEllipse& e, Point p, double tol_rel = kRelTol);

// Vertices of the convex hull in counterclockwise order, starting at the
// lexicographically smallest point; collinear boundary points are removed.
std::vector<Point> convex_hull(std::span<const Point> points);

}  // namespace chainkit
