#include "chainkit/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "chainkit/errors.hpp"

namespace chainkit {

double dist_floor(std::initializer_list<Point> pts) {
    double scale = 1.0;
    for (Point p : pts) {
        scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
    }
    return kAbsTol * scale;
}

double orientation_tol(Point p, Point q, Point r) {
    double scale = 1.0;
    for (Point v : {p, q, r}) {
        scale = std::max({scale, std::fabs(v.x), std::fabs(v.y)});
    }
    // signed_area2 scales quadratically with the coordinates
    return kAbsTol * scale * scale;
}

Orientation orientation(Point p, Point q, Point r) {
    return orientation(p, q, r, orientation_tol(p, q, r));
}

Orientation orientation(Point p, Point q, Point r, double tol_abs) {
    const double area = signed_area2(p, q, r);
    if (std::fabs(area) <= tol_abs) return Orientation::Collinear;
    return area > 0 ? Orientation::Left : Orientation::Right;
}

bool on_segment(Point p, Point a, Point b) {
    if (orientation(a, b, p) != Orientation::Collinear) return false;
    const double pad = dist_floor({p, a, b});
    return p.x >= std::min(a.x, b.x) - pad && p.x <= std::max(a.x, b.x) + pad &&
           p.y >= std::min(a.y, b.y) - pad && p.y <= std::max(a.y, b.y) + pad;
}

namespace {

bool strict_intersect(const Segment& s1, const Segment& s2) {
    const Point p1 = s1.a, p2 = s1.b, p3 = s2.a, p4 = s2.b;
    const Orientation o1 = orientation(p1, p2, p3);
    const Orientation o2 = orientation(p1, p2, p4);
    const Orientation o3 = orientation(p3, p4, p1);
    const Orientation o4 = orientation(p3, p4, p2);

    if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
        o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
        return true;  // proper crossing
    }
    if (o1 == Orientation::Collinear && on_segment(p3, p1, p2)) return true;
    if (o2 == Orientation::Collinear && on_segment(p4, p1, p2)) return true;
    if (o3 == Orientation::Collinear && on_segment(p1, p3, p4)) return true;
    if (o4 == Orientation::Collinear && on_segment(p2, p3, p4)) return true;
    return false;
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2, IntersectPolicy policy) {
    // cheap bounding-box reject
    const double pad = dist_floor({s1.a, s1.b, s2.a, s2.b});
    if (std::max(s1.a.x, s1.b.x) + pad < std::min(s2.a.x, s2.b.x) ||
        std::max(s2.a.x, s2.b.x) + pad < std::min(s1.a.x, s1.b.x) ||
        std::max(s1.a.y, s1.b.y) + pad < std::min(s2.a.y, s2.b.y) ||
        std::max(s2.a.y, s2.b.y) + pad < std::min(s1.a.y, s1.b.y)) {
        return false;
    }

    if (policy == IntersectPolicy::IgnoreSharedEndpoint) {
        // Shared endpoints are matched exactly; chain vertices are stored once
        // and reused bit-for-bit by adjacent segments.
        Point shared{};
        int shared_pairs = 0;
        bool two_distinct = false;
        for (Point u : {s1.a, s1.b}) {
            for (Point v : {s2.a, s2.b}) {
                if (u == v) {
                    if (shared_pairs > 0 && !(u == shared)) two_distinct = true;
                    shared = u;
                    ++shared_pairs;
                }
            }
        }
        if (shared_pairs > 0) {
            if (two_distinct) return true;  // segments coincide over a positive length
            const Point u = (s1.a == shared) ? s1.b : s1.a;
            const Point v = (s2.a == shared) ? s2.b : s2.a;
            if (!(u == shared) && on_segment(u, s2.a, s2.b)) return true;
            if (!(v == shared) && on_segment(v, s1.a, s1.b)) return true;
            return false;  // contact is exactly the one shared endpoint
        }
    }
    return strict_intersect(s1, s2);
}

double ellipse_sum_limit(const FocalEllipse& e, double tol_rel) {
    const double f = dist(e.f1, e.f2);
    const double floor = dist_floor({e.f1, e.f2});
    if (f <= floor) return floor;  // degenerate point ellipse
    return e.c * f * (1.0 + tol_rel);
}

bool ellipse_contains(const FocalEllipse& e, Point p, double tol_rel) {
    const double limit = ellipse_sum_limit(e, tol_rel);
    return dist(p, e.f1) + dist(p, e.f2) <= limit;
}

std::vector<Point> convex_hull(std::span<const Point> points) {
    if (points.empty()) throw InvalidParamsError("convex_hull: empty point set");

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    // Andrew's monotone chain; pops collinear-within-tolerance turns.
    std::vector<Point> hull(2 * pts.size());
    std::size_t h = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {  // lower hull
        while (h >= 2 &&
               signed_area2(hull[h - 2], hull[h - 1], pts[i]) <=
                   orientation_tol(hull[h - 2], hull[h - 1], pts[i])) {
            --h;
        }
        hull[h++] = pts[i];
    }
    const std::size_t lower = h + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper hull
        while (h >= lower &&
               signed_area2(hull[h - 2], hull[h - 1], pts[i]) <=
                   orientation_tol(hull[h - 2], hull[h - 1], pts[i])) {
            --h;
        }
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);  // last point repeats the first
    if (hull.size() < 2) {
        // all points collapsed within tolerance; report the two extremes
        return {pts.front(), pts.back()};
    }
    return hull;
}

}  // namespace chainkit
