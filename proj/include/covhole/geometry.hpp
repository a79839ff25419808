#ifndef COVHOLE_GEOMETRY_HPP
#define COVHOLE_GEOMETRY_HPP

#include <cmath>

namespace covhole {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

/** z-component of (b - a) x (c - a). */
inline double cross(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline double dist_sq(Point a, Point b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(Point a, Point b) { return std::sqrt(dist_sq(a, b)); }

inline double norm_sq(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::sqrt(norm_sq(p)); }

/**
 * Closed-hull membership test.  Distance comparisons are exact; degenerate
 * (collinear) triangles contain exactly the points of their spanning
 * segment.
 */
bool point_in_triangle(Point p, Point a, Point b, Point c);

}  // namespace covhole

#endif
