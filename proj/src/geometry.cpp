#include "covhole/geometry.hpp"

#include <algorithm>

namespace covhole {

namespace {

// p on the closed segment [a, b]
bool on_segment(Point p, Point a, Point b) {
    return cross(a, b, p) == 0.0 &&
           std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool point_in_triangle(Point p, Point a, Point b, Point c) {
    double area2 = cross(a, b, c);
    if (area2 == 0.0) {
        // Degenerate: the hull collapses to a segment (or a point).
        return on_segment(p, a, b) || on_segment(p, b, c) || on_segment(p, a, c);
    }
    double d1 = cross(a, b, p);
    double d2 = cross(b, c, p);
    double d3 = cross(c, a, p);
    bool has_neg = (d1 < 0.0) || (d2 < 0.0) || (d3 < 0.0);
    bool has_pos = (d1 > 0.0) || (d2 > 0.0) || (d3 > 0.0);
    return !(has_neg && has_pos);
}

}  // namespace covhole
