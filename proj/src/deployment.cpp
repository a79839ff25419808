#include "covhole/deployment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace covhole {

int Deployment::index_of(int id) const {
    // Nodes are sorted by id; binary search.
    int lo = 0;
    int hi = static_cast<int>(nodes.size()) - 1;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (nodes[mid].id == id) return mid;
        if (nodes[mid].id < id) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    throw std::out_of_range("unknown node id " + std::to_string(id));
}

bool is_covered(Point p, const Deployment& d) {
    double rs2 = d.r_s * d.r_s;
    for (const auto& n : d.nodes) {
        if (dist_sq(p, n.pos) <= rs2) return true;
    }
    return false;
}

std::vector<Point> sample_poisson_ball(double intensity, double radius, RngStream& rng) {
    if (!(intensity >= 0.0) || !std::isfinite(intensity) || !(radius > 0.0) ||
        !std::isfinite(radius)) {
        throw std::invalid_argument("sample_poisson_ball: bad intensity or radius");
    }
    long count = rng.poisson(intensity * std::numbers::pi * radius * radius);
    std::vector<Point> points;
    points.reserve(count);
    for (long i = 0; i < count; ++i) {
        double r = radius * std::sqrt(rng.uniform());
        double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        points.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return points;
}

namespace {

void fence_side(std::vector<Point>& out, Point corner, Point dir, double length, double spacing) {
    for (double t = 0.0; t < length - 1e-12; t += spacing) {
        out.push_back(corner + t * dir);
    }
}

}  // namespace

Deployment sample_deployment(Rect field, double intensity, double r_s, double r_c,
                             double fence_spacing, RngStream& rng) {
    if (!(r_s > 0.0) || !(r_c > 0.0) || !(field.width > 0.0) || !(field.height > 0.0)) {
        throw std::invalid_argument("sample_deployment: radii and field must be positive");
    }
    if (!(fence_spacing > 0.0) || fence_spacing > r_c) {
        throw std::invalid_argument(
            "sample_deployment: fence_spacing must be in (0, r_c] to keep the ring connected");
    }
    if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
        throw std::invalid_argument("sample_deployment: bad intensity");
    }

    // Walk the border counter-clockwise; each side contributes its starting
    // corner and spacing-aligned points short of the next corner.
    std::vector<Point> fence;
    const double w = field.width;
    const double h = field.height;
    fence_side(fence, {0.0, 0.0}, {1.0, 0.0}, w, fence_spacing);
    fence_side(fence, {w, 0.0}, {0.0, 1.0}, h, fence_spacing);
    fence_side(fence, {w, h}, {-1.0, 0.0}, w, fence_spacing);
    fence_side(fence, {0.0, h}, {0.0, -1.0}, h, fence_spacing);

    Deployment d;
    d.r_s = r_s;
    d.r_c = r_c;
    d.field = field;

    int next_id = 0;
    for (const auto& p : fence) {
        d.nodes.push_back({next_id++, p, true});
    }
    long internal = rng.poisson(intensity * w * h);
    for (long i = 0; i < internal; ++i) {
        Point p{rng.uniform(0.0, w), rng.uniform(0.0, h)};
        d.nodes.push_back({next_id++, p, false});
    }
    return d;
}

}  // namespace covhole
