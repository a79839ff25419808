#ifndef COVHOLE_DEPLOYMENT_HPP
#define COVHOLE_DEPLOYMENT_HPP

#include <cstdint>
#include <vector>

#include "covhole/geometry.hpp"
#include "covhole/rng.hpp"

namespace covhole {

struct Rect {
    double width = 0.0;
    double height = 0.0;
};

struct SensorNode {
    int id = 0;
    Point pos;
    bool is_fence = false;
};

/**
 * A sampled network instance: node positions plus the two radii.  Nodes are
 * sorted by id, fence nodes first.  Immutable once built; everything
 * downstream (complexes, grids, the detector) treats it as read-only.
 */
struct Deployment {
    std::vector<SensorNode> nodes;
    double r_s = 0.0;  // sensing radius
    double r_c = 0.0;  // communication radius
    Rect field;
    std::uint64_t seed = 0;

    double gamma() const { return r_c / r_s; }

    /** Index into nodes for an id; throws std::out_of_range for unknown ids. */
    int index_of(int id) const;
    const SensorNode& node(int id) const { return nodes[index_of(id)]; }
};

/** True iff p lies in the closed sensing disk of some node. */
bool is_covered(Point p, const Deployment& d);

/**
 * Homogeneous Poisson point process restricted to the closed ball of the
 * given radius around the origin.  Count ~ Poisson(intensity*pi*radius^2),
 * positions i.i.d. uniform via inverse-CDF radius (r = radius*sqrt(u)).
 */
std::vector<Point> sample_poisson_ball(double intensity, double radius, RngStream& rng);

/**
 * Fence ring plus Poisson interior.  Fence nodes sit at fence_spacing
 * intervals along the border starting at each corner (corners are not
 * duplicated); ids ascend, fence nodes first.  Requires
 * fence_spacing <= r_c so the ring stays connected.
 */
Deployment sample_deployment(Rect field, double intensity, double r_s, double r_c,
                             double fence_spacing, RngStream& rng);

}  // namespace covhole

#endif
