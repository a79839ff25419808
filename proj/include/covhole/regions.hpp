#ifndef COVHOLE_REGIONS_HPP
#define COVHOLE_REGIONS_HPP

#include <functional>
#include <span>
#include <vector>

#include "covhole/geometry.hpp"

namespace covhole {

/**
 * Geometry of the wedge regions behind the proportion bounds, in the frame
 * where the origin's closest node tau0 sits at polar (r0, pi).
 *
 * All constraints are closed disks and half-planes:
 *   A+            = H+ . B(tau0, r_c) . (B(O, r_c) \ B(O, r0)) . B(M2, r_c)
 *   S+(r0, t1)    = A+ restricted to polar angles below theta1
 *   S-(r0,r1,t1)  = H- . B(tau0, r_c) . (B(O, r_c) \ B(O, r0))
 *                      . {angle > theta1 - pi} . B(tau1, r_c)
 * with tau1 = (r1, theta1) and M2 = (r0, -alpha0), the lower intersection
 * of C(O, r0) with C(tau0, r_c); for r0 <= r_c/2 the circles do not meet
 * and M2 degenerates to (r0, 0).
 */
struct RegionQuery {
    double r0 = 0.0;      // distance of the closest node
    double r1 = 0.0;      // radial coordinate of tau1 (r0 <= r1)
    double theta1 = 0.0;  // polar angle of tau1
    double r_c = 0.0;     // communication radius

    void validate() const;  // throws std::domain_error
};

/** Lower angular limit of the wedge: 2 acos(r_c / (2 r0)), clamped to 0. */
double region_alpha0(double r0, double r_c);

/** Upper angular limit: 2 asin(min(1, r_c/(2 r0))) - alpha0. */
double region_alpha1(double r0, double r_c);

/** Position of M2 for the given closest-node distance. */
Point region_m2(double r0, double r_c);

/**
 * Exit radius along the ray at polar angle theta out of the closed disk
 * B(center, r_c); requires |center| <= r_c so the segment starts at O.
 */
double ray_exit(Point center, double r_c, double theta);

/** Radial upper limit of A+ at angle theta: min of both ball exits and r_c. */
double region_r1_max(double r0, double theta, double r_c);

/** Membership predicates, straight from the set definitions. */
bool in_s_plus(Point p, double r0, double theta1, double r_c);
bool in_s_minus(Point p, const RegionQuery& q);

/** |S+| by the piecewise closed form. */
double region_area_s_plus(const RegionQuery& q);

/**
 * |S-| by angular quadrature of exact radial sections (each constraint cuts
 * a single interval out of every ray from the origin).  Relative accuracy
 * target 1e-4.
 */
double region_area_s_minus(const RegionQuery& q);

/**
 * |S-(r0, r1_k, theta1)| for a batch of r1 values in one angular sweep;
 * panels controls the composite Gauss-Legendre resolution.  Used by the
 * bound integrals, which need whole r1 profiles per (r0, theta1) node.
 */
std::vector<double> region_area_s_minus_profile(double r0, double theta1, double r_c,
                                                std::span<const double> r1_values,
                                                int panels);

/** Generic adaptive Simpson on [a, b]. */
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol);

}  // namespace covhole

#endif
