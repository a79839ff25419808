// Membership-based area integrators for the wedge regions.  These only use
// the raw set-membership predicates (every constraint is one radial
// interval along a ray through the origin), so they share no algebra with
// the closed form or the production quadrature they check.
#ifndef COVHOLE_TESTS_REGION_ORACLES_HPP
#define COVHOLE_TESTS_REGION_ORACLES_HPP

#include <cmath>
#include <functional>

#include "covhole/regions.hpp"
#include "covhole/rng.hpp"

namespace covhole::testing {

// largest radius in [r_lo, r_hi] where pred(radius, angle) holds, assuming
// a single true-interval starting at r_lo
inline double radial_limit_by_bisection(const std::function<bool(double, double)>& pred,
                                        double phi, double r_lo, double r_hi) {
    if (!pred(r_lo * (1.0 + 1e-13) + 1e-13, phi)) return r_lo;
    if (pred(r_hi, phi)) return r_hi;
    double lo = r_lo, hi = r_hi;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (pred(mid, phi) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// composite-Simpson sweep of half-section areas over [phi_lo, phi_hi];
// endpoint angles are nudged inward so strict half-plane inequalities in
// the predicates do not zero out the boundary samples
inline double membership_area(const std::function<bool(double, double)>& pred, double phi_lo,
                              double phi_hi, double r_lo, double r_hi, int subdivisions = 4096) {
    if (phi_hi <= phi_lo) return 0.0;
    double nudge = (phi_hi - phi_lo) * 1e-12;
    auto f = [&](double phi) {
        phi = std::min(std::max(phi, phi_lo + nudge), phi_hi - nudge);
        double r = radial_limit_by_bisection(pred, phi, r_lo, r_hi);
        return 0.5 * (r * r - r_lo * r_lo);
    };
    int n = subdivisions * 2;  // even count for Simpson
    double h = (phi_hi - phi_lo) / n;
    double sum = f(phi_lo) + f(phi_hi);
    for (int i = 1; i < n; ++i) {
        sum += f(phi_lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

inline double oracle_area_s_plus(double r0, double theta1, double r_c, int subdivisions = 4096) {
    auto pred = [&](double r, double phi) {
        return in_s_plus({r * std::cos(phi), r * std::sin(phi)}, r0, theta1, r_c);
    };
    double a0 = region_alpha0(r0, r_c);
    return membership_area(pred, a0, theta1, r0, r_c, subdivisions);
}

inline double oracle_area_s_minus(const RegionQuery& q, int subdivisions = 4096) {
    auto pred = [&](double r, double phi) {
        return in_s_minus({r * std::cos(phi), r * std::sin(phi)}, q);
    };
    return membership_area(pred, q.theta1 - 3.14159265358979323846, 0.0, q.r0, q.r_c,
                           subdivisions);
}

// plain rejection sampling over the bounding half-annulus
inline double rejection_area_s_minus(const RegionQuery& q, long samples, RngStream& rng,
                                     double* stddev_out = nullptr) {
    long hits = 0;
    for (long i = 0; i < samples; ++i) {
        double r = std::sqrt(rng.uniform(q.r0 * q.r0, q.r_c * q.r_c));
        double phi = rng.uniform(-3.14159265358979323846, 0.0);
        if (in_s_minus({r * std::cos(phi), r * std::sin(phi)}, q)) ++hits;
    }
    double box = 0.5 * 3.14159265358979323846 * (q.r_c * q.r_c - q.r0 * q.r0);
    double p = static_cast<double>(hits) / samples;
    if (stddev_out) *stddev_out = box * std::sqrt(p * (1.0 - p) / samples);
    return box * p;
}

}  // namespace covhole::testing

#endif
