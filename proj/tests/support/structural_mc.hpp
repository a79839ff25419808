// Simulates the exact events whose probabilities the bound integrals
// compute: condition on the closest node tau0, rotate it to angle pi, find
// the minimum-angle node tau1 in A+, and ask for company in S-.  The
// resulting frequencies must match the quadrature values to Monte Carlo
// accuracy, which pins the region definitions and the integral code
// against each other end to end.
#ifndef COVHOLE_TESTS_STRUCTURAL_MC_HPP
#define COVHOLE_TESTS_STRUCTURAL_MC_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "covhole/bounds.hpp"
#include "covhole/regions.hpp"
#include "covhole/rng.hpp"

namespace covhole::testing {

struct StructuralRates {
    double lower = 0.0;
    double upper = 0.0;
    double sigma_lower = 0.0;
    double sigma_upper = 0.0;
};

inline StructuralRates structural_bound_mc(double lambda, double gamma, double r_s, long trials,
                                           std::uint64_t seed) {
    const double r_c = gamma * r_s;
    const double mean = lambda * std::numbers::pi * r_c * r_c;
    long lower_hits = 0;
    long upper_hits = 0;
    std::vector<Point> pts;
    for (long t = 0; t < trials; ++t) {
        RngStream rng(seed, static_cast<std::uint64_t>(t));
        long n = rng.poisson(mean);
        pts.clear();
        for (long i = 0; i < n; ++i) {
            double r = r_c * std::sqrt(rng.uniform());
            double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
            pts.push_back({r * std::cos(ang), r * std::sin(ang)});
        }
        if (pts.empty()) continue;
        std::size_t closest = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (norm_sq(pts[i]) < norm_sq(pts[closest])) closest = i;
        }
        double d0 = norm(pts[closest]);
        if (d0 <= r_s || d0 > r_c / std::numbers::sqrt3) continue;

        // rotate tau0 onto angle pi
        double rot = std::numbers::pi - std::atan2(pts[closest].y, pts[closest].x);
        double c = std::cos(rot), s = std::sin(rot);
        std::vector<Point> rp(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            rp[i] = {c * pts[i].x - s * pts[i].y, s * pts[i].x + c * pts[i].y};
        }

        // tau1: minimum polar angle member of A+ (theta1 = pi admits all of A+)
        int tau1 = -1;
        double best_angle = 1e300;
        for (std::size_t i = 0; i < rp.size(); ++i) {
            if (i == closest) continue;
            if (!in_s_plus(rp[i], d0, std::numbers::pi, r_c)) continue;
            double ang = std::atan2(rp[i].y, rp[i].x);
            if (ang < best_angle) {
                best_angle = ang;
                tau1 = static_cast<int>(i);
            }
        }
        if (tau1 < 0) continue;
        double d1 = norm(rp[tau1]);

        RegionQuery lower_q{d0, d1, best_angle, r_c};
        RegionQuery upper_q{d0, d0, best_angle, r_c};
        bool lower_hit = false;
        bool upper_hit = false;
        for (std::size_t i = 0; i < rp.size() && !(lower_hit && upper_hit); ++i) {
            if (!lower_hit && in_s_minus(rp[i], lower_q)) lower_hit = true;
            if (!upper_hit && in_s_minus(rp[i], upper_q)) upper_hit = true;
        }
        if (lower_hit) ++lower_hits;
        if (upper_hit) ++upper_hits;
    }
    StructuralRates rates;
    rates.lower = static_cast<double>(lower_hits) / trials;
    rates.upper = static_cast<double>(upper_hits) / trials;
    rates.sigma_lower = std::sqrt(rates.lower * (1.0 - rates.lower) / trials);
    rates.sigma_upper = std::sqrt(rates.upper * (1.0 - rates.upper) / trials);
    return rates;
}

}  // namespace covhole::testing

#endif
