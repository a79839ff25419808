#include "covhole/regions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace covhole {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// 16-point Gauss-Legendre rule on [-1, 1]
constexpr int kGlOrder = 16;
constexpr double kGlNodes[kGlOrder] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGlWeights[kGlOrder] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double polar_angle(Point p) { return std::atan2(p.y, p.x); }

}  // namespace

void RegionQuery::validate() const {
    if (!(r_c > 0.0) || !std::isfinite(r_c)) throw std::domain_error("RegionQuery: bad r_c");
    if (!(r0 > 0.0) || r0 > r_c / kSqrt3 * (1.0 + 1e-12)) {
        throw std::domain_error("RegionQuery: r0 outside (0, r_c/sqrt(3)]");
    }
    if (r1 < r0 * (1.0 - 1e-12) || r1 > r_c * (1.0 + 1e-12)) {
        throw std::domain_error("RegionQuery: r1 outside [r0, r_c]");
    }
    if (theta1 < -1e-12 || theta1 > kPi + 1e-12) {
        throw std::domain_error("RegionQuery: theta1 outside [0, pi]");
    }
}

double region_alpha0(double r0, double r_c) {
    double x = r_c / (2.0 * r0);
    if (x >= 1.0) return 0.0;
    return 2.0 * std::acos(x);
}

double region_alpha1(double r0, double r_c) {
    double x = std::min(1.0, r_c / (2.0 * r0));
    return 2.0 * std::asin(x) - region_alpha0(r0, r_c);
}

Point region_m2(double r0, double r_c) {
    double a0 = region_alpha0(r0, r_c);
    return {r0 * std::cos(a0), -r0 * std::sin(a0)};
}

double ray_exit(Point center, double r_c, double theta) {
    double uc = center.x * std::cos(theta) + center.y * std::sin(theta);
    double disc = uc * uc + r_c * r_c - norm_sq(center);
    if (disc < 0.0) disc = 0.0;  // |center| <= r_c keeps this non-negative up to rounding
    return uc + std::sqrt(disc);
}

double region_r1_max(double r0, double theta, double r_c) {
    double lim0 = ray_exit({-r0, 0.0}, r_c, theta);
    double lim2 = ray_exit(region_m2(r0, r_c), r_c, theta);
    return std::min({r_c, lim0, lim2});
}

bool in_s_plus(Point p, double r0, double theta1, double r_c) {
    if (p.y <= 0.0) return false;  // open upper half-plane
    double r = norm(p);
    if (r < r0 || r > r_c) return false;
    if (dist(p, {-r0, 0.0}) > r_c) return false;
    if (dist(p, region_m2(r0, r_c)) > r_c) return false;
    return polar_angle(p) < theta1;
}

bool in_s_minus(Point p, const RegionQuery& q) {
    if (p.y >= 0.0) return false;  // open lower half-plane
    double r = norm(p);
    if (r < q.r0 || r > q.r_c) return false;
    if (dist(p, {-q.r0, 0.0}) > q.r_c) return false;
    Point tau1{q.r1 * std::cos(q.theta1), q.r1 * std::sin(q.theta1)};
    if (dist(p, tau1) > q.r_c) return false;
    return polar_angle(p) > q.theta1 - kPi;
}

namespace {

// antiderivative in theta of (exit radius of B(tau0, r_c))^2 / 2 - r0^2 / 2
double wedge_primitive(double r0, double r_c, double theta) {
    double s = std::sin(theta);
    double c = std::cos(theta);
    double root = std::sqrt(r_c * r_c - r0 * r0 * s * s);
    return 0.5 * r0 * r0 * s * c + 0.5 * r_c * r_c * theta -
           0.5 * r_c * r_c * std::asin(r0 * s / r_c) - 0.5 * r0 * s * root -
           0.5 * r0 * r0 * theta;
}

}  // namespace

double region_area_s_plus(const RegionQuery& q) {
    q.validate();
    double a0 = region_alpha0(q.r0, q.r_c);
    double a1 = region_alpha1(q.r0, q.r_c);
    double theta1 = q.theta1;
    if (theta1 < a0 - 1e-9 || theta1 > a1 + 1e-9) {
        throw std::domain_error("region_area_s_plus: theta1 outside [alpha0, alpha1]");
    }
    theta1 = std::clamp(theta1, a0, a1);

    // Below the symmetry axis of the two constraint balls only B(tau0, r_c)
    // binds and the closed form applies directly; above it, reflect.
    double mid = kPi / 2.0 - a0 / 2.0;
    auto lower_branch = [&](double t) {
        return wedge_primitive(q.r0, q.r_c, t) - wedge_primitive(q.r0, q.r_c, a0);
    };
    if (theta1 <= mid) return std::max(0.0, lower_branch(theta1));
    double full = 2.0 * lower_branch(mid);
    double rest = lower_branch(kPi - a0 - theta1);
    return std::max(0.0, full - rest);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol) {
    struct Frame {
        double a, b, fa, fm, fb, whole, tol;
        int depth;
    };
    auto simpson = [](double fa, double fm, double fb, double h) {
        return h / 6.0 * (fa + 4.0 * fm + fb);
    };
    double m0 = 0.5 * (a + b);
    double fa = f(a), fm = f(m0), fb = f(b);
    double whole = simpson(fa, fm, fb, b - a);
    double tol0 = std::max(abs_tol, rel_tol * std::abs(whole));
    std::vector<Frame> stack{{a, b, fa, fm, fb, whole, tol0, 0}};
    double total = 0.0;
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        double m = 0.5 * (fr.a + fr.b);
        double lm = 0.5 * (fr.a + m);
        double rm = 0.5 * (m + fr.b);
        double flm = f(lm), frm = f(rm);
        double left = simpson(fr.fa, flm, fr.fm, m - fr.a);
        double right = simpson(fr.fm, frm, fr.fb, fr.b - m);
        double err = left + right - fr.whole;
        if (fr.depth >= 40 || std::abs(err) <= 15.0 * fr.tol) {
            total += left + right + err / 15.0;
        } else {
            stack.push_back({fr.a, m, fr.fa, flm, fr.fm, left, 0.5 * fr.tol, fr.depth + 1});
            stack.push_back({m, fr.b, fr.fm, frm, fr.fb, right, 0.5 * fr.tol, fr.depth + 1});
        }
    }
    return total;
}

namespace {

// angular half-width around theta1 where the inner-annulus point (r0, phi)
// still lies in B(tau1, r_c); sections vanish outside it
double tau1_support_halfwidth(double r0, double r1, double r_c) {
    double c = (r0 * r0 + r1 * r1 - r_c * r_c) / (2.0 * r0 * r1);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

double region_area_s_minus(const RegionQuery& q) {
    q.validate();
    Point tau0{-q.r0, 0.0};
    Point tau1{q.r1 * std::cos(q.theta1), q.r1 * std::sin(q.theta1)};
    auto section = [&](double phi) {
        double m = std::min({q.r_c, ray_exit(tau0, q.r_c, phi), ray_exit(tau1, q.r_c, phi)});
        if (m <= q.r0) return 0.0;
        return 0.5 * (m * m - q.r0 * q.r0);
    };
    // Sections are empty where either ball misses the annulus: the tau0
    // ball only reaches past r0 below -alpha0, the tau1 ball only within
    // its angular half-width of theta1.
    double lo = std::max(q.theta1 - kPi, q.theta1 - tau1_support_halfwidth(q.r0, q.r1, q.r_c));
    double hi = -region_alpha0(q.r0, q.r_c);
    if (lo >= hi) return 0.0;
    const int seed_panels = 32;
    double total = 0.0;
    double w = (hi - lo) / seed_panels;
    for (int p = 0; p < seed_panels; ++p) {
        total += adaptive_simpson(section, lo + p * w, lo + (p + 1) * w, 1e-6,
                                  1e-10 * q.r_c * q.r_c / seed_panels);
    }
    return total;
}

std::vector<double> region_area_s_minus_profile(double r0, double theta1, double r_c,
                                                std::span<const double> r1_values,
                                                int panels) {
    std::vector<double> areas(r1_values.size(), 0.0);
    if (r1_values.empty()) return areas;
    // supports are nested in r1; sweep the widest one
    double r1_min = *std::min_element(r1_values.begin(), r1_values.end());
    double lo = std::max(theta1 - kPi, theta1 - tau1_support_halfwidth(r0, r1_min, r_c));
    double hi = -region_alpha0(r0, r_c);
    if (lo >= hi) return areas;

    Point tau0{-r0, 0.0};
    const double r02 = r0 * r0;
    const double rc2 = r_c * r_c;
    const double panel_w = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        double a = lo + p * panel_w;
        for (int g = 0; g < kGlOrder; ++g) {
            double phi = a + 0.5 * panel_w * (kGlNodes[g] + 1.0);
            double w = 0.5 * panel_w * kGlWeights[g];
            double base = std::min(r_c, ray_exit(tau0, r_c, phi));
            if (base <= r0) continue;
            double cd = std::cos(theta1 - phi);
            double sd2 = 1.0 - cd * cd;
            for (std::size_t k = 0; k < r1_values.size(); ++k) {
                double r1 = r1_values[k];
                double disc = rc2 - r1 * r1 * sd2;
                if (disc < 0.0) disc = 0.0;  // r1 <= r_c up to rounding
                double m = std::min(base, r1 * cd + std::sqrt(disc));
                if (m > r0) areas[k] += w * 0.5 * (m * m - r02);
            }
        }
    }
    return areas;
}

}  // namespace covhole
