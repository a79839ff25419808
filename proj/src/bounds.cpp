#include "covhole/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "covhole/parallel.hpp"
#include "covhole/rng.hpp"

namespace covhole {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

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

}  // namespace

void BoundSpec::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("BoundSpec: lambda must be positive");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("BoundSpec: gamma must be positive");
    }
    if (!(r_s > 0.0)) throw std::invalid_argument("BoundSpec: r_s must be positive");
    if (quad.n_r0 < 8 || quad.n_theta < 8 || quad.n_r1 < 8) {
        throw std::invalid_argument("BoundSpec: quadrature subdivisions must be >= 8");
    }
    if (mc.trials <= 0) throw std::invalid_argument("BoundSpec: trials must be positive");
}

namespace {

// Does any triple with pairwise distances <= r_c contain the origin?  The
// candidates are scanned in angular order: a triple (a, b, c) sorted by
// polar angle surrounds the origin iff consecutive gaps stay below pi,
// which prunes the enumeration to the few admissible index windows.
bool any_surrounding_triple(std::span<const Point> pts, std::span<const double> angles,
                            std::span<const int> order, double rc2) {
    const int m = static_cast<int>(order.size());
    for (int a = 0; a < m; ++a) {
        double ta = angles[order[a]];
        if (ta >= 0.0) break;  // the minimum-angle vertex of a surrounding triple is negative
        const Point& pa = pts[order[a]];
        for (int b = a + 1; b < m; ++b) {
            double tb = angles[order[b]];
            if (tb - ta >= kPi) break;
            const Point& pb = pts[order[b]];
            if (dist_sq(pa, pb) > rc2) continue;
            for (int c = b + 1; c < m; ++c) {
                double tc = angles[order[c]];
                if (tc <= ta + kPi) continue;
                if (tc - tb >= kPi) break;
                const Point& pc = pts[order[c]];
                if (dist_sq(pa, pc) <= rc2 && dist_sq(pb, pc) <= rc2) return true;
            }
        }
    }
    return false;
}

// Can the closest point participate in a surrounding triple?
bool closest_in_surrounding_triple(std::span<const Point> pts, int closest, double rc2) {
    const int m = static_cast<int>(pts.size());
    const Point& t0 = pts[closest];
    for (int j = 0; j < m; ++j) {
        if (j == closest || dist_sq(t0, pts[j]) > rc2) continue;
        for (int k = j + 1; k < m; ++k) {
            if (k == closest || dist_sq(t0, pts[k]) > rc2 || dist_sq(pts[j], pts[k]) > rc2) {
                continue;
            }
            if (point_in_triangle({0.0, 0.0}, t0, pts[j], pts[k])) return true;
        }
    }
    return false;
}

}  // namespace

OriginHoleDetail origin_hole_detail(std::span<const Point> points, double r_s, double r_c) {
    OriginHoleDetail detail;
    if (points.size() < 3) return detail;

    double dmin2 = 1e300;
    int closest = -1;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double d2 = norm_sq(points[i]);
        if (d2 < dmin2) {
            dmin2 = d2;
            closest = static_cast<int>(i);
        }
    }
    if (dmin2 <= r_s * r_s) return detail;
    if (dmin2 > r_c * r_c / 3.0) return detail;  // closest-distance lemma

    const double rc2 = r_c * r_c;
    if (closest_in_surrounding_triple(points, closest, rc2)) {
        detail.in_hole = true;
        detail.closest_in_witness = true;
        return detail;
    }
    std::vector<double> angles(points.size());
    std::vector<int> order(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        angles[i] = std::atan2(points[i].y, points[i].x);
        order[i] = static_cast<int>(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return angles[a] < angles[b]; });
    detail.in_hole = any_surrounding_triple(points, angles, order, rc2);
    return detail;
}

bool origin_in_triangular_hole(std::span<const Point> points, double r_s, double r_c) {
    return origin_hole_detail(points, r_s, r_c).in_hole;
}

namespace {

struct McCounts {
    long hits = 0;
    long residual = 0;
};

McCounts run_mc(const BoundSpec& spec) {
    spec.validate();
    const double r_c = spec.r_c();
    const double mean = spec.lambda * kPi * r_c * r_c;
    const int chunks = 256;
    std::vector<McCounts> partial(chunks);
    parallel_chunks(0, spec.mc.trials, chunks, [&](int chunk, long lo, long hi) {
        std::vector<Point> pts;
        McCounts local;
        for (long t = lo; t < hi; ++t) {
            RngStream rng(spec.mc.seed, static_cast<std::uint64_t>(t));
            long n = rng.poisson(mean);
            pts.clear();
            pts.reserve(n);
            for (long i = 0; i < n; ++i) {
                double r = r_c * std::sqrt(rng.uniform());
                double ang = rng.uniform(0.0, 2.0 * kPi);
                pts.push_back({r * std::cos(ang), r * std::sin(ang)});
            }
            OriginHoleDetail d = origin_hole_detail(pts, spec.r_s, r_c);
            if (d.in_hole) {
                ++local.hits;
                if (!d.closest_in_witness) ++local.residual;
            }
        }
        partial[chunk].hits += local.hits;
        partial[chunk].residual += local.residual;
    });
    McCounts total;
    for (const auto& p : partial) {
        total.hits += p.hits;
        total.residual += p.residual;
    }
    return total;
}

ProportionEstimate to_estimate(long hits, long trials) {
    ProportionEstimate est;
    est.trials = trials;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    est.ci95_halfwidth = 1.96 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / trials);
    return est;
}

}  // namespace

ProportionEstimate estimate_proportion(const BoundSpec& spec) {
    return to_estimate(run_mc(spec).hits, spec.mc.trials);
}

ProportionEstimate residual_term_mc(const BoundSpec& spec) {
    return to_estimate(run_mc(spec).residual, spec.mc.trials);
}

BoundsEvaluator::BoundsEvaluator(double gamma, double r_s, QuadratureSpec quad)
    : gamma_(gamma), r_s_(r_s), r_c_(gamma * r_s), quad_(quad) {
    if (gamma_ <= kSqrt3) return;  // integrals are identically zero
    double top = r_c_ / kSqrt3;
    if (gamma_ > 2.0) {
        build_range(r_s_, r_c_ / 2.0);
        build_range(r_c_ / 2.0, top);
    } else {
        build_range(r_s_, top);
    }
}

void BoundsEvaluator::build_range(double lo, double hi) {
    if (!(hi > lo)) return;
    const int r0_panels = std::max(1, quad_.n_r0 / kGlOrder);
    const int theta_panels = std::max(1, quad_.n_theta / (2 * kGlOrder));  // per half-range
    const int r1_panels = std::max(1, quad_.n_r1 / kGlOrder);
    const int sweep_panels = std::max(16, quad_.n_theta / 4);

    std::size_t base = nodes_.size();
    const double r0_w = (hi - lo) / r0_panels;
    for (int p = 0; p < r0_panels; ++p) {
        for (int g = 0; g < kGlOrder; ++g) {
            R0Node node;
            node.r0 = lo + r0_w * (p + 0.5 * (kGlNodes[g] + 1.0));
            node.weight = 0.5 * r0_w * kGlWeights[g];
            nodes_.push_back(std::move(node));
        }
    }

    parallel_chunks(static_cast<long>(base), static_cast<long>(nodes_.size()), 64,
                    [&](int, long b, long e) {
        for (long idx = b; idx < e; ++idx) {
            R0Node& node = nodes_[static_cast<std::size_t>(idx)];
            const double r0 = node.r0;
            double a0 = region_alpha0(r0, r_c_);
            double a1 = region_alpha1(r0, r_c_);
            if (!(a1 > a0)) continue;
            double mid = std::clamp(kPi / 2.0 - a0 / 2.0, a0, a1);
            std::vector<double> r1_batch;

            for (int half = 0; half < 2; ++half) {
                double t_lo = half == 0 ? a0 : mid;
                double t_hi = half == 0 ? mid : a1;
                if (!(t_hi > t_lo)) continue;
                double t_w = (t_hi - t_lo) / theta_panels;
                for (int tp = 0; tp < theta_panels; ++tp) {
                    for (int tg = 0; tg < kGlOrder; ++tg) {
                        double theta = t_lo + t_w * (tp + 0.5 * (kGlNodes[tg] + 1.0));
                        double r1_hi = region_r1_max(r0, theta, r_c_);
                        if (!(r1_hi > r0)) continue;

                        ThetaNode tn;
                        tn.weight = 0.5 * t_w * kGlWeights[tg];
                        tn.splus = region_area_s_plus({r0, r0, theta, r_c_});
                        tn.r1_moment = 0.5 * (r1_hi * r1_hi - r0 * r0);

                        double r1_w = (r1_hi - r0) / r1_panels;
                        tn.r1_nodes.reserve(r1_panels * kGlOrder);
                        tn.r1_weights.reserve(r1_panels * kGlOrder);
                        for (int rp = 0; rp < r1_panels; ++rp) {
                            for (int rg = 0; rg < kGlOrder; ++rg) {
                                tn.r1_nodes.push_back(
                                    r0 + r1_w * (rp + 0.5 * (kGlNodes[rg] + 1.0)));
                                tn.r1_weights.push_back(0.5 * r1_w * kGlWeights[rg]);
                            }
                        }
                        // one angular sweep covers tau1 = (r0, theta) and
                        // every r1 node
                        r1_batch.assign(1, r0);
                        r1_batch.insert(r1_batch.end(), tn.r1_nodes.begin(), tn.r1_nodes.end());
                        auto areas = region_area_s_minus_profile(r0, theta, r_c_, r1_batch,
                                                                 sweep_panels);
                        tn.sminus_self = areas[0];
                        tn.sminus.assign(areas.begin() + 1, areas.end());
                        node.thetas.push_back(std::move(tn));
                    }
                }
            }
        }
    });
}

double BoundsEvaluator::lower(double lambda) const {
    double outer = 0.0;
    for (const auto& node : nodes_) {
        double inner_theta = 0.0;
        for (const auto& tn : node.thetas) {
            double inner_r1 = 0.0;
            for (std::size_t k = 0; k < tn.r1_nodes.size(); ++k) {
                inner_r1 += tn.r1_weights[k] * tn.r1_nodes[k] *
                            (1.0 - std::exp(-lambda * tn.sminus[k]));
            }
            inner_theta += tn.weight * std::exp(-lambda * tn.splus) * inner_r1;
        }
        outer += node.weight * node.r0 * std::exp(-lambda * kPi * node.r0 * node.r0) * inner_theta;
    }
    return 2.0 * kPi * lambda * lambda * outer;
}

double BoundsEvaluator::upper_main(double lambda) const {
    double outer = 0.0;
    for (const auto& node : nodes_) {
        double inner_theta = 0.0;
        for (const auto& tn : node.thetas) {
            inner_theta += tn.weight * std::exp(-lambda * tn.splus) * tn.r1_moment *
                           (1.0 - std::exp(-lambda * tn.sminus_self));
        }
        outer += node.weight * node.r0 * std::exp(-lambda * kPi * node.r0 * node.r0) * inner_theta;
    }
    return 2.0 * kPi * lambda * lambda * outer;
}

BoundsCalculator::BoundsCalculator(double gamma, double r_s, QuadratureSpec quad)
    : gamma_(gamma) {
    if (gamma_ <= kSqrt3) return;
    levels_.emplace_back(gamma, r_s, quad);
    levels_.emplace_back(gamma, r_s, quad.doubled());
}

double BoundsCalculator::converged(double coarse, double fine, double lambda,
                                   const char* what) const {
    double denom = std::max(std::abs(fine), 1e-300);
    if (std::abs(fine - coarse) / denom >= 0.005) {
        std::ostringstream msg;
        msg << what << " quadrature did not converge at gamma=" << gamma_
            << " lambda=" << lambda << ": n=" << levels_[0].quad().n_r0 << " gives " << coarse
            << ", doubled gives " << fine << "; raise the subdivision counts";
        throw std::runtime_error(msg.str());
    }
    return fine;
}

double BoundsCalculator::lower(double lambda) const {
    if (levels_.empty()) return 0.0;
    return converged(levels_[0].lower(lambda), levels_[1].lower(lambda), lambda, "lower bound");
}

double BoundsCalculator::upper_main(double lambda) const {
    if (levels_.empty()) return 0.0;
    return converged(levels_[0].upper_main(lambda), levels_[1].upper_main(lambda), lambda,
                     "upper bound");
}

double lower_bound(const BoundSpec& spec) {
    spec.validate();
    if (spec.gamma <= kSqrt3) return 0.0;
    BoundsCalculator calc(spec.gamma, spec.r_s, spec.quad);
    return calc.lower(spec.lambda);
}

double upper_bound(const BoundSpec& spec, ResidualMode mode) {
    spec.validate();
    if (spec.gamma <= kSqrt3) return 0.0;
    BoundsCalculator calc(spec.gamma, spec.r_s, spec.quad);
    double main = calc.upper_main(spec.lambda);
    double residual = mode == ResidualMode::Cap ? kResidualCap : residual_term_mc(spec).p_hat;
    return main + residual;
}

}  // namespace covhole
