#ifndef COVHOLE_BOUNDS_HPP
#define COVHOLE_BOUNDS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "covhole/geometry.hpp"
#include "covhole/regions.hpp"

namespace covhole {

struct QuadratureSpec {
    int n_r0 = 64;
    int n_theta = 64;
    int n_r1 = 64;

    QuadratureSpec doubled() const { return {2 * n_r0, 2 * n_theta, 2 * n_r1}; }
};

struct McSpec {
    long trials = 1'000'000;
    std::uint64_t seed = 1;
};

struct BoundSpec {
    double lambda = 0.0;  // node intensity per m^2
    double gamma = 0.0;   // r_c / r_s
    double r_s = 10.0;
    QuadratureSpec quad;
    McSpec mc;

    double r_c() const { return gamma * r_s; }
    void validate() const;  // throws std::invalid_argument
};

struct ProportionEstimate {
    double p_hat = 0.0;
    double ci95_halfwidth = 0.0;
    long trials = 0;
};

enum class ResidualMode { Cap, Mc };

/**
 * True iff the origin sits in a triangular hole of the given point set:
 * its closest point is farther than r_s (and, by the closest-distance
 * lemma, no farther than r_c/sqrt(3)), and some triple with pairwise
 * distances at most r_c contains the origin in its convex hull.
 */
bool origin_in_triangular_hole(std::span<const Point> points, double r_s, double r_c);

struct OriginHoleDetail {
    bool in_hole = false;
    bool closest_in_witness = false;  // the closest point belongs to some witness triangle
};

OriginHoleDetail origin_hole_detail(std::span<const Point> points, double r_s, double r_c);

/**
 * Monte Carlo estimate of the triangular-hole area proportion: fraction of
 * independent Poisson draws in B(O, r_c) whose origin lands in a
 * triangular hole.  Deterministic in (seed); trials run on stream indices
 * 0..trials-1 so the result is independent of threading.
 */
ProportionEstimate estimate_proportion(const BoundSpec& spec);

/**
 * Estimate of the bound residual: trials where the origin is inside a
 * triangular hole but its closest node belongs to no witness triangle.
 */
ProportionEstimate residual_term_mc(const BoundSpec& spec);

/**
 * Iterated Gauss-Legendre evaluation of the closed-form bound integrals at
 * one (gamma, r_s).  Region areas are precomputed on the quadrature grid
 * once, so sweeping lambda afterwards is cheap.  For gamma > 2 the radial
 * integral splits at r_c/2, where the inner ball geometry changes.
 */
class BoundsEvaluator {
  public:
    BoundsEvaluator(double gamma, double r_s, QuadratureSpec quad);

    double lower(double lambda) const;
    double upper_main(double lambda) const;  // upper bound without the residual term

    double gamma() const { return gamma_; }
    const QuadratureSpec& quad() const { return quad_; }

  private:
    struct ThetaNode {
        double weight = 0.0;
        double splus = 0.0;
        double sminus_self = 0.0;  // |S-| with tau1 pinned at radius r0
        double r1_moment = 0.0;    // integral of r1 dr1 over [r0, R1]
        std::vector<double> r1_nodes;
        std::vector<double> r1_weights;
        std::vector<double> sminus;
    };
    struct R0Node {
        double r0 = 0.0;
        double weight = 0.0;
        std::vector<ThetaNode> thetas;
    };

    void build_range(double lo, double hi);

    double gamma_;
    double r_s_;
    double r_c_;
    QuadratureSpec quad_;
    std::vector<R0Node> nodes_;
};

/**
 * Bound pair with the built-in convergence check: values are accepted when
 * doubling every subdivision moves them by less than 0.5% relative;
 * otherwise evaluation throws with diagnostics.  Construct once per gamma
 * and sweep lambda.
 */
class BoundsCalculator {
  public:
    BoundsCalculator(double gamma, double r_s, QuadratureSpec quad);

    double lower(double lambda) const;
    double upper_main(double lambda) const;

  private:
    double converged(double coarse, double fine, double lambda, const char* what) const;

    double gamma_;
    std::vector<BoundsEvaluator> levels_;  // empty when gamma <= sqrt(3)
};

/** Theorem-style bounds; exact 0 for gamma <= sqrt(3). */
double lower_bound(const BoundSpec& spec);
double upper_bound(const BoundSpec& spec, ResidualMode mode = ResidualMode::Cap);

/** Residual added in Cap mode. */
inline constexpr double kResidualCap = 0.0015;

}  // namespace covhole

#endif
