#ifndef COVHOLE_COVERAGE_HPP
#define COVHOLE_COVERAGE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covhole/boundary_cycle.hpp"
#include "covhole/deployment.hpp"
#include "covhole/simplicial.hpp"

namespace covhole {

/**
 * Location-aware ground truth: a boolean lattice over the field where a
 * cell counts as covered iff its center is within r_s of some node.
 */
struct CoverageGrid {
    double resolution = 0.0;
    int nx = 0;
    int ny = 0;
    std::vector<std::uint8_t> covered;  // row-major, y * nx + x

    bool covered_at(int ix, int iy) const {
        return covered[static_cast<std::size_t>(iy) * nx + ix] != 0;
    }
    Point cell_center(int ix, int iy) const {
        return {(ix + 0.5) * resolution, (iy + 0.5) * resolution};
    }
    long uncovered_count() const;
};

enum class HoleKind { Triangular, NonTriangular };

struct TrueHole {
    std::vector<std::array<int, 2>> cells;  // (ix, iy), 4-connected
    double resolution = 0.0;                // grid resolution the cells refer to
    double area = 0.0;                      // |cells| * resolution^2
    HoleKind kind = HoleKind::NonTriangular;
    std::optional<std::array<int, 3>> witness_triangle;
    bool touches_border = false;

    Point cell_center(std::size_t i) const {
        return {(cells[i][0] + 0.5) * resolution, (cells[i][1] + 0.5) * resolution};
    }
};

struct MatchReport {
    int total_nontriangular = 0;          // border-touching holes excluded
    int matched = 0;
    std::vector<int> unmatched_holes;     // indices into the hole list
    std::vector<int> spurious_cycles;     // indices into the cycle list
};

/** Requires 0 < resolution <= r_s / 10. */
CoverageGrid rasterize(const Deployment& d, double resolution);

/**
 * Uncovered 4-connected components.  A hole is Triangular iff a single
 * Rips triangle with empty sensing-disk triple intersection contains every
 * cell center in its convex hull; the first such triple is recorded as the
 * witness.
 */
std::vector<TrueHole> extract_holes(const CoverageGrid& grid, const Deployment& d,
                                    const RipsComplex& rips);

/**
 * Scores detected cycles against true holes.  Only non-triangular holes
 * away from the field border participate.  A hole is matched iff exactly
 * one cycle polygon (even-odd rule over cell centers) contains all of its
 * cells and that cycle contains no other eligible hole.
 */
MatchReport match_cycles(const std::vector<TrueHole>& holes,
                         const std::vector<BoundaryCycle>& cycles, const Deployment& d);

/** Binary PGM (P5) dump for visual debugging; uncovered cells are dark. */
void write_pgm(const CoverageGrid& grid, const std::string& path);

/** Even-odd rule point-in-polygon used by match_cycles; exposed for tests. */
bool point_in_polygon(Point p, const std::vector<Point>& polygon);

}  // namespace covhole

#endif
