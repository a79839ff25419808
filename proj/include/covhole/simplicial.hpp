#ifndef COVHOLE_SIMPLICIAL_HPP
#define COVHOLE_SIMPLICIAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "covhole/deployment.hpp"

namespace covhole {

/**
 * The 2-skeleton of a Vietoris-Rips complex.  Vertices are node ids in
 * ascending order, edges and triangles are lexicographically sorted id
 * tuples.  Face-closed by construction: every triangle's edges and every
 * edge's endpoints are present.
 */
struct RipsComplex {
    std::vector<int> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
};

struct SimplicialGraph {
    std::vector<int> vertices;
    std::vector<std::array<int, 2>> edges;  // u < v, lexicographic
};

struct HomologyReport {
    int betti0 = 0;
    int betti1 = 0;
};

/** Rips complex of the deployment at communication scale r_c. */
RipsComplex build_rips(const Deployment& d);

/** Rips complex at an arbitrary scale; scale = r_c reproduces build_rips. */
RipsComplex rips_at_scale(const Deployment& d, double scale);

/**
 * GF(2) Betti numbers from boundary-matrix ranks:
 * betti0 = |V| - rank(d1), betti1 = |E| - rank(d1) - rank(d2).
 */
HomologyReport betti(const RipsComplex& complex);

/** Betti numbers of the flag 2-complex of g (every 3-clique filled). */
HomologyReport betti_flag(const SimplicialGraph& g);

/** All 3-cliques of g, lexicographically sorted. */
std::vector<std::array<int, 3>> flag_triangles(const SimplicialGraph& g);

/**
 * True iff g is connected and every cycle is a GF(2) sum of 3-cycles,
 * i.e. the flag complex of g has trivial first homology.  Graphs with an
 * empty cycle space (trees, single vertices) qualify vacuously.
 */
bool is_simple_connectedness(const SimplicialGraph& g);

/**
 * Nonempty-intersection test for the closed sensing disks of 2 or 3 nodes.
 * Pair case: center distance at most 2 r_s.  Triple case: some pairwise
 * circle intersection point lies in the third disk (radical-line
 * construction, 1e-9 m slack on the containment check).
 */
bool cech_simplex(std::span<const int> ids, const Deployment& d);

/** Bit-packed GF(2) matrix rank via Gaussian elimination. */
class Gf2Matrix {
  public:
    Gf2Matrix(int rows, int cols);
    void set(int row, int col);
    int rank() const;

  private:
    int rows_;
    int cols_;
    int words_per_col_;
    std::vector<std::uint64_t> bits_;  // column-major
};

}  // namespace covhole

#endif
