#ifndef COVHOLE_BOUNDARY_CYCLE_HPP
#define COVHOLE_BOUNDARY_CYCLE_HPP

#include <vector>

namespace covhole {

/**
 * A closed vertex walk claimed to enclose one coverage hole.  The first
 * vertex is implicitly also the last; consecutive vertices must be adjacent
 * in the residual complex and no vertex repeats.
 */
struct BoundaryCycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }  // edge count
};

}  // namespace covhole

#endif
