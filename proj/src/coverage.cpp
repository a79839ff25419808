#include "covhole/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace covhole {

long CoverageGrid::uncovered_count() const {
    return static_cast<long>(covered.size()) -
           static_cast<long>(std::count(covered.begin(), covered.end(), std::uint8_t{1}));
}

CoverageGrid rasterize(const Deployment& d, double resolution) {
    if (!(resolution > 0.0) || resolution > d.r_s / 10.0) {
        throw std::invalid_argument("rasterize: resolution must be in (0, r_s/10]");
    }
    CoverageGrid g;
    g.resolution = resolution;
    g.nx = static_cast<int>(std::floor(d.field.width / resolution + 1e-9));
    g.ny = static_cast<int>(std::floor(d.field.height / resolution + 1e-9));
    g.covered.assign(static_cast<std::size_t>(g.nx) * g.ny, 0);

    const double rs2 = d.r_s * d.r_s;
    for (const auto& n : d.nodes) {
        int iy0 = std::max(0, static_cast<int>(std::floor((n.pos.y - d.r_s) / resolution)) - 1);
        int iy1 = std::min(g.ny - 1, static_cast<int>(std::ceil((n.pos.y + d.r_s) / resolution)) + 1);
        for (int iy = iy0; iy <= iy1; ++iy) {
            double cy = (iy + 0.5) * resolution;
            double dy2 = (cy - n.pos.y) * (cy - n.pos.y);
            if (dy2 > rs2) continue;
            double half_w = std::sqrt(rs2 - dy2);
            int jx0 = std::max(0, static_cast<int>(std::floor((n.pos.x - half_w) / resolution)) - 1);
            int jx1 = std::min(g.nx - 1, static_cast<int>(std::ceil((n.pos.x + half_w) / resolution)) + 1);
            std::uint8_t* row = g.covered.data() + static_cast<std::size_t>(iy) * g.nx;
            for (int ix = jx0; ix <= jx1; ++ix) {
                double cx = (ix + 0.5) * resolution;
                if ((cx - n.pos.x) * (cx - n.pos.x) + dy2 <= rs2) row[ix] = 1;
            }
        }
    }
    return g;
}

std::vector<TrueHole> extract_holes(const CoverageGrid& grid, const Deployment& d,
                                    const RipsComplex& rips) {
    std::vector<TrueHole> holes;
    std::vector<std::uint8_t> seen(grid.covered.size(), 0);

    // Rips triangles missing from the Cech complex are the only possible
    // Triangular witnesses.
    std::vector<std::array<int, 3>> candidates;
    for (const auto& t : rips.triangles) {
        if (!cech_simplex(std::span<const int>(t.data(), 3), d)) candidates.push_back(t);
    }

    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            std::size_t start = static_cast<std::size_t>(iy) * grid.nx + ix;
            if (grid.covered[start] || seen[start]) continue;

            TrueHole hole;
            hole.resolution = grid.resolution;
            std::vector<std::array<int, 2>> stack{{ix, iy}};
            seen[start] = 1;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                hole.cells.push_back({cx, cy});
                if (cx == 0 || cx == grid.nx - 1 || cy == 0 || cy == grid.ny - 1) {
                    hole.touches_border = true;
                }
                const int dx[4] = {1, -1, 0, 0};
                const int dy[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int mx = cx + dx[k];
                    int my = cy + dy[k];
                    if (mx < 0 || mx >= grid.nx || my < 0 || my >= grid.ny) continue;
                    std::size_t idx = static_cast<std::size_t>(my) * grid.nx + mx;
                    if (!grid.covered[idx] && !seen[idx]) {
                        seen[idx] = 1;
                        stack.push_back({mx, my});
                    }
                }
            }
            hole.area = static_cast<double>(hole.cells.size()) * grid.resolution * grid.resolution;

            // bounding box prefilter before the per-cell hull test
            double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
            for (std::size_t i = 0; i < hole.cells.size(); ++i) {
                Point p = hole.cell_center(i);
                min_x = std::min(min_x, p.x);
                max_x = std::max(max_x, p.x);
                min_y = std::min(min_y, p.y);
                max_y = std::max(max_y, p.y);
            }
            for (const auto& t : candidates) {
                Point a = d.node(t[0]).pos;
                Point b = d.node(t[1]).pos;
                Point c = d.node(t[2]).pos;
                if (std::min({a.x, b.x, c.x}) > min_x || std::max({a.x, b.x, c.x}) < max_x ||
                    std::min({a.y, b.y, c.y}) > min_y || std::max({a.y, b.y, c.y}) < max_y) {
                    continue;
                }
                bool all_inside = true;
                for (std::size_t i = 0; i < hole.cells.size() && all_inside; ++i) {
                    all_inside = point_in_triangle(hole.cell_center(i), a, b, c);
                }
                if (all_inside) {
                    hole.kind = HoleKind::Triangular;
                    hole.witness_triangle = t;
                    break;
                }
            }
            holes.push_back(std::move(hole));
        }
    }
    return holes;
}

bool point_in_polygon(Point p, const std::vector<Point>& polygon) {
    bool inside = false;
    std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = polygon[i];
        const Point& b = polygon[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            double x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

MatchReport match_cycles(const std::vector<TrueHole>& holes,
                         const std::vector<BoundaryCycle>& cycles, const Deployment& d) {
    MatchReport rep;

    std::vector<int> eligible;
    for (std::size_t h = 0; h < holes.size(); ++h) {
        if (holes[h].kind == HoleKind::NonTriangular && !holes[h].touches_border) {
            eligible.push_back(static_cast<int>(h));
        }
    }
    rep.total_nontriangular = static_cast<int>(eligible.size());

    std::vector<std::vector<Point>> polys;
    polys.reserve(cycles.size());
    for (const auto& cyc : cycles) {
        std::vector<Point> poly;
        poly.reserve(cyc.vertices.size());
        for (int id : cyc.vertices) poly.push_back(d.node(id).pos);  // throws on unknown id
        polys.push_back(std::move(poly));
    }

    // holes_in_cycle[c] = eligible holes whose every cell sits inside polygon c
    std::vector<std::vector<int>> holes_in_cycle(polys.size());
    for (std::size_t c = 0; c < polys.size(); ++c) {
        for (std::size_t e = 0; e < eligible.size(); ++e) {
            const TrueHole& hole = holes[eligible[e]];
            bool all = !hole.cells.empty();
            for (std::size_t i = 0; i < hole.cells.size() && all; ++i) {
                all = point_in_polygon(hole.cell_center(i), polys[c]);
            }
            if (all) holes_in_cycle[c].push_back(static_cast<int>(e));
        }
    }

    // a hole is matched iff exactly one cycle contains it and nothing else
    std::vector<bool> cycle_matched(polys.size(), false);
    for (std::size_t e = 0; e < eligible.size(); ++e) {
        int exclusive = -1;
        int exclusive_count = 0;
        for (std::size_t c = 0; c < polys.size(); ++c) {
            if (holes_in_cycle[c].size() == 1 &&
                holes_in_cycle[c][0] == static_cast<int>(e)) {
                exclusive = static_cast<int>(c);
                ++exclusive_count;
            }
        }
        if (exclusive_count == 1) {
            ++rep.matched;
            cycle_matched[exclusive] = true;
        } else {
            rep.unmatched_holes.push_back(eligible[e]);
        }
    }
    for (std::size_t c = 0; c < polys.size(); ++c) {
        if (!cycle_matched[c]) rep.spurious_cycles.push_back(static_cast<int>(c));
    }
    return rep;
}

void write_pgm(const CoverageGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
    out << "P5\n" << grid.nx << " " << grid.ny << "\n255\n";
    for (int iy = grid.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            out.put(grid.covered_at(ix, iy) ? static_cast<char>(230) : static_cast<char>(40));
        }
    }
}

}  // namespace covhole
