#include "covhole/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace covhole {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_col_((rows + 63) / 64),
      bits_(static_cast<std::size_t>(words_per_col_) * cols, 0) {}

void Gf2Matrix::set(int row, int col) {
    bits_[static_cast<std::size_t>(col) * words_per_col_ + row / 64] |= 1ULL << (row % 64);
}

int Gf2Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::uint64_t> work = bits_;
    auto col = [&](int c) { return work.data() + static_cast<std::size_t>(c) * words_per_col_; };
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        // find a column with a set bit in an unused pivot row
        std::uint64_t* cur = col(c);
        int pivot = -1;
        for (int w = 0; w < words_per_col_ && pivot < 0; ++w) {
            if (cur[w] != 0) {
                pivot = w * 64 + __builtin_ctzll(cur[w]);
            }
        }
        if (pivot < 0) continue;
        ++rank;
        for (int c2 = c + 1; c2 < cols_; ++c2) {
            std::uint64_t* other = col(c2);
            if (other[pivot / 64] >> (pivot % 64) & 1ULL) {
                for (int w = 0; w < words_per_col_; ++w) other[w] ^= cur[w];
            }
        }
    }
    return rank;
}

namespace {

// adjacency lists (sorted) over a compact index space; ids sorted so index
// order equals id order
struct IndexedGraph {
    std::vector<int> ids;                   // index -> id
    std::unordered_map<int, int> pos;       // id -> index
    std::vector<std::vector<int>> adj;      // indices
};

IndexedGraph index_graph(std::vector<int> ids, const std::vector<std::array<int, 2>>& edges) {
    std::sort(ids.begin(), ids.end());
    IndexedGraph g;
    g.ids = std::move(ids);
    g.pos.reserve(g.ids.size());
    for (std::size_t i = 0; i < g.ids.size(); ++i) g.pos[g.ids[i]] = static_cast<int>(i);
    g.adj.resize(g.ids.size());
    for (const auto& e : edges) {
        int u = g.pos.at(e[0]);
        int v = g.pos.at(e[1]);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::vector<std::array<int, 3>> triangles_of(const IndexedGraph& g,
                                             const std::vector<std::array<int, 2>>& edges) {
    std::vector<std::array<int, 3>> tris;
    for (const auto& e : edges) {
        int u = g.pos.at(e[0]);
        int v = g.pos.at(e[1]);
        if (u > v) std::swap(u, v);
        const auto& au = g.adj[u];
        const auto& av = g.adj[v];
        std::size_t i = 0, j = 0;
        while (i < au.size() && j < av.size()) {
            if (au[i] < av[j]) {
                ++i;
            } else if (au[i] > av[j]) {
                ++j;
            } else {
                int w = au[i];
                if (w > v) tris.push_back({g.ids[u], g.ids[v], g.ids[w]});
                ++i;
                ++j;
            }
        }
    }
    std::sort(tris.begin(), tris.end());
    return tris;
}

HomologyReport betti_impl(const std::vector<int>& vertices,
                          const std::vector<std::array<int, 2>>& edges,
                          const std::vector<std::array<int, 3>>& triangles) {
    std::unordered_map<int, int> vpos;
    vpos.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) vpos[vertices[i]] = static_cast<int>(i);

    Gf2Matrix d1(static_cast<int>(vertices.size()), static_cast<int>(edges.size()));
    std::unordered_map<std::uint64_t, int> epos;
    epos.reserve(edges.size());
    for (std::size_t c = 0; c < edges.size(); ++c) {
        d1.set(vpos.at(edges[c][0]), static_cast<int>(c));
        d1.set(vpos.at(edges[c][1]), static_cast<int>(c));
        std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(edges[c][0])) << 32) |
                            static_cast<std::uint32_t>(edges[c][1]);
        epos[key] = static_cast<int>(c);
    }
    auto edge_row = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
                            static_cast<std::uint32_t>(v);
        return epos.at(key);
    };

    Gf2Matrix d2(static_cast<int>(edges.size()), static_cast<int>(triangles.size()));
    for (std::size_t c = 0; c < triangles.size(); ++c) {
        const auto& t = triangles[c];
        d2.set(edge_row(t[0], t[1]), static_cast<int>(c));
        d2.set(edge_row(t[0], t[2]), static_cast<int>(c));
        d2.set(edge_row(t[1], t[2]), static_cast<int>(c));
    }

    int r1 = d1.rank();
    int r2 = d2.rank();
    HomologyReport rep;
    rep.betti0 = static_cast<int>(vertices.size()) - r1;
    rep.betti1 = static_cast<int>(edges.size()) - r1 - r2;
    return rep;
}

}  // namespace

RipsComplex rips_at_scale(const Deployment& d, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("rips_at_scale: scale must be positive");
    RipsComplex rc;
    rc.vertices.reserve(d.nodes.size());
    for (const auto& n : d.nodes) rc.vertices.push_back(n.id);
    std::sort(rc.vertices.begin(), rc.vertices.end());

    const double s2 = scale * scale;
    const int n = static_cast<int>(d.nodes.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dist_sq(d.nodes[i].pos, d.nodes[j].pos) <= s2) {
                int u = d.nodes[i].id;
                int v = d.nodes[j].id;
                if (u > v) std::swap(u, v);
                rc.edges.push_back({u, v});
            }
        }
    }
    std::sort(rc.edges.begin(), rc.edges.end());

    IndexedGraph g = index_graph(rc.vertices, rc.edges);
    rc.triangles = triangles_of(g, rc.edges);
    return rc;
}

RipsComplex build_rips(const Deployment& d) { return rips_at_scale(d, d.r_c); }

HomologyReport betti(const RipsComplex& complex) {
    return betti_impl(complex.vertices, complex.edges, complex.triangles);
}

std::vector<std::array<int, 3>> flag_triangles(const SimplicialGraph& g) {
    IndexedGraph ig = index_graph(g.vertices, g.edges);
    return triangles_of(ig, g.edges);
}

HomologyReport betti_flag(const SimplicialGraph& g) {
    return betti_impl(g.vertices, g.edges, flag_triangles(g));
}

bool is_simple_connectedness(const SimplicialGraph& g) {
    if (g.vertices.empty()) return true;
    HomologyReport rep = betti_flag(g);
    return rep.betti0 == 1 && rep.betti1 == 0;
}

namespace {

constexpr double kContainSlack = 1e-9;

bool disk_contains(Point center, double r, Point p) {
    return dist(center, p) <= r + kContainSlack;
}

}  // namespace

bool cech_simplex(std::span<const int> ids, const Deployment& d) {
    if (ids.size() != 2 && ids.size() != 3) {
        throw std::invalid_argument("cech_simplex: expected 2 or 3 ids");
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (ids[i] == ids[j]) throw std::invalid_argument("cech_simplex: ids must be distinct");
        }
    }
    const double r = d.r_s;
    const double four_r2 = 4.0 * r * r;
    std::array<Point, 3> c;
    for (std::size_t i = 0; i < ids.size(); ++i) c[i] = d.node(ids[i]).pos;

    if (ids.size() == 2) return dist_sq(c[0], c[1]) <= four_r2;

    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (dist_sq(c[i], c[j]) > four_r2) return false;
        }
    }
    // All pairwise lenses exist.  The triple intersection, if nonempty, has
    // a corner at some circle-circle intersection point inside the third
    // disk (equal radii; coincident centers reduce to the pair case).
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            int k = 3 - i - j;
            double d2 = dist_sq(c[i], c[j]);
            if (d2 == 0.0) return true;  // identical disks; pair (i,k) already checked
            double dd = std::sqrt(d2);
            Point mid = 0.5 * (c[i] + c[j]);
            double h2 = r * r - 0.25 * d2;
            double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
            Point perp{-(c[j].y - c[i].y) / dd, (c[j].x - c[i].x) / dd};
            if (disk_contains(c[k], r, mid + h * perp)) return true;
            if (disk_contains(c[k], r, mid - h * perp)) return true;
        }
    }
    return false;
}

}  // namespace covhole
