#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>
#include <cmath>
#include <vector>

#include "covhole/simplicial.hpp"
#include "support/oracles.hpp"

using namespace covhole;

namespace {

Deployment make_deployment(std::vector<Point> pts, double r_s, double r_c) {
    Deployment d;
    d.r_s = r_s;
    d.r_c = r_c;
    d.field = {100, 100};
    int id = 0;
    for (auto p : pts) d.nodes.push_back({id++, p, false});
    return d;
}

}  // namespace

TEST_CASE("build_rips on small constructed layouts") {
    SUBCASE("three points pairwise 15 m apart, r_c = 20") {
        double h = 15.0 * std::sqrt(3.0) / 2.0;
        Deployment d = make_deployment({{0, 0}, {15, 0}, {7.5, h}}, 10, 20);
        RipsComplex rc = build_rips(d);
        CHECK(rc.vertices.size() == 3);
        CHECK(rc.edges.size() == 3);
        CHECK(rc.triangles.size() == 1);
    }
    SUBCASE("three points pairwise 25 m apart, r_c = 20") {
        double h = 25.0 * std::sqrt(3.0) / 2.0;
        Deployment d = make_deployment({{0, 0}, {25, 0}, {12.5, h}}, 10, 20);
        RipsComplex rc = build_rips(d);
        CHECK(rc.vertices.size() == 3);
        CHECK(rc.edges.empty());
        CHECK(rc.triangles.empty());
    }
    SUBCASE("15 m square: four sides, no diagonals") {
        Deployment d = make_deployment({{0, 0}, {15, 0}, {15, 15}, {0, 15}}, 10, 20);
        RipsComplex rc = build_rips(d);
        CHECK(rc.edges.size() == 4);  // diagonals are ~21.2 m
        CHECK(rc.triangles.empty());
    }
}

TEST_CASE("rips_at_scale monotonicity and consistency with build_rips") {
    RngStream rng(21, 0);
    Deployment d = sample_deployment({50, 50}, 0.02, 10, 20, 20, rng);
    RipsComplex at_rc = rips_at_scale(d, d.r_c);
    RipsComplex direct = build_rips(d);
    CHECK(at_rc.edges == direct.edges);
    CHECK(at_rc.triangles == direct.triangles);

    RipsComplex tiny = rips_at_scale(d, 1e-9);
    CHECK(tiny.edges.empty());
    CHECK(tiny.vertices.size() == d.nodes.size());

    // nested simplex sets across increasing scales
    RipsComplex s1 = rips_at_scale(d, 12.0);
    RipsComplex s2 = rips_at_scale(d, 17.0);
    for (const auto& e : s1.edges) {
        CHECK(std::find(s2.edges.begin(), s2.edges.end(), e) != s2.edges.end());
    }
    for (const auto& t : s1.triangles) {
        CHECK(std::find(s2.triangles.begin(), s2.triangles.end(), t) != s2.triangles.end());
    }
}

TEST_CASE("face closure holds on random deployments") {
    for (int seed = 0; seed < 5; ++seed) {
        RngStream rng(100 + seed, 0);
        Deployment d = sample_deployment({60, 60}, 0.015, 10, 20, 20, rng);
        RipsComplex rc = build_rips(d);
        std::set<std::array<int, 2>> edges(rc.edges.begin(), rc.edges.end());
        std::set<int> verts(rc.vertices.begin(), rc.vertices.end());
        for (const auto& e : rc.edges) {
            CHECK(verts.count(e[0]));
            CHECK(verts.count(e[1]));
        }
        for (const auto& t : rc.triangles) {
            CHECK(edges.count({t[0], t[1]}));
            CHECK(edges.count({t[0], t[2]}));
            CHECK(edges.count({t[1], t[2]}));
        }
    }
}

TEST_CASE("cech_simplex pair and triple cases") {
    SUBCASE("pair at distance exactly 2 r_s intersects in one point") {
        Deployment d = make_deployment({{0, 0}, {20, 0}}, 10, 40);
        CHECK(cech_simplex(std::array{0, 1}, d));
    }
    SUBCASE("pair beyond 2 r_s") {
        Deployment d = make_deployment({{0, 0}, {20.001, 0}}, 10, 40);
        CHECK_FALSE(cech_simplex(std::array{0, 1}, d));
    }
    SUBCASE("equilateral triple, side 20, r_s 10: pairwise tangent, empty middle") {
        double h = 20.0 * std::sqrt(3.0) / 2.0;
        Deployment d = make_deployment({{0, 0}, {20, 0}, {10, h}}, 10, 40);
        CHECK_FALSE(cech_simplex(std::array{0, 1, 2}, d));
        CHECK(cech_simplex(std::array{0, 1}, d));
    }
    SUBCASE("equilateral triple, side 10, r_s 10: centroid witnesses") {
        double h = 10.0 * std::sqrt(3.0) / 2.0;
        Deployment d = make_deployment({{0, 0}, {10, 0}, {5, h}}, 10, 40);
        CHECK(cech_simplex(std::array{0, 1, 2}, d));
    }
    SUBCASE("errors") {
        Deployment d = make_deployment({{0, 0}, {10, 0}}, 10, 40);
        CHECK_THROWS(cech_simplex(std::array{0, 5}, d));     // unknown id
        CHECK_THROWS(cech_simplex(std::array{0, 0, 1}, d));  // repeated id
    }
}

TEST_CASE("betti on hand-built complexes") {
    SUBCASE("4-cycle without chords") {
        RipsComplex rc;
        rc.vertices = {0, 1, 2, 3};
        rc.edges = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
        HomologyReport rep = betti(rc);
        CHECK(rep.betti0 == 1);
        CHECK(rep.betti1 == 1);
    }
    SUBCASE("K4 with all four triangles") {
        RipsComplex rc;
        rc.vertices = {0, 1, 2, 3};
        rc.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        rc.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        HomologyReport rep = betti(rc);
        CHECK(rep.betti0 == 1);
        CHECK(rep.betti1 == 0);
    }
    SUBCASE("two disjoint filled triangles") {
        RipsComplex rc;
        rc.vertices = {0, 1, 2, 10, 11, 12};
        rc.edges = {{0, 1}, {0, 2}, {1, 2}, {10, 11}, {10, 12}, {11, 12}};
        rc.triangles = {{0, 1, 2}, {10, 11, 12}};
        HomologyReport rep = betti(rc);
        CHECK(rep.betti0 == 2);
        CHECK(rep.betti1 == 0);
    }
}

TEST_CASE("is_simple_connectedness") {
    SimplicialGraph triangle{{0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(is_simple_connectedness(triangle));

    SimplicialGraph square{{0, 1, 2, 3}, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}};
    CHECK_FALSE(is_simple_connectedness(square));

    SimplicialGraph path{{0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(is_simple_connectedness(path));

    SimplicialGraph lone{{5}, {}};
    CHECK(is_simple_connectedness(lone));

    SimplicialGraph split{{0, 1, 2, 3}, {{0, 1}, {2, 3}}};
    CHECK_FALSE(is_simple_connectedness(split));
}

TEST_CASE("betti agrees with brute-force cycle-space enumeration on small graphs") {
    // random graphs on up to 8 vertices, few enough edges to enumerate
    RngStream rng(31, 0);
    int tested = 0;
    while (tested < 60) {
        int n = 4 + static_cast<int>(rng.uniform() * 5.0);  // 4..8
        SimplicialGraph g;
        for (int v = 0; v < n; ++v) g.vertices.push_back(v);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng.uniform() < 0.35) g.edges.push_back({u, v});
            }
        }
        if (g.edges.size() > 16) continue;
        ++tested;
        HomologyReport impl = betti_flag(g);
        HomologyReport ref = covhole::testing::flag_betti_bruteforce(g);
        CHECK(impl.betti0 == ref.betti0);
        CHECK(impl.betti1 == ref.betti1);
    }
}

TEST_CASE("rips inclusion spot checks at gamma = 1.5") {
    // r_c <= sqrt(3) r_s: every Rips simplex must be a Cech simplex
    for (int seed = 0; seed < 10; ++seed) {
        RngStream rng(500 + seed, 0);
        Deployment d = sample_deployment({60, 60}, 0.02, 10, 15, 15, rng);
        RipsComplex rc = build_rips(d);
        for (const auto& e : rc.edges) {
            CHECK(cech_simplex(std::array{e[0], e[1]}, d));
        }
        for (const auto& t : rc.triangles) {
            CHECK(cech_simplex(std::array{t[0], t[1], t[2]}, d));
        }
    }
}
