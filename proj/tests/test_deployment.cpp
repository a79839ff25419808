#include "doctest.h"

#include <cmath>
#include <set>

#include "covhole/deployment.hpp"

using namespace covhole;

TEST_CASE("fence ring on a 100x100 field with 20 m spacing has 20 nodes") {
    RngStream rng(1, 0);
    Deployment d = sample_deployment({100, 100}, 0.0, 10, 20, 20, rng);
    // perimeter 400 / 20, corners shared between sides
    CHECK(d.nodes.size() == 20);
    std::set<std::pair<double, double>> seen;
    for (const auto& n : d.nodes) {
        CHECK(n.is_fence);
        bool on_border = n.pos.x == 0.0 || n.pos.x == 100.0 || n.pos.y == 0.0 || n.pos.y == 100.0;
        CHECK(on_border);
        seen.insert({n.pos.x, n.pos.y});
    }
    CHECK(seen.size() == 20);  // no duplicated corners
    CHECK(seen.count({0.0, 0.0}) == 1);
    CHECK(seen.count({100.0, 0.0}) == 1);
    CHECK(seen.count({100.0, 100.0}) == 1);
    CHECK(seen.count({0.0, 100.0}) == 1);
}

TEST_CASE("internal node count follows the Poisson mean") {
    const double lambda = 0.010;
    long total = 0;
    const int reps = 20000;
    for (int i = 0; i < reps; ++i) {
        RngStream rng(5, i);
        Deployment d = sample_deployment({100, 100}, lambda, 10, 20, 20, rng);
        total += static_cast<long>(d.nodes.size()) - 20;
    }
    double mean = static_cast<double>(total) / reps;
    CHECK(std::abs(mean - 100.0) < 5.0 * std::sqrt(100.0 / reps));
}

TEST_CASE("deployment ids ascend with fence first and sampling is deterministic") {
    RngStream r1(77, 3);
    RngStream r2(77, 3);
    Deployment a = sample_deployment({100, 100}, 0.01, 10, 20, 20, r1);
    Deployment b = sample_deployment({100, 100}, 0.01, 10, 20, 20, r2);
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        CHECK(a.nodes[i].id == static_cast<int>(i));
        CHECK(a.nodes[i].pos.x == b.nodes[i].pos.x);
        CHECK(a.nodes[i].pos.y == b.nodes[i].pos.y);
        if (i > 0) CHECK(a.nodes[i].is_fence <= a.nodes[i - 1].is_fence);
    }
}

TEST_CASE("sample_deployment rejects a fence spacing wider than r_c") {
    RngStream rng(1, 0);
    CHECK_THROWS(sample_deployment({100, 100}, 0.01, 10, 20, 25, rng));
}

TEST_CASE("is_covered uses the closed sensing disk") {
    Deployment d;
    d.r_s = 10;
    d.r_c = 20;
    d.field = {100, 100};
    d.nodes.push_back({0, {50, 50}, false});
    CHECK(is_covered({50, 50}, d));
    CHECK(is_covered({60, 50}, d));  // distance exactly r_s
    CHECK_FALSE(is_covered({60.0001, 50}, d));

    Deployment empty;
    empty.r_s = 10;
    CHECK_FALSE(is_covered({0, 0}, empty));
}

TEST_CASE("index_of finds nodes and rejects unknown ids") {
    RngStream rng(2, 0);
    Deployment d = sample_deployment({100, 100}, 0.005, 10, 20, 20, rng);
    CHECK(d.node(0).id == 0);
    CHECK(d.node(static_cast<int>(d.nodes.size()) - 1).id ==
          static_cast<int>(d.nodes.size()) - 1);
    CHECK_THROWS(d.node(100000));
}
