#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "burnlab/generators.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

using namespace burnlab;

namespace {

std::uint32_t naive_ceil_sqrt(std::uint64_t n) {
    std::uint32_t k = 0;
    while (static_cast<std::uint64_t>(k) * k < n) ++k;
    return k;
}

// Largest grid ball: 1 + 4 + 8 + ... + 4r.
std::uint64_t diamond(std::uint64_t r) { return 1 + 2 * r * (r + 1); }

}  // namespace

TEST_CASE("ceil_sqrt and the ball capacity formula") {
    for (std::uint64_t n = 0; n <= 5000; ++n) CHECK(ceil_sqrt(n) == naive_ceil_sqrt(n));
    CHECK(ceil_sqrt(1ULL << 62) == (1U << 31));
    std::uint64_t sum = 0;
    for (std::uint64_t k = 0; k <= 40; ++k) {
        CHECK(grid_ball_capacity(k) == sum);
        sum += diamond(k);
    }
}

TEST_CASE("path_schedule examples") {
    CHECK(path_schedule(1).sources == std::vector<Vertex>{0});
    const BurnSchedule s9 = path_schedule(9);
    CHECK(s9.length() == 3);
    CHECK(simulate(path_graph(9), s9).completion_round == 3u);
    CHECK(path_schedule(100).length() == 10);
}

TEST_CASE("property: path_schedule has length ceil(sqrt n) and burns P_n in time") {
    for (std::size_t n = 1; n <= 3000; ++n) {
        const BurnSchedule s = path_schedule(n);
        CHECK(s.length() == naive_ceil_sqrt(n));
        const BurnTrace tr = simulate(path_graph(n), s);
        REQUIRE(tr.complete());
        CHECK(*tr.completion_round <= s.length());
    }
}

TEST_CASE("path_schedule matches the exact solver") {
    for (std::size_t n = 1; n <= 400; n += (n < 60 ? 1 : 17)) {
        CHECK(path_schedule(n).length() == burning_number_exact(path_graph(n)).b);
    }
}

TEST_CASE("grid_lower_bound examples") {
    CHECK(grid_lower_bound(10, 10) == 6);
    CHECK(grid_lower_bound(2, 2) == 2);
    CHECK(grid_lower_bound(1, 100) == 10);
    CHECK(grid_lower_bound(100, 1) == 10);
}

TEST_CASE("grid_narrow_schedule") {
    const GridPlan a = grid_narrow_schedule(1, 100);
    CHECK(a.achieved_rounds >= 10);
    CHECK(a.achieved_rounds <= 30);
    const GridPlan b = grid_narrow_schedule(2, 4);
    CHECK(b.achieved_rounds >= burning_number_exact(grid_graph(2, 4)).b);
    const GridPlan c = grid_narrow_schedule(5, 100);
    CHECK(c.schedule.length() == 10);
    CHECK(c.achieved_rounds <= 30);
    CHECK_THROWS_AS(grid_narrow_schedule(20, 100), Error);
}

TEST_CASE("grid_strip_schedule small cases") {
    const GridPlan p = grid_strip_schedule(1, 50);
    CHECK(p.narrow);
    const GridPlan g = grid_strip_schedule(10, 10);
    CHECK_FALSE(g.narrow);
    CHECK(g.k1 <= g.k2);
    CHECK(g.achieved_rounds >= 6);
    CHECK(simulate(grid_graph(10, 10), g.schedule).completion_round == g.achieved_rounds);
}

TEST_CASE("strip schedule on the 100 x 100 grid") {
    const GridPlan plan = grid_strip_schedule(100, 100);
    CHECK(simulate(grid_graph(100, 100), plan.schedule).completion_round == plan.achieved_rounds);
    CHECK(plan.achieved_rounds >= 29);
    CHECK(plan.achieved_rounds / 24.66 <= 1.8);
}

TEST_CASE("property: strip schedules complete and respect the lower bound") {
    for (std::size_t m = 1; m <= 24; m += 3) {
        for (std::size_t n = m; n <= 40; n += 5) {
            const GridPlan plan = grid_strip_schedule(m, n);
            const BurnTrace tr = simulate(grid_graph(m, n), plan.schedule);
            REQUIRE(tr.complete());
            CHECK(*tr.completion_round == plan.achieved_rounds);
            CHECK(plan.achieved_rounds >= grid_lower_bound(m, n));
        }
    }
    // Transposed input keeps ids of the input grid.
    const GridPlan t = grid_strip_schedule(30, 12);
    CHECK(t.transposed);
    CHECK(simulate(grid_graph(30, 12), t.schedule).completion_round == t.achieved_rounds);
}

TEST_CASE("rgg_lower_bound") {
    CHECK(rgg_lower_bound(0.01).t == 2);
    CHECK(rgg_lower_bound(0.01).claimed_lower() == 3);
    CHECK(rgg_lower_bound(0.04).t == 0);
    CHECK(rgg_lower_bound(0.01, 800.0).t <= rgg_lower_bound(0.01).t);
    CHECK_THROWS_AS(rgg_lower_bound(0.0), Error);
}

TEST_CASE("rgg_cell_schedule") {
    SUBCASE("single cell: one ignition, completion 1 + ecc") {
        const RggSample s = gen_rgg(200, 0.5, 3);
        REQUIRE(is_connected(s.graph));
        const CellPlan plan = rgg_cell_schedule(s.graph, s.points, 0.9 / std::cbrt(0.5));
        REQUIRE(plan.ignitions.size() == 1);
        CHECK(plan.achieved_rounds == 1 + eccentricity(s.graph, plan.ignitions[0]));
    }
    SUBCASE("one ignition per nonempty cell, schedule completes") {
        const RggSample s = gen_rgg(3000, 3 * critical_radius(3000), 8);
        const CellPlan plan = rgg_cell_schedule(s.graph, s.points);
        std::size_t nonempty = 0;
        for (std::size_t c : plan.occupancy) nonempty += c > 0;
        CHECK(plan.ignitions.size() == nonempty);
        CHECK(plan.cell_side <= 1.0);
        REQUIRE(plan.giant_achieved_rounds.has_value());
        if (is_connected(s.graph)) CHECK(plan.achieved_rounds == plan.giant_achieved_rounds);
    }
    SUBCASE("disconnected input reports incomplete") {
        const RggSample s = gen_rgg(500, 0.2 * critical_radius(500), 4);
        REQUIRE_FALSE(is_connected(s.graph));
        const CellPlan plan = rgg_cell_schedule(s.graph, s.points);
        CHECK_FALSE(plan.achieved_rounds.has_value());
        // The giant finishes iff one of the ignitions landed in it.
        const auto comps = components(s.graph);
        const auto& giant = *std::max_element(comps.begin(), comps.end(),
                                              [](const auto& a, const auto& b) { return a.size() < b.size(); });
        const bool lit = std::any_of(plan.ignitions.begin(), plan.ignitions.end(), [&](Vertex v) {
            return std::find(giant.begin(), giant.end(), v) != giant.end();
        });
        CHECK(plan.giant_achieved_rounds.has_value() == lit);
        CHECK(plan.giant_size == giant.size());
    }
    PointSet empty;
    empty.radius = 0.1;
    CHECK_THROWS_AS(rgg_cell_schedule(Graph(), empty), Error);
}
