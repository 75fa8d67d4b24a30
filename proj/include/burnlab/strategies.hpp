#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

/// Strict schedule of length ceil(sqrt(n)) burning P_n in that many rounds.
/// The first (largest) ball absorbs the slack k^2 - n at the left end; every
/// later ball tiles 2r+1 fresh vertices.
BurnSchedule path_schedule(std::size_t n);

/// ceil(sqrt(n)) in exact integer arithmetic.
std::uint32_t ceil_sqrt(std::uint64_t n);

/// f(k) = sum_{r<k} (1 + 2r + 2r^2) = (2k^3 + k)/3, the largest number of grid
/// vertices k balls of radii 0..k-1 can hold.
std::uint64_t grid_ball_capacity(std::uint64_t k);

struct GridPlan {
    std::size_t rows = 0;  // m, after normalization m <= n
    std::size_t cols = 0;  // n
    bool transposed = false;  // input had more rows than columns
    bool narrow = false;
    double gamma = 0.0;  // m / sqrt(n)
    double k1 = 0.0;     // (mn)^{1/3} / gamma^{1/6}
    double k2 = 0.0;     // (3/2)^{1/3} (mn)^{1/3} (1 + C / gamma^{1/6})
    double slack = 1.0;  // C
    std::uint32_t strips = 0;
    std::uint32_t first_radius = 0;
    std::uint32_t last_radius = 0;
    std::uint32_t target_rounds = 0;  // L: rounds the covering was verified for
    std::uint32_t repair_balls = 0;   // balls added outside the strip construction
    BurnSchedule schedule;            // vertex ids of the input (rows x cols) grid
    std::uint32_t achieved_rounds = 0;
};

/// Diagonal-strip covering of P_m x P_n. Grids with m <= ceil(sqrt(n)) go to
/// grid_narrow_schedule. Otherwise balls of consecutive radii starting at
/// ceil(k1) are stacked in bands of constant (col - row), starting at the
/// top-right corner; leftover rounds get greedy repair balls. The result is
/// verified with the burning engine.
GridPlan grid_strip_schedule(std::size_t rows, std::size_t cols, double slack = 1.0);

/// Fires every ceil(sqrt(n)) columns along the top row, left to right.
/// Requires m <= ceil(sqrt(n)) after normalization.
GridPlan grid_narrow_schedule(std::size_t rows, std::size_t cols);

/// max(largest k with f(k) < mn, plus one; ceil(sqrt(max(m, n)))).
std::uint32_t grid_lower_bound(std::size_t rows, std::size_t cols);

struct CellPlan {
    double coefficient = 0.5;  // a; cell side a * r^{1/3}
    double cell_side = 0.0;
    std::size_t cells_per_side = 0;
    std::vector<std::size_t> occupancy;  // row-major point counts
    std::vector<Vertex> ignitions;       // one per nonempty cell, row-major
    BurnSchedule schedule;               // permissive: ignitions in order
    std::optional<std::uint32_t> achieved_rounds;      // whole graph
    std::optional<std::uint32_t> giant_achieved_rounds;  // largest component
    std::size_t giant_size = 0;
};

/// Two-phase cell strategy on a random geometric graph: tessellate the unit
/// square into cells of side a r^{1/3} (last row/column absorb the
/// remainder), ignite in row-major order the vertex nearest each nonempty
/// cell's center, then let the fire spread to completion.
CellPlan rgg_cell_schedule(const Graph& g, const PointSet& pts, double coefficient = 0.5);

struct RggBound {
    double radius = 0.0;
    double tessellation_constant = 400.0;  // C0 = 25 * 16
    std::uint32_t t = 0;  // floor((2 / (C0 pi r^2))^{1/3})
    /// Asymptotic (a.a.s.) claim b >= t + 1, not a per-instance proof.
    std::uint32_t claimed_lower() const { return t + 1; }
};

RggBound rgg_lower_bound(double radius, double tessellation_constant = 400.0);

/// First round at whose end every vertex of `subset` burns.
std::optional<std::uint32_t> completion_within(const BurnTrace& trace, std::span<const Vertex> subset);

}  // namespace burnlab
