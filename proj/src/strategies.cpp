#include "burnlab/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace burnlab {

std::uint32_t ceil_sqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return static_cast<std::uint32_t>(r * r == n ? r : r + 1);
}

std::uint64_t grid_ball_capacity(std::uint64_t k) { return (2 * k * k * k + k) / 3; }

BurnSchedule path_schedule(std::size_t n) {
    if (n < 1) throw Error("path schedule needs n >= 1");
    const std::uint64_t k = ceil_sqrt(n);
    const std::uint64_t excess = k * k - n;  // 0 <= excess <= 2k - 2
    const std::uint64_t first_width = 2 * k - 1 - excess;
    BurnSchedule s;
    s.sources.push_back(static_cast<Vertex>(k - 1 >= excess ? k - 1 - excess : 0));
    std::uint64_t pos = first_width;
    for (std::uint64_t i = 2; i <= k; ++i) {
        const std::uint64_t radius = k - i;
        s.sources.push_back(static_cast<Vertex>(pos + radius));
        pos += 2 * radius + 1;
    }
    return s;
}

namespace {

struct GridGeometry {
    std::size_t rows;  // normalized, rows <= cols
    std::size_t cols;
    bool transposed;
    std::size_t in_cols;  // column count of the caller's grid

    Vertex id(std::size_t i, std::size_t j) const {
        return transposed ? grid_id(j, i, in_cols) : grid_id(i, j, in_cols);
    }
};

GridGeometry normalize(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw Error("grid needs rows, cols >= 1");
    if (rows <= cols) return {rows, cols, false, cols};
    return {cols, rows, true, cols};
}

struct Ball {
    std::size_t row;
    std::size_t col;
    std::uint32_t radius;  // radius the construction intended
};

void fill_plan_constants(GridPlan& plan, double slack) {
    const double m = static_cast<double>(plan.rows);
    const double n = static_cast<double>(plan.cols);
    const double mn13 = std::cbrt(m * n);
    plan.gamma = m / std::sqrt(n);
    plan.slack = slack;
    plan.k1 = mn13 / std::pow(plan.gamma, 1.0 / 6.0);
    plan.k2 = std::cbrt(1.5) * mn13 * (1.0 + slack / std::pow(plan.gamma, 1.0 / 6.0));
}

// Covered indicator on the normalized grid for balls (center, radius).
class GridCover {
public:
    GridCover(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), covered_(rows * cols, 0) {}

    void add(std::size_t ci, std::size_t cj, std::uint32_t radius) {
        const auto r = static_cast<std::ptrdiff_t>(radius);
        const auto i0 = static_cast<std::ptrdiff_t>(ci);
        const auto j0 = static_cast<std::ptrdiff_t>(cj);
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i0 - r);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(rows_) - 1, i0 + r);
        for (std::ptrdiff_t i = lo; i <= hi; ++i) {
            const std::ptrdiff_t span = r - std::abs(i - i0);
            const std::ptrdiff_t a = std::max<std::ptrdiff_t>(0, j0 - span);
            const std::ptrdiff_t b = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(cols_) - 1, j0 + span);
            for (std::ptrdiff_t j = a; j <= b; ++j) {
                auto& c = covered_[static_cast<std::size_t>(i) * cols_ + static_cast<std::size_t>(j)];
                if (!c) {
                    c = 1;
                    ++count_;
                }
            }
        }
    }
    bool full() const { return count_ == covered_.size(); }
    /// First uncovered vertex in row-major order (full() must be false).
    std::pair<std::size_t, std::size_t> first_gap() {
        while (covered_[cursor_]) ++cursor_;
        return {cursor_ / cols_, cursor_ % cols_};
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<char> covered_;
    std::size_t count_ = 0;
    std::size_t cursor_ = 0;
};

// Balls of consecutive radii first_radius, first_radius+1, ... stacked in
// bands of constant w = col - row. A ball of radius r centered at (u, w) in
// the rotated coordinates u = row + col, w = col - row covers the square
// |u - u0| <= r, |w - w0| <= r. Each band is as wide as its first ball and
// the balls inside it are stacked along u. Bands start at the top-right
// corner and move toward the bottom-left one.
std::vector<Ball> diagonal_strips(std::size_t rows, std::size_t cols, std::uint32_t first_radius,
                                  std::uint32_t& strips) {
    const auto m = static_cast<std::int64_t>(rows);
    const auto n = static_cast<std::int64_t>(cols);
    std::vector<Ball> balls;
    std::int64_t radius = first_radius;
    strips = 0;
    for (std::int64_t whi = n - 1; whi >= -(m - 1);) {
        const std::int64_t band = radius;
        const std::int64_t wlo = whi - 2 * band;
        const std::int64_t wc = whi - band;
        std::int64_t umin = std::numeric_limits<std::int64_t>::max();
        std::int64_t umax = std::numeric_limits<std::int64_t>::min();
        for (std::int64_t w = std::max(wlo, -(m - 1)); w <= std::min(whi, n - 1); ++w) {
            umin = std::min(umin, std::abs(w));
            umax = std::max(umax, std::min(2 * (n - 1) - w, 2 * (m - 1) + w));
        }
        for (std::int64_t u = umin; u <= umax;) {
            const std::int64_t r = radius++;
            std::int64_t uc = u + r;
            if ((uc - wc) % 2 != 0) --uc;
            const std::int64_t i = std::clamp<std::int64_t>((uc - wc) / 2, 0, m - 1);
            const std::int64_t j = std::clamp<std::int64_t>((uc + wc) / 2, 0, n - 1);
            balls.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::uint32_t>(r)});
            u = uc + r + 1;
        }
        ++strips;
        whi = wlo - 1;
    }
    return balls;
}

void finish_plan(GridPlan& plan, const GridGeometry& geo, const std::vector<std::optional<Vertex>>& slots) {
    const Graph g = grid_graph(geo.transposed ? geo.cols : geo.rows, geo.in_cols);
    std::vector<Vertex> centers;
    centers.reserve(slots.size());
    for (const auto& s : slots) centers.push_back(s.value_or(0));
    plan.schedule = repair_schedule(g, centers);
    const BurnTrace trace = simulate(g, plan.schedule);
    if (!trace.complete()) throw std::logic_error("grid schedule failed to burn the grid");
    plan.achieved_rounds = *trace.completion_round;
}

}  // namespace

std::uint32_t grid_lower_bound(std::size_t rows, std::size_t cols) {
    const GridGeometry geo = normalize(rows, cols);
    const std::uint64_t mn = static_cast<std::uint64_t>(geo.rows) * geo.cols;
    std::uint64_t k = 0;
    while (grid_ball_capacity(k + 1) < mn) ++k;
    return static_cast<std::uint32_t>(std::max<std::uint64_t>(k + 1, ceil_sqrt(geo.cols)));
}

GridPlan grid_narrow_schedule(std::size_t rows, std::size_t cols) {
    const GridGeometry geo = normalize(rows, cols);
    const std::uint32_t spacing = ceil_sqrt(geo.cols);
    if (geo.rows > spacing) throw Error("narrow strategy needs min(m,n) <= ceil(sqrt(max(m,n)))");

    GridPlan plan;
    plan.rows = geo.rows;
    plan.cols = geo.cols;
    plan.transposed = geo.transposed;
    plan.narrow = true;
    fill_plan_constants(plan, 1.0);

    std::vector<std::optional<Vertex>> slots;
    for (std::size_t start = 0; start < geo.cols; start += spacing) {
        const std::size_t col = std::min(geo.cols - 1, start + spacing / 2);
        slots.emplace_back(geo.id(0, col));
    }
    plan.target_rounds = static_cast<std::uint32_t>(slots.size() + spacing / 2 + geo.rows);
    finish_plan(plan, geo, slots);
    return plan;
}

GridPlan grid_strip_schedule(std::size_t rows, std::size_t cols, double slack) {
    const GridGeometry geo = normalize(rows, cols);
    if (geo.rows <= ceil_sqrt(geo.cols)) {
        GridPlan plan = grid_narrow_schedule(rows, cols);
        fill_plan_constants(plan, slack);
        return plan;
    }

    GridPlan plan;
    plan.rows = geo.rows;
    plan.cols = geo.cols;
    plan.transposed = geo.transposed;
    fill_plan_constants(plan, slack);
    plan.first_radius = static_cast<std::uint32_t>(std::ceil(plan.k1));

    const std::vector<Ball> balls = diagonal_strips(geo.rows, geo.cols, plan.first_radius, plan.strips);
    plan.last_radius = balls.back().radius;

    // Slot s is ignited in round s+1 and has radius L-1-s. Strip balls keep
    // their slots as L grows (their radii grow with it); free slots are
    // refilled greedily each time.
    for (std::uint32_t rounds = plan.last_radius + 1;; ++rounds) {
        std::vector<std::optional<Vertex>> slots(rounds);
        GridCover cover(geo.rows, geo.cols);
        const std::uint32_t grow = rounds - (plan.last_radius + 1);
        for (const Ball& b : balls) {
            const std::uint32_t slot = plan.last_radius - b.radius;
            slots[slot] = geo.id(b.row, b.col);
            cover.add(b.row, b.col, b.radius + grow);
        }
        std::uint32_t repairs = 0;
        for (std::uint32_t s = 0; s < rounds && !cover.full(); ++s) {
            if (slots[s]) continue;
            const std::uint32_t radius = rounds - 1 - s;
            auto [i, j] = cover.first_gap();
            const std::size_t ci = std::min(geo.rows - 1, i + radius);
            slots[s] = geo.id(ci, j);
            cover.add(ci, j, radius);
            ++repairs;
        }
        if (!cover.full()) continue;
        plan.target_rounds = rounds;
        plan.repair_balls = repairs;
        finish_plan(plan, geo, slots);
        return plan;
    }
}

CellPlan rgg_cell_schedule(const Graph& g, const PointSet& pts, double coefficient) {
    if (pts.points.empty()) throw Error("point set is empty");
    if (pts.points.size() != g.num_vertices()) throw Error("point set and graph disagree on n");
    if (!(coefficient > 0.0) || !(pts.radius > 0.0)) throw Error("cell strategy needs a > 0 and r > 0");
    CellPlan plan;
    plan.coefficient = coefficient;
    plan.cell_side = coefficient * std::cbrt(pts.radius);
    if (plan.cell_side > 1.0) throw Error("cell side a r^{1/3} exceeds 1");

    const double side = plan.cell_side;
    const auto c = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(1.0 / side)));
    plan.cells_per_side = c;
    auto index = [&](double coord) {
        return std::min(c - 1, static_cast<std::size_t>(coord / side));
    };
    auto center = [&](std::size_t q) {
        return q + 1 < c ? (static_cast<double>(q) + 0.5) * side : 0.5 * (static_cast<double>(q) * side + 1.0);
    };

    plan.occupancy.assign(c * c, 0);
    std::vector<Vertex> nearest(c * c, 0);
    std::vector<double> best(c * c, std::numeric_limits<double>::infinity());
    for (Vertex v = 0; v < pts.points.size(); ++v) {
        const Point& p = pts.points[v];
        const std::size_t row = index(p.y);
        const std::size_t col = index(p.x);
        const std::size_t cell = row * c + col;
        ++plan.occupancy[cell];
        const double dx = p.x - center(col);
        const double dy = p.y - center(row);
        const double d2 = dx * dx + dy * dy;
        if (d2 < best[cell]) {
            best[cell] = d2;
            nearest[cell] = v;
        }
    }
    for (std::size_t cell = 0; cell < c * c; ++cell) {
        if (plan.occupancy[cell] > 0) plan.ignitions.push_back(nearest[cell]);
    }
    plan.schedule = BurnSchedule{plan.ignitions, Strictness::Permissive};

    const BurnTrace trace = simulate(g, plan.schedule);
    plan.achieved_rounds = trace.completion_round;
    const auto comps = components(g);
    const auto giant = std::max_element(comps.begin(), comps.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    plan.giant_size = giant->size();
    plan.giant_achieved_rounds = completion_within(trace, *giant);
    return plan;
}

RggBound rgg_lower_bound(double radius, double tessellation_constant) {
    if (!(radius > 0.0)) throw Error("radius must be positive");
    if (!(tessellation_constant > 0.0)) throw Error("tessellation constant must be positive");
    RggBound out;
    out.radius = radius;
    out.tessellation_constant = tessellation_constant;
    const double t = std::cbrt(2.0 / (tessellation_constant * std::numbers::pi * radius * radius));
    out.t = static_cast<std::uint32_t>(std::floor(t));
    return out;
}

std::optional<std::uint32_t> completion_within(const BurnTrace& trace, std::span<const Vertex> subset) {
    std::vector<std::uint32_t> when(trace.burned_final.size(), 0);
    for (std::size_t t = 0; t < trace.rounds.size(); ++t)
        for (Vertex v : trace.rounds[t]) when[v] = static_cast<std::uint32_t>(t + 1);
    std::uint32_t last = 0;
    for (Vertex v : subset) {
        if (when[v] == 0) return std::nullopt;
        last = std::max(last, when[v]);
    }
    return last;
}

}  // namespace burnlab
