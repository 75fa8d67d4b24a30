#include "burnlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "burnlab/rng.hpp"

namespace burnlab {

GnpSample gen_gnp(std::size_t n, double p, std::uint64_t seed, GnpOptions opts) {
    if (n < 1) throw Error("G(n,p) needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0,1]");

    SplitMix64 rng(seed);
    const bool invert = opts.complement_for_dense && p > 0.5;
    const double q = invert ? 1.0 - p : p;

    std::vector<std::pair<Vertex, Vertex>> edges;
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    edges.reserve(static_cast<std::size_t>(pairs * p * 1.05) + 16);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(q) != invert) edges.emplace_back(u, v);
        }
    }
    return GnpSample{Graph::from_edges(n, edges), n, p, seed, p * static_cast<double>(n - 1)};
}

namespace {

struct BucketGrid {
    std::size_t side = 1;
    std::vector<std::size_t> start;  // CSR over cells
    std::vector<Vertex> members;

    std::size_t cell_of(double c) const {
        auto i = static_cast<std::size_t>(c * static_cast<double>(side));
        return std::min(i, side - 1);
    }
};

BucketGrid bucket(const PointSet& pts) {
    const std::size_t n = pts.points.size();
    BucketGrid grid;
    // Cell side 1/side >= r; the cap only bounds memory for tiny radii.
    const auto cap = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    if (pts.radius > 0.0) {
        const double fit = std::floor(1.0 / pts.radius);
        grid.side = fit >= static_cast<double>(cap) ? cap : std::max<std::size_t>(1, static_cast<std::size_t>(fit));
    } else {
        grid.side = cap;
    }
    const std::size_t cells = grid.side * grid.side;
    std::vector<std::size_t> cell(n);
    grid.start.assign(cells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pt = pts.points[i];
        cell[i] = grid.cell_of(pt.y) * grid.side + grid.cell_of(pt.x);
        ++grid.start[cell[i] + 1];
    }
    for (std::size_t c = 0; c < cells; ++c) grid.start[c + 1] += grid.start[c];
    grid.members.resize(n);
    std::vector<std::size_t> fill(grid.start.begin(), grid.start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) grid.members[fill[cell[i]]++] = static_cast<Vertex>(i);
    return grid;
}

void check_points(const PointSet& pts) {
    if (pts.points.empty()) throw Error("point set is empty");
    if (!(pts.radius >= 0.0)) throw Error("radius must be non-negative");
    for (const auto& p : pts.points) {
        if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
            throw Error("point outside the unit square");
        }
    }
}

}  // namespace

Graph geometric_graph(const PointSet& pts) {
    check_points(pts);
    const std::size_t n = pts.points.size();
    const BucketGrid grid = bucket(pts);
    const double r = pts.radius;

    auto for_each_neighbor = [&](std::size_t i, auto&& fn) {
        const auto& a = pts.points[i];
        const std::size_t cy = grid.cell_of(a.y);
        const std::size_t cx = grid.cell_of(a.x);
        const std::size_t y0 = cy == 0 ? 0 : cy - 1;
        const std::size_t x0 = cx == 0 ? 0 : cx - 1;
        const std::size_t y1 = std::min(cy + 1, grid.side - 1);
        const std::size_t x1 = std::min(cx + 1, grid.side - 1);
        for (std::size_t y = y0; y <= y1; ++y) {
            for (std::size_t x = x0; x <= x1; ++x) {
                const std::size_t c = y * grid.side + x;
                for (std::size_t k = grid.start[c]; k < grid.start[c + 1]; ++k) {
                    const Vertex j = grid.members[k];
                    if (j != i && within_radius(a, pts.points[j], r)) fn(j);
                }
            }
        }
    };

    std::vector<std::size_t> offsets(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t deg = 0;
        for_each_neighbor(i, [&](Vertex) { ++deg; });
        offsets[i + 1] = offsets[i] + deg;
    }
    std::vector<Vertex> nbrs(offsets[n]);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = offsets[i];
        for_each_neighbor(i, [&](Vertex j) { nbrs[k++] = j; });
        std::sort(nbrs.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
                  nbrs.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
    }
    return Graph::from_adjacency(std::move(offsets), std::move(nbrs));
}

Graph geometric_graph_bruteforce(const PointSet& pts) {
    check_points(pts);
    const std::size_t n = pts.points.size();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (within_radius(pts.points[u], pts.points[v], pts.radius)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

RggSample gen_rgg(std::size_t n, double r, std::uint64_t seed) {
    if (n < 1) throw Error("random geometric graph needs n >= 1");
    if (!(r >= 0.0)) throw Error("radius must be non-negative");
    SplitMix64 rng(seed);
    PointSet pts;
    pts.radius = r;
    pts.points.resize(n);
    for (auto& p : pts.points) {
        p.x = rng.uniform01();
        p.y = rng.uniform01();
    }
    Graph g = geometric_graph(pts);
    return RggSample{std::move(g), std::move(pts)};
}

double critical_radius(std::size_t n) {
    if (n < 2) throw Error("critical radius needs n >= 2");
    const double nn = static_cast<double>(n);
    return std::sqrt(std::log(nn) / (std::numbers::pi * nn));
}

StructuredKind parse_structured_kind(std::string_view name) {
    if (name == "path") return StructuredKind::Path;
    if (name == "grid") return StructuredKind::Grid;
    if (name == "torus") return StructuredKind::Torus;
    throw Error("unknown structured graph kind '" + std::string(name) + "'");
}

Graph gen_structured(StructuredKind kind, std::size_t rows, std::size_t cols) {
    switch (kind) {
        case StructuredKind::Path: return path_graph(cols);
        case StructuredKind::Grid: return grid_graph(rows, cols);
        case StructuredKind::Torus: return torus_graph(rows, cols);
    }
    throw Error("unknown structured graph kind");
}

Graph path_graph(std::size_t n) {
    if (n < 1) throw Error("path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw Error("grid needs rows, cols >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j + 1 < cols) edges.emplace_back(grid_id(i, j, cols), grid_id(i, j + 1, cols));
            if (i + 1 < rows) edges.emplace_back(grid_id(i, j, cols), grid_id(i + 1, j, cols));
        }
    }
    return Graph::from_edges(rows * cols, edges);
}

Graph torus_graph(std::size_t rows, std::size_t cols) {
    if (rows < 3 || cols < 3) throw Error("torus needs rows, cols >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            edges.emplace_back(grid_id(i, j, cols), grid_id(i, (j + 1) % cols, cols));
            edges.emplace_back(grid_id(i, j, cols), grid_id((i + 1) % rows, j, cols));
        }
    }
    return Graph::from_edges(rows * cols, edges);
}

}  // namespace burnlab
