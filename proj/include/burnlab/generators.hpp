#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Points of a random geometric graph; point i is vertex i.
struct PointSet {
    std::vector<Point> points;
    double radius = 0.0;
};

struct GnpSample {
    Graph graph;
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    double expected_degree = 0.0;  // p (n - 1)
};

struct GnpOptions {
    /// For p > 1/2, draw the complement with probability 1 - p and invert.
    /// Same distribution, different stream consumption, so off by default.
    bool complement_for_dense = false;
};

/// Binomial random graph: every pair {u, v}, u < v, visited in lexicographic
/// order and kept independently with probability p, one uniform draw per pair
/// from SplitMix64(seed).
GnpSample gen_gnp(std::size_t n, double p, std::uint64_t seed, GnpOptions opts = {});

struct RggSample {
    Graph graph;
    PointSet points;
};

/// Random geometric graph on [0,1]^2: n points drawn as (x, y) pairs from
/// SplitMix64(seed); edge iff squared Euclidean distance <= r^2. Neighbors
/// are found through a bucket grid with cell side >= r.
RggSample gen_rgg(std::size_t n, double r, std::uint64_t seed);

/// Geometric graph on given points, via the bucket grid.
Graph geometric_graph(const PointSet& pts);
/// Same edge set by the all-pairs check; reference for geometric_graph.
Graph geometric_graph_bruteforce(const PointSet& pts);

/// The edge predicate shared by both constructions.
inline bool within_radius(const Point& a, const Point& b, double r) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy <= r * r;
}

/// sqrt(ln n / (pi n)), the connectivity threshold radius.
double critical_radius(std::size_t n);

enum class StructuredKind { Path, Grid, Torus };

StructuredKind parse_structured_kind(std::string_view name);

/// P_n (uses cols only), P_m x P_n, or C_m x C_n with row-major ids i*cols+j.
Graph gen_structured(StructuredKind kind, std::size_t rows, std::size_t cols);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph torus_graph(std::size_t rows, std::size_t cols);

}  // namespace burnlab
