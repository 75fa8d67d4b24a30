#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnlab {

using Vertex = std::uint32_t;

/// Thrown for violated preconditions and domain errors (bad ids, malformed files, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distance sentinel for vertices outside the source's component. Also used
/// as the eccentricity/diameter of a disconnected graph. Serialized as "inf".
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint32_t kInfinite = kUnreachable;

/// Immutable simple undirected graph on vertices 0..n-1, stored as a
/// compressed adjacency array with strictly sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    /// Canonical construction from an edge list. Rejects out-of-range ids,
    /// self-loops and duplicate edges (in either orientation).
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    /// Construction from per-vertex neighbor lists already in canonical form
    /// (used by generators that produce adjacency directly). The invariants
    /// are still checked.
    static Graph from_adjacency(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors);

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v < num_vertices(); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> neighbors_;
};

/// Free-function spelling of Graph::from_edges.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

struct DistanceMap {
    Vertex source = 0;
    std::vector<std::uint32_t> dist;  // kUnreachable outside the source's component

    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

/// Reusable BFS scratch space. Visited marks are stamped with a generation
/// counter so successive runs never clear the arrays. One workspace per
/// thread; the graph itself is shared read-only.
class BfsWorkspace {
public:
    static constexpr std::uint32_t kNoLimit = std::numeric_limits<std::uint32_t>::max();

    BfsWorkspace() = default;
    explicit BfsWorkspace(std::size_t n) { reserve(n); }

    /// Breadth-first search from `source`, visiting every vertex at distance
    /// <= max_depth. Returns the visited vertices in BFS order (nondecreasing
    /// distance). The view is invalidated by the next run.
    std::span<const Vertex> run(const Graph& g, Vertex source, std::uint32_t max_depth = kNoLimit);

    /// Multi-source variant; all sources at depth 0.
    std::span<const Vertex> run(const Graph& g, std::span<const Vertex> sources,
                                std::uint32_t max_depth = kNoLimit);

    bool visited(Vertex v) const { return stamp_[v] == generation_; }
    /// Depth of a vertex visited by the last run.
    std::uint32_t depth(Vertex v) const { return depth_[v]; }
    /// Largest depth reached by the last run.
    std::uint32_t max_depth_reached() const { return last_depth_; }

private:
    void reserve(std::size_t n);
    void next_generation();

    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> depth_;
    std::vector<Vertex> queue_;
    std::uint32_t generation_ = 0;
    std::uint32_t last_depth_ = 0;
};

DistanceMap bfs_distances(const Graph& g, Vertex v);

/// N(v, r): vertices within distance r of v, sorted by id.
std::vector<Vertex> ball(const Graph& g, Vertex v, std::uint32_t r);
std::size_t ball_size(const Graph& g, Vertex v, std::uint32_t r);
std::size_t ball_size(const Graph& g, Vertex v, std::uint32_t r, BfsWorkspace& ws);

/// S(v, r): vertices at distance exactly r from v, sorted by id.
std::vector<Vertex> sphere(const Graph& g, Vertex v, std::uint32_t r);

/// Largest BFS distance from v, or kInfinite if g is disconnected.
std::uint32_t eccentricity(const Graph& g, Vertex v);
std::uint32_t eccentricity(const Graph& g, Vertex v, BfsWorkspace& ws);
/// Max eccentricity, or kInfinite if g is disconnected.
std::uint32_t diameter(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Grid vertex (row, col) on a grid with `cols` columns, row-major.
constexpr Vertex grid_id(std::size_t row, std::size_t col, std::size_t cols) {
    return static_cast<Vertex>(row * cols + col);
}

/// "inf" for the sentinel, the decimal value otherwise.
std::string distance_to_string(std::uint32_t d);

}  // namespace burnlab
