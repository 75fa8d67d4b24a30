#include "burnlab/graph.hpp"

#include <algorithm>

namespace burnlab {

namespace {

std::string edge_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v)) {
        throw Error("invalid vertex id " + std::to_string(v) + " (n=" +
                    std::to_string(g.num_vertices()) + ")");
    }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n == 0) throw Error("graph must have at least one vertex");
    if (n > std::numeric_limits<Vertex>::max()) throw Error("vertex count too large");

    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge " + edge_str(u, v) + " has out-of-range id");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        ++degree[u];
        ++degree[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.neighbors_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.neighbors_[fill[u]++] = v;
        g.neighbors_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            throw Error("duplicate edge " + edge_str(static_cast<Vertex>(v), *dup));
        }
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors) {
    if (offsets.size() < 2) throw Error("graph must have at least one vertex");
    if (offsets.front() != 0 || offsets.back() != neighbors.size()) {
        throw Error("inconsistent adjacency offsets");
    }
    Graph g;
    g.offsets_ = std::move(offsets);
    g.neighbors_ = std::move(neighbors);
    const std::size_t n = g.num_vertices();
    for (std::size_t v = 0; v < n; ++v) {
        if (g.offsets_[v] > g.offsets_[v + 1]) throw Error("inconsistent adjacency offsets");
        auto nb = g.neighbors(static_cast<Vertex>(v));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const Vertex u = nb[i];
            if (u >= n) throw Error("edge " + edge_str(static_cast<Vertex>(v), u) + " has out-of-range id");
            if (u == v) throw Error("self-loop at vertex " + std::to_string(v));
            if (i > 0 && nb[i - 1] >= u) {
                throw Error("adjacency of vertex " + std::to_string(v) + " not strictly sorted");
            }
            if (u < v && !g.has_edge(u, static_cast<Vertex>(v))) {
                throw Error("asymmetric adjacency at edge " + edge_str(static_cast<Vertex>(v), u));
            }
        }
    }
    if (g.neighbors_.size() % 2 != 0) throw Error("asymmetric adjacency");
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    return Graph::from_edges(n, edges);
}

void BfsWorkspace::reserve(std::size_t n) {
    if (stamp_.size() < n) {
        stamp_.resize(n, 0);
        depth_.resize(n, 0);
    }
    queue_.reserve(n);
}

void BfsWorkspace::next_generation() {
    if (++generation_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        generation_ = 1;
    }
}

std::span<const Vertex> BfsWorkspace::run(const Graph& g, Vertex source, std::uint32_t max_depth) {
    return run(g, std::span<const Vertex>(&source, 1), max_depth);
}

std::span<const Vertex> BfsWorkspace::run(const Graph& g, std::span<const Vertex> sources,
                                          std::uint32_t max_depth) {
    const std::size_t n = g.num_vertices();
    reserve(n);
    next_generation();
    queue_.clear();
    last_depth_ = 0;
    for (Vertex s : sources) {
        check_vertex(g, s);
        if (stamp_[s] == generation_) continue;
        stamp_[s] = generation_;
        depth_[s] = 0;
        queue_.push_back(s);
    }
    std::size_t head = 0;
    while (head < queue_.size() && queue_.size() < n) {
        const Vertex u = queue_[head++];
        const std::uint32_t du = depth_[u];
        if (du >= max_depth) break;
        for (Vertex w : g.neighbors(u)) {
            if (stamp_[w] == generation_) continue;
            stamp_[w] = generation_;
            depth_[w] = du + 1;
            queue_.push_back(w);
        }
    }
    if (!queue_.empty()) last_depth_ = depth_[queue_.back()];
    return queue_;
}

DistanceMap bfs_distances(const Graph& g, Vertex v) {
    check_vertex(g, v);
    BfsWorkspace ws(g.num_vertices());
    DistanceMap out{v, std::vector<std::uint32_t>(g.num_vertices(), kUnreachable)};
    for (Vertex u : ws.run(g, v)) out.dist[u] = ws.depth(u);
    return out;
}

std::vector<Vertex> ball(const Graph& g, Vertex v, std::uint32_t r) {
    check_vertex(g, v);
    BfsWorkspace ws(g.num_vertices());
    auto visited = ws.run(g, v, r);
    std::vector<Vertex> out(visited.begin(), visited.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ball_size(const Graph& g, Vertex v, std::uint32_t r) {
    BfsWorkspace ws(g.num_vertices());
    return ball_size(g, v, r, ws);
}

std::size_t ball_size(const Graph& g, Vertex v, std::uint32_t r, BfsWorkspace& ws) {
    check_vertex(g, v);
    return ws.run(g, v, r).size();
}

std::vector<Vertex> sphere(const Graph& g, Vertex v, std::uint32_t r) {
    check_vertex(g, v);
    BfsWorkspace ws(g.num_vertices());
    std::vector<Vertex> out;
    for (Vertex u : ws.run(g, v, r)) {
        if (ws.depth(u) == r) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t eccentricity(const Graph& g, Vertex v) {
    BfsWorkspace ws(g.num_vertices());
    return eccentricity(g, v, ws);
}

std::uint32_t eccentricity(const Graph& g, Vertex v, BfsWorkspace& ws) {
    check_vertex(g, v);
    auto visited = ws.run(g, v);
    if (visited.size() != g.num_vertices()) return kInfinite;
    return ws.max_depth_reached();
}

std::uint32_t diameter(const Graph& g) {
    BfsWorkspace ws(g.num_vertices());
    std::uint32_t best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const std::uint32_t e = eccentricity(g, v, ws);
        if (e == kInfinite) return kInfinite;
        best = std::max(best, e);
    }
    return best;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<char> seen(n, 0);
    BfsWorkspace ws(n);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        auto visited = ws.run(g, v);
        std::vector<Vertex> comp(visited.begin(), visited.end());
        for (Vertex u : comp) seen[u] = 1;
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    BfsWorkspace ws(g.num_vertices());
    return ws.run(g, 0).size() == g.num_vertices();
}

std::string distance_to_string(std::uint32_t d) {
    return d == kUnreachable ? std::string("inf") : std::to_string(d);
}

}  // namespace burnlab
