#include <doctest.h>

#include <random>

#include "burnlab/bitset.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/graph.hpp"
#include "oracles.hpp"

using namespace burnlab;

TEST_CASE("from_edges rejects invariant violations") {
    const std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
    const std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}};
    const std::vector<std::pair<Vertex, Vertex>> range{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, dup), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, range), Error);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), Error);
}

TEST_CASE("from_adjacency checks symmetry and order") {
    CHECK_NOTHROW(Graph::from_adjacency({0, 1, 2}, {1, 0}));
    CHECK_THROWS_AS(Graph::from_adjacency({0, 1, 1}, {1}), Error);
    CHECK_THROWS_AS(Graph::from_adjacency({0, 2, 3, 4}, {2, 1, 0, 0}), Error);
}

TEST_CASE("path of 5: distances, balls, spheres") {
    const Graph g = path_graph(5);
    CHECK(g.num_edges() == 4);
    const DistanceMap d = bfs_distances(g, 0);
    CHECK(d.dist == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    CHECK(ball(g, 2, 1) == std::vector<Vertex>{1, 2, 3});
    CHECK(sphere(g, 2, 2) == std::vector<Vertex>{0, 4});
    CHECK(ball_size(g, 0, 10) == 5);
    CHECK(eccentricity(g, 2) == 2);
    CHECK(diameter(g) == 4);
}

TEST_CASE("disconnected graphs report infinity") {
    const std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {2, 3}};
    const Graph g = Graph::from_edges(4, e);
    CHECK(bfs_distances(g, 0).dist[2] == kUnreachable);
    CHECK(eccentricity(g, 0) == kInfinite);
    CHECK(diameter(g) == kInfinite);
    CHECK_FALSE(is_connected(g));
    CHECK(components(g) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
    CHECK(distance_to_string(kUnreachable) == "inf");
    CHECK(distance_to_string(3) == "3");
}

TEST_CASE("single vertex") {
    const Graph g = Graph::from_edges(1, {});
    CHECK(diameter(g) == 0);
    CHECK(is_connected(g));
    CHECK(ball(g, 0, 3) == std::vector<Vertex>{0});
}

TEST_CASE("property: BFS agrees with Floyd-Warshall, is symmetric, and balls split into spheres") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 25;
        const auto edges = oracle::random_edges(n, 0.15, rng);
        const Graph g = Graph::from_edges(n, edges);
        const auto fw = oracle::floyd_warshall(n, edges);
        BfsWorkspace ws(n);
        for (Vertex u = 0; u < n; ++u) {
            const DistanceMap d = bfs_distances(g, u);
            for (Vertex v = 0; v < n; ++v) {
                CHECK(d.dist[v] == fw[u][v]);
                CHECK(d.dist[v] == bfs_distances(g, v).dist[u]);
            }
            for (std::uint32_t r = 0; r < 5; ++r) {
                std::size_t total = 0;
                for (std::uint32_t j = 0; j <= r; ++j) total += sphere(g, u, j).size();
                CHECK(total == ball(g, u, r).size());
                CHECK(ball_size(g, u, r, ws) == total);
            }
        }
    }
}

TEST_CASE("property: edges round-trip and neighbor lists are sorted") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 30;
        const auto edges = oracle::random_edges(n, 0.2, rng);
        const Graph g = Graph::from_edges(n, edges);
        CHECK(g == Graph::from_edges(n, g.edges()));
        std::size_t deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            const auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex w : nb) CHECK(g.has_edge(w, v));
            deg += g.degree(v);
        }
        CHECK(deg == 2 * edges.size());
    }
}

TEST_CASE("multi-source BFS equals the minimum of single-source distances") {
    const Graph g = grid_graph(6, 7);
    const std::vector<Vertex> src{0, 20, 41};
    BfsWorkspace ws(g.num_vertices());
    ws.run(g, std::span<const Vertex>(src));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::uint32_t best = kUnreachable;
        for (Vertex s : src) best = std::min(best, bfs_distances(g, s).dist[v]);
        CHECK(ws.depth(v) == best);
    }
}

TEST_CASE("bitset algebra") {
    Bitset a(130), b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    b.set(64);
    b.set(100);
    CHECK(a.count() == 3);
    CHECK(intersection_count(a, b) == 1);
    Bitset c = a;
    c |= b;
    CHECK(c.count() == 4);
    c.subtract(a);
    CHECK(c.count() == 1);
    CHECK(c.test(100));
    CHECK(c.first() == 100);
    Bitset full(70);
    full.set_all();
    CHECK(full.all());
    CHECK(full.count() == 70);
}
