#include "burnlab/burn.hpp"

#include <algorithm>
#include <string>

namespace burnlab {

namespace {

void check_ids(const Graph& g, std::span<const Vertex> ids) {
    for (Vertex v : ids) {
        if (!g.contains(v)) {
            throw Error("schedule references invalid vertex id " + std::to_string(v) + " (n=" +
                        std::to_string(g.num_vertices()) + ")");
        }
    }
}

// Frontier-based state shared by simulate() and repair_schedule().
struct Fire {
    explicit Fire(const Graph& graph) : g(graph), burned(graph.num_vertices(), 0) {}

    // Spread from last round's newly burned vertices into `fresh`.
    void spread() {
        fresh.clear();
        for (Vertex u : frontier) {
            for (Vertex w : g.neighbors(u)) {
                if (!burned[w]) {
                    burned[w] = 1;
                    fresh.push_back(w);
                }
            }
        }
        count += fresh.size();
    }
    void ignite(Vertex v) {
        burned[v] = 1;
        fresh.push_back(v);
        ++count;
    }
    void end_round() { frontier.swap(fresh); }
    bool done() const { return count == g.num_vertices(); }

    const Graph& g;
    std::vector<char> burned;
    std::vector<Vertex> frontier;
    std::vector<Vertex> fresh;
    std::size_t count = 0;
};

}  // namespace

std::size_t BurnTrace::burned_count() const {
    return static_cast<std::size_t>(std::count(burned_final.begin(), burned_final.end(), char{1}));
}

BurnTrace simulate(const Graph& g, const BurnSchedule& schedule) {
    check_ids(g, schedule.sources);
    const std::size_t k = schedule.length();
    Fire fire(g);
    BurnTrace trace;
    for (std::uint32_t t = 1;; ++t) {
        fire.spread();
        if (!fire.done() && t <= k) {
            const Vertex x = schedule.sources[t - 1];
            if (!fire.burned[x]) {
                fire.ignite(x);
            } else if (schedule.strictness == Strictness::Strict) {
                throw Error("strict schedule ignites already-burned vertex " + std::to_string(x) +
                            " in round " + std::to_string(t));
            }
        }
        if (fire.fresh.empty() && t >= k) break;  // stalled
        auto& round = trace.rounds.emplace_back(fire.fresh);
        std::sort(round.begin(), round.end());
        if (fire.done()) {
            trace.completion_round = t;
            break;
        }
        fire.end_round();
    }
    trace.burned_final = std::move(fire.burned);
    return trace;
}

std::vector<std::vector<char>> union_of_balls_rounds(const Graph& g, std::span<const Vertex> centers,
                                                     std::uint32_t rounds) {
    check_ids(g, centers);
    const std::size_t n = g.num_vertices();
    constexpr std::uint64_t kNever = ~std::uint64_t{0};
    std::vector<std::uint64_t> first_time(n, kNever);
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const DistanceMap dm = bfs_distances(g, centers[i]);
        for (Vertex v = 0; v < n; ++v) {
            if (dm.reachable(v)) first_time[v] = std::min<std::uint64_t>(first_time[v], i + 1 + dm.dist[v]);
        }
    }
    std::vector<std::vector<char>> out(rounds, std::vector<char>(n, 0));
    for (std::uint32_t t = 1; t <= rounds; ++t) {
        for (Vertex v = 0; v < n; ++v) out[t - 1][v] = first_time[v] <= t ? 1 : 0;
    }
    return out;
}

bool covered_by_balls(const Graph& g, std::span<const Vertex> centers, std::uint32_t k) {
    check_ids(g, centers);
    if (centers.size() > k) throw Error("more centers than rounds");
    const std::size_t n = g.num_vertices();
    std::vector<char> covered(n, 0);
    std::size_t count = 0;
    BfsWorkspace ws(n);
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const auto radius = static_cast<std::uint32_t>(k - (i + 1));
        for (Vertex v : ws.run(g, centers[i], radius)) {
            if (!covered[v]) {
                covered[v] = 1;
                ++count;
            }
        }
    }
    return count == n;
}

BurnSchedule repair_schedule(const Graph& g, std::span<const Vertex> centers) {
    check_ids(g, centers);
    Fire fire(g);
    BurnSchedule out;
    Vertex lowest_unburned = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        fire.spread();
        if (fire.done()) break;
        Vertex x = centers[i];
        if (fire.burned[x]) {
            while (fire.burned[lowest_unburned]) ++lowest_unburned;
            x = lowest_unburned;
        }
        fire.ignite(x);
        out.sources.push_back(x);
        fire.end_round();
    }
    return out;
}

}  // namespace burnlab
