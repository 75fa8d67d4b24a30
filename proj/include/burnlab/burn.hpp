#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

enum class Strictness {
    Strict,      // igniting an already-burned vertex is an error
    Permissive,  // ... is a no-op
};

/// Ignition sources x_1, ..., x_k; x_t is lit in round t.
struct BurnSchedule {
    std::vector<Vertex> sources;
    Strictness strictness = Strictness::Strict;

    std::size_t length() const noexcept { return sources.size(); }
    friend bool operator==(const BurnSchedule&, const BurnSchedule&) = default;
};

struct BurnTrace {
    /// rounds[t-1] = vertices newly burned in round t (spread first, then the
    /// ignited source), sorted by id.
    std::vector<std::vector<Vertex>> rounds;
    /// First round at whose end every vertex burns; nullopt if spreading
    /// stalled with vertices left (disconnected remainder).
    std::optional<std::uint32_t> completion_round;
    std::vector<char> burned_final;  // indicator per vertex

    bool complete() const noexcept { return completion_round.has_value(); }
    std::size_t burned_count() const;
};

/// Runs the burning process. Round t: (a) every unburned neighbor of a vertex
/// burned by the end of round t-1 catches fire; (b) if t <= k and some vertex
/// is still unburned, x_t is ignited. The process ends at the first round
/// whose end finds every vertex burned; sources scheduled after that are
/// never consulted. After the schedule is exhausted spreading continues
/// until nothing changes.
BurnTrace simulate(const Graph& g, const BurnSchedule& schedule);

/// Burned-set indicator at the end of round t for every t (index t-1),
/// computed as the union of balls N(x_i, t - i), i <= min(t, k). Reference
/// formula for the engine; quadratic, meant for tests and small graphs.
std::vector<std::vector<char>> union_of_balls_rounds(const Graph& g, std::span<const Vertex> centers,
                                                     std::uint32_t rounds);

/// True iff the balls N(x_i, k - i), i = 1..|centers|, cover every vertex.
bool covered_by_balls(const Graph& g, std::span<const Vertex> centers, std::uint32_t k);

/// Replays `centers` in order under the engine's round structure; a center
/// that is already burned at its turn is replaced by the smallest-id unburned
/// vertex, or dropped when nothing is left to ignite. The result is a strict
/// schedule that burns a superset of what the input burns, round by round.
BurnSchedule repair_schedule(const Graph& g, std::span<const Vertex> centers);

}  // namespace burnlab
