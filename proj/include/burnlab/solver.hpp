#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

enum class CertificateKind { BallsumLower, EccentricityUpper, GreedyUpper, BTwoCharacterization };

std::string_view to_string(CertificateKind kind);

/// A bound on b(G) with evidence that can be rechecked in polynomial time.
struct BoundCertificate {
    CertificateKind kind = CertificateKind::BallsumLower;
    std::uint32_t value = 0;
    /// BallsumLower: max_v |N(v,j)| for j = 0..value-2, then the size of
    ///   `witness`'s ball of radius value-1 (which reaches the remaining need).
    /// EccentricityUpper: empty; `witness` is a center vertex.
    /// GreedyUpper: empty; `schedule` holds the covering schedule.
    /// BTwoCharacterization: empty; `witness` has degree >= n - 2.
    std::vector<std::size_t> ball_maxima;
    Vertex witness = 0;
    BurnSchedule schedule;
};

/// Re-derives the bound from the evidence. False if the evidence does not
/// support `value`.
bool recheck(const Graph& g, const BoundCertificate& cert);

enum class SolveStatus { Solved, Unsolved };

struct SolveResult {
    SolveStatus status = SolveStatus::Solved;
    std::uint32_t b = 0;  // burning number (upper bound when Unsolved)
    BurnSchedule witness;  // strict; completes within b rounds
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double, std::milli> elapsed{};
    std::vector<BoundCertificate> certificates;
    std::uint32_t lower = 0;  // best proven lower bound
};

struct SolverOptions {
    std::uint64_t node_budget = 100'000'000;
    std::size_t bruteforce_cap = 10;
};

/// Exhaustive search over ordered center tuples. Independent reference
/// implementation: own distance matrix (Floyd-Warshall), bitmask coverage.
SolveResult burning_number_bruteforce(const Graph& g, const SolverOptions& opts = {});

/// Branch and bound over the covering formulation: b(G) <= k iff k balls of
/// radii k-1, ..., 0 cover V.
SolveResult burning_number_exact(const Graph& g, const SolverOptions& opts = {});

/// Largest k with sum_{j<k} max_v |N(v,j)| < n, plus one.
BoundCertificate lower_bound_ballsum(const Graph& g);

/// 1 + min eccentricity; requires a connected graph.
BoundCertificate upper_bound_center(const Graph& g);

struct GreedyResult {
    BurnSchedule schedule;
    BoundCertificate certificate;
};

/// For k = lower bound, +1, ...: pick, for radius k-1 down to 0, the center
/// covering the most uncovered vertices (ties to the smallest id); the first
/// k that covers is the bound.
GreedyResult greedy_schedule(const Graph& g);

/// Some vertex has degree >= n - 2, i.e. b(G) = 2 (for n >= 2).
bool is_b_two(const Graph& g);
/// is_b_two plus its witness.
BoundCertificate b_two_certificate(const Graph& g);

}  // namespace burnlab
