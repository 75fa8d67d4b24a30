#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

/// Random ignition rules. Each round, after spreading, x_t is drawn
/// uniformly from:
enum class DrunkVariant {
    UniformAll = 1,         // all of V (no-op if it already burns)
    UniformUnselected = 2,  // vertices never drawn before (no-op if burning)
    UniformUnburned = 3,    // vertices not burning
};

std::string_view to_string(DrunkVariant v);
DrunkVariant parse_drunk_variant(std::string_view s);  // "1" | "2" | "3"

/// Rounds until every vertex burns, or nullopt when the process can no
/// longer make progress (only possible on disconnected graphs).
using TrialOutcome = std::optional<std::uint32_t>;

/// One trial of the burning process with random sources, spread then select.
/// RNG use (SplitMix64(seed)), shared with path_drunk_trial_fast:
///  - UniformAll: one below(n) per selection.
///  - UniformUnselected: below(n) repeated until an unselected id comes up.
///  - UniformUnburned: j = below(#unburned), then the j-th smallest unburned id.
/// No draw happens in a round whose spread already finished the graph.
TrialOutcome drunk_trial(const Graph& g, DrunkVariant variant, std::uint64_t seed);

/// drunk_trial on P_n without building the graph: the burned set is the
/// union of intervals [x - (t - s), x + (t - s)] over sources x lit in
/// round s. Same seed, same result.
std::uint32_t path_drunk_trial_fast(std::size_t n, DrunkVariant variant, std::uint64_t seed);

struct TrialStats {
    DrunkVariant variant = DrunkVariant::UniformAll;
    std::size_t trials = 0;     // requested
    std::size_t completed = 0;  // excluding stalled trials
    std::size_t stalled = 0;
    std::vector<std::uint32_t> samples;  // all samples, or a 10^4 subsample
    bool samples_subsampled = false;     // quantiles approximate when true
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    double p05 = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
    double ci95 = 0.0;  // 1.96 stddev / sqrt(completed)
    std::uint32_t min_sample = 0;
    std::uint32_t max_sample = 0;
    std::optional<std::uint32_t> b_reference;
    std::optional<double> cost;  // mean / b_reference
};

inline constexpr std::size_t kFullSampleLimit = 100'000;
inline constexpr std::size_t kReservoirSize = 10'000;

/// Seed of trial i: derive_seed(master_seed, i).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// Trials on P_n through the fast kernel; b_reference = ceil(sqrt(n)).
TrialStats drunk_estimate_path(std::size_t n, DrunkVariant variant, std::size_t trials,
                               std::uint64_t master_seed);

/// Trials on a general graph. b_reference is taken from the argument or, for
/// small graphs, from the exact solver.
TrialStats drunk_estimate(const Graph& g, DrunkVariant variant, std::size_t trials,
                          std::uint64_t master_seed, std::optional<std::uint32_t> b_reference = std::nullopt);

/// Aggregates per-trial outcomes (index = trial number). Pure function of
/// its input, so any execution order of the trials gives the same stats.
TrialStats aggregate_trials(DrunkVariant variant, const std::vector<TrialOutcome>& outcomes,
                            std::uint64_t master_seed, std::optional<std::uint32_t> b_reference);

/// mean / b(G); throws when b(G) is unknown.
double cost_of_drunkenness(const TrialStats& stats);
double cost_of_drunkenness_path(std::size_t n, DrunkVariant variant, std::size_t trials, std::uint64_t master_seed);

}  // namespace burnlab
