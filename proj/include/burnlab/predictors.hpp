#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "burnlab/drunk.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

/// Which clause of the G(n,p) theorem fired.
enum class GnpCase {
    Expanding,      // d^{i-1}/n >= (1+eps) ln n          -> {i}
    Undetermined,   // (1-eps) ln d <= d^{i-1}/n < (1+eps) ln n  -> {i, i+1}
    Saturated,      // d^{i-1}/n < (1-eps) ln d          -> {i+1}
    DenseWindow,    // p inside the min-degree-2 window of the complement -> {2, 3}
    DenseComplete,  // p above the window                -> {2}
    OutOfRegime,    // d < ln n, or no clause applies (gap between the two)
};

std::string_view to_string(GnpCase c);

struct GnpPrediction {
    std::size_t n = 0;
    double p = 0.0;
    double d = 0.0;  // p (n - 1)
    double eps = 0.1;
    double delta = 1.0;
    double omega = 0.0;  // sqrt(ln ln n)
    std::uint32_t i = 0;  // 0 when not computed
    GnpCase kind = GnpCase::OutOfRegime;
    std::vector<std::uint32_t> predicted;  // empty when out of regime

    // Intermediate quantities, so borderline instances are visible.
    double threshold = 0.0;         // 2 ln n + delta
    double threshold_margin = 0.0;  // d^i/n - threshold
    double clause_value = 0.0;      // d^{i-1}/n
    double clause_low = 0.0;        // (1-eps) ln d
    double clause_high = 0.0;       // (1+eps) ln n
    double dense_upper_p = 0.0;     // 1 - (ln n + ln ln n + omega)/n
    double dense_lower_p = 0.0;     // 1 - (ln n + ln ln n - omega)/n
};

/// Predicted burning number of G(n,p). Needs 0 < p < 1 and n >= 3.
GnpPrediction predict_gnp(std::size_t n, double p, double eps = 0.1, double delta = 1.0);

struct GridPrediction {
    std::size_t m = 0;  // after normalization m <= n
    std::size_t n = 0;
    double leading = 0.0;  // (3/2)^{1/3} (mn)^{1/3}
    bool wide = false;     // m > sqrt(n)
    double k0 = 0.0;       // (3mn/2)^{1/3} - 1
    std::uint32_t lower = 0;
};

GridPrediction predict_grid(std::size_t m, std::size_t n);

/// Upper constant K in [sqrt(n), K sqrt(n)] for the unburned-selection
/// variant on paths, frozen from a pilot run (see README).
inline constexpr double kPathUnburnedConstant = 4.0;

struct PathDrunkPrediction {
    std::size_t n = 0;
    DrunkVariant variant = DrunkVariant::UniformAll;
    std::optional<double> point;  // variants 1 and 2
    double low = 0.0;             // point estimate, or sqrt(n)
    double high = 0.0;            // point estimate, or K sqrt(n)
};

PathDrunkPrediction predict_path_drunk(std::size_t n, DrunkVariant variant, double k_constant = kPathUnburnedConstant);

struct ProfileRow {
    std::uint32_t j = 0;
    double mean_ratio_d = 0.0;  // mean over sampled v of |N(v,j)| / d^j
    double mean_ratio_s = 0.0;  // mean of |N(v,j)| / |S(v,j)|, over v with S nonempty
    double mean_sphere_ratio_d = 0.0;  // mean of |S(v,j)| / d^j
    double min_ratio_d = 0.0;
    double max_ratio_d = 0.0;
    bool truncated = false;  // some sampled ball had filled the graph before j
};

struct NeighborhoodProfile {
    double d_nominal = 0.0;
    std::vector<Vertex> sample;
    std::vector<ProfileRow> rows;  // j = 1..max_j
    bool truncated = false;
};

/// Ball growth around `sample` distinct random vertices. Needs a connected
/// graph and d_nominal > 1.
NeighborhoodProfile neighborhood_profile(const Graph& g, double d_nominal, std::size_t sample, std::uint32_t max_j,
                                         std::uint64_t seed);

}  // namespace burnlab
