#include "burnlab/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "burnlab/rng.hpp"
#include "burnlab/strategies.hpp"

namespace burnlab {

std::string_view to_string(GnpCase c) {
    switch (c) {
        case GnpCase::Expanding: return "expanding";
        case GnpCase::Undetermined: return "undetermined";
        case GnpCase::Saturated: return "saturated";
        case GnpCase::DenseWindow: return "dense_window";
        case GnpCase::DenseComplete: return "dense_complete";
        case GnpCase::OutOfRegime: return "out_of_regime";
    }
    return "unknown";
}

GnpPrediction predict_gnp(std::size_t n, double p, double eps, double delta) {
    if (!(p > 0.0 && p < 1.0)) throw Error("p must lie in (0, 1)");
    if (n < 3) throw Error("predict_gnp needs n >= 3");

    GnpPrediction pr;
    pr.n = n;
    pr.p = p;
    pr.eps = eps;
    pr.delta = delta;
    const double nn = static_cast<double>(n);
    const double ln_n = std::log(nn);
    const double lnln_n = std::log(ln_n);
    pr.d = p * (nn - 1.0);
    pr.omega = std::sqrt(lnln_n);
    pr.dense_upper_p = 1.0 - (ln_n + lnln_n + pr.omega) / nn;
    pr.dense_lower_p = 1.0 - (ln_n + lnln_n - pr.omega) / nn;
    pr.threshold = 2.0 * ln_n + delta;

    if (p > pr.dense_lower_p) {
        pr.i = 2;
        pr.kind = GnpCase::DenseComplete;
        pr.predicted = {2};
        return pr;
    }
    if (p > pr.dense_upper_p) {
        pr.i = 2;
        pr.kind = GnpCase::DenseWindow;
        pr.predicted = {2, 3};
        return pr;
    }
    if (pr.d < ln_n) return pr;

    // d >= ln n > 1 for n >= 3, so d^i/n grows without bound.
    std::uint32_t i = 2;
    while (std::pow(pr.d, i) / nn < pr.threshold) ++i;
    pr.i = i;
    pr.threshold_margin = std::pow(pr.d, i) / nn - pr.threshold;
    pr.clause_value = std::pow(pr.d, i - 1) / nn;
    pr.clause_low = (1.0 - eps) * std::log(pr.d);
    pr.clause_high = (1.0 + eps) * ln_n;
    if (pr.clause_value >= pr.clause_high) {
        pr.kind = GnpCase::Expanding;
        pr.predicted = {i};
    } else if (pr.clause_value >= pr.clause_low) {
        pr.kind = GnpCase::Undetermined;
        pr.predicted = {i, i + 1};
    } else {
        pr.kind = GnpCase::Saturated;
        pr.predicted = {i + 1};
    }
    return pr;
}

GridPrediction predict_grid(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw Error("grid sides must be positive");
    if (m > n) std::swap(m, n);
    GridPrediction pr;
    pr.m = m;
    pr.n = n;
    const double mn = static_cast<double>(m) * static_cast<double>(n);
    pr.leading = std::cbrt(1.5) * std::cbrt(mn);
    pr.k0 = std::cbrt(1.5 * mn) - 1.0;
    pr.wide = static_cast<double>(m) > std::sqrt(static_cast<double>(n));
    pr.lower = grid_lower_bound(m, n);
    return pr;
}

PathDrunkPrediction predict_path_drunk(std::size_t n, DrunkVariant variant, double k_constant) {
    if (n < 2) throw Error("predict_path_drunk needs n >= 2");
    PathDrunkPrediction pr;
    pr.n = n;
    pr.variant = variant;
    const double nn = static_cast<double>(n);
    if (variant == DrunkVariant::UniformUnburned) {
        pr.low = std::sqrt(nn);
        pr.high = k_constant * std::sqrt(nn);
    } else {
        pr.point = std::sqrt(nn * std::log(nn) / 2.0);
        pr.low = pr.high = *pr.point;
    }
    return pr;
}

NeighborhoodProfile neighborhood_profile(const Graph& g, double d_nominal, std::size_t sample, std::uint32_t max_j,
                                         std::uint64_t seed) {
    if (!(d_nominal > 1.0)) throw Error("d_nominal must exceed 1");
    if (sample < 1 || max_j < 1) throw Error("sample and max_j must be positive");
    if (!is_connected(g)) throw Error("neighborhood_profile needs a connected graph");
    const std::size_t n = g.num_vertices();

    NeighborhoodProfile prof;
    prof.d_nominal = d_nominal;
    SplitMix64 rng(seed);
    std::unordered_set<Vertex> seen;
    while (prof.sample.size() < std::min(sample, n)) {
        const auto v = static_cast<Vertex>(rng.below(n));
        if (seen.insert(v).second) prof.sample.push_back(v);
    }

    prof.rows.resize(max_j);
    std::vector<std::size_t> s_counts(max_j, 0);  // vertices whose sphere was nonempty
    for (std::uint32_t j = 1; j <= max_j; ++j) {
        prof.rows[j - 1].j = j;
        prof.rows[j - 1].min_ratio_d = std::numeric_limits<double>::infinity();
    }

    BfsWorkspace ws(n);
    std::vector<std::size_t> layer(max_j + 1);
    for (Vertex v : prof.sample) {
        std::fill(layer.begin(), layer.end(), 0);
        for (Vertex u : ws.run(g, v, max_j)) ++layer[ws.depth(u)];
        std::size_t ball = layer[0];
        for (std::uint32_t j = 1; j <= max_j; ++j) {
            ball += layer[j];
            ProfileRow& row = prof.rows[j - 1];
            const double ratio = static_cast<double>(ball) / std::pow(d_nominal, j);
            row.mean_ratio_d += ratio;
            row.min_ratio_d = std::min(row.min_ratio_d, ratio);
            row.max_ratio_d = std::max(row.max_ratio_d, ratio);
            if (layer[j] > 0) {
                row.mean_ratio_s += static_cast<double>(ball) / static_cast<double>(layer[j]);
                ++s_counts[j - 1];
            }
            row.mean_sphere_ratio_d += static_cast<double>(layer[j]) / std::pow(d_nominal, j);
            if (layer[j] == 0) row.truncated = true;
        }
    }
    const auto count = static_cast<double>(prof.sample.size());
    for (std::uint32_t j = 0; j < max_j; ++j) {
        ProfileRow& row = prof.rows[j];
        row.mean_ratio_d /= count;
        row.mean_sphere_ratio_d /= count;
        if (s_counts[j] > 0) row.mean_ratio_s /= static_cast<double>(s_counts[j]);
        prof.truncated = prof.truncated || row.truncated;
    }
    return prof;
}

}  // namespace burnlab
