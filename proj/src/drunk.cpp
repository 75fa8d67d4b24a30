#include "burnlab/drunk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "burnlab/parallel.hpp"
#include "burnlab/rng.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

namespace burnlab {

std::string_view to_string(DrunkVariant v) {
    switch (v) {
        case DrunkVariant::UniformAll: return "uniform_all";
        case DrunkVariant::UniformUnselected: return "uniform_unselected";
        case DrunkVariant::UniformUnburned: return "uniform_unburned";
    }
    return "unknown";
}

DrunkVariant parse_drunk_variant(std::string_view s) {
    if (s == "1") return DrunkVariant::UniformAll;
    if (s == "2") return DrunkVariant::UniformUnselected;
    if (s == "3") return DrunkVariant::UniformUnburned;
    throw Error("drunk variant must be 1, 2 or 3");
}

namespace {

// Counts of unburned vertices with order-statistic lookup.
class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {
        for (std::size_t i = 1; i <= n; ++i) {
            tree_[i] += 1;
            const std::size_t parent = i + (i & (~i + 1));
            if (parent <= n) tree_[parent] += tree_[i];
        }
        for (log_ = 1; (std::size_t{1} << log_) <= n; ++log_) {
        }
    }
    void remove(std::size_t i) {
        for (++i; i < tree_.size(); i += i & (~i + 1)) --tree_[i];
    }
    /// Index of the (j+1)-th remaining element (0-based j).
    std::size_t kth(std::uint64_t j) const {
        std::size_t pos = 0;
        for (std::size_t step = std::size_t{1} << log_; step > 0; step >>= 1) {
            if (pos + step < tree_.size() && tree_[pos + step] <= j) {
                pos += step;
                j -= tree_[pos];
            }
        }
        return pos;
    }

private:
    std::vector<std::uint64_t> tree_;
    std::size_t log_ = 0;
};

class SelectedSet {
public:
    explicit SelectedSet(std::size_t n) : words_((n + 63) / 64, 0) {}
    bool test(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(std::uint64_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

private:
    std::vector<std::uint64_t> words_;
};

// Draws a never-selected id by rejection; caller guarantees one exists.
std::uint64_t draw_unselected(SplitMix64& rng, SelectedSet& selected, std::size_t n) {
    std::uint64_t v;
    do {
        v = rng.below(n);
    } while (selected.test(v));
    selected.set(v);
    return v;
}

}  // namespace

TrialOutcome drunk_trial(const Graph& g, DrunkVariant variant, std::uint64_t seed) {
    const std::size_t n = g.num_vertices();
    SplitMix64 rng(seed);
    std::vector<char> burned(n, 0);
    std::vector<Vertex> frontier;
    std::vector<Vertex> fresh;
    std::size_t count = 0;
    SelectedSet selected(variant == DrunkVariant::UniformUnselected ? n : 0);
    std::size_t selected_count = 0;
    std::optional<Fenwick> unburned;
    if (variant == DrunkVariant::UniformUnburned) unburned.emplace(n);

    auto burn = [&](Vertex v) {
        burned[v] = 1;
        fresh.push_back(v);
        ++count;
        if (unburned) unburned->remove(v);
    };

    for (std::uint32_t t = 1;; ++t) {
        fresh.clear();
        for (Vertex u : frontier)
            for (Vertex w : g.neighbors(u))
                if (!burned[w]) burn(w);
        if (count == n) return t;

        switch (variant) {
            case DrunkVariant::UniformAll: {
                const auto v = static_cast<Vertex>(rng.below(n));
                if (!burned[v]) burn(v);
                break;
            }
            case DrunkVariant::UniformUnselected: {
                if (selected_count == n) break;
                const auto v = static_cast<Vertex>(draw_unselected(rng, selected, n));
                ++selected_count;
                if (!burned[v]) burn(v);
                break;
            }
            case DrunkVariant::UniformUnburned: {
                const std::uint64_t j = rng.below(n - count);
                burn(static_cast<Vertex>(unburned->kth(j)));
                break;
            }
        }
        if (count == n) return t;
        if (fresh.empty() && variant == DrunkVariant::UniformUnselected && selected_count == n) {
            return std::nullopt;
        }
        frontier.swap(fresh);
    }
}

std::uint32_t path_drunk_trial_fast(std::size_t n, DrunkVariant variant, std::uint64_t seed) {
    if (n < 1) throw Error("path needs n >= 1");
    SplitMix64 rng(seed);
    const auto last = static_cast<std::int64_t>(n) - 1;

    // Sources ordered by x + s, which orders the left endpoints x - (t - s)
    // in every round.
    struct Source {
        std::int64_t x;
        std::int64_t s;
    };
    std::vector<Source> sources;
    struct Interval {
        std::int64_t lo;
        std::int64_t hi;
    };
    std::vector<Interval> merged;
    SelectedSet selected(variant == DrunkVariant::UniformUnselected ? n : 0);
    std::size_t selected_count = 0;

    auto is_burned = [&](std::int64_t v) {
        auto it = std::upper_bound(merged.begin(), merged.end(), v,
                                   [](std::int64_t value, const Interval& iv) { return value < iv.lo; });
        return it != merged.begin() && std::prev(it)->hi >= v;
    };
    auto add_source = [&](std::int64_t x, std::int64_t s) {
        const Source src{x, s};
        auto pos = std::upper_bound(sources.begin(), sources.end(), src,
                                    [](const Source& a, const Source& b) { return a.x + a.s < b.x + b.s; });
        sources.insert(pos, src);
    };

    for (std::int64_t t = 1;; ++t) {
        merged.clear();
        std::int64_t burned = 0;
        for (const Source& src : sources) {
            const std::int64_t lo = std::max<std::int64_t>(0, src.x - (t - src.s));
            const std::int64_t hi = std::min<std::int64_t>(last, src.x + (t - src.s));
            if (!merged.empty() && lo <= merged.back().hi + 1) {
                merged.back().hi = std::max(merged.back().hi, hi);
            } else {
                merged.push_back({lo, hi});
            }
        }
        for (const Interval& iv : merged) burned += iv.hi - iv.lo + 1;
        if (burned == last + 1) return static_cast<std::uint32_t>(t);

        std::int64_t pick = -1;
        switch (variant) {
            case DrunkVariant::UniformAll: {
                const auto v = static_cast<std::int64_t>(rng.below(n));
                if (!is_burned(v)) pick = v;
                break;
            }
            case DrunkVariant::UniformUnselected: {
                if (selected_count == n) break;
                const auto v = static_cast<std::int64_t>(draw_unselected(rng, selected, n));
                ++selected_count;
                if (!is_burned(v)) pick = v;
                break;
            }
            case DrunkVariant::UniformUnburned: {
                auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(last + 1 - burned)));
                std::int64_t gap_start = 0;
                for (const Interval& iv : merged) {
                    const std::int64_t gap = iv.lo - gap_start;
                    if (j < gap) break;
                    j -= gap;
                    gap_start = iv.hi + 1;
                }
                pick = gap_start + j;
                break;
            }
        }
        if (pick >= 0) {
            add_source(pick, t);
            if (burned + 1 == last + 1) return static_cast<std::uint32_t>(t);
        }
    }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
    return derive_seed(master_seed, index);
}

TrialStats aggregate_trials(DrunkVariant variant, const std::vector<TrialOutcome>& outcomes,
                            std::uint64_t master_seed, std::optional<std::uint32_t> b_reference) {
    TrialStats st;
    st.variant = variant;
    st.trials = outcomes.size();
    st.b_reference = b_reference;

    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
    std::vector<std::uint32_t> all;
    all.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        if (!o) {
            ++st.stalled;
            continue;
        }
        all.push_back(*o);
        sum += *o;
        sum_sq += static_cast<unsigned __int128>(*o) * *o;
    }
    st.completed = all.size();
    if (all.empty()) return st;

    const auto cnt = static_cast<unsigned __int128>(st.completed);
    st.mean = static_cast<double>(sum) / static_cast<double>(st.completed);
    if (st.completed > 1) {
        const unsigned __int128 num = cnt * sum_sq - static_cast<unsigned __int128>(sum) * sum;
        st.stddev = std::sqrt(static_cast<double>(num) / static_cast<double>(cnt * (cnt - 1)));
    }
    st.ci95 = 1.96 * st.stddev / std::sqrt(static_cast<double>(st.completed));
    const auto [mn, mx] = std::minmax_element(all.begin(), all.end());
    st.min_sample = *mn;
    st.max_sample = *mx;

    if (all.size() <= kFullSampleLimit) {
        st.samples = all;
    } else {
        // Keep the samples whose trial index hashes lowest: deterministic and
        // independent of execution order.
        std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
        keyed.reserve(outcomes.size());
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (outcomes[i]) keyed.emplace_back(derive_seed(~master_seed, i), i);
        }
        std::nth_element(keyed.begin(), keyed.begin() + kReservoirSize, keyed.end());
        keyed.resize(kReservoirSize);
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        for (const auto& [key, i] : keyed) st.samples.push_back(*outcomes[i]);
        st.samples_subsampled = true;
    }

    std::vector<std::uint32_t> sorted = st.samples;
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&](double q) {
        const double h = q * static_cast<double>(sorted.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        return sorted[lo] + (h - static_cast<double>(lo)) * (static_cast<double>(sorted[hi]) - sorted[lo]);
    };
    st.p05 = quantile(0.05);
    st.p50 = quantile(0.50);
    st.p95 = quantile(0.95);
    if (b_reference && *b_reference > 0) st.cost = st.mean / *b_reference;
    return st;
}

TrialStats drunk_estimate_path(std::size_t n, DrunkVariant variant, std::size_t trials, std::uint64_t master_seed) {
    if (trials < 1) throw Error("need at least one trial");
    if (n < 1) throw Error("path needs n >= 1");
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t i) {
        outcomes[i] = path_drunk_trial_fast(n, variant, trial_seed(master_seed, i));
    });
    return aggregate_trials(variant, outcomes, master_seed, ceil_sqrt(n));
}

TrialStats drunk_estimate(const Graph& g, DrunkVariant variant, std::size_t trials, std::uint64_t master_seed,
                          std::optional<std::uint32_t> b_reference) {
    if (trials < 1) throw Error("need at least one trial");
    if (!b_reference && g.num_vertices() <= 64) {
        SolverOptions opts;
        opts.node_budget = 1'000'000;
        const SolveResult solved = burning_number_exact(g, opts);
        if (solved.status == SolveStatus::Solved) b_reference = solved.b;
    }
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t i) { outcomes[i] = drunk_trial(g, variant, trial_seed(master_seed, i)); });
    return aggregate_trials(variant, outcomes, master_seed, b_reference);
}

double cost_of_drunkenness(const TrialStats& stats) {
    if (!stats.b_reference || *stats.b_reference == 0) throw Error("b(G) unavailable; cost of drunkenness undefined");
    if (stats.completed == 0) throw Error("no completed trials");
    return stats.mean / *stats.b_reference;
}

double cost_of_drunkenness_path(std::size_t n, DrunkVariant variant, std::size_t trials, std::uint64_t master_seed) {
    return cost_of_drunkenness(drunk_estimate_path(n, variant, trials, master_seed));
}

}  // namespace burnlab
