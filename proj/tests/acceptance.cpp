// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/drunk.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/parallel.hpp"
#include "burnlab/predictors.hpp"
#include "burnlab/rng.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

using namespace burnlab;

namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Graphs on up to 7 vertices as bitmasks over the pairs i < j.
struct SmallGraphs {
    std::size_t n;
    int pair_index[8][8];

    explicit SmallGraphs(std::size_t n_) : n(n_) {
        int k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pair_index[i][j] = pair_index[j][i] = k++;
    }

    std::uint32_t canonical(std::uint32_t mask, const std::vector<std::vector<int>>& perms) const {
        std::uint32_t best = UINT32_MAX;
        for (const auto& perm : perms) {
            std::uint32_t m = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (mask >> pair_index[i][j] & 1U) m |= 1U << pair_index[perm[i]][perm[j]];
            best = std::min(best, m);
        }
        return best;
    }

    Edges edges(std::uint32_t mask) const {
        Edges e;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (mask >> pair_index[i][j] & 1U) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return e;
    }
};

// Isomorphism classes of all graphs on n vertices, grown one vertex at a
// time: deleting the last vertex of any graph gives a graph on n - 1.
std::vector<Edges> all_graphs(std::size_t n) {
    std::vector<Edges> classes{{}};  // n = 1
    for (std::size_t k = 2; k <= n; ++k) {
        const SmallGraphs sg(k);
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> perms;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::set<std::uint32_t> seen;
        for (const Edges& base : classes) {
            std::uint32_t base_mask = 0;
            for (auto [u, v] : base) base_mask |= 1U << sg.pair_index[u][v];
            for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
                std::uint32_t m = base_mask;
                for (std::size_t u = 0; u + 1 < k; ++u)
                    if (nb >> u & 1U) m |= 1U << sg.pair_index[u][k - 1];
                seen.insert(sg.canonical(m, perms));
            }
        }
        classes.clear();
        for (std::uint32_t m : seen) classes.push_back(sg.edges(m));
    }
    return classes;
}

Outcome oracle_equivalence() {
    static constexpr std::size_t kConnected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t connected = 0;
        for (const Edges& e : all_graphs(n)) {
            const Graph g = Graph::from_edges(n, e);
            if (!is_connected(g)) continue;
            ++connected;
            if (burning_number_exact(g).b != burning_number_bruteforce(g).b) o.pass = false;
        }
        if (connected != kConnected[n]) o.pass = false;
        checked += connected;
    }
    SplitMix64 rng(2024);
    std::size_t random_checked = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.below(9);
        const double p = 0.15 + 0.7 * rng.uniform01();
        const Graph g = gen_gnp(n, p, derive_seed(99, i)).graph;
        if (burning_number_exact(g).b != burning_number_bruteforce(g).b) o.pass = false;
        ++random_checked;
    }
    o.detail = std::to_string(checked) + " connected classes (n<=7), " + std::to_string(random_checked) + " random";
    return o;
}

Outcome path_formula() {
    Outcome o;
    for (std::size_t n = 1; n <= 100; ++n)
        if (burning_number_exact(path_graph(n)).b != ceil_sqrt(n)) o.pass = false;
    for (std::size_t n = 1; n <= 10000; ++n) {
        const BurnSchedule s = path_schedule(n);
        if (s.length() != ceil_sqrt(n)) o.pass = false;
    }
    for (std::size_t n : {1u, 2u, 99u, 101u, 2500u, 9999u, 10000u}) {
        const BurnTrace tr = simulate(path_graph(n), path_schedule(n));
        if (!tr.complete() || *tr.completion_round > ceil_sqrt(n)) o.pass = false;
    }
    o.detail = "exact n<=100, schedule n<=10000";
    return o;
}

Outcome union_of_balls() {
    Outcome o;
    SplitMix64 rng(31337);
    std::size_t rounds_checked = 0;
    for (std::size_t pair = 0; pair < 1000; ++pair) {
        const std::size_t n = 1 + rng.below(200);
        const double d = 1.0 + 4.0 * rng.uniform01();
        const Graph g = gen_gnp(n, std::min(1.0, d / std::max<double>(1, n - 1)), rng.next()).graph;
        BurnSchedule s{{}, Strictness::Permissive};
        const std::size_t k = 1 + rng.below(2 * ceil_sqrt(n) + 2);
        for (std::size_t i = 0; i < k; ++i) s.sources.push_back(static_cast<Vertex>(rng.below(n)));
        const BurnTrace tr = simulate(g, s);
        const auto rounds = static_cast<std::uint32_t>(tr.rounds.size());
        const auto expected = union_of_balls_rounds(g, s.sources, rounds);
        std::vector<char> burned(n, 0);
        for (std::uint32_t t = 0; t < rounds; ++t) {
            for (Vertex v : tr.rounds[t]) burned[v] = 1;
            if (burned != expected[t]) o.pass = false;
            ++rounds_checked;
        }
    }
    o.detail = "1000 pairs, " + std::to_string(rounds_checked) + " rounds";
    return o;
}

Outcome grid_sandwich() {
    Outcome o;
    std::ostringstream d;
    for (std::size_t m : {30u, 60u, 100u, 200u}) {
        const GridPlan plan = grid_strip_schedule(m, m);
        const BurnTrace tr = simulate(grid_graph(m, m), plan.schedule);
        const double leading = std::cbrt(1.5) * std::cbrt(static_cast<double>(m) * m);
        const double ratio = plan.achieved_rounds / leading;
        if (!tr.complete() || *tr.completion_round != plan.achieved_rounds) o.pass = false;
        if (grid_lower_bound(m, m) > plan.achieved_rounds) o.pass = false;
        if (ratio < 1.0 || ratio > 1.8) o.pass = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%zu: lower %u achieved %u ratio %.3f; ", m, grid_lower_bound(m, m),
                      plan.achieved_rounds, ratio);
        d << buf;
    }
    if (grid_lower_bound(10, 10) != 6) o.pass = false;
    d << "lower(10,10)=" << grid_lower_bound(10, 10);
    o.detail = d.str();
    return o;
}

Outcome gnp_dense() {
    Outcome o;
    std::atomic<int> sparse_ok{0}, dense_ok{0};
    const GnpPrediction sparse_pred = predict_gnp(3000, 0.1);
    const GnpPrediction dense_pred = predict_gnp(1000, 0.995);
    const bool sparse_has_3 =
        std::find(sparse_pred.predicted.begin(), sparse_pred.predicted.end(), 3u) != sparse_pred.predicted.end();
    const bool dense_is_2 = dense_pred.predicted == std::vector<std::uint32_t>{2};
    parallel_for(40, [&](std::size_t i) {
        if (i < 20) {
            const Graph g = gen_gnp(3000, 0.1, derive_seed(501, i)).graph;
            if (diameter(g) == 2 && !is_b_two(g) && sparse_has_3) ++sparse_ok;
        } else {
            const Graph g = gen_gnp(1000, 0.995, derive_seed(502, i)).graph;
            if (is_b_two(g) && dense_is_2) ++dense_ok;
        }
    });
    o.pass = sparse_ok >= 19 && dense_ok >= 19;
    o.detail = "G(3000,0.1) b=3 " + std::to_string(sparse_ok.load()) + "/20, G(1000,0.995) b=2 " +
               std::to_string(dense_ok.load()) + "/20";
    return o;
}

Outcome gnp_i3() {
    Outcome o;
    const double p = 80.0 / 19999.0;
    const GnpPrediction pred = predict_gnp(20000, p);
    std::atomic<int> ok{0};
    parallel_for(10, [&](std::size_t i) {
        const Graph g = gen_gnp(20000, p, derive_seed(600, i)).graph;
        if (!is_connected(g)) return;
        const BoundCertificate lo = lower_bound_ballsum(g);
        const BoundCertificate hi = upper_bound_center(g);
        if (lo.value >= 4 && hi.value <= 4 && recheck(g, lo) && recheck(g, hi)) ++ok;
    });
    o.pass = pred.predicted == std::vector<std::uint32_t>{4} && ok >= 8;
    o.detail = "predicted " + std::string(to_string(pred.kind)) + ", certified b=4 " + std::to_string(ok.load()) + "/10";
    return o;
}

Outcome drunk_variant_one() {
    Outcome o;
    const TrialStats st = drunk_estimate_path(1000000, DrunkVariant::UniformAll, 200, 700);
    const double ratio = st.mean / 2628.0;
    o.pass = st.completed == 200 && ratio >= 0.95 && ratio <= 1.05;
    char buf[96];
    std::snprintf(buf, sizeof buf, "mean %.1f ci95 %.1f ratio %.4f", st.mean, st.ci95, ratio);
    o.detail = buf;
    return o;
}

Outcome drunk_ordering() {
    Outcome o;
    const TrialStats a = drunk_estimate_path(10000, DrunkVariant::UniformAll, 500, 800);
    const TrialStats b = drunk_estimate_path(10000, DrunkVariant::UniformUnselected, 500, 801);
    const TrialStats c = drunk_estimate_path(10000, DrunkVariant::UniformUnburned, 500, 802);
    // Each comparison may miss by the two confidence half-widths together.
    const bool ab = a.mean + (a.ci95 + b.ci95) >= b.mean;
    const bool bc = b.mean + (b.ci95 + c.ci95) >= c.mean;
    const bool floor = a.min_sample >= 100 && b.min_sample >= 100 && c.min_sample >= 100;
    o.pass = ab && bc && floor && a.completed == 500 && b.completed == 500 && c.completed == 500;
    char buf[160];
    std::snprintf(buf, sizeof buf, "means %.1f >= %.1f >= %.1f, minima %u %u %u", a.mean, b.mean, c.mean, a.min_sample,
                  b.min_sample, c.min_sample);
    o.detail = buf;
    return o;
}

Outcome drunk_unburned_scale() {
    Outcome o;
    std::vector<double> ratios;
    for (std::size_t n : {10000u, 40000u, 160000u}) {
        const TrialStats st = drunk_estimate_path(n, DrunkVariant::UniformUnburned, 300, 900 + n);
        ratios.push_back(st.mean / std::sqrt(static_cast<double>(n)));
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    const double spread = (*hi - *lo) / *lo;
    o.pass = spread <= 0.30 && *lo >= 1.0 && *hi <= 10.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "ratios %.3f %.3f %.3f spread %.1f%%", ratios[0], ratios[1], ratios[2],
                  100 * spread);
    o.detail = buf;
    return o;
}

Outcome kernel_equivalence() {
    Outcome o;
    std::atomic<std::size_t> mismatches{0};
    parallel_for(200, [&](std::size_t idx) {
        const std::size_t n = idx + 1;
        const Graph g = path_graph(n);
        for (DrunkVariant v : {DrunkVariant::UniformAll, DrunkVariant::UniformUnselected, DrunkVariant::UniformUnburned}) {
            for (std::uint64_t s = 0; s < 50; ++s) {
                const std::uint64_t seed = trial_seed(1000 + n, s);
                const TrialOutcome slow = drunk_trial(g, v, seed);
                if (!slow || *slow != path_drunk_trial_fast(n, v, seed)) ++mismatches;
            }
        }
    });
    o.pass = mismatches == 0;
    o.detail = "30000 coupled trials, " + std::to_string(mismatches.load()) + " mismatches";
    return o;
}

Outcome rgg_theta() {
    Outcome o;
    const std::size_t n = 40000;
    const double rc = critical_radius(n);
    std::vector<double> scaled;
    std::ostringstream d;
    for (double mult : {6.0, 8.0, 12.0}) {
        const double r = mult * rc;
        const RggSample s = gen_rgg(n, r, derive_seed(1100, static_cast<std::uint64_t>(mult)));
        const CellPlan plan = rgg_cell_schedule(s.graph, s.points);
        const RggBound bound = rgg_lower_bound(r);
        if (!plan.giant_achieved_rounds) {
            o.pass = false;
            continue;
        }
        const std::uint32_t rounds = *plan.giant_achieved_rounds;
        if (bound.t >= 1 && rounds < bound.claimed_lower()) o.pass = false;
        scaled.push_back(rounds * std::pow(r, 2.0 / 3.0));
        char buf[96];
        std::snprintf(buf, sizeof buf, "%gr_c: rounds %u t %u; ", mult, rounds, bound.t);
        d << buf;
    }
    if (scaled.size() == 3) {
        const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
        if (*hi > 2.0 * *lo) o.pass = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "rounds*r^(2/3) max/min %.3f", *hi / *lo);
        d << buf;
    }
    o.detail = d.str();
    return o;
}

Outcome profile() {
    Outcome o;
    const double d = 50.0;
    const GnpSample s = gen_gnp(20000, d / 19999.0, 1200);
    if (!is_connected(s.graph)) {
        o.pass = false;
        o.detail = "sample is disconnected";
        return o;
    }
    const NeighborhoodProfile p = neighborhood_profile(s.graph, d, 20, 2, 1201);
    const double ratio = p.rows[1].mean_ratio_d;
    o.pass = ratio >= 0.8 && ratio <= 1.2;
    char buf[64];
    std::snprintf(buf, sizeof buf, "mean |N(v,2)|/d^2 = %.4f", ratio);
    o.detail = buf;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", 600, oracle_equivalence},
        {2, "path formula", 300, path_formula},
        {3, "union-of-balls law", 60, union_of_balls},
        {4, "grid sandwich", 300, grid_sandwich},
        {5, "G(n,p) dense cases", 600, gnp_dense},
        {6, "G(n,p) i=3 certificates", 900, gnp_i3},
        {7, "drunk path variant 1", 300, drunk_variant_one},
        {8, "drunk ordering and floor", 300, drunk_ordering},
        {9, "variant 3 sqrt(n) stability", 600, drunk_unburned_scale},
        {10, "kernel equivalence", 120, kernel_equivalence},
        {11, "RGG theta check", 900, rgg_theta},
        {12, "neighborhood profile", 120, profile},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            out.pass = false;
            out.detail += " (over time limit)";
        }
        failures += !out.pass;
        std::printf("%s %2d %s [%.1fs] %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs, out.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
