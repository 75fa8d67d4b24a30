// burnlab command-line driver. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "burnlab/burn.hpp"
#include "burnlab/drunk.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/io.hpp"
#include "burnlab/predictors.hpp"
#include "burnlab/report.hpp"
#include "burnlab/rng.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"
#include "burnlab/sweep.hpp"

using namespace burnlab;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Graph structured(const std::string& kind, std::size_t rows, std::size_t cols, std::size_t n) {
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "complete") return complete_graph(n);
    if (kind == "star") return star_graph(n);
    return gen_structured(parse_structured_kind(kind), rows, cols);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-burning laboratory"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph (edge list) and, for rgg, its points");
    std::string gen_kind;
    std::size_t gen_n = 0, gen_rows = 0, gen_cols = 0;
    std::optional<double> gen_p, gen_r, gen_mult;
    std::string gen_out, gen_points;
    gen->add_option("--kind", gen_kind, "gnp|rgg|path|cycle|complete|star|grid|torus")
        ->required()
        ->check(CLI::IsMember({"gnp", "rgg", "path", "cycle", "complete", "star", "grid", "torus"}));
    gen->add_option("--n", gen_n, "vertices (star: leaves)");
    gen->add_option("--rows", gen_rows, "grid/torus rows");
    gen->add_option("--cols", gen_cols, "grid/torus columns");
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--r", gen_r, "radius (rgg)");
    gen->add_option("--mult", gen_mult, "radius as a multiple of the connectivity radius (rgg)");
    gen->add_option("--output", gen_out, "edge list output (default stdout)");
    gen->add_option("--points", gen_points, "points output (rgg)");
    gen->add_option("--seed", seed, "random seed");

    // burn
    auto* burn = app.add_subcommand("burn", "run a schedule through the burning engine");
    std::string burn_in, burn_sched, burn_trace;
    bool burn_permissive = false, burn_rounds = false;
    burn->add_option("--input", burn_in, "graph edge list")->required();
    burn->add_option("--schedule", burn_sched, "schedule file")->required();
    burn->add_flag("--permissive", burn_permissive, "treat igniting a burned vertex as a no-op");
    burn->add_flag("--rounds", burn_rounds, "include per-round burned sets in the JSON");
    burn->add_option("--trace", burn_trace, "write a per-round trace dump");
    burn->add_option("--seed", seed, "unused; accepted for uniformity");

    // solve
    auto* solve = app.add_subcommand("solve", "exact burning number");
    std::string solve_in;
    std::uint64_t node_budget = SolverOptions{}.node_budget;
    bool solve_brute = false;
    solve->add_option("--input", solve_in, "graph edge list")->required();
    solve->add_option("--node-budget", node_budget, "search node budget");
    solve->add_flag("--bruteforce", solve_brute, "use the brute-force oracle (n <= 10)");
    solve->add_option("--seed", seed, "unused; accepted for uniformity");

    // bound
    auto* bound = app.add_subcommand("bound", "bound certificates");
    std::string bound_in, bound_kind = "all", bound_recheck;
    bound->add_option("--input", bound_in, "graph edge list")->required();
    bound->add_option("--kind", bound_kind, "ballsum|center|greedy|b2|all")
        ->check(CLI::IsMember({"ballsum", "center", "greedy", "b2", "all"}));
    bound->add_option("--recheck", bound_recheck, "JSON certificate to re-verify against the graph");
    bound->add_option("--seed", seed, "unused; accepted for uniformity");

    // strategy
    auto* strat = app.add_subcommand("strategy", "constructive schedules");
    std::string strat_kind, strat_out, strat_in, strat_points;
    std::size_t strat_n = 0, strat_m = 0;
    double strat_slack = 1.0, strat_a = 0.5;
    std::optional<double> strat_mult;
    strat->add_option("--kind", strat_kind, "path|grid-strips|grid-narrow|rgg-cells")
        ->required()
        ->check(CLI::IsMember({"path", "grid-strips", "grid-narrow", "rgg-cells"}));
    strat->add_option("--n", strat_n, "path length, grid columns, or rgg points");
    strat->add_option("--m", strat_m, "grid rows");
    strat->add_option("--slack", strat_slack, "strip slack constant");
    strat->add_option("--a", strat_a, "cell coefficient (rgg-cells)");
    strat->add_option("--input", strat_in, "rgg edge list (with --points)");
    strat->add_option("--points", strat_points, "rgg points file");
    strat->add_option("--mult", strat_mult, "generate an rgg with r = mult * r_c instead of reading one");
    strat->add_option("--output", strat_out, "schedule output");
    strat->add_option("--seed", seed, "random seed (generated rgg)");

    // drunk
    auto* drunk = app.add_subcommand("drunk", "random-source burning trials");
    std::string drunk_variant, drunk_in, drunk_samples;
    std::size_t drunk_n = 0, drunk_trials = 100;
    drunk->add_option("--variant", drunk_variant, "1|2|3")->required()->check(CLI::IsMember({"1", "2", "3"}));
    drunk->add_option("--n", drunk_n, "path length (fast kernel)");
    drunk->add_option("--input", drunk_in, "general graph edge list instead of a path");
    drunk->add_option("--trials", drunk_trials, "number of trials")->check(CLI::PositiveNumber);
    drunk->add_option("--samples", drunk_samples, "raw samples CSV, one count per line");
    drunk->add_option("--seed", seed, "master seed");

    // predict
    auto* predict = app.add_subcommand("predict", "closed-form predictions");
    std::string model, pred_variant = "1", pred_in;
    std::size_t pred_n = 0, pred_m = 0, pred_sample = 20;
    double pred_p = 0.0, pred_eps = 0.1, pred_delta = 1.0, pred_k = kPathUnburnedConstant, pred_d = 0.0;
    std::uint32_t pred_j = 3;
    predict->add_option("--model", model, "gnp|grid|path-drunk|profile")
        ->required()
        ->check(CLI::IsMember({"gnp", "grid", "path-drunk", "profile"}));
    predict->add_option("--n", pred_n, "vertices, or grid columns");
    predict->add_option("--m", pred_m, "grid rows");
    predict->add_option("--p", pred_p, "edge probability");
    predict->add_option("--eps", pred_eps, "case-splitting epsilon");
    predict->add_option("--delta", pred_delta, "finite-n surrogate for divergence");
    predict->add_option("--variant", pred_variant, "1|2|3")->check(CLI::IsMember({"1", "2", "3"}));
    predict->add_option("--K", pred_k, "upper constant for variant 3");
    predict->add_option("--input", pred_in, "graph for --model profile");
    predict->add_option("--d", pred_d, "nominal degree for --model profile");
    predict->add_option("--sample", pred_sample, "sampled vertices for --model profile");
    predict->add_option("--max-j", pred_j, "largest radius for --model profile");
    predict->add_option("--seed", seed, "random seed (profile sampling)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run an experiment grid into a CSV");
    std::string sweep_cfg, sweep_out;
    std::optional<std::uint64_t> sweep_seed;
    sweep->add_option("--config", sweep_cfg, "key = value config file")->required();
    sweep->add_option("--output", sweep_out, "CSV output (overrides the config)");
    sweep->add_option("--seed", sweep_seed, "master seed (overrides the config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Graph g;
            Json info{{"kind", gen_kind}, {"seed", seed}};
            if (gen_kind == "gnp") {
                if (!gen_p || gen_n == 0) throw UsageError("gen --kind gnp needs --n and --p");
                GnpSample s = gen_gnp(gen_n, *gen_p, seed);
                info["p"] = *gen_p;
                info["expected_degree"] = s.expected_degree;
                g = std::move(s.graph);
            } else if (gen_kind == "rgg") {
                if (gen_n == 0 || gen_r.has_value() == gen_mult.has_value()) {
                    throw UsageError("gen --kind rgg needs --n and exactly one of --r, --mult");
                }
                const double r = gen_r ? *gen_r : *gen_mult * critical_radius(gen_n);
                RggSample s = gen_rgg(gen_n, r, seed);
                info["radius"] = r;
                if (!gen_points.empty()) save_points(gen_points, s.points);
                g = std::move(s.graph);
            } else {
                if ((gen_kind == "grid" || gen_kind == "torus") && (gen_rows == 0 || gen_cols == 0)) {
                    throw UsageError("gen --kind " + gen_kind + " needs --rows and --cols");
                }
                g = structured(gen_kind, gen_rows, gen_cols, gen_n);
            }
            info["n"] = g.num_vertices();
            info["m"] = g.num_edges();
            if (gen_out.empty()) {
                write_edges(std::cout, g);
            } else {
                save_edges(gen_out, g);
                emit(info);
            }
        } else if (*burn) {
            const Graph g = load_edges(burn_in);
            BurnSchedule s{load_schedule(burn_sched), burn_permissive ? Strictness::Permissive : Strictness::Strict};
            const BurnTrace trace = simulate(g, s);
            if (!burn_trace.empty()) {
                std::ofstream out(burn_trace);
                if (!out) throw Error("cannot write " + burn_trace);
                write_trace(out, trace);
            }
            emit(to_json(trace, burn_rounds));
        } else if (*solve) {
            const Graph g = load_edges(solve_in);
            SolverOptions opts;
            opts.node_budget = node_budget;
            const SolveResult r = solve_brute ? burning_number_bruteforce(g, opts) : burning_number_exact(g, opts);
            emit(to_json(r));
        } else if (*bound) {
            const Graph g = load_edges(bound_in);
            if (!bound_recheck.empty()) {
                std::ifstream in(bound_recheck);
                if (!in) throw Error("cannot open " + bound_recheck);
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const Json::exception& e) {
                    throw Error(std::string("bad JSON: ") + e.what());
                }
                // Accepts one certificate or the array that `bound` prints.
                const Json items = j.is_array() ? j : Json::array({j});
                bool ok = true;
                Json out = Json::array();
                for (const Json& item : items) {
                    const BoundCertificate cert = certificate_from_json(item);
                    const bool valid = recheck(g, cert);
                    ok = ok && valid;
                    out.push_back({{"certificate", to_json(cert)}, {"valid", valid}});
                }
                emit(j.is_array() ? out : out[0]);
                return ok ? 0 : 1;
            }
            Json out = Json::array();
            if (bound_kind == "ballsum" || bound_kind == "all") out.push_back(to_json(lower_bound_ballsum(g)));
            if (bound_kind == "center" || bound_kind == "all") out.push_back(to_json(upper_bound_center(g)));
            if (bound_kind == "greedy" || bound_kind == "all") out.push_back(to_json(greedy_schedule(g).certificate));
            if (bound_kind == "b2" || (bound_kind == "all" && g.num_vertices() >= 2 && is_b_two(g))) {
                out.push_back(to_json(b_two_certificate(g)));
            }
            emit(out);
        } else if (*strat) {
            Json out;
            BurnSchedule schedule;
            if (strat_kind == "path") {
                if (strat_n == 0) throw UsageError("strategy --kind path needs --n");
                schedule = path_schedule(strat_n);
                const BurnTrace t = simulate(path_graph(strat_n), schedule);
                out = {{"kind", "path"}, {"n", strat_n}, {"schedule_length", schedule.length()},
                       {"achieved_rounds", *t.completion_round}};
            } else if (strat_kind == "grid-strips" || strat_kind == "grid-narrow") {
                if (strat_n == 0 || strat_m == 0) throw UsageError("strategy --kind " + strat_kind + " needs --m and --n");
                const GridPlan plan = strat_kind == "grid-strips" ? grid_strip_schedule(strat_m, strat_n, strat_slack)
                                                                  : grid_narrow_schedule(strat_m, strat_n);
                schedule = plan.schedule;
                out = to_json(plan);
                out["kind"] = strat_kind;
                out["lower"] = grid_lower_bound(strat_m, strat_n);
            } else {
                Graph g;
                PointSet pts;
                if (strat_mult) {
                    if (strat_n == 0) throw UsageError("strategy --kind rgg-cells --mult needs --n");
                    RggSample s = gen_rgg(strat_n, *strat_mult * critical_radius(strat_n), seed);
                    g = std::move(s.graph);
                    pts = std::move(s.points);
                } else {
                    if (strat_points.empty()) throw UsageError("strategy --kind rgg-cells needs --points or --mult");
                    pts = load_points(strat_points);
                    g = strat_in.empty() ? geometric_graph(pts) : load_edges(strat_in);
                    if (g.num_vertices() != pts.points.size()) throw Error("graph and points disagree on n");
                }
                const CellPlan plan = rgg_cell_schedule(g, pts, strat_a);
                schedule = plan.schedule;
                out = to_json(plan);
                out["kind"] = "rgg-cells";
                out["bound"] = to_json(rgg_lower_bound(pts.radius));
            }
            if (!strat_out.empty()) save_schedule(strat_out, schedule);
            emit(out);
        } else if (*drunk) {
            const DrunkVariant v = parse_drunk_variant(drunk_variant);
            TrialStats st;
            if (!drunk_in.empty()) {
                st = drunk_estimate(load_edges(drunk_in), v, drunk_trials, seed);
            } else {
                if (drunk_n == 0) throw UsageError("drunk needs --n or --input");
                st = drunk_estimate_path(drunk_n, v, drunk_trials, seed);
            }
            if (!drunk_samples.empty()) {
                std::ofstream out(drunk_samples);
                if (!out) throw Error("cannot write " + drunk_samples);
                for (auto x : st.samples) out << x << '\n';
            }
            Json j = to_json(st);
            j["seed"] = seed;
            emit(j);
        } else if (*predict) {
            if (model == "gnp") {
                if (pred_n == 0) throw UsageError("predict --model gnp needs --n and --p");
                emit(to_json(predict_gnp(pred_n, pred_p, pred_eps, pred_delta)));
            } else if (model == "grid") {
                if (pred_n == 0 || pred_m == 0) throw UsageError("predict --model grid needs --m and --n");
                emit(to_json(predict_grid(pred_m, pred_n)));
            } else if (model == "path-drunk") {
                if (pred_n == 0) throw UsageError("predict --model path-drunk needs --n");
                emit(to_json(predict_path_drunk(pred_n, parse_drunk_variant(pred_variant), pred_k)));
            } else {
                if (pred_in.empty()) throw UsageError("predict --model profile needs --input and --d");
                emit(to_json(neighborhood_profile(load_edges(pred_in), pred_d, pred_sample, pred_j, seed)));
            }
        } else if (*sweep) {
            SweepConfig cfg = load_sweep_config(sweep_cfg);
            if (!sweep_out.empty()) cfg.output = sweep_out;
            if (sweep_seed) cfg.master_seed = *sweep_seed;
            const SweepSummary s = run_sweep(cfg);
            emit({{"study", to_string(cfg.study)},
                  {"output", cfg.output.string()},
                  {"cells", s.cells},
                  {"skipped", s.skipped},
                  {"executed", s.executed}});
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
