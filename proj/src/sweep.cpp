#include "burnlab/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <sstream>

#include "burnlab/drunk.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/parallel.hpp"
#include "burnlab/predictors.hpp"
#include "burnlab/rng.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

namespace burnlab {

namespace {

struct Param {
    std::string name;
    std::optional<std::string> fallback;  // nullopt = required
};

struct Schema {
    std::vector<Param> params;
    std::vector<std::string> measured;
    std::vector<std::string> predicted;
    std::vector<std::string> certs;
};

const Schema& schema_of(Study s) {
    static const Schema gnp{{{"n", {}}, {"p", {}}, {"replicate", "0"}},
                            {"edges", "connected", "diameter", "is_b_two", "lower", "upper", "b"},
                            {"case", "i", "set"},
                            {"ballsum", "ballsum_maxima", "center", "center_witness", "b2_witness"}};
    static const Schema grid{{{"m", {}}, {"n", {}}, {"slack", "1"}},
                             {"achieved_rounds", "ratio", "strips", "repair_balls", "narrow"},
                             {"leading", "lower", "regime"},
                             {"verified"}};
    static const Schema rgg{{{"n", {}}, {"mult", {}}, {"a", "0.5"}, {"replicate", "0"}},
                            {"radius", "edges", "giant_size", "cells", "giant_rounds", "scaled", "all_rounds"},
                            {"t", "claimed_lower"},
                            {"giant_complete"}};
    static const Schema drunk{{{"n", {}}, {"variant", {}}, {"trials", {}}},
                              {"mean", "stddev", "ci95", "p50", "min", "max", "stalled", "ratio"},
                              {"low", "high"},
                              {"floor", "floor_ok"}};
    static const Schema oracle{{{"n", {}}, {"p", "0.4"}, {"replicate", "0"}},
                               {"edges", "b_exact", "b_bruteforce", "match", "nodes"},
                               {"lower_ballsum", "upper_center"},
                               {"witness_completes"}};
    switch (s) {
        case Study::GnpCases: return gnp;
        case Study::GridRatio: return grid;
        case Study::RggTheta: return rgg;
        case Study::DrunkPath: return drunk;
        case Study::OracleEquivalence: return oracle;
    }
    throw Error("unknown study");
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string fmt(std::uint64_t x) { return std::to_string(x); }
std::string fmt_bool(bool b) { return b ? "1" : "0"; }

template <typename Seq>
std::string join(const Seq& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += '|';
        out += std::to_string(v);
    }
    return out;
}

class Params {
public:
    explicit Params(const SweepCell& cell) : cell_(cell) {}
    const std::string& raw(std::string_view key) const {
        for (const auto& [k, v] : cell_.params)
            if (k == key) return v;
        throw Error("missing parameter " + std::string(key));
    }
    std::size_t size(std::string_view key) const {
        const std::string& v = raw(key);
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
            throw Error("parameter " + std::string(key) + " must be a non-negative integer, got '" + v + "'");
        }
        return std::stoull(v);
    }
    double real(std::string_view key) const {
        const std::string& v = raw(key);
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != v.size() || !std::isfinite(x)) {
            throw Error("parameter " + std::string(key) + " must be a number, got '" + v + "'");
        }
        return x;
    }

private:
    const SweepCell& cell_;
};

using Cols = std::vector<std::pair<std::string, std::string>>;

void run_gnp(const Params& p, std::uint64_t seed, ResultRow& row) {
    const std::size_t n = p.size("n");
    const double prob = p.real("p");
    const GnpSample s = gen_gnp(n, prob, seed);
    const Graph& g = s.graph;
    const bool connected = is_connected(g);
    const GnpPrediction pr = predict_gnp(n, prob);

    std::string diam = "na";
    std::optional<std::uint32_t> diameter_value;
    // All-pairs BFS is skipped where it would dominate the run time.
    if (connected && static_cast<double>(n) * static_cast<double>(g.num_edges()) <= 5e9) {
        diameter_value = diameter(g);
        diam = fmt(std::uint64_t{*diameter_value});
    }
    const bool b2 = n >= 2 && is_b_two(g);
    const BoundCertificate lower = lower_bound_ballsum(g);
    std::string upper = "na";
    std::string center = "na";
    std::string witness = "na";
    std::optional<std::uint32_t> upper_value;
    if (connected) {
        const BoundCertificate up = upper_bound_center(g);
        upper_value = up.value;
        upper = center = fmt(std::uint64_t{up.value});
        witness = fmt(std::uint64_t{up.witness});
    }
    std::string b = "na";
    if (b2) {
        b = "2";
    } else if (diameter_value && *diameter_value == 2) {
        b = "3";
    } else if (upper_value && *upper_value == lower.value) {
        b = fmt(std::uint64_t{lower.value});
    }
    std::string b2_witness = "na";
    if (b2) b2_witness = fmt(std::uint64_t{b_two_certificate(g).witness});

    row.measured = {{"edges", fmt(std::uint64_t{g.num_edges()})},
                    {"connected", fmt_bool(connected)},
                    {"diameter", diam},
                    {"is_b_two", fmt_bool(b2)},
                    {"lower", fmt(std::uint64_t{lower.value})},
                    {"upper", upper},
                    {"b", b}};
    row.predicted = {{"case", std::string(to_string(pr.kind))},
                     {"i", fmt(std::uint64_t{pr.i})},
                     {"set", pr.predicted.empty() ? "na" : join(pr.predicted)}};
    row.certs = {{"ballsum", fmt(std::uint64_t{lower.value})},
                 {"ballsum_maxima", join(lower.ball_maxima)},
                 {"center", center},
                 {"center_witness", witness},
                 {"b2_witness", b2_witness}};
}

void run_grid(const Params& p, std::uint64_t, ResultRow& row) {
    const std::size_t m = p.size("m");
    const std::size_t n = p.size("n");
    const GridPlan plan = grid_strip_schedule(m, n, p.real("slack"));
    const GridPrediction pr = predict_grid(m, n);
    const BurnTrace trace = simulate(grid_graph(m, n), plan.schedule);
    const bool verified = trace.complete() && *trace.completion_round <= plan.achieved_rounds;
    row.measured = {{"achieved_rounds", fmt(std::uint64_t{plan.achieved_rounds})},
                    {"ratio", fmt(plan.achieved_rounds / pr.leading)},
                    {"strips", fmt(std::uint64_t{plan.strips})},
                    {"repair_balls", fmt(std::uint64_t{plan.repair_balls})},
                    {"narrow", fmt_bool(plan.narrow)}};
    row.predicted = {{"leading", fmt(pr.leading)},
                     {"lower", fmt(std::uint64_t{pr.lower})},
                     {"regime", pr.wide ? "wide" : "narrow"}};
    row.certs = {{"verified", fmt_bool(verified)}};
}

void run_rgg(const Params& p, std::uint64_t seed, ResultRow& row) {
    const std::size_t n = p.size("n");
    const double r = p.real("mult") * critical_radius(n);
    const RggSample s = gen_rgg(n, r, seed);
    const CellPlan plan = rgg_cell_schedule(s.graph, s.points, p.real("a"));
    const RggBound bound = rgg_lower_bound(r);
    auto rounds = [](std::optional<std::uint32_t> x) { return x ? fmt(std::uint64_t{*x}) : std::string("inf"); };
    const std::string scaled =
        plan.giant_achieved_rounds ? fmt(*plan.giant_achieved_rounds * std::pow(r, 2.0 / 3.0)) : "na";
    row.measured = {{"radius", fmt(r)},
                    {"edges", fmt(std::uint64_t{s.graph.num_edges()})},
                    {"giant_size", fmt(std::uint64_t{plan.giant_size})},
                    {"cells", fmt(std::uint64_t{plan.cells_per_side * plan.cells_per_side})},
                    {"giant_rounds", rounds(plan.giant_achieved_rounds)},
                    {"scaled", scaled},
                    {"all_rounds", rounds(plan.achieved_rounds)}};
    row.predicted = {{"t", fmt(std::uint64_t{bound.t})}, {"claimed_lower", fmt(std::uint64_t{bound.claimed_lower()})}};
    row.certs = {{"giant_complete", fmt_bool(plan.giant_achieved_rounds.has_value())}};
}

void run_drunk(const Params& p, std::uint64_t seed, ResultRow& row) {
    const std::size_t n = p.size("n");
    const DrunkVariant variant = parse_drunk_variant(p.raw("variant"));
    const TrialStats st = drunk_estimate_path(n, variant, p.size("trials"), seed);
    const PathDrunkPrediction pr = predict_path_drunk(std::max<std::size_t>(n, 2), variant);
    const double scale = pr.point ? *pr.point : pr.low;
    const std::uint32_t floor = ceil_sqrt(n);
    row.measured = {{"mean", fmt(st.mean)},
                    {"stddev", fmt(st.stddev)},
                    {"ci95", fmt(st.ci95)},
                    {"p50", fmt(st.p50)},
                    {"min", fmt(std::uint64_t{st.min_sample})},
                    {"max", fmt(std::uint64_t{st.max_sample})},
                    {"stalled", fmt(std::uint64_t{st.stalled})},
                    {"ratio", fmt(st.mean / scale)}};
    row.predicted = {{"low", fmt(pr.low)}, {"high", fmt(pr.high)}};
    row.certs = {{"floor", fmt(std::uint64_t{floor})}, {"floor_ok", fmt_bool(st.min_sample >= floor)}};
}

void run_oracle(const Params& p, std::uint64_t seed, ResultRow& row) {
    const std::size_t n = p.size("n");
    const double prob = p.real("p");
    std::optional<Graph> g;
    // Resample until connected; the attempt index is part of the seed chain.
    for (std::uint64_t attempt = 0; attempt < 1000 && !g; ++attempt) {
        GnpSample s = gen_gnp(n, prob, derive_seed(seed, attempt));
        if (is_connected(s.graph)) g = std::move(s.graph);
    }
    if (!g) throw Error("no connected sample in 1000 attempts; raise p");
    const SolveResult exact = burning_number_exact(*g);
    const SolveResult brute = burning_number_bruteforce(*g);
    const BurnTrace trace = simulate(*g, exact.witness);
    row.measured = {{"edges", fmt(std::uint64_t{g->num_edges()})},
                    {"b_exact", fmt(std::uint64_t{exact.b})},
                    {"b_bruteforce", fmt(std::uint64_t{brute.b})},
                    {"match", fmt_bool(exact.b == brute.b && exact.status == SolveStatus::Solved)},
                    {"nodes", fmt(exact.nodes_explored)}};
    row.predicted = {{"lower_ballsum", fmt(std::uint64_t{lower_bound_ballsum(*g).value})},
                     {"upper_center", fmt(std::uint64_t{upper_bound_center(*g).value})}};
    row.certs = {{"witness_completes", fmt_bool(trace.complete() && *trace.completion_round <= exact.b)}};
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string header_line(Study study) {
    std::string h;
    for (const auto& c : csv_columns(study)) h += (h.empty() ? "" : ",") + c;
    return h;
}

}  // namespace

std::string_view to_string(Study s) {
    switch (s) {
        case Study::GnpCases: return "gnp-cases";
        case Study::GridRatio: return "grid-ratio";
        case Study::RggTheta: return "rgg-theta";
        case Study::DrunkPath: return "drunk-path";
        case Study::OracleEquivalence: return "oracle-equivalence";
    }
    return "unknown";
}

Study parse_study(std::string_view name) {
    for (Study s : {Study::GnpCases, Study::GridRatio, Study::RggTheta, Study::DrunkPath, Study::OracleEquivalence}) {
        if (to_string(s) == name) return s;
    }
    throw Error("unknown study '" + std::string(name) + "'");
}

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    bool have_study = false;
    std::map<std::string, bool> seen;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw Error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        if (key.empty()) throw Error("config line " + std::to_string(lineno) + ": empty key");
        if (seen[key]) throw Error("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        seen[key] = true;

        std::vector<std::string> items;
        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']') throw Error("config line " + std::to_string(lineno) + ": unterminated list");
            const std::string body = trim(std::string_view(value).substr(1, value.size() - 2));
            if (!body.empty()) {
                std::stringstream ss(body);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    item = trim(item);
                    if (item.empty()) throw Error("config line " + std::to_string(lineno) + ": empty list item");
                    items.push_back(item);
                }
            }
        } else {
            if (value.empty()) throw Error("config line " + std::to_string(lineno) + ": empty value");
            items.push_back(value);
        }
        for (const auto& item : items) {
            if (item.find_first_of(",;=|") != std::string::npos) {
                throw Error("config line " + std::to_string(lineno) + ": value '" + item + "' contains a separator");
            }
        }

        const bool scalar = items.size() == 1 && value.front() != '[';
        if (key == "study" || key == "seed" || key == "output" || key == "replicates") {
            if (!scalar) throw Error("config key '" + key + "' takes a single value");
            if (key == "study") {
                cfg.study = parse_study(items[0]);
                have_study = true;
            } else if (key == "seed") {
                try {
                    std::size_t used = 0;
                    cfg.master_seed = std::stoull(items[0], &used, 0);
                    if (used != items[0].size()) throw Error("");
                } catch (const std::exception&) {
                    throw Error("config: seed must be an unsigned integer");
                }
            } else if (key == "output") {
                cfg.output = items[0];
            } else {
                if (items[0].find_first_not_of("0123456789") != std::string::npos) {
                    throw Error("config: replicates must be a non-negative integer");
                }
                auto& axis = cfg.grid["replicate"];
                if (!axis.empty()) throw Error("config: replicates and replicate both given");
                for (std::size_t i = 0, r = std::stoull(items[0]); i < r; ++i) axis.push_back(std::to_string(i));
                if (axis.empty()) cfg.grid["replicate"] = {};
            }
            continue;
        }
        if (key == "replicate" && cfg.grid.count("replicate")) throw Error("config: replicates and replicate both given");
        cfg.grid[key] = items;
    }
    if (!have_study) throw Error("config: missing 'study'");
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return parse_sweep_config(in);
}

std::vector<SweepCell> expand_grid(const SweepConfig& config) {
    const Schema& schema = schema_of(config.study);
    for (const auto& [key, values] : config.grid) {
        bool known = false;
        for (const auto& p : schema.params) known = known || p.name == key;
        if (!known) throw Error("parameter '" + key + "' is not used by study " + std::string(to_string(config.study)));
        if (values.empty()) throw Error("empty parameter grid for '" + key + "'");
    }
    std::vector<std::vector<std::string>> axes;
    for (const auto& p : schema.params) {
        if (auto it = config.grid.find(p.name); it != config.grid.end()) {
            axes.push_back(it->second);
        } else if (p.fallback) {
            axes.push_back({*p.fallback});
        } else {
            throw Error("study " + std::string(to_string(config.study)) + " needs parameter '" + p.name + "'");
        }
    }
    std::vector<SweepCell> cells;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        SweepCell cell;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const auto& name = schema.params[a].name;
            cell.params.emplace_back(name, axes[a][idx[a]]);
            if (!cell.instance_id.empty()) cell.instance_id += ';';
            cell.instance_id += name + "=" + axes[a][idx[a]];
        }
        cell.seed = derive_seed(config.master_seed, fnv1a(cell.instance_id));
        cells.push_back(std::move(cell));
        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].size()) break;
            idx[a] = 0;
            if (a == 0) return cells;
        }
        if (axes.empty()) return cells;
    }
}

std::vector<std::string> csv_columns(Study study) {
    const Schema& s = schema_of(study);
    std::vector<std::string> cols{"study", "instance_id"};
    for (const auto& p : s.params) cols.push_back("param:" + p.name);
    cols.emplace_back("seed");
    for (const auto& c : s.measured) cols.push_back("measured:" + c);
    for (const auto& c : s.predicted) cols.push_back("predicted:" + c);
    for (const auto& c : s.certs) cols.push_back("cert:" + c);
    cols.emplace_back("ms");
    return cols;
}

ResultRow run_cell(Study study, const SweepCell& cell) {
    ResultRow row;
    row.study = std::string(to_string(study));
    row.instance_id = cell.instance_id;
    row.params = cell.params;
    row.seed = cell.seed;
    const Params params(cell);
    const auto start = std::chrono::steady_clock::now();
    switch (study) {
        case Study::GnpCases: run_gnp(params, cell.seed, row); break;
        case Study::GridRatio: run_grid(params, cell.seed, row); break;
        case Study::RggTheta: run_rgg(params, cell.seed, row); break;
        case Study::DrunkPath: run_drunk(params, cell.seed, row); break;
        case Study::OracleEquivalence: run_oracle(params, cell.seed, row); break;
    }
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string csv_line(const ResultRow& row) {
    std::string line = row.study + "," + row.instance_id;
    for (const auto* group : {&row.params}) {
        for (const auto& [k, v] : *group) line += "," + v;
    }
    line += "," + std::to_string(row.seed);
    for (const auto* group : {&row.measured, &row.predicted, &row.certs}) {
        for (const auto& [k, v] : *group) line += "," + v;
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", row.ms);
    line += ",";
    line += ms;
    return line;
}

SweepSummary run_sweep(const SweepConfig& config) {
    if (config.output.empty()) throw Error("sweep needs an output path");
    const std::vector<SweepCell> cells = expand_grid(config);
    const std::string header = header_line(config.study);
    const std::size_t fields = csv_columns(config.study).size();

    SweepSummary summary;
    summary.cells = cells.size();
    std::map<std::string, bool> done;
    bool fresh = true;
    if (std::filesystem::exists(config.output) && std::filesystem::file_size(config.output) > 0) {
        std::ifstream in(config.output, std::ios::binary);
        const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::size_t pos = 0;
        std::size_t kept = 0;  // bytes of complete, valid lines
        std::size_t lineno = 0;
        while (pos < content.size()) {
            const auto nl = content.find('\n', pos);
            if (nl == std::string::npos) break;  // partial trailing line
            const std::string line = content.substr(pos, nl - pos);
            ++lineno;
            if (lineno == 1 && line != kSchemaLine) throw Error("existing output has a different schema line");
            if (lineno == 2 && line != header) throw Error("existing output has a different header");
            if (lineno > 2) {
                const auto f = split_csv(line);
                if (f.size() != fields) throw Error("existing output has a malformed row at line " + std::to_string(lineno));
                done[f[1]] = true;
            }
            pos = nl + 1;
            kept = pos;
        }
        if (lineno < 2) {
            kept = 0;  // header never completed; start over
        } else {
            fresh = false;
        }
        if (kept < content.size()) std::filesystem::resize_file(config.output, kept);
    }

    std::ofstream out(config.output, std::ios::app | std::ios::binary);
    if (!out) throw Error("cannot write " + config.output.string());
    if (fresh) out << kSchemaLine << '\n' << header << '\n' << std::flush;

    std::vector<const SweepCell*> todo;
    for (const auto& c : cells) {
        if (done.count(c.instance_id)) {
            ++summary.skipped;
        } else {
            todo.push_back(&c);
        }
    }

    // Rows are released to the file strictly in cell order.
    std::vector<std::optional<std::string>> ready(todo.size());
    std::size_t next = 0;
    std::mutex sink;
    // Path trials already run in parallel inside each cell.
    const std::size_t workers = config.study == Study::DrunkPath ? 1 : worker_count();
    parallel_for(
        todo.size(),
        [&](std::size_t i) {
            std::string line = csv_line(run_cell(config.study, *todo[i]));
            std::lock_guard lock(sink);
            ready[i] = std::move(line);
            while (next < ready.size() && ready[next]) {
                out << *ready[next] << '\n';
                ready[next].reset();
                ++next;
            }
            out.flush();
            if (!out) throw Error("write failed: " + config.output.string());
        },
        workers);
    summary.executed = todo.size();
    return summary;
}

}  // namespace burnlab
