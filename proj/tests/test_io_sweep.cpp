#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "burnlab/generators.hpp"
#include "burnlab/io.hpp"
#include "burnlab/report.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/sweep.hpp"

using namespace burnlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "burnlab_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Drops the trailing ms column of every data row.
std::string without_ms(const std::string& csv) {
    std::stringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && line.rfind("study,", 0) != 0) line.erase(line.rfind(','));
        out += line + "\n";
    }
    return out;
}

SweepConfig config_from(const std::string& text) {
    std::istringstream in(text);
    return parse_sweep_config(in);
}

}  // namespace

TEST_CASE("edge list round trip and rejection") {
    const Graph g = gen_gnp(50, 0.1, 3).graph;
    std::stringstream io;
    write_edges(io, g);
    CHECK(read_edges(io) == g);
    for (const char* bad : {"3 1\n0 0\n", "3 2\n0 1\n1 0\n", "3 1\n0 5\n", "3 2\n0 1\n", "3 1\n0 1\n2 2\n",
                            "-3 0\n", "3 1\n0 x\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_edges(in), Error);
    }
}

TEST_CASE("schedule and trace formats") {
    std::stringstream io;
    write_schedule(io, BurnSchedule{{4, 1, 8}, Strictness::Strict});
    CHECK(io.str() == "3\n4\n1\n8\n");
    CHECK(read_schedule(io) == std::vector<Vertex>{4, 1, 8});
    std::istringstream short_in("3\n1 2\n");
    CHECK_THROWS_AS(read_schedule(short_in), Error);
    std::ostringstream trace;
    write_trace(trace, simulate(path_graph(5), BurnSchedule{{2}, Strictness::Strict}));
    CHECK(trace.str() == "2\n1 3\n0 4\n");
}

TEST_CASE("certificates survive JSON and recheck") {
    const Graph g = gen_gnp(40, 0.15, 2).graph;
    for (const BoundCertificate& c : {lower_bound_ballsum(g), greedy_schedule(g).certificate}) {
        const Json j = to_json(c);
        const BoundCertificate back = certificate_from_json(Json::parse(j.dump()));
        CHECK(back.value == c.value);
        CHECK(recheck(g, back));
    }
    CHECK_THROWS_AS(certificate_from_json(Json{{"kind", "nonsense"}, {"value", 1}}), Error);
}

TEST_CASE("config parsing") {
    const SweepConfig c = config_from(
        "# drunk study\n"
        "study = drunk-path\n"
        "seed = 0x10\n"
        "n = [100, 200]\n"
        "variant = 1\n"
        "trials = 5   # trailing comment\n"
        "output = out.csv\n");
    CHECK(c.study == Study::DrunkPath);
    CHECK(c.master_seed == 16);
    CHECK(c.grid.at("n") == std::vector<std::string>{"100", "200"});
    CHECK(c.output == "out.csv");
    CHECK_THROWS_AS(config_from("n = 1\n"), Error);
    CHECK_THROWS_AS(config_from("study = nope\n"), Error);
    CHECK_THROWS_AS(config_from("study = drunk-path\nn = [1, 2\n"), Error);
    CHECK_THROWS_AS(config_from("study = drunk-path\nn = 1\nn = 2\n"), Error);
}

TEST_CASE("grid expansion") {
    const SweepConfig c = config_from("study = gnp-cases\nn = [10, 20]\np = [0.5, 0.6, 0.7]\nreplicates = 2\n");
    const auto cells = expand_grid(c);
    REQUIRE(cells.size() == 12);
    CHECK(cells[0].instance_id == "n=10;p=0.5;replicate=0");
    CHECK(cells[1].instance_id == "n=10;p=0.5;replicate=1");
    CHECK(cells[11].instance_id == "n=20;p=0.7;replicate=1");
    CHECK(cells[0].seed != cells[1].seed);
    CHECK(expand_grid(c)[5].seed == cells[5].seed);
    CHECK_THROWS_AS(expand_grid(config_from("study = gnp-cases\nn = []\np = 0.5\n")), Error);
    CHECK_THROWS_AS(expand_grid(config_from("study = gnp-cases\nn = 5\np = 0.5\nreplicates = 0\n")), Error);
    CHECK_THROWS_AS(expand_grid(config_from("study = gnp-cases\np = 0.5\n")), Error);
    CHECK_THROWS_AS(expand_grid(config_from("study = gnp-cases\nn = 5\np = 0.5\nfoo = 1\n")), Error);
}

TEST_CASE("drunk-path sweep rows, determinism and resume") {
    const fs::path out = scratch("drunk.csv");
    SweepConfig c = config_from("study = drunk-path\nseed = 7\nn = [100, 400, 900]\nvariant = 1\ntrials = 20\n");
    c.output = out;
    const SweepSummary s1 = run_sweep(c);
    CHECK(s1.cells == 3);
    CHECK(s1.executed == 3);
    const std::string first = slurp(out);
    CHECK(first.rfind(std::string(kSchemaLine) + "\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : first) lines += ch == '\n';
    CHECK(lines == 5);

    // Rerun from scratch: identical bytes apart from timing.
    fs::remove(out);
    run_sweep(c);
    CHECK(without_ms(slurp(out)) == without_ms(first));

    // A complete file is skipped entirely.
    const SweepSummary s2 = run_sweep(c);
    CHECK(s2.skipped == 3);
    CHECK(s2.executed == 0);

    // Cut the file in the middle of the last row: that row is redone.
    const std::string content = slurp(out);
    fs::resize_file(out, content.size() - 10);
    const SweepSummary s3 = run_sweep(c);
    CHECK(s3.skipped == 2);
    CHECK(s3.executed == 1);
    CHECK(without_ms(slurp(out)) == without_ms(first));
}

TEST_CASE("sweep refuses a file with another schema") {
    const fs::path out = scratch("other.csv");
    {
        std::ofstream f(out);
        f << "something else\n";
    }
    SweepConfig c = config_from("study = grid-ratio\nm = 10\nn = 10\n");
    c.output = out;
    CHECK_THROWS_AS(run_sweep(c), Error);
}

TEST_CASE("every study runs a small cell") {
    const char* configs[] = {
        "study = gnp-cases\nn = 200\np = 0.2\n",
        "study = grid-ratio\nm = [12, 3]\nn = 20\n",
        "study = rgg-theta\nn = 2000\nmult = 4\n",
        "study = drunk-path\nn = 50\nvariant = [1, 2, 3]\ntrials = 10\n",
        "study = oracle-equivalence\nn = [5, 7]\np = 0.4\n",
    };
    for (const char* text : configs) {
        SweepConfig c = config_from(text);
        c.output = scratch(std::string(to_string(c.study)) + ".csv");
        const SweepSummary s = run_sweep(c);
        CHECK(s.executed == s.cells);
        std::ifstream in(c.output);
        std::string schema, header, row;
        std::getline(in, schema);
        std::getline(in, header);
        const auto cols = csv_columns(c.study);
        std::size_t header_fields = 1;
        for (char ch : header) header_fields += ch == ',';
        CHECK(header_fields == cols.size());
        while (std::getline(in, row)) {
            std::size_t fields = 1;
            for (char ch : row) fields += ch == ',';
            CHECK(fields == cols.size());
            if (c.study == Study::OracleEquivalence) CHECK(row.find(",1,") != std::string::npos);
        }
    }
}
