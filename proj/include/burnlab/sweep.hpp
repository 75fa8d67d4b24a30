#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace burnlab {

enum class Study { GnpCases, GridRatio, RggTheta, DrunkPath, OracleEquivalence };

std::string_view to_string(Study s);
Study parse_study(std::string_view name);

/// Parsed `key = value` / `key = [a, b, c]` file. Reserved keys: study,
/// seed, output. Every other key is a parameter axis; `replicates = N`
/// expands to the axis replicate = 0..N-1.
struct SweepConfig {
    Study study = Study::DrunkPath;
    std::map<std::string, std::vector<std::string>> grid;
    std::uint64_t master_seed = 0;
    std::filesystem::path output;
};

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// One cartesian grid cell. Parameters are complete (defaults filled in).
struct SweepCell {
    std::string instance_id;  // "k=v;k=v" over the study's parameters in schema order
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;  // derive_seed(master, hash(instance_id))
};

/// Cells in deterministic order (last parameter varies fastest). Throws on
/// an empty axis, an unknown parameter or a missing required one.
std::vector<SweepCell> expand_grid(const SweepConfig& config);

struct ResultRow {
    std::string study;
    std::string instance_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> measured;
    std::vector<std::pair<std::string, std::string>> predicted;
    std::vector<std::pair<std::string, std::string>> certs;
    double ms = 0.0;
};

/// Column names for a study, in CSV order.
std::vector<std::string> csv_columns(Study study);
inline constexpr std::string_view kSchemaLine = "# schema burnlab-sweep/1";

/// Runs one cell. Pure function of (study, cell) apart from ms.
ResultRow run_cell(Study study, const SweepCell& cell);

std::string csv_line(const ResultRow& row);

struct SweepSummary {
    std::size_t cells = 0;
    std::size_t skipped = 0;  // already present in the output file
    std::size_t executed = 0;
};

/// Executes the grid, appending rows to config.output in cell order. An
/// existing file with the same schema and header is resumed: completed
/// instance ids are skipped and a partial trailing line is dropped.
SweepSummary run_sweep(const SweepConfig& config);

}  // namespace burnlab
