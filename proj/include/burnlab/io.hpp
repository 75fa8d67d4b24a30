#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

// Edge list: "n m", then m lines "u v" (0-based).
Graph read_edges(std::istream& in);
void write_edges(std::ostream& out, const Graph& g);

// Points: "n r", then n lines "x y", printed with 17 significant digits so
// they read back bit-identical.
PointSet read_points(std::istream& in);
void write_points(std::ostream& out, const PointSet& pts);

// Schedule: "k", then k vertex ids.
std::vector<Vertex> read_schedule(std::istream& in);
void write_schedule(std::ostream& out, const BurnSchedule& schedule);

// One line per round listing the newly burned ids.
void write_trace(std::ostream& out, const BurnTrace& trace);

Graph load_edges(const std::filesystem::path& path);
void save_edges(const std::filesystem::path& path, const Graph& g);
PointSet load_points(const std::filesystem::path& path);
void save_points(const std::filesystem::path& path, const PointSet& pts);
std::vector<Vertex> load_schedule(const std::filesystem::path& path);
void save_schedule(const std::filesystem::path& path, const BurnSchedule& schedule);

}  // namespace burnlab
