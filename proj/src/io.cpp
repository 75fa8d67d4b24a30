#include "burnlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace burnlab {

namespace {

template <typename T>
T read_value(std::istream& in, const char* what) {
    T value{};
    if (!(in >> value)) throw Error(std::string("malformed input: expected ") + what);
    return value;
}

// Rejects signs and fractions that operator>> would silently accept or wrap.
std::uint64_t read_count(std::istream& in, const char* what) {
    std::string token;
    if (!(in >> token)) throw Error(std::string("malformed input: expected ") + what);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(std::string("malformed input: bad ") + what + " '" + token + "'");
    }
    try {
        return std::stoull(token);
    } catch (const std::exception&) {
        throw Error(std::string("malformed input: ") + what + " out of range");
    }
}

void expect_end(std::istream& in) {
    std::string extra;
    if (in >> extra) throw Error("malformed input: trailing data '" + extra + "'");
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error("write failed: " + path.string());
}

}  // namespace

Graph read_edges(std::istream& in) {
    const std::uint64_t n = read_count(in, "vertex count");
    const std::uint64_t m = read_count(in, "edge count");
    if (n > kUnreachable) throw Error("vertex count too large");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::uint64_t e = 0; e < m; ++e) {
        const std::uint64_t u = read_count(in, "edge endpoint");
        const std::uint64_t v = read_count(in, "edge endpoint");
        if (u >= n || v >= n) throw Error("edge endpoint out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    expect_end(in);
    return Graph::from_edges(n, edges);
}

void write_edges(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

PointSet read_points(std::istream& in) {
    PointSet pts;
    const std::uint64_t n = read_count(in, "point count");
    pts.radius = read_value<double>(in, "radius");
    if (!std::isfinite(pts.radius) || pts.radius < 0.0) throw Error("radius must be finite and non-negative");
    pts.points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        Point p;
        p.x = read_value<double>(in, "x coordinate");
        p.y = read_value<double>(in, "y coordinate");
        if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) throw Error("point outside the unit square");
        pts.points.push_back(p);
    }
    expect_end(in);
    return pts;
}

void write_points(std::ostream& out, const PointSet& pts) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", pts.radius);
    out << pts.points.size() << ' ' << buf << '\n';
    for (const Point& p : pts.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", p.x, p.y);
        out << buf << '\n';
    }
}

std::vector<Vertex> read_schedule(std::istream& in) {
    const std::uint64_t k = read_count(in, "schedule length");
    std::vector<Vertex> ids;
    ids.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t v = read_count(in, "vertex id");
        if (v >= kUnreachable) throw Error("vertex id out of range");
        ids.push_back(static_cast<Vertex>(v));
    }
    expect_end(in);
    return ids;
}

void write_schedule(std::ostream& out, const BurnSchedule& schedule) {
    out << schedule.sources.size() << '\n';
    for (Vertex v : schedule.sources) out << v << '\n';
}

void write_trace(std::ostream& out, const BurnTrace& trace) {
    for (const auto& round : trace.rounds) {
        for (std::size_t i = 0; i < round.size(); ++i) out << (i ? " " : "") << round[i];
        out << '\n';
    }
}

Graph load_edges(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_edges(in);
}

void save_edges(const std::filesystem::path& path, const Graph& g) {
    auto out = open_out(path);
    write_edges(out, g);
    finish(out, path);
}

PointSet load_points(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_points(in);
}

void save_points(const std::filesystem::path& path, const PointSet& pts) {
    auto out = open_out(path);
    write_points(out, pts);
    finish(out, path);
}

std::vector<Vertex> load_schedule(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_schedule(in);
}

void save_schedule(const std::filesystem::path& path, const BurnSchedule& schedule) {
    auto out = open_out(path);
    write_schedule(out, schedule);
    finish(out, path);
}

}  // namespace burnlab
