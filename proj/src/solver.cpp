#include "burnlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "burnlab/bitset.hpp"

namespace burnlab {

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::BallsumLower: return "ballsum_lower";
        case CertificateKind::EccentricityUpper: return "eccentricity_upper";
        case CertificateKind::GreedyUpper: return "greedy_upper";
        case CertificateKind::BTwoCharacterization: return "b2_characterization";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

// The covering search keeps an all-pairs distance table.
constexpr std::size_t kMaxSearchVertices = 5000;

// Witness check run after every solve.
void verify_witness(const Graph& g, const BurnSchedule& witness, std::uint32_t b) {
    const BurnTrace trace = simulate(g, witness);
    if (!trace.complete() || *trace.completion_round > b) {
        throw std::logic_error("solver witness does not burn the graph within b rounds");
    }
}

// Schedule from centers listed by decreasing radius (index 0 has radius k-1).
// Unused slots hold placeholder vertex 0; repair only ever adds coverage.
BurnSchedule schedule_from_slots(const Graph& g, const std::vector<std::optional<Vertex>>& slots) {
    std::vector<Vertex> centers;
    centers.reserve(slots.size());
    for (const auto& c : slots) centers.push_back(c.value_or(0));
    return repair_schedule(g, centers);
}

// max_v |N(v, j)|, or stops early once some ball reaches `need` (returns need).
std::size_t max_ball_size(const Graph& g, std::uint32_t j, std::size_t need, BfsWorkspace& ws,
                          Vertex* argmax) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const std::size_t s = ws.run(g, v, j).size();
        if (s > best) {
            best = s;
            if (argmax) *argmax = v;
        }
        if (best >= need) break;
    }
    return best;
}

// All-pairs hop distances plus lazily built ball bitsets per radius.
class BallTable {
public:
    explicit BallTable(const Graph& g) : n_(g.num_vertices()), dist_(n_ * n_, kUnreachable) {
        BfsWorkspace ws(n_);
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex u : ws.run(g, v)) dist_[v * n_ + u] = ws.depth(u);
        }
    }

    std::size_t n() const { return n_; }
    std::uint32_t dist(Vertex a, Vertex b) const { return dist_[a * n_ + b]; }

    const std::vector<Bitset>& balls(std::uint32_t radius) {
        while (layers_.size() <= radius) {
            const auto r = static_cast<std::uint32_t>(layers_.size());
            std::vector<Bitset> layer(n_, Bitset(n_));
            std::vector<std::size_t> sizes(n_);
            for (Vertex v = 0; v < n_; ++v) {
                for (Vertex u = 0; u < n_; ++u)
                    if (dist(v, u) <= r) layer[v].set(u);
                sizes[v] = layer[v].count();
            }
            layers_.push_back(std::move(layer));
            sizes_.push_back(std::move(sizes));
        }
        return layers_[radius];
    }
    std::size_t ball_size(Vertex v, std::uint32_t radius) {
        balls(radius);
        return sizes_[radius][v];
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::vector<Bitset>> layers_;
    std::vector<std::vector<std::size_t>> sizes_;
};

// Decides whether k balls of radii k-1..0 cover V. Branches on the uncovered
// vertex with the smallest ball at the largest free radius: some free radius
// must cover it. Prunes with the sum over free radii of the best remaining
// gain, and skips centers whose uncovered coverage is contained in that of a
// center already tried at the same node and radius.
class CoverSearch {
public:
    CoverSearch(BallTable& table, std::uint32_t k, std::uint64_t budget, std::uint64_t& nodes)
        : table_(table), k_(k), budget_(budget), nodes_(nodes), free_(k, 1), slot_(k) {
        for (std::uint32_t r = 0; r < k; ++r) table_.balls(r);
    }

    bool run() {
        Bitset uncovered(table_.n());
        uncovered.set_all();
        return dfs(uncovered);
    }

    // Center per radius, listed from radius k-1 down to 0.
    std::vector<std::optional<Vertex>> slots() const {
        std::vector<std::optional<Vertex>> out;
        for (std::uint32_t r = k_; r-- > 0;) out.push_back(slot_[r]);
        return out;
    }

private:
    bool dfs(const Bitset& uncovered) {
        if (++nodes_ > budget_) throw BudgetExceeded{};
        if (uncovered.none()) return true;

        const std::size_t need = uncovered.count();
        std::size_t capacity = 0;
        std::int64_t top = -1;
        for (std::uint32_t r = k_; r-- > 0 && capacity < need;) {
            if (!free_[r]) continue;
            if (top < 0) top = r;
            std::size_t best = 0;
            for (const auto& b : table_.balls(r)) best = std::max(best, intersection_count(b, uncovered));
            capacity += best;
        }
        if (capacity < need) return false;
        if (top < 0) return false;

        const auto rmax = static_cast<std::uint32_t>(top);
        Vertex target = 0;
        std::size_t fewest = ~std::size_t{0};
        for (Vertex u = 0; u < table_.n(); ++u) {
            if (!uncovered.test(u)) continue;
            const std::size_t s = table_.ball_size(u, rmax);
            if (s < fewest) {
                fewest = s;
                target = u;
            }
        }

        struct Candidate {
            Vertex center;
            std::size_t gain;
        };
        std::vector<Candidate> candidates;
        std::vector<Vertex> tried;
        for (std::uint32_t r = k_; r-- > 0;) {
            if (!free_[r]) continue;
            const auto& layer = table_.balls(r);
            candidates.clear();
            for (Vertex c = 0; c < table_.n(); ++c) {
                if (table_.dist(target, c) <= r) candidates.push_back({c, intersection_count(layer[c], uncovered)});
            }
            std::stable_sort(candidates.begin(), candidates.end(),
                             [](const Candidate& a, const Candidate& b) { return a.gain > b.gain; });
            tried.clear();
            for (const auto& cand : candidates) {
                const bool dominated = std::any_of(tried.begin(), tried.end(), [&](Vertex t) {
                    return subset_within(layer[cand.center], layer[t], uncovered);
                });
                if (dominated) continue;
                free_[r] = 0;
                slot_[r] = cand.center;
                Bitset rest = uncovered;
                rest.subtract(layer[cand.center]);
                if (dfs(rest)) return true;
                free_[r] = 1;
                slot_[r].reset();
                tried.push_back(cand.center);
            }
        }
        return false;
    }

    BallTable& table_;
    std::uint32_t k_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<char> free_;
    std::vector<std::optional<Vertex>> slot_;
};

}  // namespace

BoundCertificate lower_bound_ballsum(const Graph& g) {
    const std::size_t n = g.num_vertices();
    BoundCertificate cert;
    cert.kind = CertificateKind::BallsumLower;
    BfsWorkspace ws(n);
    std::size_t prefix = 0;
    for (std::uint32_t j = 0;; ++j) {
        const std::size_t need = n - prefix;
        Vertex arg = 0;
        const std::size_t best = max_ball_size(g, j, need, ws, &arg);
        if (best >= need) {
            cert.value = j + 1;
            cert.witness = arg;
            return cert;
        }
        cert.ball_maxima.push_back(best);
        prefix += best;
    }
}

BoundCertificate upper_bound_center(const Graph& g) {
    if (!is_connected(g)) throw Error("center upper bound needs a connected graph");
    const std::size_t n = g.num_vertices();
    BfsWorkspace ws(n);
    std::uint32_t best = kInfinite;
    Vertex arg = 0;
    for (Vertex v = 0; v < n && best > 0; ++v) {
        // Only eccentricities below the current best matter.
        const std::uint32_t limit = best == kInfinite ? BfsWorkspace::kNoLimit : best - 1;
        if (ws.run(g, v, limit).size() == n) {
            best = ws.max_depth_reached();
            arg = v;
        }
    }
    BoundCertificate cert;
    cert.kind = CertificateKind::EccentricityUpper;
    cert.value = best + 1;
    cert.witness = arg;
    cert.schedule = BurnSchedule{{arg}, Strictness::Strict};
    return cert;
}

GreedyResult greedy_schedule(const Graph& g) {
    const std::size_t n = g.num_vertices();
    BfsWorkspace ws(n);
    for (std::uint32_t k = lower_bound_ballsum(g).value;; ++k) {
        std::vector<char> covered(n, 0);
        std::size_t count = 0;
        std::vector<Vertex> centers;
        for (std::uint32_t i = 1; i <= k && count < n; ++i) {
            const std::uint32_t radius = k - i;
            Vertex best = 0;
            std::size_t best_gain = 0;
            for (Vertex c = 0; c < n; ++c) {
                std::size_t gain = 0;
                for (Vertex u : ws.run(g, c, radius)) gain += covered[u] ? 0 : 1;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            for (Vertex u : ws.run(g, best, radius)) {
                if (!covered[u]) {
                    covered[u] = 1;
                    ++count;
                }
            }
            centers.push_back(best);
        }
        if (count == n) {
            GreedyResult out;
            out.schedule = repair_schedule(g, centers);
            out.certificate.kind = CertificateKind::GreedyUpper;
            out.certificate.value = k;
            out.certificate.schedule = out.schedule;
            return out;
        }
    }
}

bool is_b_two(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n < 2) throw Error("b = 2 test needs n >= 2");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) + 2 >= n) return true;
    return false;
}

BoundCertificate b_two_certificate(const Graph& g) {
    if (!is_b_two(g)) throw Error("graph has no vertex of degree >= n-2");
    BoundCertificate cert;
    cert.kind = CertificateKind::BTwoCharacterization;
    cert.value = 2;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) + 2 >= g.num_vertices()) {
            cert.witness = v;
            break;
        }
    }
    return cert;
}

bool recheck(const Graph& g, const BoundCertificate& cert) {
    const std::size_t n = g.num_vertices();
    switch (cert.kind) {
        case CertificateKind::BallsumLower: {
            if (cert.value == 0 || cert.ball_maxima.size() + 1 != cert.value) return false;
            BfsWorkspace ws(n);
            std::size_t sum = 0;
            for (std::uint32_t j = 0; j < cert.ball_maxima.size(); ++j) {
                if (max_ball_size(g, j, n + 1, ws, nullptr) != cert.ball_maxima[j]) return false;
                sum += cert.ball_maxima[j];
            }
            return sum < n;
        }
        case CertificateKind::EccentricityUpper: {
            if (!g.contains(cert.witness)) return false;
            const std::uint32_t e = eccentricity(g, cert.witness);
            return e != kInfinite && e + 1 <= cert.value;
        }
        case CertificateKind::GreedyUpper: {
            const BurnTrace trace = simulate(g, cert.schedule);
            return trace.complete() && *trace.completion_round <= cert.value;
        }
        case CertificateKind::BTwoCharacterization:
            return n >= 2 && cert.value == 2 && g.contains(cert.witness) && g.degree(cert.witness) + 2 >= n;
    }
    return false;
}

SolveResult burning_number_exact(const Graph& g, const SolverOptions& opts) {
    const auto start = Clock::now();
    SolveResult result;

    BoundCertificate lower = lower_bound_ballsum(g);
    GreedyResult greedy = greedy_schedule(g);
    std::uint32_t upper = greedy.certificate.value;
    BurnSchedule upper_witness = greedy.schedule;
    result.certificates.push_back(lower);
    if (is_connected(g)) {
        BoundCertificate center = upper_bound_center(g);
        if (center.value < upper) {
            upper = center.value;
            upper_witness = center.schedule;
        }
        result.certificates.push_back(std::move(center));
    }
    result.certificates.push_back(greedy.certificate);
    if (g.num_vertices() >= 2 && is_b_two(g)) result.certificates.push_back(b_two_certificate(g));

    result.lower = lower.value;
    result.b = upper;
    result.witness = upper_witness;
    try {
        if (lower.value < upper && g.num_vertices() > kMaxSearchVertices) throw BudgetExceeded{};
        std::optional<BallTable> table;
        if (lower.value < upper) table.emplace(g);
        for (std::uint32_t k = lower.value; k < upper; ++k) {
            CoverSearch search(*table, k, opts.node_budget, result.nodes_explored);
            if (search.run()) {
                result.b = k;
                result.witness = schedule_from_slots(g, search.slots());
                break;
            }
            result.lower = k + 1;
        }
        result.lower = result.b;
    } catch (const BudgetExceeded&) {
        result.status = SolveStatus::Unsolved;
    }
    verify_witness(g, result.witness, result.b);
    result.elapsed = Clock::now() - start;
    return result;
}

SolveResult burning_number_bruteforce(const Graph& g, const SolverOptions& opts) {
    const auto start = Clock::now();
    const std::size_t n = g.num_vertices();
    if (n > opts.bruteforce_cap || n > 31) {
        throw Error("brute force limited to n <= " + std::to_string(opts.bruteforce_cap));
    }

    // Floyd-Warshall hop distances.
    const std::uint32_t inf = static_cast<std::uint32_t>(n + 1);
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex u : g.neighbors(v)) d[v][u] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);

    // ball[r][v] as a bitmask; r ranges over 0..n-1.
    std::vector<std::vector<std::uint32_t>> ball(n, std::vector<std::uint32_t>(n, 0));
    std::vector<std::uint32_t> biggest(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t u = 0; u < n; ++u)
                if (d[v][u] <= r) ball[r][v] |= 1U << u;
            biggest[r] = std::max<std::uint32_t>(biggest[r], static_cast<std::uint32_t>(std::popcount(ball[r][v])));
        }
    }
    const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;

    SolveResult result;
    std::vector<Vertex> tuple;
    for (std::uint32_t k = 1; k <= n; ++k) {
        // Capacity of the radii still to place: radii (k-1-depth) down to 0.
        std::vector<std::uint32_t> tail(k + 1, 0);
        for (std::uint32_t i = k; i-- > 0;) tail[i] = tail[i + 1] + biggest[k - 1 - i];

        tuple.assign(k, 0);
        auto rec = [&](auto&& self, std::uint32_t depth, std::uint32_t mask) -> bool {
            ++result.nodes_explored;
            if (depth == k) return mask == full;
            if (static_cast<std::uint32_t>(std::popcount(mask)) + tail[depth] < n) return false;
            for (Vertex c = 0; c < n; ++c) {
                tuple[depth] = c;
                if (self(self, depth + 1, mask | ball[k - 1 - depth][c])) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) {
            result.b = k;
            result.lower = k;
            result.witness = repair_schedule(g, tuple);
            break;
        }
    }
    verify_witness(g, result.witness, result.b);
    result.elapsed = Clock::now() - start;
    return result;
}

}  // namespace burnlab
