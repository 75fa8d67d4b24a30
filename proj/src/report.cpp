#include "burnlab/report.hpp"

#include <array>
#include <cmath>

namespace burnlab {

namespace {

Json rounds_value(std::optional<std::uint32_t> r) {
    if (!r) return "inf";
    return *r;
}

Json finite_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

}  // namespace

Json to_json(const BurnSchedule& schedule) {
    return {{"strictness", schedule.strictness == Strictness::Strict ? "strict" : "permissive"},
            {"sources", schedule.sources}};
}

Json to_json(const BurnTrace& trace, bool with_rounds) {
    Json j{{"complete", trace.complete()},
           {"completion_round", rounds_value(trace.completion_round)},
           {"rounds_simulated", trace.rounds.size()},
           {"burned", trace.burned_count()}};
    if (with_rounds) j["rounds"] = trace.rounds;
    return j;
}

Json to_json(const BoundCertificate& cert) {
    Json j{{"kind", to_string(cert.kind)}, {"value", cert.value}};
    switch (cert.kind) {
        case CertificateKind::BallsumLower: j["ball_maxima"] = cert.ball_maxima; break;
        case CertificateKind::EccentricityUpper:
        case CertificateKind::BTwoCharacterization: j["witness"] = cert.witness; break;
        case CertificateKind::GreedyUpper: j["schedule"] = cert.schedule.sources; break;
    }
    return j;
}

BoundCertificate certificate_from_json(const Json& j) {
    try {
        BoundCertificate cert;
        const auto kind = j.at("kind").get<std::string>();
        static constexpr std::array kinds{CertificateKind::BallsumLower, CertificateKind::EccentricityUpper,
                                          CertificateKind::GreedyUpper, CertificateKind::BTwoCharacterization};
        bool found = false;
        for (CertificateKind k : kinds) {
            if (to_string(k) == kind) {
                cert.kind = k;
                found = true;
            }
        }
        if (!found) throw Error("unknown certificate kind '" + kind + "'");
        cert.value = j.at("value").get<std::uint32_t>();
        if (j.contains("ball_maxima")) cert.ball_maxima = j["ball_maxima"].get<std::vector<std::size_t>>();
        if (j.contains("witness")) cert.witness = j["witness"].get<Vertex>();
        if (j.contains("schedule")) cert.schedule.sources = j["schedule"].get<std::vector<Vertex>>();
        return cert;
    } catch (const Json::exception& e) {
        throw Error(std::string("bad certificate JSON: ") + e.what());
    }
}

Json to_json(const SolveResult& result) {
    Json certs = Json::array();
    for (const auto& c : result.certificates) certs.push_back(to_json(c));
    return {{"status", result.status == SolveStatus::Solved ? "solved" : "unsolved"},
            {"b", result.b},
            {"lower", result.lower},
            {"witness", result.witness.sources},
            {"nodes_explored", result.nodes_explored},
            {"elapsed_ms", result.elapsed.count()},
            {"certificates", certs}};
}

Json to_json(const GridPlan& plan) {
    return {{"rows", plan.rows},
            {"cols", plan.cols},
            {"transposed", plan.transposed},
            {"narrow", plan.narrow},
            {"gamma", plan.gamma},
            {"k1", plan.k1},
            {"k2", plan.k2},
            {"slack", plan.slack},
            {"strips", plan.strips},
            {"first_radius", plan.first_radius},
            {"last_radius", plan.last_radius},
            {"target_rounds", plan.target_rounds},
            {"repair_balls", plan.repair_balls},
            {"schedule_length", plan.schedule.length()},
            {"achieved_rounds", plan.achieved_rounds}};
}

Json to_json(const CellPlan& plan) {
    std::size_t empty = 0;
    for (std::size_t c : plan.occupancy) empty += c == 0;
    return {{"coefficient", plan.coefficient},
            {"cell_side", plan.cell_side},
            {"cells_per_side", plan.cells_per_side},
            {"empty_cells", empty},
            {"ignitions", plan.ignitions.size()},
            {"achieved_rounds", rounds_value(plan.achieved_rounds)},
            {"giant_achieved_rounds", rounds_value(plan.giant_achieved_rounds)},
            {"giant_size", plan.giant_size}};
}

Json to_json(const RggBound& bound) {
    return {{"radius", bound.radius},
            {"tessellation_constant", bound.tessellation_constant},
            {"t", bound.t},
            {"claimed_lower", bound.claimed_lower()},
            {"kind", "asymptotic"}};
}

Json to_json(const TrialStats& stats) {
    Json j{{"variant", static_cast<int>(stats.variant)},
           {"variant_name", to_string(stats.variant)},
           {"trials", stats.trials},
           {"completed", stats.completed},
           {"stalled", stats.stalled},
           {"mean", stats.mean},
           {"stddev", stats.stddev},
           {"ci95", stats.ci95},
           {"p05", stats.p05},
           {"p50", stats.p50},
           {"p95", stats.p95},
           {"min", stats.min_sample},
           {"max", stats.max_sample},
           {"quantiles_approximate", stats.samples_subsampled}};
    j["b_reference"] = stats.b_reference ? Json(*stats.b_reference) : Json(nullptr);
    j["cost"] = stats.cost ? Json(*stats.cost) : Json(nullptr);
    return j;
}

Json to_json(const GnpPrediction& pr) {
    Json j{{"model", "gnp"},
           {"n", pr.n},
           {"p", pr.p},
           {"d", pr.d},
           {"eps", pr.eps},
           {"delta", pr.delta},
           {"omega", pr.omega},
           {"i", pr.i},
           {"case", to_string(pr.kind)},
           {"predicted", pr.predicted},
           {"threshold", pr.threshold},
           {"threshold_margin", pr.threshold_margin},
           {"clause_value", pr.clause_value},
           {"clause_low", pr.clause_low},
           {"clause_high", pr.clause_high},
           {"dense_upper_p", pr.dense_upper_p},
           {"dense_lower_p", pr.dense_lower_p}};
    return j;
}

Json to_json(const GridPrediction& pr) {
    return {{"model", "grid"},         {"m", pr.m},   {"n", pr.n},        {"leading", pr.leading},
            {"regime", pr.wide ? "wide" : "narrow"}, {"k0", pr.k0}, {"lower", pr.lower}};
}

Json to_json(const PathDrunkPrediction& pr) {
    Json j{{"model", "path-drunk"}, {"n", pr.n}, {"variant", static_cast<int>(pr.variant)}};
    j["point"] = pr.point ? Json(*pr.point) : Json(nullptr);
    j["low"] = pr.low;
    j["high"] = pr.high;
    return j;
}

Json to_json(const NeighborhoodProfile& profile) {
    Json rows = Json::array();
    for (const auto& r : profile.rows) {
        rows.push_back({{"j", r.j},
                        {"mean_ratio_d", r.mean_ratio_d},
                        {"mean_ratio_s", r.mean_ratio_s},
                        {"mean_sphere_ratio_d", r.mean_sphere_ratio_d},
                        {"min_ratio_d", finite_or_null(r.min_ratio_d)},
                        {"max_ratio_d", r.max_ratio_d},
                        {"truncated", r.truncated}});
    }
    return {{"d_nominal", profile.d_nominal},
            {"sample", profile.sample},
            {"truncated", profile.truncated},
            {"rows", rows}};
}

}  // namespace burnlab
