#pragma once

#include <json.hpp>

#include "burnlab/burn.hpp"
#include "burnlab/drunk.hpp"
#include "burnlab/predictors.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

// JSON views of result records for the CLI and the sweep runner. Distances
// and rounds equal to kInfinite print as the string "inf".
namespace burnlab {

using Json = nlohmann::ordered_json;

Json to_json(const BurnSchedule& schedule);
Json to_json(const BurnTrace& trace, bool with_rounds = false);
Json to_json(const BoundCertificate& cert);
Json to_json(const SolveResult& result);
Json to_json(const GridPlan& plan);
Json to_json(const CellPlan& plan);
Json to_json(const RggBound& bound);
Json to_json(const TrialStats& stats);
Json to_json(const GnpPrediction& pr);
Json to_json(const GridPrediction& pr);
Json to_json(const PathDrunkPrediction& pr);
Json to_json(const NeighborhoodProfile& profile);

/// Inverse of to_json(BoundCertificate); throws Error on missing fields.
BoundCertificate certificate_from_json(const Json& j);

}  // namespace burnlab
