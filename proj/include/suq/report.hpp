#pragma once

#include <json.hpp>

#include "suq/diagram.hpp"
#include "suq/growth.hpp"
#include "suq/operators.hpp"
#include "suq/sweep.hpp"
#include "suq/witness.hpp"

namespace suq {

using Json = nlohmann::ordered_json;

Json decomposition_json(const Decomposition& d);
Json axis_json(const AxisConstants& ax, int t);
Json point_json(const CoordMap& map, const PointVec& p);  // sparse [[k,i,v],...]
Json move_json(const Diagram& g, const Move& p);
Json ladder_json(const CoordMap& map, const Ladder& l);
Json table_json(const SweepTable& t);
Json curve_json(const std::vector<ProbePoint>& curve);
Json loss_json(const CoordMap& map, const BoundaryLoss& loss);
Json state_json(const CoordMap& map, const StateVector& v);
Json verdict_json(const VerdictReport& rep, const CoordMap* map);

}  // namespace suq
