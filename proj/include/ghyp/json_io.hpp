#pragma once

#include <json.hpp>

#include "ghyp/count.hpp"
#include "ghyp/embedding.hpp"
#include "ghyp/graph.hpp"
#include "ghyp/irred.hpp"
#include "ghyp/motive.hpp"
#include "ghyp/multipoly.hpp"

namespace ghyp {

// {"vertex_count": int, "edges": [{"id": int, "tail": int, "head": int}, ...]}
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

// {"graph": <graph>, "rotation": [[[edge_id, "tail"|"head"], ...] per vertex]}
nlohmann::json rotation_to_json(const RotationSystem& r);
RotationSystem rotation_from_json(const nlohmann::json& j);

// {"n": int, "terms": [{"vars": [int, ...], "coeff": int}, ...]}
nlohmann::json poly_to_json(const SubsetPoly& p);
SubsetPoly poly_from_json(const nlohmann::json& j);

// Ascending coefficient array in the torus basis.
nlohmann::json class_to_json(const ClassPoly& c);
ClassPoly class_from_json(const nlohmann::json& j);

nlohmann::json strata_to_json(const StrataCount& sc);
nlohmann::json verify_report_to_json(const VerifyClassReport& rep);
nlohmann::json cremona_report_to_json(const CremonaReport& rep);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace ghyp
