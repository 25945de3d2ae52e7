#pragma once

#include <string>

#include <json.hpp>

#include "ncat/cohomology.hpp"
#include "ncat/factorisation.hpp"

namespace ncat {

/// Nested {"vertex": [i, j], "tag": [s, t]?, "label": <category>, "children": [...]}.
nlohmann::json tree_to_json(const FactorisationTree& t);
/// One line per vertex, indented by depth.
std::string tree_to_text(const FactorisationTree& t);
std::string tree_to_dot(const FactorisationTree& t, const std::string& graph_name = "tree");

/// Nested {"vertex": [i, j], "degree": n, "group": "...", "tag"?, "children": [...]}.
nlohmann::json cohomology_to_json(const CohomologyTree& t, int degree);
std::string cohomology_to_text(const CohomologyTree& t);
std::string cohomology_to_dot(const CohomologyTree& t);

/// "dimension 2, cells 2/4/8" style summary.
std::string category_summary(const StrictNCategory& c);

}  // namespace ncat
