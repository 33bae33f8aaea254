#pragma once

#include <json.hpp>

#include "tadic/constructions.hpp"
#include "tadic/search.hpp"

namespace tadic {

nlohmann::json to_json(const SplitProfile& sp);
nlohmann::json to_json(const CriteriaReport& cr);
nlohmann::json to_json(const NewtonPolygon& np);
nlohmann::json to_json(const CandidateReport& rep);
nlohmann::json to_json(const ConstructionResult& res);
nlohmann::json to_json(const SearchReport& rep);

std::string render_text(const CandidateReport& rep);
std::string render_text(const ConstructionResult& res);
std::string render_text(const SearchReport& rep);

}  // namespace tadic
