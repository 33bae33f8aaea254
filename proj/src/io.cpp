#include "tadic/io.hpp"

#include <sstream>

namespace tadic {

using nlohmann::json;

json to_json(const SplitProfile& sp) {
  return json{{"r", sp.r},
              {"ell", sp.ell},
              {"s", sp.s},
              {"total_found", sp.total_found},
              {"splits", sp.splits}};
}

json to_json(const CriteriaReport& cr) {
  return json{{"degree_relation", cr.degree_relation},
              {"newton_polygons", cr.newton_polygons},
              {"leading_coeff", cr.leading_coeff},
              {"shifted_constants", cr.shifted_constants},
              {"well_distributed", cr.well_distributed},
              {"ord_one_roots", cr.ord_one_roots},
              {"r", cr.r},
              {"pass", cr.pass}};
}

json to_json(const NewtonPolygon& np) {
  json verts = json::array();
  for (auto& [i, v] : np.vertices) verts.push_back(json::array({i, v}));
  json slopes = json::array();
  for (auto& s : np.slopes)
    slopes.push_back(json{{"num", s.num}, {"den", s.den}, {"length", s.length}});
  return json{{"vertices", verts}, {"slopes", slopes}};
}

json to_json(const CandidateReport& rep) {
  json j{{"poly", rep.normalized.to_str()},
         {"rational_root",
          rep.rational_root ? json(rep.normalized.field()->to_str(*rep.rational_root)) : json()},
         {"squarefree", rep.squarefree},
         {"profile", to_json(rep.profile)},
         {"irreducible", rep.irreducible},
         {"height", rep.height.to_str()},
         {"criteria", to_json(rep.criteria)},
         {"certified_minimal", rep.certified_minimal}};
  if (rep.squarefree) {
    j["height_by_places"] = rep.height_by_places.to_str();
    j["heights_agree"] = rep.heights_agree;
  }
  if (!rep.factors.empty()) j["factors"] = rep.factors;
  if (rep.certified_minimal) j["gonality"] = rep.gonality;
  return j;
}

json to_json(const ConstructionResult& res) {
  json checks = json::object();
  for (auto& [name, ok] : res.checks) checks[name] = ok;
  json j{{"family", family_name(res.family)},
         {"q", res.q},
         {"param", res.param},
         {"poly", res.poly.to_str()},
         {"height", res.height.to_str()},
         {"expected_height", res.expected_height.to_str()},
         {"verified", checks},
         {"all_verified", res.verified}};
  if (!res.note.empty()) j["note"] = res.note;
  return j;
}

json to_json(const SearchReport& rep) {
  return json{{"q", rep.q},
              {"n", rep.n},
              {"shard", rep.shard},
              {"total_shards", rep.total_shards},
              {"tested", rep.tested},
              {"passed_newton", rep.passed_newton},
              {"passed_rootless", rep.passed_rootless},
              {"passed_squarefree", rep.passed_squarefree},
              {"split", rep.split_count},
              {"irreducible", rep.irreducible_count},
              {"hits", rep.hits},
              {"seed_or_space", rep.seed_or_space},
              {"pipeline", rep.pipeline},
              {"wall_time_s", rep.wall_time_s}};
}

std::string render_text(const CandidateReport& rep) {
  std::ostringstream os;
  os << "polynomial     " << rep.normalized.to_str() << "\n";
  os << "rational root  "
     << (rep.rational_root ? rep.normalized.field()->to_str(*rep.rational_root) : "none") << "\n";
  os << "squarefree     " << (rep.squarefree ? "yes" : "no") << "\n";
  os << "split profile  (r, ell, s) = (" << rep.profile.r << ", " << rep.profile.ell << ", "
     << rep.profile.s << "), found " << rep.profile.total_found << ", splits "
     << (rep.profile.splits ? "yes" : "no") << "\n";
  os << "irreducible    " << (rep.irreducible ? "yes" : "no");
  if (!rep.factors.empty()) {
    os << "  [";
    for (size_t i = 0; i < rep.factors.size(); ++i) os << (i ? " | " : "") << rep.factors[i];
    os << "]";
  }
  os << "\n";
  os << "height         " << rep.height.to_str();
  if (rep.squarefree)
    os << "  (by places: " << rep.height_by_places.to_str()
       << (rep.heights_agree ? ", agree" : ", DISAGREE") << ")";
  os << "\n";
  const CriteriaReport& c = rep.criteria;
  os << "criteria       degree=" << c.degree_relation << " polygons=" << c.newton_polygons
     << " leading=" << c.leading_coeff << " constants=" << c.shifted_constants
     << " distribution=" << c.well_distributed << " ord1=" << c.ord_one_roots << " r=" << c.r
     << " pass=" << c.pass << "\n";
  os << "verdict        " << (rep.certified_minimal ? "certified minimal-height totally T-adic"
                                                    : "not certified")
     << "\n";
  return os.str();
}

std::string render_text(const ConstructionResult& res) {
  std::ostringstream os;
  os << "family    " << family_name(res.family) << " (q = " << res.q;
  if (res.param) os << ", param " << res.param;
  os << ")\n";
  os << "poly      " << res.poly.to_str() << "\n";
  os << "height    " << res.height.to_str() << " (expected " << res.expected_height.to_str()
     << ")\n";
  for (auto& [name, ok] : res.checks)
    os << "  [" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
  if (!res.note.empty()) os << "note      " << res.note << "\n";
  os << (res.verified ? "all advertised properties verified" : "VERIFICATION FAILED") << "\n";
  return os.str();
}

std::string render_text(const SearchReport& rep) {
  std::ostringstream os;
  os << "search q=" << rep.q << " n=" << rep.n << " shard " << rep.shard << "/"
     << rep.total_shards << " (" << rep.seed_or_space << ")\n";
  os << "tested " << rep.tested << ", newton " << rep.passed_newton << ", rootless "
     << rep.passed_rootless << ", squarefree " << rep.passed_squarefree << ", split "
     << rep.split_count << ", irreducible " << rep.irreducible_count << "\n";
  os << "hits (" << rep.hits.size() << "):\n";
  for (auto& h : rep.hits) os << "  " << h << "\n";
  os << "wall time " << rep.wall_time_s << " s\n";
  return os.str();
}

}  // namespace tadic
