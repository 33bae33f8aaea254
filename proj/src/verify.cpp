#include "tadic/verify.hpp"

namespace tadic {

CandidateReport verify_candidate(const BiPoly& f) {
  CandidateReport rep;
  rep.normalized = f.normalize_minpoly();
  const BiPoly& g = rep.normalized;
  if (g.deg_x() < 1) throw error("verify: constant in x");

  rep.rational_root = has_rational_root(g);
  rep.squarefree = g.gcd_and_squarefree().second;

  std::vector<TruncSeries> roots;
  if (rep.squarefree) {
    rep.profile = split_profile_with_roots(g, -1, roots);
    if (rep.profile.splits) {
      Factorization fact = recombine_irreducible(g, roots);
      rep.irreducible = fact.is_irreducible();
      if (!rep.irreducible)
        for (auto& [p, m] : fact.factors) {
          (void)m;
          rep.factors.push_back(p.to_str());
        }
    }
  }

  rep.height = height_minpoly(g);
  if (rep.squarefree) {
    rep.height_by_places = height_local(g);
    rep.heights_agree = rep.height == rep.height_by_places;
  }

  rep.criteria = check_min_height_criteria(g);
  if (rep.criteria.pass) rep.gonality = rep.criteria.r;
  rep.certified_minimal = rep.criteria.pass && rep.profile.splits && rep.irreducible &&
                          !rep.rational_root.has_value();
  return rep;
}

}  // namespace tadic
