#pragma once

#include "tadic/factor.hpp"
#include "tadic/heights.hpp"

namespace tadic {

// Verdict bundle for one polynomial: split profile, irreducibility,
// height, minimal-height criteria.
struct CandidateReport {
  BiPoly normalized;
  std::optional<Elem> rational_root;
  bool squarefree = false;
  SplitProfile profile;
  bool irreducible = false;
  std::vector<std::string> factors;  // canonical strings when reducible
  HeightValue height;
  HeightValue height_by_places;
  bool heights_agree = false;
  CriteriaReport criteria;
  long gonality = 0;  // r, when the criteria pass
  bool certified_minimal = false;
};

// Full pipeline: normalize, rational-root scan, squarefree test, split
// profile, recombination, heights, minimal-height criteria.
CandidateReport verify_candidate(const BiPoly& f);

}  // namespace tadic
