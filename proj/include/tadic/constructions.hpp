#pragma once

#include "tadic/verify.hpp"

namespace tadic {

enum class Family {
  gonality_one,
  cyclic,
  char2_hyperelliptic,
  phi_tower,
  psi_tower,
  integral_base,
  unit_base,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// One generated polynomial together with the verification of every
// property advertised for its family.
struct ConstructionResult {
  Family family;
  std::uint64_t q = 0;
  long param = 0;  // n or j; 0 when the family takes none
  BiPoly poly;
  HeightValue expected_height;
  HeightValue height;
  std::vector<std::pair<std::string, bool>> checks;
  bool verified = false;  // all checks passed
  std::string note;

  void add(const std::string& name, bool ok) {
    checks.push_back({name, ok});
    if (!ok) verified = false;
  }
};

ConstructionResult gonality_one(const FqPtr& F);
ConstructionResult cyclic_family(const FqPtr& F, long n);
bool cyclic_smoothness(const FqPtr& F, long n);
ConstructionResult char2_hyperelliptic(const FqPtr& F);
ConstructionResult phi_tower(const FqPtr& F, long j);
ConstructionResult psi_tower(const FqPtr& F, long n);
std::pair<ConstructionResult, ConstructionResult> base_examples(const FqPtr& F);

constexpr long tower_degree_budget = 4096;

}  // namespace tadic
