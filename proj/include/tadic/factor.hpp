#pragma once

#include "tadic/localfield.hpp"

namespace tadic {

struct Factorization {
  std::vector<std::pair<BiPoly, int>> factors;  // normalized, multiplicity 1 here
  std::vector<bool> certified_irreducible;
  bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

// First u in F_q with f(u) identically zero in T.
std::optional<Elem> has_rational_root(const BiPoly& f);

// Irreducibility over F_q(T) for an f that splits completely, by subset
// recombination of its series roots.  Subsets are tried by increasing
// size; a candidate factor is accepted only after exact division, so
// every returned factor is certified.  The roots list must cover all
// deg_x(f) roots; precision below deg_T + deg_x + 2 triggers an internal
// recomputation at higher precision.
Factorization recombine_irreducible(const BiPoly& f, std::vector<TruncSeries> roots);

}  // namespace tadic
