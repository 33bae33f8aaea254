#pragma once

#include "tadic/localfield.hpp"

namespace tadic {

// Exact nonnegative rational, reduced.
struct HeightValue {
  long long num = 0;
  long long den = 1;

  static HeightValue of(long long n, long long d);
  bool operator==(const HeightValue&) const = default;
  bool operator<(const HeightValue& o) const { return num * o.den < o.num * den; }
  bool operator<=(const HeightValue& o) const { return num * o.den <= o.num * den; }
  HeightValue operator+(const HeightValue& o) const { return of(num * o.den + o.num * den, den * o.den); }
  std::string to_str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// deg_T / deg_x of the normalized polynomial.
HeightValue height_minpoly(const BiPoly& f);

// Height as a sum of local Newton-polygon masses over the places dividing
// the leading coefficient plus the place at infinity.  Equals
// height_minpoly for irreducible f.
HeightValue height_local(const BiPoly& f);

// The minimal-height tests: degree relation, shifted Newton polygons,
// leading and shifted constant coefficients, and the root distribution
// over P^1(F_q).  Never throws; failed machinery shows up as failed flags.
struct CriteriaReport {
  bool degree_relation = false;
  bool newton_polygons = false;
  bool leading_coeff = false;
  bool shifted_constants = false;
  bool well_distributed = false;
  bool ord_one_roots = false;
  long r = 0;
  bool pass = false;
};

CriteriaReport check_min_height_criteria(const BiPoly& f, long r = -1);

struct GenusBounds {
  double lower_real = 0;   // (n-1)(q+1)/(2 sqrt q)
  long lower = 0;          // its ceiling
  long upper = 0;
  std::string lower_expr;  // exact square-root expression
};

GenusBounds genus_bounds(std::uint64_t q, long n);

enum class CompositeOp { sum, product };

// Polynomial whose roots are the pairwise sums or products of the roots
// of f and g, via a resultant in an auxiliary variable; normalized.
BiPoly composite_poly(const BiPoly& f, const BiPoly& g, CompositeOp op);

}  // namespace tadic
