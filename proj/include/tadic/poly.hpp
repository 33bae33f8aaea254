#pragma once

#include <optional>
#include <utility>

#include "tadic/gf.hpp"

namespace tadic {

// Dense univariate polynomial over F_q, coefficients lowest degree first,
// trimmed so the leading coefficient is nonzero unless the polynomial is 0.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(FqPtr F) : F_(std::move(F)) {}
  UniPoly(FqPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

  static UniPoly zero(const FqPtr& F) { return UniPoly(F); }
  static UniPoly constant(const FqPtr& F, Elem a);
  static UniPoly monomial(const FqPtr& F, Elem a, unsigned d);
  static UniPoly var(const FqPtr& F) { return monomial(F, 1, 1); }

  const FqPtr& field() const { return F_; }
  long deg() const { return long(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Elem coeff(long i) const { return (i >= 0 && i < long(c_.size())) ? c_[i] : 0; }
  Elem lc() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  UniPoly scaled(Elem a) const;
  UniPoly shifted(long k) const;  // multiply by T^k, k >= 0
  UniPoly pow(unsigned long e) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  // Quotient and remainder; exact over the coefficient field.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  std::optional<UniPoly> exact_div(const UniPoly& d) const;

  static UniPoly gcd(UniPoly a, UniPoly b);  // monic

  Elem eval(Elem x) const;

  // Multiplicity of T in this polynomial; -1 for the zero polynomial.
  long trailing() const;
  // Multiplicity of the irreducible pi; -1 for the zero polynomial.
  long ord_at(const UniPoly& pi) const;

  std::string to_str(char var = 'T') const;

private:
  FqPtr F_;
  std::vector<Elem> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

// Deterministic complete factorization over F_q: distinct-degree splitting,
// then exhaustive scan of the monic polynomials in each degree class.
// Returns (monic irreducible, multiplicity) sorted by degree then index.
std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& a);

bool is_irreducible(const UniPoly& f);

// Least monic irreducible of degree d over F_q, in index order.
UniPoly irreducible_poly(const FqPtr& F, unsigned d);

// Element of F_q[T][x]: a polynomial in x whose coefficients are
// polynomials in T.  Coefficient i is the coefficient of x^i.
class BiPoly {
public:
  BiPoly() = default;
  explicit BiPoly(FqPtr F) : F_(std::move(F)) {}
  BiPoly(FqPtr F, std::vector<UniPoly> xc) : F_(std::move(F)), xc_(std::move(xc)) { trim(); }

  static BiPoly zero(const FqPtr& F) { return BiPoly(F); }
  static BiPoly constant(const FqPtr& F, Elem a);
  static BiPoly from_uni(const UniPoly& a);             // polynomial in T
  static BiPoly term(const UniPoly& a, unsigned xdeg);  // a(T) * x^xdeg
  static BiPoly x(const FqPtr& F) { return term(UniPoly::constant(F, 1), 1); }

  const FqPtr& field() const { return F_; }
  long deg_x() const { return long(xc_.size()) - 1; }
  long deg_T() const;
  bool is_zero() const { return xc_.empty(); }
  UniPoly coeff(long i) const;
  const std::vector<UniPoly>& coeffs() const { return xc_; }
  UniPoly lc_x() const { return coeff(deg_x()); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const { return xc_ == o.xc_; }
  bool operator!=(const BiPoly& o) const { return xc_ != o.xc_; }

  BiPoly scaled(Elem a) const;
  BiPoly scaled_uni(const UniPoly& a) const;
  BiPoly pow(unsigned long e) const;
  BiPoly derivative_x() const;

  BiPoly compose_x(const BiPoly& g) const;  // substitute g for x
  BiPoly shift_x(Elem u) const;             // f(x + u)
  BiPoly reverse_x() const;                 // x^deg f(1/x)
  UniPoly eval_x(Elem u) const;             // f(u), a polynomial in T
  BiPoly swap_vars() const;                 // same polynomial read in F_q[x][T]
  BiPoly truncate_T(long n) const;          // drop all T-degrees > n

  // gcd of the x-coefficients, monic; zero polynomial gives 0.
  UniPoly content_T() const;
  BiPoly primitive_T() const;

  // Content removal plus unit scaling so the leading x-coefficient is monic.
  BiPoly normalize_minpoly() const;

  // gcd in x over F_q(T), computed by a primitive pseudo-remainder
  // sequence; result is normalized.
  static BiPoly gcd_x(BiPoly a, BiPoly b);

  // (gcd with df/dx, squarefree flag); squarefree <=> the gcd is constant in x.
  std::pair<BiPoly, bool> gcd_and_squarefree() const;

  std::optional<BiPoly> exact_div(const BiPoly& d) const;

  // Cleared substitution x = num/den: returns f(num/den) * den^deg_x and
  // the T-adic order of f(num/den) itself.
  std::pair<UniPoly, long> substitute_rational(const UniPoly& num, const UniPoly& den) const;

  std::string to_str() const;

private:
  FqPtr F_;
  std::vector<UniPoly> xc_;
  void trim() {
    while (!xc_.empty() && xc_.back().is_zero()) xc_.pop_back();
  }
};

BiPoly parse_bipoly(const FqPtr& F, const std::string& text);

// Fractional linear substitution x -> (a x + b) / (c x + d), ad - bc != 0,
// stored projectively with the first nonzero entry scaled to 1.
class Mobius {
public:
  Mobius(FqPtr F, Elem a, Elem b, Elem c, Elem d);
  static Mobius identity(const FqPtr& F) { return Mobius(F, 1, 0, 0, 1); }
  static std::vector<Mobius> all(const FqPtr& F);  // the whole of PGL_2(F_q)

  const FqPtr& field() const { return F_; }
  Elem a() const { return a_; }
  Elem b() const { return b_; }
  Elem c() const { return c_; }
  Elem d() const { return d_; }
  Mobius inverse() const;
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  std::string to_str() const;

private:
  FqPtr F_;
  Elem a_, b_, c_, d_;
};

// Numerator of f((a x + b)/(c x + d)) after clearing (c x + d)^deg_x,
// normalized.  Roots of the result are the preimages under m of the
// roots of f.
BiPoly transform_x(const BiPoly& f, const Mobius& m);

// A place of F_q(T): a monic irreducible pi, or the degree valuation at
// infinity (v(a) = -deg a).
struct Place {
  bool at_infinity = false;
  UniPoly pi;

  static Place ord0(const FqPtr& F) { return Place{false, UniPoly::var(F)}; }
  static Place infinity() { return Place{true, UniPoly()}; }
  static Place at(const UniPoly& pi);

  long value(const UniPoly& a) const;  // valuation; huge for a = 0
};

inline constexpr long val_infinite = 1L << 40;

struct PolygonSlope {
  long num = 0;  // slope = num/den, reduced, den > 0
  long den = 1;
  long length = 0;  // horizontal extent
  bool operator==(const PolygonSlope&) const = default;
};

struct NewtonPolygon {
  std::vector<std::pair<long, long>> vertices;  // (i, v(a_i)), increasing i
  std::vector<PolygonSlope> slopes;             // strictly increasing

  // Total rise of the hull: the mass of the roots of negative valuation,
  // which equals the valuation of the leading coefficient for polynomials
  // with coprime coefficients.
  long pole_mass() const;
  std::string to_str() const;
};

NewtonPolygon newton_polygon(const BiPoly& f, const Place& place);

// Single-segment polygon whose slope has coprime rise and run certifies
// irreducibility over the completion at the place.
bool polygon_certifies_irreducible(const BiPoly& f, const Place& place);

// Resultant with respect to y of two polynomials in y with BiPoly
// coefficients (coefficient i belongs to y^i), by fraction-free
// elimination of the Sylvester matrix.
BiPoly resultant_y(const std::vector<BiPoly>& A, const std::vector<BiPoly>& B);

}  // namespace tadic
