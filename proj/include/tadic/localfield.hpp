#pragma once

#include "tadic/poly.hpp"

namespace tadic {

// Truncated Laurent series over F_q.  Coefficients are known for the
// exponents [end - coeffs.size(), end); everything below is zero and
// everything at end or above is unknown.  A series that is zero to its
// known precision has an empty coefficient vector, and val() == end().
// Exact polynomials carry end() == val_infinite.
class TruncSeries {
public:
  TruncSeries() = default;

  static TruncSeries zero_to(const FqPtr& F, long end) { return TruncSeries(F, end, {}, end); }
  static TruncSeries exact(const UniPoly& p, long shift = 0);  // p * T^shift
  static TruncSeries make(const FqPtr& F, long val, std::vector<Elem> coeffs, long end);

  const FqPtr& field() const { return F_; }
  long end() const { return end_; }
  long val() const { return c_.empty() ? end_ : lo_; }
  bool known_zero() const { return c_.empty(); }
  long prec() const { return end_ - val(); }
  // first exponent past the stored digits; coefficients in [known_hi, end)
  // are zero
  long known_hi() const { return c_.empty() ? lo_ : lo_ + long(c_.size()); }
  Elem coeff(long e) const;  // exponent e, must be below end()
  const std::vector<Elem>& coeffs() const { return c_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries inv() const;
  TruncSeries scaled(Elem a) const;
  TruncSeries shifted(long k) const;      // multiply by T^k
  TruncSeries truncated(long end) const;  // drop knowledge at end and above
  TruncSeries as_exact() const;           // reinterpret known digits as a Laurent polynomial

  bool same_digits(const TruncSeries& o) const { return val() == o.val() && c_ == o.c_; }

  std::string to_str() const;

private:
  TruncSeries(FqPtr F, long lo, std::vector<Elem> c, long end)
      : F_(std::move(F)), lo_(lo), end_(end), c_(std::move(c)) {
    normalize();
  }
  FqPtr F_;
  long lo_ = 0;   // exponent of c_[0]
  long end_ = 0;  // first unknown exponent
  std::vector<Elem> c_;
  void normalize() {
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k) {
      c_.erase(c_.begin(), c_.begin() + k);
      lo_ += long(k);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) lo_ = end_;
  }
};

// f evaluated at a series, with pessimistic precision tracking.
TruncSeries eval_series(const BiPoly& f, const TruncSeries& x);
TruncSeries eval_series(const UniPoly& f, const TruncSeries& x);

// Split behaviour of a squarefree f over F_q((T)): root counts by sign of
// the T-adic order.
struct SplitProfile {
  long r = 0;    // roots with positive order
  long ell = 0;  // order zero
  long s = 0;    // negative order
  long total_found = 0;
  bool splits = false;
};

// Every root of f in F_q((T)), found by residue recursion on integer
// Newton slopes plus Hensel lifting; negative-order roots come from the
// x-reversal.  Roots are truncated to prec coefficients (negative-order
// roots carry extra digits so that re-substitution certifies order
// >= prec).  The flag marks roots certified simple.  Requires f
// squarefree in x.
std::vector<std::pair<TruncSeries, bool>> roots_in_laurent(const BiPoly& f, long prec);

SplitProfile split_profile(const BiPoly& f, long prec = -1);
SplitProfile split_profile_with_roots(const BiPoly& f, long prec,
                                      std::vector<TruncSeries>& roots_out);

// Working precision used when prec is not given explicitly.
long default_split_prec(const BiPoly& f);

// Newton refinement of a certified approximate simple root up to
// target_end known exponents.
TruncSeries hensel_refine(const BiPoly& f, const TruncSeries& root, long target_end);

}  // namespace tadic
