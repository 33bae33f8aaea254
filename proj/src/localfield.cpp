#include "tadic/localfield.hpp"

#include <algorithm>

namespace tadic {

namespace {

void require_same_field(const FqPtr& a, const FqPtr& b) {
  if (!a || !b || !a->same(*b)) throw error("field mismatch");
}

long cap_end(long e) { return std::min(e, val_infinite); }

struct retry_precision {};

}  // namespace

TruncSeries TruncSeries::exact(const UniPoly& p, long shift) {
  return TruncSeries(p.field(), shift, p.coeffs(), val_infinite);
}

TruncSeries TruncSeries::make(const FqPtr& F, long val, std::vector<Elem> coeffs, long end) {
  if (val + long(coeffs.size()) > end) throw error("TruncSeries::make: window exceeds precision");
  return TruncSeries(F, val, std::move(coeffs), end);
}

Elem TruncSeries::coeff(long e) const {
  if (e >= end_) throw error("series coefficient beyond known precision");
  if (e < lo_ || e >= lo_ + long(c_.size())) return 0;
  return c_[e - lo_];
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same_field(F_, o.F_);
  long end = std::min(end_, o.end_);
  long lo = std::min({val(), o.val(), end});
  // stored coefficients end here; everything beyond is known zero
  long hi = std::max(known_zero() ? lo : lo_ + long(c_.size()),
                     o.known_zero() ? lo : o.lo_ + long(o.c_.size()));
  hi = std::max(lo, std::min(hi, end));
  std::vector<Elem> c(hi - lo, 0);
  for (long e = lo; e < hi; ++e) c[e - lo] = F_->add(coeff(e), o.coeff(e));
  return TruncSeries(F_, lo, std::move(c), end);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& a : r.c_) a = F_->neg(a);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same_field(F_, o.F_);
  long end = cap_end(std::min(val() + o.end_, o.val() + end_));
  if (known_zero() || o.known_zero()) return TruncSeries(F_, end, {}, end);
  long lo = std::min(val() + o.val(), end);
  long hi = std::max(lo, std::min(end, lo + long(c_.size() + o.c_.size()) - 1));
  std::vector<Elem> c(hi - lo, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long ea = lo_ + long(i);
    for (size_t j = 0; j < o.c_.size(); ++j) {
      long e = ea + o.lo_ + long(j);
      if (e >= hi) break;
      c[e - lo] = F_->add(c[e - lo], F_->mul(c_[i], o.c_[j]));
    }
  }
  return TruncSeries(F_, lo, std::move(c), end);
}

TruncSeries TruncSeries::inv() const {
  if (known_zero()) throw error("inversion of a series that is zero to precision");
  long rel = end_ - lo_;
  if (rel > (1L << 20)) throw error("inversion needs a finite precision context");
  std::vector<Elem> d(rel, 0);
  Elem c0i = F_->inv(c_[0]);
  d[0] = c0i;
  for (long k = 1; k < rel; ++k) {
    Elem acc = 0;
    for (long j = 1; j <= k && j < long(c_.size()); ++j)
      acc = F_->add(acc, F_->mul(c_[j], d[k - j]));
    d[k] = F_->neg(F_->mul(c0i, acc));
  }
  return TruncSeries(F_, -lo_, std::move(d), cap_end(-lo_ + rel));
}

TruncSeries TruncSeries::scaled(Elem a) const {
  if (a == 0) return TruncSeries(F_, end_, {}, end_);
  TruncSeries r = *this;
  for (auto& x : r.c_) x = F_->mul(x, a);
  return r;
}

TruncSeries TruncSeries::shifted(long k) const {
  return TruncSeries(F_, lo_ + k, c_, cap_end(end_ + k));
}

TruncSeries TruncSeries::truncated(long end) const {
  if (end >= end_) return *this;
  std::vector<Elem> c;
  if (end > lo_) {
    c = c_;
    if (long(c.size()) > end - lo_) c.resize(end - lo_);
  }
  return TruncSeries(F_, std::min(lo_, end), std::move(c), end);
}

TruncSeries TruncSeries::as_exact() const { return TruncSeries(F_, lo_, c_, val_infinite); }

std::string TruncSeries::to_str() const {
  if (known_zero()) {
    if (end_ >= val_infinite) return "0";
    return "O(T^(" + std::to_string(end_) + "))";
  }
  std::string inner;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!inner.empty()) inner += " + ";
    std::string piece;
    if (c_[i] != 1 || i == 0) piece = F_->to_str(c_[i]);
    if (i >= 1) {
      if (!piece.empty()) piece += '*';
      piece += 'T';
      if (i > 1) piece += "^" + std::to_string(i);
    }
    inner += piece;
  }
  std::string head = "T^" + std::to_string(lo_) + "*(" + inner + ")";
  if (end_ >= val_infinite) return head;
  return head + " + O(T^(" + std::to_string(end_) + "))";
}

TruncSeries eval_series(const BiPoly& f, const TruncSeries& x) {
  const FqPtr& F = f.field();
  TruncSeries r = TruncSeries::make(F, 0, {}, val_infinite);
  for (long i = f.deg_x(); i >= 0; --i) {
    TruncSeries c = TruncSeries::exact(f.coeff(i));
    r = r * x + c;
  }
  return r;
}

TruncSeries eval_series(const UniPoly& f, const TruncSeries& x) {
  return eval_series(BiPoly::from_uni(f), x);
}

// --------------------------------------------------------------- roots

namespace {

// residue of f mod T as a univariate polynomial in x
UniPoly reduce_mod_T(const BiPoly& f) {
  std::vector<Elem> c(f.deg_x() + 1, 0);
  for (long i = 0; i <= f.deg_x(); ++i) c[i] = f.coeff(i).coeff(0);
  return UniPoly(f.field(), std::move(c));
}

long root_multiplicity(const UniPoly& fbar, Elem u) {
  UniPoly h = fbar;
  const FqPtr& F = fbar.field();
  UniPoly lin(F, {F->neg(u), 1});
  long m = 0;
  while (!h.is_zero() && h.eval(u) == 0) {
    h = *h.exact_div(lin);
    ++m;
  }
  return m;
}

// simple residue root: Newton iteration from the constant u
TruncSeries hensel_simple(const BiPoly& f, Elem u, long N) {
  const FqPtr& F = f.field();
  BiPoly fp = f.derivative_x();
  TruncSeries cur = TruncSeries::make(F, 0, {u}, 1);
  long e = 1;
  while (e < N) {
    long e2 = std::min(2 * e, N);
    TruncSeries X = cur.as_exact().truncated(e2);
    TruncSeries v = eval_series(f, X);
    if (v.known_zero() && v.end() >= e2) {
      cur = X;
      e = e2;
      continue;
    }
    TruncSeries w = eval_series(fp, X).truncated(e2);
    if (w.known_zero() || w.val() != 0) throw error("hensel: derivative is not a unit");
    X = X - v * w.inv();
    cur = X.truncated(e2);
    e = e2;
  }
  return cur.as_exact().truncated(N);
}

// all roots with ord >= 0 of a T-primitive f, known through T^(N-1)
void roots_nonneg(const BiPoly& f, long N, bool only_zero_residue, long depth,
                  std::vector<TruncSeries>& out) {
  if (N < 1 || depth > 4096) throw retry_precision{};
  const FqPtr& F = f.field();
  UniPoly fbar = reduce_mod_T(f);
  for (Elem u = 0; u < F->q(); ++u) {
    if (only_zero_residue && u != 0) break;
    long m = root_multiplicity(fbar, u);
    if (m == 0) continue;
    if (m == 1) {
      out.push_back(hensel_simple(f, u, N));
      continue;
    }
    // recurse on f(u + T x)
    BiPoly sub(F, {UniPoly::constant(F, u), UniPoly::var(F)});
    BiPoly g = f.compose_x(sub).primitive_T();
    std::vector<TruncSeries> inner;
    roots_nonneg(g, N - 1, false, depth + 1, inner);
    for (auto& gamma : inner) {
      TruncSeries r = gamma.shifted(1);
      if (u != 0) r = r + TruncSeries::make(F, 0, {u}, N);
      out.push_back(r.truncated(N));
    }
  }
}

}  // namespace

long default_split_prec(const BiPoly& f) { return 4 * (std::max(0L, f.deg_T()) + f.deg_x()) + 8; }

std::vector<std::pair<TruncSeries, bool>> roots_in_laurent(const BiPoly& f, long prec) {
  if (f.deg_x() < 1) throw error("roots_in_laurent: constant in x");
  if (prec < 1) throw error("roots_in_laurent: precision must be positive");
  if (!f.gcd_and_squarefree().second) throw error("roots_in_laurent: input is not squarefree in x");
  BiPoly fp = f.primitive_T();
  long d = f.deg_x();
  long nT = std::max(0L, f.deg_T());

  long N = prec + 2 * nT + d + 8;
  constexpr long prec_cap = 4096;
  while (true) {
    if (N > prec_cap) throw error("roots_in_laurent: precision cap exceeded");
    try {
      std::vector<TruncSeries> found;
      roots_nonneg(fp, N, false, 0, found);
      BiPoly rev = fp.reverse_x().primitive_T();
      std::vector<TruncSeries> atinf;
      if (rev.deg_x() >= 1) roots_nonneg(rev, N, true, 0, atinf);
      for (auto& gamma : atinf) {
        if (gamma.known_zero() || gamma.val() < 1) continue;
        found.push_back(gamma.inv());
      }

      // pairwise separation at the working precision
      for (size_t i = 0; i < found.size(); ++i)
        for (size_t j = i + 1; j < found.size(); ++j) {
          TruncSeries diff = found[i] - found[j];
          if (diff.known_zero()) throw retry_precision{};
        }

      // truncate and certify by exact substitution of the truncation
      std::vector<std::pair<TruncSeries, bool>> out;
      for (auto& rho : found) {
        long v = rho.known_zero() ? 0 : rho.val();
        long pad = (d + 1) * std::max(0L, -v);
        long end = v + prec + pad;
        if (end > rho.end()) throw retry_precision{};
        TruncSeries trunc = rho.truncated(end);
        TruncSeries value = eval_series(f, trunc.as_exact());
        long ord = value.known_zero() ? value.end() : value.val();
        if (ord < prec) throw retry_precision{};
        out.push_back({trunc, true});
      }
      return out;
    } catch (const retry_precision&) {
      N *= 2;
    }
  }
}

SplitProfile split_profile_with_roots(const BiPoly& f, long prec,
                                      std::vector<TruncSeries>& roots_out) {
  if (prec <= 0) prec = default_split_prec(f);
  auto roots = roots_in_laurent(f, prec);
  SplitProfile sp;
  roots_out.clear();
  for (auto& [rho, simple] : roots) {
    (void)simple;
    roots_out.push_back(rho);
    long v = rho.known_zero() ? val_infinite : rho.val();
    if (v > 0)
      ++sp.r;
    else if (v == 0)
      ++sp.ell;
    else
      ++sp.s;
  }
  sp.total_found = long(roots.size());
  sp.splits = sp.total_found == f.deg_x();
  return sp;
}

SplitProfile split_profile(const BiPoly& f, long prec) {
  std::vector<TruncSeries> ignore;
  return split_profile_with_roots(f, prec, ignore);
}

TruncSeries hensel_refine(const BiPoly& f, const TruncSeries& root, long target_end) {
  BiPoly fp = f.derivative_x();
  TruncSeries X = root.as_exact();
  for (int iter = 0; iter < 128; ++iter) {
    TruncSeries v = eval_series(f, X);
    if (v.known_zero()) return X.truncated(target_end);
    TruncSeries w = eval_series(fp, X);
    long vo = v.val();
    long wo = w.known_zero() ? val_infinite : w.val();
    if (vo <= 2 * wo) throw error("hensel_refine: Newton criterion fails");
    long good = vo - wo;  // digits of X that already agree with the root
    if (good >= target_end) return X.truncated(target_end);
    long e2 = std::min(2 * good, target_end);
    long rel = e2 - good + 2;
    TruncSeries corr = v.truncated(vo + rel) * w.truncated(wo + rel).inv();
    X = (X - corr).as_exact();
  }
  throw error("hensel_refine: did not converge");
}

}  // namespace tadic
