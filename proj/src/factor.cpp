#include "tadic/factor.hpp"

#include <algorithm>

namespace tadic {

std::optional<Elem> has_rational_root(const BiPoly& f) {
  const FqPtr& F = f.field();
  for (Elem u = 0; u < F->q(); ++u)
    if (f.eval_x(u).is_zero()) return u;
  return std::nullopt;
}

namespace {

struct need_more_prec {};

// a cleared coefficient series is acceptable when it looks like a
// polynomial of degree <= bound all the way out to its known precision
bool window_ok(const TruncSeries& s, long bound, long min_confirm) {
  if (s.known_zero()) return s.end() >= min_confirm;
  if (s.val() < 0) return false;
  if (s.end() < std::max(bound + 2, min_confirm)) throw need_more_prec{};
  for (long e = bound + 1; e < std::min(s.end(), s.known_hi()); ++e)
    if (s.coeff(e) != 0) return false;
  return true;
}

UniPoly read_poly(const TruncSeries& s, long bound, const FqPtr& F) {
  std::vector<Elem> c(bound + 1, 0);
  if (!s.known_zero())
    for (long e = std::max(0L, s.val()); e <= bound && e < s.end(); ++e) c[e] = s.coeff(e);
  return UniPoly(F, std::move(c));
}

class Recombiner {
public:
  Recombiner(const FqPtr& F, const std::vector<TruncSeries>& roots, TruncSeries lead, long bound)
      : F_(F),
        roots_(roots),
        lead_(std::move(lead)),
        bound_(bound),
        trace_(TruncSeries::zero_to(F, val_infinite)) {}

  // smallest subset of `alive` whose cleared root product divides frem
  std::optional<std::pair<BiPoly, std::vector<size_t>>> find_factor(
      const BiPoly& frem, const std::vector<size_t>& alive) {
    for (size_t sz = 1; sz <= size_t(frem.deg_x()) / 2; ++sz) {
      chosen_.clear();
      trace_ = TruncSeries::zero_to(F_, val_infinite);
      if (dfs(frem, alive, 0, sz)) return found_;
    }
    return std::nullopt;
  }

private:
  const FqPtr& F_;
  const std::vector<TruncSeries>& roots_;
  TruncSeries lead_;
  long bound_;
  TruncSeries trace_;
  std::vector<size_t> chosen_;
  std::optional<std::pair<BiPoly, std::vector<size_t>>> found_;

  bool dfs(const BiPoly& frem, const std::vector<size_t>& alive, size_t start, size_t need) {
    if (need == 0) {
      if (!window_ok(lead_ * trace_, bound_, bound_ + 2)) return false;
      return subset_check(frem);
    }
    for (size_t i = start; i < alive.size() && alive.size() - i >= need; ++i) {
      size_t idx = alive[i];
      trace_ = trace_ + roots_[idx];
      chosen_.push_back(idx);
      if (dfs(frem, alive, i + 1, need - 1)) return true;
      chosen_.pop_back();
      trace_ = trace_ - roots_[idx];
    }
    return false;
  }

  bool subset_check(const BiPoly& frem) {
    // monic product over the chosen roots, then cleared by the leading
    // coefficient so true factors become polynomial
    std::vector<TruncSeries> prod{TruncSeries::exact(UniPoly::constant(F_, 1))};
    for (size_t idx : chosen_) {
      const TruncSeries& rho = roots_[idx];
      std::vector<TruncSeries> next(prod.size() + 1, TruncSeries::zero_to(F_, val_infinite));
      for (size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] = next[k + 1] + prod[k];
        next[k] = next[k] - prod[k] * rho;
      }
      prod = std::move(next);
    }
    std::vector<UniPoly> cleared(prod.size(), UniPoly::zero(F_));
    for (size_t k = 0; k < prod.size(); ++k) {
      TruncSeries c = lead_ * prod[k];
      if (!window_ok(c, bound_, bound_ + 2)) return false;
      cleared[k] = read_poly(c, bound_, F_);
    }
    BiPoly cand(F_, std::move(cleared));
    if (cand.is_zero() || cand.deg_x() != long(chosen_.size())) return false;
    cand = cand.primitive_T();
    if (!frem.exact_div(cand)) return false;
    found_ = {cand, chosen_};
    return true;
  }
};

Factorization recombine_attempt(const BiPoly& fn, const std::vector<TruncSeries>& roots) {
  const FqPtr& F = fn.field();
  UniPoly ad = fn.lc_x();
  long bound = ad.deg() + std::max(0L, fn.deg_T());

  Factorization out;
  BiPoly frem = fn;
  std::vector<size_t> alive(roots.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  Recombiner rec(F, roots, TruncSeries::exact(ad), bound);
  while (frem.deg_x() > 1) {
    auto hit = rec.find_factor(frem, alive);
    if (!hit) break;
    out.factors.push_back({hit->first.normalize_minpoly(), 1});
    out.certified_irreducible.push_back(true);
    frem = frem.exact_div(hit->first)->normalize_minpoly();
    std::vector<size_t> rest;
    for (size_t idx : alive)
      if (std::find(hit->second.begin(), hit->second.end(), idx) == hit->second.end())
        rest.push_back(idx);
    alive = std::move(rest);
  }
  if (frem.deg_x() >= 1) {
    out.factors.push_back({frem.normalize_minpoly(), 1});
    out.certified_irreducible.push_back(true);
  }
  return out;
}

}  // namespace

Factorization recombine_irreducible(const BiPoly& f, std::vector<TruncSeries> roots) {
  BiPoly fn = f.normalize_minpoly();
  long d = fn.deg_x();
  if (d < 1) throw error("recombine_irreducible: constant in x");
  if (long(roots.size()) != d)
    throw error("recombine_irreducible: the roots list must cover every root");
  long need_prec = std::max(0L, fn.deg_T()) + d + 2;
  bool enough = true;
  for (auto& r : roots)
    if (r.prec() < need_prec) enough = false;

  long prec = default_split_prec(fn);
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (!enough) {
      std::vector<TruncSeries> fresh;
      split_profile_with_roots(fn, prec, fresh);
      if (long(fresh.size()) != d) throw error("recombine_irreducible: input does not split");
      roots = std::move(fresh);
    }
    std::sort(roots.begin(), roots.end(), [](const TruncSeries& a, const TruncSeries& b) {
      if (a.val() != b.val()) return a.val() < b.val();
      return a.coeffs() < b.coeffs();
    });
    try {
      Factorization out = recombine_attempt(fn, roots);
      std::sort(out.factors.begin(), out.factors.end(),
                [](const std::pair<BiPoly, int>& A, const std::pair<BiPoly, int>& B) {
                  if (A.first.deg_x() != B.first.deg_x()) return A.first.deg_x() < B.first.deg_x();
                  return A.first.to_str() < B.first.to_str();
                });
      return out;
    } catch (const need_more_prec&) {
      enough = false;
      prec *= 2;
    }
  }
  throw error("recombine_irreducible: precision escalation failed");
}

}  // namespace tadic
