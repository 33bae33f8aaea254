#include "tadic/constructions.hpp"

#include <algorithm>

namespace tadic {

std::string family_name(Family f) {
  switch (f) {
    case Family::gonality_one: return "gonality-one";
    case Family::cyclic: return "cyclic";
    case Family::char2_hyperelliptic: return "char2";
    case Family::phi_tower: return "phi-tower";
    case Family::psi_tower: return "psi-tower";
    case Family::integral_base: return "integral";
    case Family::unit_base: return "unit";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::gonality_one, Family::cyclic, Family::char2_hyperelliptic,
                   Family::phi_tower, Family::psi_tower, Family::integral_base,
                   Family::unit_base})
    if (family_name(f) == s) return f;
  return std::nullopt;
}

namespace {

// polynomial in x with constant coefficients, as a BiPoly
BiPoly in_x(const UniPoly& p) {
  const FqPtr& F = p.field();
  BiPoly r(F);
  for (long i = 0; i <= p.deg(); ++i)
    if (p.coeff(i) != 0) r = r + BiPoly::term(UniPoly::constant(F, p.coeff(i)), unsigned(i));
  return r;
}

// q-th power of a series; coefficients are fixed by x -> x^q on F_q
TruncSeries spread_q(const TruncSeries& s, std::uint64_t q) {
  const FqPtr& F = s.field();
  long end = s.end() >= val_infinite ? val_infinite : std::min<long>(val_infinite, s.end() * long(q));
  if (s.known_zero()) return TruncSeries::make(F, end, {}, end);
  long lo = s.val() * long(q);
  std::vector<Elem> c(size_t((s.coeffs().size() - 1) * q + 1), 0);
  for (size_t i = 0; i < s.coeffs().size(); ++i) c[i * q] = s.coeffs()[i];
  return TruncSeries::make(F, lo, std::move(c), std::max(end, lo + long(c.size())));
}

TruncSeries pow_series(const TruncSeries& s, unsigned long e) {
  TruncSeries r = TruncSeries::exact(UniPoly::constant(s.field(), 1));
  TruncSeries b = s;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// X with X^q - X = c and X = u + O(T); Newton step is X <- X + (X^q - X - c)
TruncSeries lift_phi_preimage(const FqPtr& F, Elem u, const TruncSeries& c, long N) {
  TruncSeries X = TruncSeries::make(F, 0, {u}, 1);
  long e = 1;
  while (e < N) {
    long e2 = std::min(2 * e, N);
    TruncSeries Xe = X.as_exact().truncated(e2);
    TruncSeries v = spread_q(Xe, F->q()) - Xe - c.truncated(e2);
    X = (Xe + v).truncated(e2);
    e = e2;
  }
  return X.as_exact().truncated(N);
}

// X with X^(q-1) = c and X = u + O(T), u a unit
TruncSeries lift_psi_preimage(const FqPtr& F, Elem u, const TruncSeries& c, long N) {
  TruncSeries X = TruncSeries::make(F, 0, {u}, 1);
  Elem qm1 = F->from_int(long(F->q()) - 1);
  long e = 1;
  while (e < N) {
    long e2 = std::min(2 * e, N);
    TruncSeries Xe = X.as_exact().truncated(e2);
    TruncSeries v = pow_series(Xe, unsigned(F->q() - 1)) - c.truncated(e2);
    TruncSeries w = pow_series(Xe, unsigned(F->q() - 2)).scaled(qm1);
    X = (Xe - v * w.inv()).truncated(e2);
    e = e2;
  }
  return X.as_exact().truncated(N);
}

bool all_distinct(std::vector<std::vector<Elem>> keys) {
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

// shared tail: run the full pipeline and record the advertised properties
void verify_minimal_family(ConstructionResult& res, long expect_r) {
  CandidateReport rep = verify_candidate(res.poly);
  res.height = rep.height;
  res.add("splits_completely", rep.profile.splits);
  res.add("irreducible", rep.irreducible);
  res.add("height_expected", rep.height == res.expected_height);
  res.add("heights_agree", rep.heights_agree);
  res.add("criteria_pass", rep.criteria.pass);
  res.add("r_expected", rep.criteria.r == expect_r && rep.criteria.pass);
}

}  // namespace

ConstructionResult gonality_one(const FqPtr& F) {
  ConstructionResult res;
  res.family = Family::gonality_one;
  res.q = F->q();
  res.param = 1;
  res.verified = true;
  long q = long(F->q());

  UniPoly T = UniPoly::var(F);
  BiPoly f(F);
  if (F->p() != 2) {
    Elem c = find_nonsquare(*F);
    // T x^(q+1) + x^q - x - c T
    f = BiPoly::term(T, unsigned(q + 1)) + BiPoly::term(UniPoly::constant(F, 1), unsigned(q)) -
        BiPoly::x(F) - BiPoly::from_uni(T.scaled(c));
  } else {
    Elem c = find_as_nonimage(*F);
    // T x^(q+1) + x^q + (T+1) x + c T
    UniPoly Tp1(F, {1, 1});
    f = BiPoly::term(T, unsigned(q + 1)) + BiPoly::term(UniPoly::constant(F, 1), unsigned(q)) +
        BiPoly::term(Tp1, 1) + BiPoly::from_uni(T.scaled(c));
  }
  res.poly = f.normalize_minpoly();
  res.expected_height = HeightValue::of(1, q + 1);
  verify_minimal_family(res, 1);
  return res;
}

ConstructionResult cyclic_family(const FqPtr& F, long n) {
  if (n < 1) throw error("cyclic_family: n must be positive");
  if ((long(F->q()) - 1) % n != 0) throw error("cyclic_family: n must divide q - 1");
  ConstructionResult res;
  res.family = Family::cyclic;
  res.q = F->q();
  res.param = n;
  res.verified = true;
  long q = long(F->q());

  BiPoly u = BiPoly::term(UniPoly::constant(F, 1), unsigned(q)) - BiPoly::x(F);  // x^q - x
  BiPoly un = u.pow(unsigned(n));
  UniPoly Tn = UniPoly::monomial(F, 1, unsigned(n));
  BiPoly f = BiPoly::term(Tn, unsigned(n)) * un - un + BiPoly::from_uni(Tn);
  res.poly = f.normalize_minpoly();
  res.expected_height = HeightValue::of(1, q + 1);
  res.add("deg_x", res.poly.deg_x() == n * (q + 1));
  res.add("deg_T", res.poly.deg_T() == n);
  verify_minimal_family(res, n);
  return res;
}

bool cyclic_smoothness(const FqPtr& F, long n) {
  if (n < 1 || (long(F->q()) - 1) % n != 0) throw error("cyclic_smoothness: n must divide q - 1");
  // gcd(x^(2n) + 1, x^(q-1) - 2) over F_q
  UniPoly a = UniPoly::monomial(F, 1, unsigned(2 * n)) + UniPoly::constant(F, 1);
  UniPoly b = UniPoly::monomial(F, 1, unsigned(F->q() - 1)) - UniPoly::constant(F, F->from_int(2));
  return UniPoly::gcd(a, b).deg() == 0;
}

ConstructionResult char2_hyperelliptic(const FqPtr& F) {
  if (F->p() != 2 || F->s() < 2) throw error("char2_hyperelliptic: q must be 2^s with s > 1");
  ConstructionResult res;
  res.family = Family::char2_hyperelliptic;
  res.q = F->q();
  res.param = 2;
  res.verified = true;
  long q = long(F->q());

  Elem zeta = 2;  // first element outside F_2
  Elem zp1 = F->add(zeta, 1);
  // R = zeta + (1+zeta) Q + P must not vanish on F_q, or the degree of T
  // as a map drops; P vanishes there, so Q must avoid zeta / (1+zeta)
  Elem bad = F->div(zeta, zp1);
  UniPoly Qu(F);
  {
    std::uint64_t n = 0;
    while (true) {
      std::vector<Elem> c;
      std::uint64_t m = n++;
      for (long i = 0; i <= q; ++i) {
        c.push_back(Elem(m % F->q()));
        m /= F->q();
      }
      if (m) throw error("char2_hyperelliptic: no admissible Q found");
      c.push_back(1);
      UniPoly cand(F, std::move(c));
      bool avoids = true;
      for (Elem u = 0; u < F->q(); ++u)
        if (cand.eval(u) == bad) avoids = false;
      if (avoids && is_irreducible(cand)) {
        Qu = cand;
        break;
      }
    }
  }
  BiPoly Q = in_x(Qu);
  BiPoly xqx = BiPoly::term(UniPoly::constant(F, 1), unsigned(q)) + BiPoly::x(F);  // x^q + x
  BiPoly P = BiPoly::x(F) * xqx * Q;
  BiPoly R = BiPoly::constant(F, zeta) + Q.scaled(zp1) + P;

  // eliminate y from  y^2 + (1+z) Q y + z P  and  T R + (x^q+x) y + z (x^q+x)
  std::vector<BiPoly> A = {P.scaled(zeta), Q.scaled(zp1), BiPoly::constant(F, 1)};
  std::vector<BiPoly> B = {R.scaled_uni(UniPoly::var(F)) + xqx.scaled(zeta), xqx};
  BiPoly res_xy = resultant_y(A, B);
  // the elimination leaves a spurious factor free of T
  BiPoly f = res_xy.swap_vars().primitive_T().swap_vars().normalize_minpoly();
  res.poly = f;
  res.expected_height = HeightValue::of(1, q + 1);
  if (f.deg_x() != 2 * (q + 1) || f.deg_T() != 2)
    throw error("char2_hyperelliptic: elimination produced wrong degrees");
  res.add("deg_x", true);
  res.add("deg_T", true);
  verify_minimal_family(res, 2);
  return res;
}

namespace {

// f_{k+1} = sum_i a_i T^(w - i) u^i for u the iteration numerator and w the
// cleared power; shared by both towers
BiPoly tower_step(const BiPoly& fk, const BiPoly& u, long w) {
  const FqPtr& F = fk.field();
  BiPoly r(F);
  for (long i = fk.deg_x(); i >= 0; --i) {
    r = r * u;
    if (!fk.coeff(i).is_zero()) r = r + BiPoly::from_uni(fk.coeff(i).shifted(w - i));
  }
  return r;
}

}  // namespace

ConstructionResult phi_tower(const FqPtr& F, long j) {
  if (j < 1) throw error("phi_tower: j must be positive");
  long q = long(F->q());
  double degx = 1;
  for (long k = 0; k < j; ++k) degx *= double(q);
  if (degx > double(tower_degree_budget)) throw error("phi_tower: degree budget exceeded");

  ConstructionResult res;
  res.family = Family::phi_tower;
  res.q = F->q();
  res.param = j;
  res.verified = true;

  // f_1 = x^q - x - T
  BiPoly u = BiPoly::term(UniPoly::constant(F, 1), unsigned(q)) - BiPoly::x(F);
  BiPoly f = u - BiPoly::from_uni(UniPoly::var(F));
  long qk = q;        // q^k
  long degT = 1;      // 1 + q + ... + q^(k-1)
  for (long k = 1; k < j; ++k) {
    f = tower_step(f, u, qk);
    degT += qk;
    qk *= q;
  }
  res.poly = f;
  res.expected_height = HeightValue::of(degT, qk);
  res.height = height_minpoly(f);

  res.add("monic", f.lc_x() == UniPoly::constant(F, 1));
  res.add("deg_x", f.deg_x() == qk);
  res.add("deg_T", f.deg_T() == degT);
  Elem sign = (j % 2 == 0) ? F->from_int(1) : F->neg(1);
  res.add("derivative_identity",
          f.derivative_x() == BiPoly::from_uni(UniPoly::monomial(F, sign, unsigned(degT - j))));
  BiPoly red(F);
  {
    std::vector<UniPoly> c;
    for (long i = 0; i <= f.deg_x(); ++i) c.push_back(UniPoly::constant(F, f.coeff(i).coeff(0)));
    red = BiPoly(F, std::move(c));
  }
  long qj1 = qk / q;
  res.add("reduction_identity", red == u.pow(unsigned(qj1)));
  res.add("height_formula", res.height == res.expected_height);
  res.add("irreducible", polygon_certifies_irreducible(f, Place::infinity()));

  // roots by iterated preimages of 1 under (x^q - x)/T
  long N = degT + j + 16;
  std::vector<TruncSeries> roots = {TruncSeries::exact(UniPoly::constant(F, 1))};
  bool certified = true;
  for (long k = 1; k <= j; ++k) {
    std::vector<TruncSeries> next;
    for (auto& beta : roots) {
      TruncSeries c = beta.truncated(N - 1).shifted(1);  // T * beta
      for (Elem w = 0; w < F->q(); ++w) {
        TruncSeries X = lift_phi_preimage(F, w, c, N);
        TruncSeries v = spread_q(X, F->q()) - X - c;
        if (!v.known_zero() || v.end() < N - 1) certified = false;
        next.push_back(X);
      }
    }
    roots = std::move(next);
    std::vector<std::vector<Elem>> keys;
    for (auto& r : roots) {
      std::vector<Elem> key;
      for (long e = 0; e < std::min(N, degT + j + 2); ++e) key.push_back(r.coeff(e));
      keys.push_back(std::move(key));
    }
    if (!all_distinct(keys)) certified = false;
  }
  res.add("splits_completely", certified && long(roots.size()) == qk);

  long pos = 0, neg = 0;
  for (auto& r : roots) {
    long v = r.known_zero() ? val_infinite : r.val();
    if (v > 0) ++pos;
    if (v < 0) ++neg;
  }
  res.add("integral_roots", neg == 0);
  res.add("positive_valuation_count", pos == qj1);

  // spot substitution into f itself
  bool direct = true;
  for (size_t i = 0; i < roots.size(); i += std::max<size_t>(1, roots.size() / 4)) {
    TruncSeries v = eval_series(f, roots[i].as_exact());
    long ord = v.known_zero() ? v.end() : v.val();
    if (ord < N - 1) direct = false;
  }
  res.add("direct_substitution", direct);
  return res;
}

ConstructionResult psi_tower(const FqPtr& F, long n) {
  if (n < 1) throw error("psi_tower: n must be positive");
  long q = long(F->q());
  long m = q - 1;
  double degx = 1;
  for (long k = 0; k < n; ++k) degx *= double(m);
  if (degx > double(tower_degree_budget)) throw error("psi_tower: degree budget exceeded");

  ConstructionResult res;
  res.family = Family::psi_tower;
  res.q = F->q();
  res.param = n;
  res.verified = true;
  if (q == 2) res.note = "height grows without bound at q = 2";

  // g_1 = x^(q-1) - 1 - T
  BiPoly u = BiPoly::term(UniPoly::constant(F, 1), unsigned(m)) - BiPoly::constant(F, 1);
  BiPoly g = u - BiPoly::from_uni(UniPoly::var(F));
  long mk = m;    // (q-1)^k
  long degT = 1;  // 1 + (q-1) + ...
  for (long k = 1; k < n; ++k) {
    g = tower_step(g, u, mk);
    degT += mk;
    mk *= m;
  }
  res.poly = g;
  res.expected_height = HeightValue::of(degT, mk);
  res.height = height_minpoly(g);

  res.add("monic", g.lc_x() == UniPoly::constant(F, 1));
  res.add("deg_x", g.deg_x() == mk);
  res.add("deg_T", g.deg_T() == degT);
  res.add("height_formula", res.height == res.expected_height);
  res.add("irreducible", polygon_certifies_irreducible(g, Place::infinity()));

  long N = degT + n + 16;
  std::vector<TruncSeries> roots = {TruncSeries::exact(UniPoly::constant(F, 1))};
  bool certified = true;
  for (long k = 1; k <= n; ++k) {
    std::vector<TruncSeries> next;
    for (auto& beta : roots) {
      // solve x^(q-1) = 1 + T beta
      TruncSeries c =
          TruncSeries::exact(UniPoly::constant(F, 1)) + beta.truncated(N - 1).shifted(1);
      if (q == 2) {
        next.push_back(c.truncated(N));  // x = 1 + T beta exactly
        continue;
      }
      for (Elem w = 1; w < F->q(); ++w) {
        TruncSeries X = lift_psi_preimage(F, w, c, N);
        TruncSeries v = pow_series(X, unsigned(m)) - c;
        if (!v.known_zero() || v.end() < N - 1) certified = false;
        next.push_back(X);
      }
    }
    roots = std::move(next);
    std::vector<std::vector<Elem>> keys;
    for (auto& r : roots) {
      std::vector<Elem> key;
      for (long e = 0; e < std::min(N, degT + n + 2); ++e) key.push_back(r.coeff(e));
      keys.push_back(std::move(key));
    }
    if (!all_distinct(keys)) certified = false;
  }
  res.add("splits_completely", certified && long(roots.size()) == mk);

  bool units = true;
  for (auto& r : roots)
    if (r.known_zero() || r.val() != 0) units = false;
  res.add("unit_roots", units);

  bool direct = true;
  for (size_t i = 0; i < roots.size(); i += std::max<size_t>(1, roots.size() / 4)) {
    TruncSeries v = eval_series(g, roots[i].as_exact());
    long ord = v.known_zero() ? v.end() : v.val();
    if (ord < N - 1) direct = false;
  }
  res.add("direct_substitution", direct);
  return res;
}

std::pair<ConstructionResult, ConstructionResult> base_examples(const FqPtr& F) {
  long q = long(F->q());

  ConstructionResult ri;
  ri.family = Family::integral_base;
  ri.q = F->q();
  ri.verified = true;
  BiPoly fi = BiPoly::term(UniPoly::constant(F, 1), unsigned(q)) - BiPoly::x(F) +
              BiPoly::from_uni(UniPoly::var(F));
  ri.poly = fi.normalize_minpoly();
  ri.expected_height = HeightValue::of(1, q);
  {
    CandidateReport rep = verify_candidate(ri.poly);
    ri.height = rep.height;
    ri.add("splits_completely", rep.profile.splits);
    ri.add("irreducible", rep.irreducible);
    ri.add("irreducible_polygon", polygon_certifies_irreducible(ri.poly, Place::infinity()));
    ri.add("height_expected", rep.height == ri.expected_height);
    ri.add("integral_roots", rep.profile.s == 0);
  }

  ConstructionResult ru;
  ru.family = Family::unit_base;
  ru.q = F->q();
  ru.verified = true;
  BiPoly fu = BiPoly::term(UniPoly::constant(F, 1), unsigned(q - 1)) - BiPoly::constant(F, 1) +
              BiPoly::from_uni(UniPoly::var(F));
  ru.poly = fu.normalize_minpoly();
  ru.expected_height = HeightValue::of(1, q - 1);
  {
    CandidateReport rep = verify_candidate(ru.poly);
    ru.height = rep.height;
    ru.add("splits_completely", rep.profile.splits);
    ru.add("irreducible", rep.irreducible);
    ru.add("irreducible_polygon", polygon_certifies_irreducible(ru.poly, Place::infinity()));
    ru.add("height_expected", rep.height == ru.expected_height);
    ru.add("unit_roots", rep.profile.r == 0 && rep.profile.s == 0);
  }
  return {ri, ru};
}

}  // namespace tadic
