#include "tadic/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tadic {

HeightValue HeightValue::of(long long n, long long d) {
  if (d == 0) throw error("height: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) return {0, 1};
  return {n / g, d / g};
}

HeightValue height_minpoly(const BiPoly& f) {
  BiPoly g = f.normalize_minpoly();
  if (g.deg_x() < 1) throw error("height_minpoly: constant in x");
  return HeightValue::of(std::max(0L, g.deg_T()), g.deg_x());
}

HeightValue height_local(const BiPoly& f) {
  BiPoly g = f.normalize_minpoly();
  if (g.deg_x() < 1) throw error("height_local: constant in x");
  if (!g.gcd_and_squarefree().second) throw error("height_local: input is not squarefree in x");
  long d = g.deg_x();
  // finite places are weighted by their degree; infinity has degree one
  long mass = 0;
  for (auto& [pi, mult] : factor_univariate(g.lc_x())) {
    (void)mult;
    mass += pi.deg() * newton_polygon(g, Place{false, pi}).pole_mass();
  }
  mass += newton_polygon(g, Place::infinity()).pole_mass();
  return HeightValue::of(mass, d);
}

CriteriaReport check_min_height_criteria(const BiPoly& f, long r) {
  CriteriaReport rep;
  try {
    BiPoly g = f.normalize_minpoly();
    const FqPtr& F = g.field();
    long q = long(F->q());
    if (r <= 0) r = std::max(1L, g.deg_T());
    rep.r = r;

    rep.degree_relation = g.deg_x() == r * (q + 1) && g.deg_T() == r;

    std::vector<std::pair<long, long>> want = {{0, r}, {r, 0}, {r * q, 0}, {r * (q + 1), r}};
    rep.newton_polygons = true;
    for (Elem u = 0; u < F->q(); ++u) {
      NewtonPolygon np = newton_polygon(g.shift_x(u), Place::ord0(F));
      if (np.vertices != want) {
        rep.newton_polygons = false;
        break;
      }
    }

    rep.leading_coeff = g.lc_x() == UniPoly::monomial(F, 1, unsigned(r));

    rep.shifted_constants = true;
    for (Elem u = 0; u < F->q(); ++u) {
      UniPoly c = g.eval_x(u);
      bool ok = !c.is_zero() && c.deg() == r && c.trailing() == r;
      if (!ok) {
        rep.shifted_constants = false;
        break;
      }
    }

    // root distribution over P^1(F_q)
    rep.well_distributed = false;
    rep.ord_one_roots = false;
    if (g.gcd_and_squarefree().second) {
      std::vector<TruncSeries> roots;
      SplitProfile sp = split_profile_with_roots(g, -1, roots);
      if (sp.splits) {
        bool counts_ok = true, dist_ok = true;
        long at_inf = 0;
        for (auto& rho : roots) {
          long v = rho.known_zero() ? val_infinite : rho.val();
          if (v < 0) {
            ++at_inf;
            if (v != -1) dist_ok = false;
          }
        }
        if (at_inf != r) counts_ok = false;
        for (Elem u = 0; u < F->q(); ++u) {
          long cnt = 0;
          for (auto& rho : roots) {
            long v = rho.known_zero() ? val_infinite : rho.val();
            if (v < 0) continue;
            TruncSeries diff = rho - TruncSeries::exact(UniPoly::constant(F, u));
            long dv = diff.known_zero() ? diff.end() : diff.val();
            if (dv >= 1) {
              ++cnt;
              if (dv != 1) dist_ok = false;
            }
          }
          if (cnt != r) counts_ok = false;
        }
        rep.well_distributed = counts_ok;
        rep.ord_one_roots = counts_ok && dist_ok;
      }
    }
  } catch (const error&) {
    // report the failure through the flags
  }
  rep.pass = rep.degree_relation && rep.newton_polygons && rep.leading_coeff &&
             rep.shifted_constants && rep.well_distributed && rep.ord_one_roots;
  return rep;
}

GenusBounds genus_bounds(std::uint64_t q, long n) {
  if (n < 1) throw error("genus_bounds: n must be positive");
  GenusBounds gb;
  long long a = (long long)(n - 1) * (long long)(q + 1);
  gb.lower_real = double(a) / (2.0 * std::sqrt(double(q)));
  // least integer g with 4 g^2 q >= a^2
  long long g = 0;
  while (4 * g * g * (long long)q < a * a) ++g;
  gb.lower = long(g);
  gb.upper = long(((long long)(q + 1) * (n - 1) * (n - 1) + (long long)(q - 1) * (n - 1)) / 2);
  gb.lower_expr = std::to_string(n - 1) + "*" + std::to_string(q + 1) + "/(2*sqrt(" +
                  std::to_string(q) + "))";
  return gb;
}

namespace {

// strip x^k; returns k
long strip_x_content(BiPoly& f) {
  long k = 0;
  while (!f.is_zero() && f.coeff(0).is_zero()) {
    std::vector<UniPoly> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = BiPoly(f.field(), std::move(c));
    ++k;
  }
  return k;
}

Elem binom_mod(const FqPtr& F, long n, long k, std::vector<std::vector<Elem>>& pascal) {
  while (long(pascal.size()) <= n) {
    long m = long(pascal.size());
    std::vector<Elem> row(m + 1, 1);
    for (long j = 1; j < m; ++j) row[j] = F->add(pascal[m - 1][j - 1], pascal[m - 1][j]);
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

}  // namespace

BiPoly composite_poly(const BiPoly& f, const BiPoly& g, CompositeOp op) {
  const FqPtr& F = f.field();
  if (f.deg_x() < 1 || g.deg_x() < 1) throw error("composite_poly: constant operand");
  if (!f.gcd_and_squarefree().second || !g.gcd_and_squarefree().second)
    throw error("composite_poly: operands must be squarefree in x");

  if (op == CompositeOp::sum) {
    long m = f.deg_x(), n = g.deg_x();
    std::vector<BiPoly> A(m + 1, BiPoly::zero(F));
    for (long i = 0; i <= m; ++i) A[i] = BiPoly::from_uni(f.coeff(i));
    std::vector<BiPoly> B(n + 1, BiPoly::zero(F));
    std::vector<std::vector<Elem>> pascal;
    for (long j = 0; j <= n; ++j) {
      if (g.coeff(j).is_zero()) continue;
      for (long k = 0; k <= j; ++k) {
        Elem c = binom_mod(F, j, k, pascal);
        if (k % 2 == 1) c = F->neg(c);
        if (c == 0) continue;
        // contribution b_j * binom(j,k) * (-1)^k * x^(j-k) to the y^k coefficient
        B[k] = B[k] + BiPoly::term(g.coeff(j).scaled(c), unsigned(j - k));
      }
    }
    return resultant_y(A, B).normalize_minpoly();
  }

  // product: pairwise products of roots; zero roots are split off first
  BiPoly f1 = f, g1 = g;
  long mf = strip_x_content(f1);
  long mg = strip_x_content(g1);
  long df = f.deg_x(), dg = g.deg_x();
  long zeros = mf * dg + mg * df - mf * mg;
  BiPoly core;
  if (f1.deg_x() >= 1 && g1.deg_x() >= 1) {
    long m = f1.deg_x(), n = g1.deg_x();
    std::vector<BiPoly> A(m + 1, BiPoly::zero(F));
    for (long i = 0; i <= m; ++i) A[i] = BiPoly::from_uni(f1.coeff(i));
    std::vector<BiPoly> B(n + 1, BiPoly::zero(F));
    for (long j = 0; j <= n; ++j) B[n - j] = BiPoly::term(g1.coeff(j), unsigned(j));
    core = resultant_y(A, B);
  } else {
    core = BiPoly::constant(F, 1);
  }
  BiPoly xpow = BiPoly::term(UniPoly::constant(F, 1), unsigned(zeros));
  return (core * xpow).normalize_minpoly();
}

}  // namespace tadic
