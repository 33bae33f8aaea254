#include <doctest.h>

#include "oracles.hpp"
#include "tadic/factor.hpp"
#include "tadic/search.hpp"

using namespace tadic;

namespace {
BiPoly P(const FqPtr& F, const std::string& s) { return parse_bipoly(F, s); }

std::vector<TruncSeries> all_roots(const BiPoly& f) {
  std::vector<TruncSeries> roots;
  split_profile_with_roots(f, -1, roots);
  return roots;
}
}  // namespace

TEST_CASE("rational roots") {
  auto F2 = Fq::make(2, 1);
  CHECK(!has_rational_root(P(F2, "T*x^3 + x^2 + (T+1)*x + T")));
  CHECK(has_rational_root(P(F2, "x^2 + T*x")) == Elem(0));
  CHECK(has_rational_root(P(F2, "x^2 + T*x + T + 1")) == Elem(1));
}

TEST_CASE("the paired sextic factors into the two known cubics") {
  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "T^2*x^6 + T^2*x^5 + (T^2+T+1)*x^4 + T^2*x^3 + (T^2+T+1)*x^2 + T^2*x + T^2");
  Factorization fac = recombine_irreducible(f, all_roots(f));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == P(F2, "T*x^3 + (T+1)*x^2 + x + T"));
  CHECK(fac.factors[1].first == P(F2, "T*x^3 + x^2 + (T+1)*x + T"));
  CHECK(fac.certified_irreducible[0]);
  CHECK(fac.certified_irreducible[1]);
  // the irreducible factors of a rootless split candidate with
  // (q+1) deg_T = deg_x have x-degree divisible by q+1
  for (auto& [g, m] : fac.factors) {
    (void)m;
    CHECK(g.deg_x() % 3 == 0);
  }
}

TEST_CASE("the minimal cubic is irreducible") {
  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "T*x^3 + x^2 + (T+1)*x + T");
  Factorization fac = recombine_irreducible(f, all_roots(f));
  CHECK(fac.is_irreducible());
  CHECK(fac.factors[0].first == f);
}

TEST_CASE("linear factors are recognized") {
  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "x + T") * P(F2, "x + T^2");
  Factorization fac = recombine_irreducible(f, all_roots(f));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == P(F2, "x + T"));
  CHECK(fac.factors[1].first == P(F2, "x + T^2"));
}

TEST_CASE("non-T leading parts are handled") {
  auto F2 = Fq::make(2, 1);
  BiPoly a = P(F2, "(T+1)*x + 1");
  BiPoly b = P(F2, "x + T");
  BiPoly f = a * b;
  Factorization fac = recombine_irreducible(f, all_roots(f));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == a.normalize_minpoly());
  CHECK(fac.factors[1].first == b);
}

TEST_CASE("recombination matches the divisor oracle on random split products") {
  auto F2 = Fq::make(2, 1);
  SplitMix64 rng(99);
  int done = 0, attempts = 0;
  while (done < 60 && attempts < 2000) {
    ++attempts;
    // random product of split linear factors (x - a) or (T x - b)
    int nf = 2 + int(rng.below(2));
    BiPoly f = BiPoly::constant(F2, 1);
    for (int k = 0; k < nf; ++k) {
      std::vector<Elem> c = {Elem(rng.below(2)), Elem(rng.below(2))};
      UniPoly a(F2, std::move(c));
      if (rng.below(4) == 0 && a.coeff(0) != 0)
        f = f * (BiPoly::term(UniPoly::var(F2), 1) - BiPoly::from_uni(a));
      else
        f = f * (BiPoly::x(F2) - BiPoly::from_uni(a));
    }
    f = f.normalize_minpoly();
    if (f.deg_T() > 2 || f.deg_x() < 2) continue;
    if (!f.gcd_and_squarefree().second) continue;

    Factorization fac = recombine_irreducible(f, all_roots(f));
    auto divisors = oracles::oracle_divisors(f, f.deg_x() - 1, f.deg_T());
    bool oracle_irreducible = true;
    for (auto& d : divisors)
      if (d.deg_x() >= 1 && d.deg_x() < f.deg_x()) oracle_irreducible = false;
    CHECK(fac.is_irreducible() == oracle_irreducible);
    BiPoly prod = BiPoly::constant(F2, 1);
    for (auto& [g, m] : fac.factors) {
      (void)m;
      prod = prod * g;
      if (g.deg_x() < f.deg_x()) {
        bool found = false;
        for (auto& d : divisors)
          if (d == g) found = true;
        CHECK(found);
      }
    }
    CHECK(prod.normalize_minpoly() == f);
    ++done;
  }
  CHECK(done == 60);
}
