#include <doctest.h>

#include "oracles.hpp"
#include "tadic/localfield.hpp"
#include "tadic/search.hpp"

using namespace tadic;

namespace {
BiPoly P(const FqPtr& F, const std::string& s) { return parse_bipoly(F, s); }
}

TEST_CASE("series arithmetic") {
  auto F2 = Fq::make(2, 1);
  // (T + T^2) * T^-1 = 1 + T
  TruncSeries a = TruncSeries::make(F2, 1, {1, 1}, 3);
  TruncSeries b = TruncSeries::exact(UniPoly::constant(F2, 1), -1);
  TruncSeries c = a * b;
  CHECK(c.val() == 0);
  CHECK(c.coeff(0) == 1);
  CHECK(c.coeff(1) == 1);
  CHECK(c.end() == 2);  // precision follows the truncated operand

  // inv(1 + T) to 4 coefficients
  TruncSeries u = TruncSeries::make(F2, 0, {1, 1}, 4);
  TruncSeries v = u.inv();
  CHECK(v.val() == 0);
  for (long e = 0; e < 4; ++e) CHECK(v.coeff(e) == 1);

  // cancellation is flagged through the precision
  TruncSeries w = u + u;
  CHECK(w.known_zero());
  CHECK(w.end() == 4);

  CHECK_THROWS_AS(w.inv(), error);
  CHECK_THROWS_AS(w.coeff(10), error);
}

TEST_CASE("series printing") {
  auto F2 = Fq::make(2, 1);
  TruncSeries s = TruncSeries::make(F2, -1, {1, 0, 1}, 4);
  CHECK(s.to_str() == "T^-1*(1 + T^2) + O(T^(4))");
}

TEST_CASE("roots of x^2 + x + T over F_2") {
  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "x^2 + x + T");
  auto roots = roots_in_laurent(f, 8);
  REQUIRE(roots.size() == 2);
  // sum of T^(2^k): digits 1,2,4 inside the first 8 exponents
  bool small_seen = false, unit_seen = false;
  for (auto& [rho, simple] : roots) {
    CHECK(simple);
    if (rho.val() == 1) {
      small_seen = true;
      for (long e = 1; e < 8; ++e) CHECK(rho.coeff(e) == ((e == 1 || e == 2 || e == 4) ? 1 : 0));
    }
    if (rho.val() == 0) {
      unit_seen = true;
      CHECK(rho.coeff(0) == 1);
    }
  }
  CHECK(small_seen);
  CHECK(unit_seen);
}

TEST_CASE("no roots when the residue is irreducible") {
  auto F2 = Fq::make(2, 1);
  CHECK(roots_in_laurent(P(F2, "x^2 + x + 1"), 6).empty());
}

TEST_CASE("split profiles") {
  auto F2 = Fq::make(2, 1);
  BiPoly cubic = P(F2, "T*x^3 + x^2 + (T+1)*x + T");
  SplitProfile sp = split_profile(cubic);
  CHECK(sp.r == 1);
  CHECK(sp.ell == 1);
  CHECK(sp.s == 1);
  CHECK(sp.splits);

  BiPoly fourth = P(F2, "T^2*x^6 + T^2*x^5 + (T+1)*x^4 + T^2*x^3 + (T+1)*x^2 + T^2*x + T^2");
  CHECK(!split_profile(fourth).splits);

  SplitProfile lin = split_profile(P(F2, "x + T"));
  CHECK(lin.r == 1);
  CHECK(lin.ell == 0);
  CHECK(lin.s == 0);
  CHECK(lin.splits);

  CHECK_THROWS_AS(split_profile(P(F2, "x^2 + T^2")), error);  // not squarefree
}

TEST_CASE("root certification by re-substitution") {
  auto F2 = Fq::make(2, 1);
  auto F3 = Fq::make(3, 1);
  SplitMix64 rng(31);
  int done = 0;
  for (int t = 0; done < 30 && t < 300; ++t) {
    auto Fp = t % 2 ? F2 : F3;
    BiPoly f(Fp);
    for (long i = 0; i <= 3; ++i) {
      std::vector<Elem> c(3);
      for (auto& e : c) e = Elem(rng.below(Fp->q()));
      f = f + BiPoly::term(UniPoly(Fp, std::move(c)), unsigned(i));
    }
    if (f.deg_x() < 1) continue;
    if (!f.gcd_and_squarefree().second) continue;
    long prec = 9;
    for (auto& [rho, simple] : roots_in_laurent(f, prec)) {
      (void)simple;
      TruncSeries v = eval_series(f, rho.as_exact());
      long ord = v.known_zero() ? v.end() : v.val();
      CHECK(ord >= prec);
    }
    ++done;
  }
  CHECK(done == 30);
}

TEST_CASE("reversal duality and count consistency") {
  auto F2 = Fq::make(2, 1);
  SplitMix64 rng(47);
  int done = 0;
  for (int t = 0; done < 40 && t < 500; ++t) {
    BiPoly f(F2);
    for (long i = 0; i <= 4; ++i) {
      std::vector<Elem> c(3);
      for (auto& e : c) e = Elem(rng.below(2));
      f = f + BiPoly::term(UniPoly(F2, std::move(c)), unsigned(i));
    }
    if (f.deg_x() < 1 || f.coeff(0).is_zero()) continue;
    if (!f.gcd_and_squarefree().second) continue;
    SplitProfile sp = split_profile(f);
    CHECK(sp.total_found <= f.deg_x());
    BiPoly rev = f.reverse_x();
    if (rev.deg_x() >= 1 && rev.gcd_and_squarefree().second) {
      SplitProfile sr = split_profile(rev);
      CHECK(sp.s == sr.r);
      CHECK(sp.r == sr.s);
    }
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("split factor counts are additive") {
  auto F2 = Fq::make(2, 1);
  BiPoly a = P(F2, "x + T");
  BiPoly b = P(F2, "x + T^2 + 1");
  BiPoly c = P(F2, "T*x + 1");
  BiPoly f = a * b * c;
  SplitProfile sp = split_profile(f);
  CHECK(sp.splits);
  CHECK(sp.total_found == 3);
  CHECK(sp.r == 1);
  CHECK(sp.ell == 1);
  CHECK(sp.s == 1);
}

TEST_CASE("hensel refinement") {
  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "x^2 + x + T");
  TruncSeries approx = TruncSeries::make(F2, 1, {1}, 2);  // T
  TruncSeries refined = hensel_refine(f, approx, 16);
  for (long e = 0; e < 16; ++e)
    CHECK(refined.coeff(e) == ((e == 1 || e == 2 || e == 4 || e == 8) ? 1 : 0));

  BiPoly lin = P(F2, "x + T");
  TruncSeries zero = TruncSeries::zero_to(F2, 1);
  TruncSeries r2 = hensel_refine(lin, zero, 10);
  CHECK(r2.val() == 1);
  CHECK(r2.coeff(1) == 1);

  auto F5 = Fq::make(5, 1);
  BiPoly g = P(F5, "x^5 + 4*x + T");  // x^5 - x + T
  TruncSeries r3 = hensel_refine(g, TruncSeries::zero_to(F5, 1), 6);
  CHECK(r3.coeff(1) == 1);
  CHECK(r3.coeff(5) == 1);
  for (long e : {0L, 2L, 3L, 4L}) CHECK(r3.coeff(e) == 0);

  // the criterion must reject a bad starting point
  CHECK_THROWS_AS(hensel_refine(P(F2, "x^2 + x + 1"), zero, 8), error);
}

TEST_CASE("root counting agrees with the cylinder oracle") {
  auto F2 = Fq::make(2, 1);
  SplitMix64 rng(2024);
  int done = 0, attempts = 0;
  while (done < 120 && attempts < 4000) {
    ++attempts;
    BiPoly f(F2);
    for (long i = 0; i <= 4; ++i) {
      std::vector<Elem> c(3);
      for (auto& e : c) e = Elem(rng.below(2));
      f = f + BiPoly::term(UniPoly(F2, std::move(c)), unsigned(i));
    }
    if (f.deg_x() < 1) continue;
    if (oracles::discriminant_resultant(f).is_zero()) continue;  // oracle needs squarefree
    long expect = oracles::oracle_root_count(f);
    CHECK(split_profile(f).total_found == expect);
    ++done;
  }
  CHECK(done == 120);
}
