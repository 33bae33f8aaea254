#include <doctest.h>

#include "tadic/heights.hpp"
#include "tadic/search.hpp"
#include "tadic/verify.hpp"

using namespace tadic;

namespace {
BiPoly P(const FqPtr& F, const std::string& s) { return parse_bipoly(F, s); }

const char* kExampleQ3A =
    "T^3*x^12 + 2*T^2*x^11 + (2*T^3+2*T)*x^10 + (T^2+1)*x^9 + (T^2+T)*x^8 + (T^3+2*T^2)*x^7 + "
    "(2*T^3+2*T)*x^6 + 2*T^3*x^5 + (2*T^3+2)*x^3 + (2*T^2+T)*x^2 + (T^3+T^2)*x + 2*T^3";
}

TEST_CASE("height of minimal polynomials") {
  auto F2 = Fq::make(2, 1);
  auto F3 = Fq::make(3, 1);
  CHECK(height_minpoly(P(F2, "T*x^3 + x^2 + (T+1)*x + T")) == HeightValue{1, 3});
  CHECK(height_minpoly(P(F3, "x^3 + 2*x + 2*T")) == HeightValue{1, 3});
  CHECK(height_minpoly(P(F2, "x^7 + x")) == HeightValue{0, 1});
  CHECK_THROWS_AS(height_minpoly(P(F2, "T^2+T")), error);
}

TEST_CASE("height from local masses") {
  auto F2 = Fq::make(2, 1);
  CHECK(height_local(P(F2, "T*x^3 + x^2 + (T+1)*x + T")) == HeightValue{1, 3});
  CHECK(height_local(P(F2, "x^2 + x + T")) == HeightValue{1, 2});
  CHECK(height_local(P(F2, "x + T")) == HeightValue{1, 1});
  CHECK_THROWS_AS(height_local(P(F2, "x^2 + T^2")), error);

  // agreement with the degree ratio on irreducible inputs
  auto F3 = Fq::make(3, 1);
  SplitMix64 rng(13);
  int done = 0;
  for (int t = 0; done < 25 && t < 400; ++t) {
    auto Fp = t % 2 ? F2 : F3;
    BiPoly f(Fp);
    for (long i = 0; i <= 3; ++i) {
      std::vector<Elem> c(3);
      for (auto& e : c) e = Elem(rng.below(Fp->q()));
      f = f + BiPoly::term(UniPoly(Fp, std::move(c)), unsigned(i));
    }
    if (f.deg_x() < 1) continue;
    if (!f.gcd_and_squarefree().second) continue;
    f = f.normalize_minpoly();
    CandidateReport rep = verify_candidate(f);
    if (!rep.profile.splits || !rep.irreducible) continue;
    CHECK(height_local(f) == height_minpoly(f));
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("minimal-height criteria") {
  auto F2 = Fq::make(2, 1);
  CriteriaReport c1 = check_min_height_criteria(P(F2, "T*x^3 + x^2 + (T+1)*x + T"));
  CHECK(c1.pass);
  CHECK(c1.r == 1);

  auto F3 = Fq::make(3, 1);
  CriteriaReport c2 = check_min_height_criteria(P(F3, kExampleQ3A));
  CHECK(c2.pass);
  CHECK(c2.r == 3);

  CriteriaReport c3 = check_min_height_criteria(P(F2, "x^2 + x + T"));
  CHECK(!c3.pass);
  CHECK(!c3.degree_relation);
}

TEST_CASE("criteria are Mobius invariant") {
  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "T*x^3 + x^2 + (T+1)*x + T");
  for (const Mobius& m : Mobius::all(F2)) {
    BiPoly g = transform_x(f, m);
    CHECK(height_minpoly(g) == HeightValue{1, 3});
    CHECK(check_min_height_criteria(g).pass);
  }
}

TEST_CASE("genus bounds") {
  GenusBounds g33 = genus_bounds(3, 3);
  CHECK(g33.lower == 3);
  CHECK(g33.upper == 10);

  GenusBounds g1 = genus_bounds(7, 1);
  CHECK(g1.lower == 0);
  CHECK(g1.upper == 0);

  GenusBounds g22 = genus_bounds(2, 2);
  CHECK(g22.lower_real == doctest::Approx(1.0606601).epsilon(1e-6));
  CHECK(g22.lower == 2);
  CHECK(g22.upper == 2);

  CHECK_THROWS_AS(genus_bounds(2, 0), error);
}

TEST_CASE("composite polynomials") {
  auto F3 = Fq::make(3, 1);
  BiPoly xT = P(F3, "x + 2*T");  // x - T
  CHECK(composite_poly(xT, xT, CompositeOp::sum) == P(F3, "x + T"));  // x - 2T
  CHECK(composite_poly(xT, P(F3, "x + 2*T^2"), CompositeOp::product) == P(F3, "x + 2*T^3"));

  auto F2 = Fq::make(2, 1);
  BiPoly f = P(F2, "x^2 + x + T");
  BiPoly self_sum = composite_poly(f, f, CompositeOp::sum);
  // the pairwise sums collapse to the constants 0 and 1: (x^2+x)^2
  CHECK(self_sum == P(F2, "x^4 + x^2"));
  BiPoly root = P(F2, "x^2 + x");
  CHECK(self_sum == root * root);
  SplitProfile sp = split_profile(root);
  CHECK(sp.splits);
  CHECK(sp.total_found == 2);

  // a degree-2 and a degree-3 operand give a sextic that splits
  BiPoly g = P(F2, "T*x^3 + x^2 + (T+1)*x + T");
  BiPoly mixed = composite_poly(f, g, CompositeOp::sum);
  CHECK(mixed.deg_x() == 6);
  CHECK(mixed.gcd_and_squarefree().second);
  CHECK(split_profile(mixed).splits);
  // weak subadditivity when the composite is irreducible
  CandidateReport rep = verify_candidate(mixed);
  if (rep.irreducible) {
    HeightValue lhs = height_minpoly(mixed);
    HeightValue rhs = height_minpoly(f) + height_minpoly(g);
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("verify pipeline verdicts") {
  auto F2 = Fq::make(2, 1);
  CandidateReport good = verify_candidate(P(F2, "T*x^3 + x^2 + (T+1)*x + T"));
  CHECK(good.certified_minimal);
  CHECK(good.gonality == 1);
  CHECK(good.heights_agree);

  CandidateReport bad = verify_candidate(P(F2, "x^2 + x + 1"));
  CHECK(!bad.certified_minimal);
  CHECK(!bad.profile.splits);
}
