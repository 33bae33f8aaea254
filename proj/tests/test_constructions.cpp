#include <doctest.h>

#include "tadic/constructions.hpp"

using namespace tadic;

namespace {
BiPoly P(const FqPtr& F, const std::string& s) { return parse_bipoly(F, s); }
}

TEST_CASE("gonality one") {
  auto F2 = Fq::make(2, 1);
  ConstructionResult r2 = gonality_one(F2);
  CHECK(r2.poly == P(F2, "T*x^3 + x^2 + (T+1)*x + T"));
  CHECK(r2.verified);
  CHECK(r2.height == HeightValue{1, 3});

  auto F3 = Fq::make(3, 1);
  ConstructionResult r3 = gonality_one(F3);
  CHECK(r3.poly == P(F3, "T*x^4 + x^3 + 2*x + T"));  // c = 2, -c = 1
  CHECK(r3.verified);

  auto F4 = Fq::make(2, 2);
  ConstructionResult r4 = gonality_one(F4);
  CHECK(r4.poly == P(F4, "T*x^5 + x^4 + (T+1)*x + (g)*T"));
  CHECK(r4.verified);
}

TEST_CASE("cyclic family") {
  auto F3 = Fq::make(3, 1);
  ConstructionResult r = cyclic_family(F3, 2);
  BiPoly u = P(F3, "x^3 + 2*x");
  BiPoly expect = P(F3, "T^2") * P(F3, "x^2") * u * u - u * u + P(F3, "T^2");
  CHECK(r.poly == expect.normalize_minpoly());
  CHECK(r.poly.deg_x() == 8);
  CHECK(r.poly.deg_T() == 2);
  CHECK(r.height == HeightValue{1, 4});
  CHECK(r.verified);

  // n = 1 over F_2 lands on the second gonality-one cubic
  auto F2 = Fq::make(2, 1);
  ConstructionResult r1 = cyclic_family(F2, 1);
  CHECK(r1.poly == P(F2, "T*x^3 + (T+1)*x^2 + x + T"));
  CHECK(r1.verified);

  CHECK_THROWS_AS(cyclic_family(Fq::make(2, 2), 2), error);  // 2 does not divide 3
}

TEST_CASE("cyclic smoothness gcd") {
  CHECK(cyclic_smoothness(Fq::make(3, 1), 2));
  CHECK(cyclic_smoothness(Fq::make(7, 1), 2));
  CHECK(cyclic_smoothness(Fq::make(2, 1), 1));
  CHECK(!cyclic_smoothness(Fq::make(5, 1), 4));  // x^8 + 1 and x^4 - 2 share a root
}

TEST_CASE("char2 hyperelliptic") {
  CHECK_THROWS_AS(char2_hyperelliptic(Fq::make(2, 1)), error);
  auto F4 = Fq::make(2, 2);
  ConstructionResult r = char2_hyperelliptic(F4);
  CHECK(r.poly.deg_x() == 10);
  CHECK(r.poly.deg_T() == 2);
  CHECK(r.height == HeightValue{1, 5});
  CHECK(r.verified);
}

TEST_CASE("phi tower") {
  auto F2 = Fq::make(2, 1);
  ConstructionResult r1 = phi_tower(F2, 1);
  CHECK(r1.poly == P(F2, "x^2 + x + T"));
  CHECK(r1.height == HeightValue{1, 2});
  CHECK(r1.verified);

  ConstructionResult r2 = phi_tower(F2, 2);
  CHECK(r2.poly == P(F2, "x^4 + (T+1)*x^2 + T*x + T^3"));
  CHECK(r2.height == HeightValue{3, 4});
  CHECK(r2.verified);

  auto F3 = Fq::make(3, 1);
  ConstructionResult r3 = phi_tower(F3, 2);
  CHECK(r3.poly.deg_x() == 9);
  CHECK(r3.poly.deg_T() == 4);
  CHECK(r3.height == HeightValue{4, 9});
  CHECK(r3.verified);

  CHECK_THROWS_AS(phi_tower(F2, 13), error);  // beyond the degree budget
}

TEST_CASE("psi tower") {
  auto F3 = Fq::make(3, 1);
  ConstructionResult r1 = psi_tower(F3, 1);
  CHECK(r1.poly == P(F3, "x^2 + 2*T + 2"));
  CHECK(r1.height == HeightValue{1, 2});
  CHECK(r1.verified);

  ConstructionResult r2 = psi_tower(F3, 2);
  CHECK(r2.poly.deg_x() == 4);
  CHECK(r2.poly.deg_T() == 3);
  CHECK(r2.height == HeightValue{3, 4});
  CHECK(r2.verified);

  auto F2 = Fq::make(2, 1);
  ConstructionResult rd = psi_tower(F2, 1);
  CHECK(rd.poly == P(F2, "x + T + 1"));
  CHECK(rd.height == HeightValue{1, 1});
  CHECK(!rd.note.empty());
  CHECK(rd.verified);
}

TEST_CASE("integral and unit base examples") {
  auto F3 = Fq::make(3, 1);
  auto [ri, ru] = base_examples(F3);
  CHECK(ri.poly == P(F3, "x^3 + 2*x + T"));
  CHECK(ri.height == HeightValue{1, 3});
  CHECK(ri.verified);
  CHECK(ru.poly == P(F3, "x^2 + T + 2"));
  CHECK(ru.height == HeightValue{1, 2});
  CHECK(ru.verified);

  auto F2 = Fq::make(2, 1);
  auto [i2, u2] = base_examples(F2);
  CHECK(u2.poly == P(F2, "x + T + 1"));
  CHECK(u2.height == HeightValue{1, 1});
  CHECK(i2.verified);
  CHECK(u2.verified);
}
