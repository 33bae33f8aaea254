#include <doctest.h>

#include "tadic/gf.hpp"

using namespace tadic;

TEST_CASE("prime fields") {
  auto F2 = Fq::make(2, 1);
  CHECK(F2->q() == 2);
  CHECK(F2->add(1, 1) == 0);
  CHECK(F2->frobenius(1) == 1);

  auto F3 = Fq::make(3, 1);
  CHECK(F3->mul(2, 2) == 1);
  CHECK(F3->neg(1) == 2);
  CHECK(F3->inv(2) == 2);
}

TEST_CASE("make_field validates input") {
  CHECK_THROWS_AS(Fq::make(4, 1), error);
  CHECK_THROWS_AS(Fq::make(1, 1), error);
  CHECK_THROWS_AS(Fq::make(2, 0), error);
  CHECK_THROWS_AS(Fq::make(2, 17), error);  // beyond the table bound
  CHECK(Fq::make(2, 16)->q() == 65536);
}

TEST_CASE("F4 modulus is the least irreducible quadratic") {
  auto F4 = Fq::make(2, 2);
  // g^2 + g + 1
  CHECK(F4->modulus() == std::vector<Elem>({1, 1, 1}));
  // g * g = g + 1
  CHECK(F4->mul(2, 2) == 3);
  CHECK(F4->to_str(3) == "(g+1)");
  CHECK(F4->to_str(2) == "(g)");
  CHECK(F4->to_str(0) == "(0)");
}

TEST_CASE("field axioms on small fields") {
  for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {2, 3},
                      {3, 2}}) {
    auto F = Fq::make(p, s);
    for (Elem a = 0; a < F->q(); ++a) {
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      // frobenius iterated s times is the identity
      Elem x = a;
      for (unsigned k = 0; k < s; ++k) x = F->frobenius(x);
      CHECK(x == a);
      for (Elem b = 0; b < F->q(); ++b) {
        CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
        CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
        CHECK(F->sub(F->add(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("nonsquares") {
  auto F3 = Fq::make(3, 1);
  CHECK(find_nonsquare(*F3) == 2);
  auto F5 = Fq::make(5, 1);
  CHECK(find_nonsquare(*F5) == 2);
  auto F9 = Fq::make(3, 2);
  Elem c = find_nonsquare(*F9);
  // brute force: c is outside the set of squares, and everything below it
  // is a square
  for (Elem a = 0; a < c; ++a) {
    bool sq = false;
    for (Elem b = 0; b < F9->q(); ++b)
      if (F9->mul(b, b) == a) sq = true;
    CHECK(sq);
  }
  bool sq = false;
  for (Elem b = 0; b < F9->q(); ++b)
    if (F9->mul(b, b) == c) sq = true;
  CHECK(!sq);
  // Euler criterion
  CHECK(F9->pow(c, 4) == F9->neg(1));
  CHECK_THROWS_AS(find_nonsquare(*Fq::make(2, 1)), error);
}

TEST_CASE("Artin-Schreier nonimages") {
  auto F2 = Fq::make(2, 1);
  CHECK(find_as_nonimage(*F2) == 1);
  auto F4 = Fq::make(2, 2);
  CHECK(find_as_nonimage(*F4) == 2);  // the element g
  auto F8 = Fq::make(2, 3);
  Elem c = find_as_nonimage(*F8);
  for (Elem x = 0; x < F8->q(); ++x) CHECK(F8->add(F8->mul(x, x), x) != c);
  CHECK_THROWS_AS(find_as_nonimage(*Fq::make(3, 1)), error);
}

TEST_CASE("division by zero") {
  auto F3 = Fq::make(3, 1);
  CHECK_THROWS_AS(F3->inv(0), error);
  CHECK_THROWS_AS(F3->div(1, 0), error);
}
