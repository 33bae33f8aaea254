#include <doctest.h>

#include <cstdio>

#include "tadic/search.hpp"

using namespace tadic;

namespace {
BiPoly P(const FqPtr& F, const std::string& s) { return parse_bipoly(F, s); }
}

TEST_CASE("splitmix64 is deterministic") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(42);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t v = c.below(7);
    CHECK(v < 7);
  }
}

TEST_CASE("random candidates have the required shape") {
  auto F2 = Fq::make(2, 1);
  RandomSpec spec{2, 1, 1, 7};
  for (std::uint64_t k = 1; k <= 25; ++k) {
    BiPoly f = random_candidate(F2, spec, k);
    CHECK(f.deg_x() == 3);
    CHECK(f.deg_T() <= 1);
    CHECK(f.lc_x() == UniPoly::var(F2));  // leading term T x^3
    CHECK(random_candidate(F2, spec, k) == f);  // stateless per index
  }
  auto F3 = Fq::make(3, 1);
  RandomSpec s3{3, 3, 1, 42};
  BiPoly g = random_candidate(F3, s3, 1);
  CHECK(g.deg_x() == 12);
  CHECK(g.deg_T() <= 3);
  CHECK(g.lc_x() == UniPoly::monomial(F3, 1, 3));
}

TEST_CASE("newton filter") {
  auto F2 = Fq::make(2, 1);
  CHECK(newton_filter(P(F2, "T*x^3 + x^2 + (T+1)*x + T"), 1));
  CHECK(!newton_filter(P(F2, "x^2 + x + T"), 1));
}

TEST_CASE("random search at (2,1) only finds the two cubics") {
  auto F2 = Fq::make(2, 1);
  SearchReport rep = random_search(F2, RandomSpec{2, 1, 64, 9}, false);
  CHECK(rep.tested == 64);
  std::vector<std::string> known = {P(F2, "T*x^3 + x^2 + (T+1)*x + T").to_str(),
                                    P(F2, "T*x^3 + (T+1)*x^2 + x + T").to_str()};
  for (auto& h : rep.hits)
    CHECK((h == known[0] || h == known[1]));
}

TEST_CASE("linear system dimensions at q = 2") {
  auto F2 = Fq::make(2, 1);
  AffineSpace s1 = build_linear_system(F2, 1);
  CHECK(s1.dim == 1);
  CHECK(s1.size() == 2);

  AffineSpace s2 = build_linear_system(F2, 2);
  CHECK(s2.raw_constraints == 14);
  CHECK(s2.dim == 3);
  CHECK(s2.size() == 8);

  AffineSpace s3 = build_linear_system(F2, 3);
  CHECK(s3.dim == 12);

  AffineSpace s4 = build_linear_system(F2, 4);
  CHECK(s4.dim == 25);

  // every point satisfies the polygon conditions encoded in the ansatz
  for (std::uint64_t i = 0; i < s2.size(); ++i) {
    BiPoly f = s2.materialize(s2.point_at(i));
    CHECK(f.deg_x() == 6);
    CHECK(f.lc_x() == UniPoly::monomial(F2, 1, 2));
    CHECK(f.coeff(0) == UniPoly::monomial(F2, 1, 2));
  }
}

TEST_CASE("exhaustive search classifies gonality 1 and 2") {
  auto F2 = Fq::make(2, 1);
  AffineSpace s1 = build_linear_system(F2, 1);
  SearchReport r1 = exhaustive_search(s1);
  CHECK(r1.tested == 2);
  REQUIRE(r1.hits.size() == 2);
  CHECK(r1.hits[0] == P(F2, "T*x^3 + (T+1)*x^2 + x + T").to_str());
  CHECK(r1.hits[1] == P(F2, "T*x^3 + x^2 + (T+1)*x + T").to_str());

  AffineSpace s2 = build_linear_system(F2, 2);
  SearchReport r2 = exhaustive_search(s2);
  CHECK(r2.tested == 8);
  CHECK(r2.passed_rootless == 4);
  CHECK(r2.passed_squarefree == 2);
  CHECK(r2.split_count == 1);
  CHECK(r2.irreducible_count == 0);
  CHECK(r2.hits.empty());
}

TEST_CASE("pruned candidates genuinely fail") {
  auto F2 = Fq::make(2, 1);
  AffineSpace s2 = build_linear_system(F2, 2);
  long pruned = 0;
  for (std::uint64_t i = 0; i < s2.size(); ++i) {
    BiPoly f = s2.materialize(s2.point_at(i));
    if (has_rational_root(f)) {
      ++pruned;
      CHECK(f.eval_x(1).is_zero());
    }
  }
  CHECK(pruned == 4);
}

TEST_CASE("shard counters add up") {
  auto F2 = Fq::make(2, 1);
  AffineSpace s = build_linear_system(F2, 2);
  SearchReport whole = exhaustive_search(s);
  for (unsigned total : {2u, 4u}) {
    SearchReport sum;
    std::vector<std::string> hits;
    for (unsigned sh = 0; sh < total; ++sh) {
      ExhaustiveOptions opt;
      opt.shard = sh;
      opt.total_shards = total;
      SearchReport r = exhaustive_search(s, opt);
      sum.tested += r.tested;
      sum.passed_rootless += r.passed_rootless;
      sum.passed_squarefree += r.passed_squarefree;
      sum.split_count += r.split_count;
      sum.irreducible_count += r.irreducible_count;
      hits.insert(hits.end(), r.hits.begin(), r.hits.end());
    }
    CHECK(sum.tested == whole.tested);
    CHECK(sum.passed_rootless == whole.passed_rootless);
    CHECK(sum.passed_squarefree == whole.passed_squarefree);
    CHECK(sum.split_count == whole.split_count);
    CHECK(sum.irreducible_count == whole.irreducible_count);
    std::sort(hits.begin(), hits.end());
    CHECK(hits == whole.hits);
  }
  ExhaustiveOptions bad;
  bad.shard = 0;
  bad.total_shards = 3;  // not a power of 2
  CHECK_THROWS_AS(exhaustive_search(s, bad), error);
  bad.total_shards = 2;
  bad.shard = 2;
  CHECK_THROWS_AS(exhaustive_search(s, bad), error);
}

TEST_CASE("checkpoints resume bit-exactly") {
  auto F2 = Fq::make(2, 1);
  AffineSpace s = build_linear_system(F2, 2);
  SearchReport straight = exhaustive_search(s);

  std::string path = "checkpoint_test.tmp.txt";
  std::remove(path.c_str());
  ExhaustiveOptions first;
  first.checkpoint_path = path;
  first.checkpoint_interval = 1;
  first.limit = 3;
  SearchReport partial = exhaustive_search(s, first);
  CHECK(partial.tested == 3);

  ExhaustiveOptions rest;
  rest.checkpoint_path = path;
  rest.checkpoint_interval = 2;
  SearchReport resumed = exhaustive_search(s, rest);
  CHECK(resumed.tested == straight.tested);
  CHECK(resumed.passed_rootless == straight.passed_rootless);
  CHECK(resumed.passed_squarefree == straight.passed_squarefree);
  CHECK(resumed.split_count == straight.split_count);
  CHECK(resumed.hits == straight.hits);

  // a checkpoint from another run is refused with a mismatch report
  AffineSpace s3 = build_linear_system(F2, 3);
  ExhaustiveOptions clash;
  clash.checkpoint_path = path;
  CHECK_THROWS_WITH_AS(exhaustive_search(s3, clash),
                       doctest::Contains("checkpoint refused"), error);
  std::remove(path.c_str());
}

TEST_CASE("inconsistent systems are a valid empty outcome") {
  // direct construction: the solver must report empty space, not throw
  auto F2 = Fq::make(2, 1);
  AffineSpace s = build_linear_system(F2, 2);
  s.consistent = false;
  SearchReport r = exhaustive_search(s);
  CHECK(r.tested == 0);
  CHECK(r.hits.empty());
}
