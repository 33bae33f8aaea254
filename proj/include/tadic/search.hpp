#pragma once

#include <cstdint>

#include "tadic/verify.hpp"

namespace tadic {

// SplitMix64; the k-th candidate stream is seeded with
// mix64(seed + (k+1) * 0x9E3779B97F4A7C15).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t state) : s_(state) {}
  static std::uint64_t mix64(std::uint64_t z);
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), rejection sampled
private:
  std::uint64_t s_;
};

struct RandomSpec {
  std::uint64_t q = 2;
  long n = 1;
  std::uint64_t budget = 1;
  std::uint64_t seed = 0;
};

struct SearchReport {
  std::uint64_t q = 2;
  long n = 1;
  unsigned shard = 0;
  unsigned total_shards = 1;
  std::uint64_t tested = 0;
  std::uint64_t passed_newton = 0;
  std::uint64_t passed_rootless = 0;
  std::uint64_t passed_squarefree = 0;
  std::uint64_t split_count = 0;
  std::uint64_t irreducible_count = 0;
  std::vector<std::string> hits;
  std::string seed_or_space;
  std::string pipeline = "split-first-v1";
  double wall_time_s = 0;
};

// The k-th random draw of Algorithm-style products
//   prod_i (T x - a_i) * prod_u prod_i (x - u - T b_{u,i})
// truncated to T-degree <= n; a_i and b_{u,i} have nonzero constant
// coefficient, deg a_i <= n, deg b_{u,i} <= n-1.
BiPoly random_candidate(const FqPtr& F, const RandomSpec& spec, std::uint64_t k);

// Newton polygon of f(x+u) is the quadrilateral
// (0,n), (n,0), (nq,0), (n(q+1),n) for every u.
bool newton_filter(const BiPoly& f, long n);

SearchReport random_search(const FqPtr& F, const RandomSpec& spec, bool stop_after_first = true);

// Solution set of the coefficient constraints for the generic candidate
//   T^n x^(n(q+1)) + sum_i A_i x^i + T^n,  deg_T A_i <= n.
// Variable (i, j) is the T^j coefficient of A_i, at column (i-1)(n+1)+j.
struct AffineSpace {
  FqPtr F;
  long n = 0;
  std::size_t num_vars = 0;
  std::size_t raw_constraints = 0;
  std::size_t dim = 0;
  bool consistent = true;
  std::vector<Elem> particular;
  std::vector<std::vector<Elem>> basis;  // one vector per free column, ascending
  std::vector<std::size_t> free_cols;

  std::uint64_t hash() const;
  std::uint64_t size() const;  // q^dim
  std::vector<Elem> point_at(std::uint64_t index) const;
  BiPoly materialize(const std::vector<Elem>& point) const;
};

AffineSpace build_linear_system(const FqPtr& F, long n);

struct ExhaustiveOptions {
  unsigned shard = 0;
  unsigned total_shards = 1;  // a power of q; fixes the top base-q digits
  std::string checkpoint_path;
  std::uint64_t checkpoint_interval = 1u << 16;
  std::uint64_t limit = 0;  // stop after this many candidates (0 = no limit)
};

SearchReport exhaustive_search(const AffineSpace& space, const ExhaustiveOptions& opt = {});

}  // namespace tadic
