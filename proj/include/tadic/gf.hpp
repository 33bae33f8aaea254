#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tadic {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field element, stored as an index in 0..q-1.  The base-p digits of the
// index (least significant first) are the coordinates with respect to the
// power basis 1, g, g^2, ... of the generator g of F_q over F_p.
// Enumeration order of F_q is index order, starting at 0.
using Elem = std::uint32_t;

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

// Exact arithmetic in F_q, q = p^s.  Construction picks the defining
// modulus deterministically (least monic irreducible of degree s over F_p
// in index order), so the same (p, s) always gives the same field.
class Fq {
public:
  static constexpr std::uint64_t max_q = 1u << 16;

  static FqPtr make(std::uint64_t p, unsigned s);

  std::uint64_t p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint64_t q() const { return q_; }

  // Coefficients of the defining polynomial, constant first, monic of
  // degree s.  Empty for prime fields.
  const std::vector<Elem>& modulus() const { return modulus_; }

  bool same(const Fq& o) const { return p_ == o.p_ && s_ == o.s_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, long long e) const;
  Elem frobenius(Elem a) const;
  Elem from_int(long long n) const;
  bool is_square(Elem a) const;

  std::string to_str(Elem a) const;

private:
  Fq() = default;
  std::uint64_t p_ = 0, q_ = 0;
  unsigned s_ = 0;
  std::vector<Elem> modulus_;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Elem> exp_;           // exp_[k] = g0^k, doubled for index math
  Elem raw_mul(Elem a, Elem b) const;
  void build_tables();
};

// First element of F_q that is not a square (q odd).
Elem find_nonsquare(const Fq& F);

// First c such that x^2 + x + c has no root in F_q (q even).
Elem find_as_nonimage(const Fq& F);

}  // namespace tadic
