#include "tadic/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace tadic {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Digits of n in base p, least significant first, padded to s.
std::vector<Elem> digits(std::uint64_t n, std::uint64_t p, unsigned s) {
  std::vector<Elem> d(s, 0);
  for (unsigned i = 0; i < s; ++i) {
    d[i] = Elem(n % p);
    n /= p;
  }
  return d;
}

std::uint64_t from_digits(const std::vector<Elem>& d, std::uint64_t p) {
  std::uint64_t n = 0;
  for (size_t i = d.size(); i-- > 0;) n = n * p + d[i];
  return n;
}

// Plain polynomial arithmetic over F_p on digit vectors, used only while
// bootstrapping a field and checking the modulus.
using PVec = std::vector<Elem>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = Elem((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  ptrim(c);
  return c;
}

// a mod b, b monic
PVec pmod(PVec a, const PVec& b, std::uint64_t p) {
  ptrim(a);
  while (a.size() >= b.size()) {
    std::uint64_t top = a.back();
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) {
      std::uint64_t sub = (top * b[j]) % p;
      a[shift + j] = Elem((a[shift + j] + p - sub) % p);
    }
    ptrim(a);
  }
  return a;
}

bool pdivides(const PVec& b, PVec a, std::uint64_t p) {
  // b monic
  return pmod(std::move(a), b, p).empty();
}

bool modulus_irreducible(const PVec& m, std::uint64_t p) {
  unsigned s = unsigned(m.size() - 1);
  if (s == 1) return true;
  // exhaustive trial division by every monic polynomial of degree <= s/2
  for (unsigned d = 1; 2 * d <= s; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      PVec div = digits(n, p, d);
      div.push_back(1);
      if (pdivides(div, m, p)) return false;
    }
  }
  return true;
}

std::mutex cache_mutex;
std::map<std::pair<std::uint64_t, unsigned>, FqPtr> cache;

}  // namespace

FqPtr Fq::make(std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw error("make_field: p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw error("make_field: s must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q > max_q) throw error("make_field: q exceeds the element-table bound");
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({p, s});
  if (it != cache.end()) return it->second;

  auto F = std::shared_ptr<Fq>(new Fq());
  F->p_ = p;
  F->s_ = s;
  F->q_ = q;
  if (s > 1) {
    // least monic irreducible of degree s, scanning in index order
    bool found = false;
    for (std::uint64_t n = 0; n < q; ++n) {
      PVec m = digits(n, p, s);
      m.push_back(1);
      if (modulus_irreducible(m, p)) {
        F->modulus_.assign(m.begin(), m.end());
        found = true;
        break;
      }
    }
    if (!found) throw error("make_field: no irreducible modulus found");
  }
  F->build_tables();
  FqPtr fp = F;
  cache[{p, s}] = fp;
  return fp;
}

Elem Fq::raw_mul(Elem a, Elem b) const {
  if (s_ == 1) return Elem((std::uint64_t(a) * b) % p_);
  PVec pa = digits(a, p_, s_), pb = digits(b, p_, s_);
  ptrim(pa);
  ptrim(pb);
  PVec m(modulus_.begin(), modulus_.end());
  PVec c = pmod(pmul(pa, pb, p_), m, p_);
  c.resize(s_, 0);
  return Elem(from_digits(c, p_));
}

void Fq::build_tables() {
  log_.assign(q_, 0);
  exp_.clear();
  // find a multiplicative generator by direct order computation
  Elem gen = 0;
  for (Elem cand = 1; cand < q_; ++cand) {
    Elem x = cand;
    std::uint64_t ord = 1;
    while (x != 1) {
      x = raw_mul(x, cand);
      ++ord;
    }
    if (ord == q_ - 1) {
      gen = cand;
      break;
    }
  }
  if (q_ > 2 && gen == 0) throw error("field table construction failed");
  if (q_ == 2) gen = 1;
  exp_.resize(2 * (q_ - 1));
  Elem x = 1;
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    exp_[k + q_ - 1] = x;
    log_[x] = std::uint32_t(k);
    x = raw_mul(x, gen);
  }
}

Elem Fq::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (s_ == 1) return Elem((std::uint64_t(a) + b) % p_);
  std::uint64_t r = 0, mul = 1;
  for (unsigned i = 0; i < s_; ++i) {
    std::uint64_t da = a % p_, db = b % p_;
    a = Elem(a / p_);
    b = Elem(b / p_);
    r += ((da + db) % p_) * mul;
    mul *= p_;
  }
  return Elem(r);
}

Elem Fq::neg(Elem a) const {
  if (p_ == 2) return a;
  if (s_ == 1) return a == 0 ? 0 : Elem(p_ - a);
  std::uint64_t r = 0, mul = 1;
  for (unsigned i = 0; i < s_; ++i) {
    std::uint64_t da = a % p_;
    a = Elem(a / p_);
    r += (da == 0 ? 0 : p_ - da) * mul;
    mul *= p_;
  }
  return Elem(r);
}

Elem Fq::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Fq::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem Fq::inv(Elem a) const {
  if (a == 0) throw error("division by zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Fq::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Fq::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw error("division by zero in F_q");
  }
  long long m = (long long)(q_ - 1);
  long long k = e % m;
  if (k < 0) k += m;
  return exp_[(std::uint64_t(log_[a]) * std::uint64_t(k)) % (q_ - 1)];
}

Elem Fq::frobenius(Elem a) const { return pow(a, (long long)p_); }

Elem Fq::from_int(long long n) const {
  long long r = n % (long long)p_;
  if (r < 0) r += (long long)p_;
  return Elem(r);
}

bool Fq::is_square(Elem a) const {
  if (p_ == 2) return true;  // Frobenius is bijective
  if (a == 0) return true;
  return pow(a, (long long)((q_ - 1) / 2)) == 1;
}

std::string Fq::to_str(Elem a) const {
  if (s_ == 1) return std::to_string(a);
  std::string body;
  auto d = digits(a, p_, s_);
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!body.empty()) body += '+';
    if (i == 0) {
      body += std::to_string(d[i]);
    } else {
      if (d[i] != 1) body += std::to_string(d[i]) + "*";
      body += 'g';
      if (i > 1) body += "^" + std::to_string(i);
    }
  }
  if (body.empty()) body = "0";
  return "(" + body + ")";
}

Elem find_nonsquare(const Fq& F) {
  if (F.p() == 2) throw error("find_nonsquare: no nonsquares in even characteristic");
  for (Elem a = 0; a < F.q(); ++a)
    if (!F.is_square(a)) return a;
  throw error("find_nonsquare: unreachable");
}

Elem find_as_nonimage(const Fq& F) {
  if (F.p() != 2) throw error("find_as_nonimage: q must be even");
  std::vector<bool> image(F.q(), false);
  for (Elem x = 0; x < F.q(); ++x) image[F.add(F.mul(x, x), x)] = true;
  for (Elem c = 0; c < F.q(); ++c)
    if (!image[c]) return c;
  throw error("find_as_nonimage: unreachable");
}

}  // namespace tadic
