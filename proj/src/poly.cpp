#include "tadic/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace tadic {

namespace {

void require_same_field(const FqPtr& a, const FqPtr& b) {
  if (!a || !b || !a->same(*b)) throw error("field mismatch");
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(const FqPtr& F, Elem a) {
  UniPoly r(F);
  if (a != 0) r.c_ = {a};
  return r;
}

UniPoly UniPoly::monomial(const FqPtr& F, Elem a, unsigned d) {
  UniPoly r(F);
  if (a != 0) {
    r.c_.assign(d + 1, 0);
    r.c_[d] = a;
  }
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require_same_field(F_, o.F_);
  std::vector<Elem> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F_->add(coeff(long(i)), o.coeff(long(i)));
  return UniPoly(F_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& a : r.c_) a = F_->neg(a);
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require_same_field(F_, o.F_);
  if (is_zero() || o.is_zero()) return UniPoly(F_);
  std::vector<Elem> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = F_->add(c[i + j], F_->mul(c_[i], o.c_[j]));
  }
  return UniPoly(F_, std::move(c));
}

UniPoly UniPoly::scaled(Elem a) const {
  if (a == 0) return UniPoly(F_);
  UniPoly r = *this;
  for (auto& x : r.c_) x = F_->mul(x, a);
  return r;
}

UniPoly UniPoly::shifted(long k) const {
  if (is_zero()) return *this;
  UniPoly r(F_);
  r.c_.assign(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
  UniPoly r = constant(F_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(F_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = F_->mul(c_[i], F_->from_int(long(i)));
  r.trim();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(F_->inv(lc()));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  require_same_field(F_, d.F_);
  if (d.is_zero()) throw error("division by zero polynomial");
  UniPoly q(F_), r = *this;
  if (deg() >= d.deg()) q.c_.assign(deg() - d.deg() + 1, 0);
  Elem dlci = F_->inv(d.lc());
  while (r.deg() >= d.deg()) {
    long k = r.deg() - d.deg();
    Elem t = F_->mul(r.lc(), dlci);
    q.c_[k] = t;
    for (long j = 0; j <= d.deg(); ++j)
      r.c_[k + j] = F_->sub(r.c_[k + j], F_->mul(t, d.c_[j]));
    r.trim();
  }
  q.trim();
  return {q, r};
}

std::optional<UniPoly> UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Elem UniPoly::eval(Elem x) const {
  Elem r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

long UniPoly::trailing() const {
  if (is_zero()) return -1;
  long k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

long UniPoly::ord_at(const UniPoly& pi) const {
  if (is_zero()) throw error("ord_at of zero polynomial");
  long n = 0;
  UniPoly a = *this;
  while (true) {
    auto q = a.exact_div(pi);
    if (!q) return n;
    a = *q;
    ++n;
  }
}

std::string UniPoly::to_str(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long j = deg(); j >= 0; --j) {
    Elem c = coeff(j);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string piece;
    if (c != 1 || j == 0) piece = F_->to_str(c);
    if (j >= 1) {
      if (!piece.empty()) piece += '*';
      piece += var;
      if (j > 1) piece += "^" + std::to_string(j);
    }
    out += piece;
  }
  return out;
}

// ------------------------------------------------- univariate factorization

std::vector<std::pair<UniPoly, int>> factor_univariate(const UniPoly& a) {
  if (a.is_zero()) throw error("factor_univariate: zero input");
  const FqPtr& F = a.field();
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = a.monic();

  // peel off powers of T first; the common case is a leading coefficient T^r
  long t = f.trailing();
  if (t > 0) {
    out.push_back({UniPoly::var(F), int(t)});
    std::vector<Elem> c(f.coeffs().begin() + t, f.coeffs().end());
    f = UniPoly(F, std::move(c));
  }

  // ascending trial division; any divisor found this way is irreducible
  for (unsigned d = 1; f.deg() >= 2 * long(d); ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
      count *= F->q();
      if (count > (1u << 22)) throw error("factor_univariate: enumeration budget exceeded");
    }
    for (std::uint64_t n = 0; n < count && f.deg() >= 2 * long(d); ++n) {
      std::vector<Elem> c;
      std::uint64_t m = n;
      for (unsigned i = 0; i < d; ++i) {
        c.push_back(Elem(m % F->q()));
        m /= F->q();
      }
      c.push_back(1);
      UniPoly pi(F, std::move(c));
      int mult = 0;
      while (true) {
        auto q = f.exact_div(pi);
        if (!q) break;
        f = *q;
        ++mult;
      }
      if (mult) out.push_back({pi, mult});
    }
  }
  if (f.deg() >= 1) out.push_back({f, 1});
  return out;
}

namespace {

// x^(q^k) mod f via repeated q-th powering
UniPoly frobenius_power(const UniPoly& f, const UniPoly& base) {
  UniPoly r = UniPoly::constant(f.field(), 1), b = base;
  std::uint64_t e = f.field()->q();
  while (e) {
    if (e & 1) r = (r * b).divrem(f).second;
    b = (b * b).divrem(f).second;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible(const UniPoly& f) {
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  const FqPtr& F = f.field();
  UniPoly x = UniPoly::var(F);
  UniPoly t = x;
  for (long k = 1; 2 * k <= f.deg(); ++k) {
    t = frobenius_power(f, t);  // x^(q^k) mod f
    UniPoly g = UniPoly::gcd(f, t - x);
    if (g.deg() > 0) return false;
  }
  return true;
}

UniPoly irreducible_poly(const FqPtr& F, unsigned d) {
  if (d < 1) throw error("irreducible_poly: degree must be positive");
  double budget = 1;
  for (unsigned i = 0; i < d; ++i) budget *= double(F->q());
  if (budget > double(1ULL << 40)) throw error("irreducible_poly: enumeration budget exceeded");
  std::uint64_t n = 0;
  while (true) {
    std::vector<Elem> c;
    std::uint64_t m = n;
    for (unsigned i = 0; i < d; ++i) {
      c.push_back(Elem(m % F->q()));
      m /= F->q();
    }
    if (m) throw error("irreducible_poly: none found");
    c.push_back(1);
    UniPoly f(F, std::move(c));
    if (is_irreducible(f)) return f;
    ++n;
  }
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const FqPtr& F, Elem a) { return from_uni(UniPoly::constant(F, a)); }

BiPoly BiPoly::from_uni(const UniPoly& a) {
  BiPoly r(a.field());
  if (!a.is_zero()) r.xc_ = {a};
  return r;
}

BiPoly BiPoly::term(const UniPoly& a, unsigned xdeg) {
  BiPoly r(a.field());
  if (!a.is_zero()) {
    r.xc_.assign(xdeg + 1, UniPoly::zero(a.field()));
    r.xc_[xdeg] = a;
  }
  return r;
}

long BiPoly::deg_T() const {
  long d = -1;
  for (auto& u : xc_) d = std::max(d, u.deg());
  return d;
}

UniPoly BiPoly::coeff(long i) const {
  if (i < 0 || i >= long(xc_.size())) return UniPoly::zero(F_);
  return xc_[i];
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  require_same_field(F_, o.F_);
  std::vector<UniPoly> c(std::max(xc_.size(), o.xc_.size()), UniPoly::zero(F_));
  for (size_t i = 0; i < c.size(); ++i) {
    UniPoly a = i < xc_.size() ? xc_[i] : UniPoly::zero(F_);
    UniPoly b = i < o.xc_.size() ? o.xc_[i] : UniPoly::zero(F_);
    c[i] = a + b;
  }
  return BiPoly(F_, std::move(c));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& u : r.xc_) u = -u;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  require_same_field(F_, o.F_);
  if (is_zero() || o.is_zero()) return BiPoly(F_);
  std::vector<UniPoly> c(xc_.size() + o.xc_.size() - 1, UniPoly::zero(F_));
  for (size_t i = 0; i < xc_.size(); ++i) {
    if (xc_[i].is_zero()) continue;
    for (size_t j = 0; j < o.xc_.size(); ++j) {
      if (o.xc_[j].is_zero()) continue;
      c[i + j] = c[i + j] + xc_[i] * o.xc_[j];
    }
  }
  return BiPoly(F_, std::move(c));
}

BiPoly BiPoly::scaled(Elem a) const {
  if (a == 0) return BiPoly(F_);
  BiPoly r = *this;
  for (auto& u : r.xc_) u = u.scaled(a);
  return r;
}

BiPoly BiPoly::scaled_uni(const UniPoly& a) const {
  if (a.is_zero()) return BiPoly(F_);
  BiPoly r = *this;
  for (auto& u : r.xc_) u = u * a;
  return r;
}

BiPoly BiPoly::pow(unsigned long e) const {
  BiPoly r = constant(F_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r(F_);
  if (xc_.size() <= 1) return r;
  r.xc_.assign(xc_.size() - 1, UniPoly::zero(F_));
  for (size_t i = 1; i < xc_.size(); ++i) r.xc_[i - 1] = xc_[i].scaled(F_->from_int(long(i)));
  r.trim();
  return r;
}

BiPoly BiPoly::compose_x(const BiPoly& g) const {
  require_same_field(F_, g.F_);
  BiPoly r(F_);
  for (size_t i = xc_.size(); i-- > 0;) r = r * g + from_uni(xc_[i]);
  return r;
}

BiPoly BiPoly::shift_x(Elem u) const {
  if (u == 0) return *this;
  BiPoly xu = x(F_) + constant(F_, u);
  return compose_x(xu);
}

BiPoly BiPoly::reverse_x() const {
  BiPoly r = *this;
  std::reverse(r.xc_.begin(), r.xc_.end());
  r.trim();
  return r;
}

UniPoly BiPoly::eval_x(Elem u) const {
  UniPoly r(F_);
  for (size_t i = xc_.size(); i-- > 0;) r = r.scaled(u) + xc_[i];
  return r;
}

BiPoly BiPoly::swap_vars() const {
  BiPoly r(F_);
  long dt = deg_T();
  if (dt < 0) return r;
  r.xc_.assign(dt + 1, UniPoly::zero(F_));
  for (long j = 0; j <= dt; ++j) {
    std::vector<Elem> c(xc_.size(), 0);
    for (size_t i = 0; i < xc_.size(); ++i) c[i] = xc_[i].coeff(j);
    r.xc_[j] = UniPoly(F_, std::move(c));
  }
  r.trim();
  return r;
}

BiPoly BiPoly::truncate_T(long n) const {
  BiPoly r = *this;
  for (auto& u : r.xc_) {
    std::vector<Elem> c(u.coeffs());
    if (long(c.size()) > n + 1) c.resize(n + 1);
    u = UniPoly(F_, std::move(c));
  }
  r.trim();
  return r;
}

UniPoly BiPoly::content_T() const {
  UniPoly g(F_);
  for (auto& u : xc_) g = UniPoly::gcd(g, u);
  return g;
}

BiPoly BiPoly::primitive_T() const {
  if (is_zero()) return *this;
  UniPoly g = content_T();
  BiPoly r = *this;
  for (auto& u : r.xc_) u = *u.exact_div(g);
  return r;
}

BiPoly BiPoly::normalize_minpoly() const {
  if (is_zero()) throw error("normalize_minpoly: zero polynomial");
  BiPoly r = primitive_T();
  r = r.scaled(F_->inv(r.lc_x().lc()));
  return r;
}

BiPoly BiPoly::gcd_x(BiPoly a, BiPoly b) {
  require_same_field(a.F_, b.F_);
  if (a.is_zero()) return b.is_zero() ? b : b.normalize_minpoly();
  if (b.is_zero()) return a.normalize_minpoly();
  a = a.primitive_T();
  b = b.primitive_T();
  if (a.deg_x() < b.deg_x()) std::swap(a, b);
  while (true) {
    if (b.deg_x() == 0) return BiPoly::constant(a.F_, 1);
    // pseudo-remainder of a by b
    BiPoly r = a;
    const UniPoly blc = b.lc_x();
    while (r.deg_x() >= b.deg_x()) {
      long k = r.deg_x() - b.deg_x();
      BiPoly t = term(r.lc_x(), unsigned(k));
      r = r.scaled_uni(blc) - b * t;
      if (r.is_zero()) break;
    }
    if (r.is_zero()) return b.normalize_minpoly();
    a = std::move(b);
    b = r.primitive_T();
  }
}

std::pair<BiPoly, bool> BiPoly::gcd_and_squarefree() const {
  if (deg_x() < 1) throw error("gcd_and_squarefree: constant in x");
  BiPoly g = gcd_x(*this, derivative_x());
  return {g, g.deg_x() == 0};
}

std::optional<BiPoly> BiPoly::exact_div(const BiPoly& d) const {
  require_same_field(F_, d.F_);
  if (d.is_zero()) throw error("division by zero polynomial");
  BiPoly q(F_), r = *this;
  if (r.is_zero()) return q;
  if (r.deg_x() < d.deg_x()) return std::nullopt;
  q.xc_.assign(r.deg_x() - d.deg_x() + 1, UniPoly::zero(F_));
  while (!r.is_zero() && r.deg_x() >= d.deg_x()) {
    long k = r.deg_x() - d.deg_x();
    auto c = r.lc_x().exact_div(d.lc_x());
    if (!c) return std::nullopt;
    q.xc_[k] = *c;
    r = r - d * term(*c, unsigned(k));
  }
  if (!r.is_zero()) return std::nullopt;
  q.trim();
  return q;
}

std::pair<UniPoly, long> BiPoly::substitute_rational(const UniPoly& num, const UniPoly& den) const {
  require_same_field(F_, num.field());
  require_same_field(F_, den.field());
  if (den.is_zero()) throw error("substitute_rational: zero denominator");
  long d = deg_x();
  if (d < 0) return {UniPoly::zero(F_), val_infinite};
  // Horner in num/den with the denominator cleared as we go
  UniPoly r(F_);
  for (long i = d; i >= 0; --i) {
    r = r * num + xc_[i] * den.pow(unsigned(d - i));
  }
  if (r.is_zero()) return {r, val_infinite};
  long ord = r.trailing() - d * den.trailing();
  return {r, ord};
}

// ------------------------------------------------------------------ print

std::string BiPoly::to_str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = deg_x(); i >= 0; --i) {
    const UniPoly& u = xc_[i];
    if (u.is_zero()) continue;
    if (!out.empty()) out += " + ";
    size_t nterms = 0;
    for (auto c : u.coeffs())
      if (c != 0) ++nterms;
    std::string piece;
    if (nterms >= 2) {
      piece = "(" + u.to_str('T') + ")";
    } else {
      long j = u.deg();
      Elem c = u.coeff(j);
      if (c != 1 || (j == 0 && i == 0)) piece = F_->to_str(c);
      if (j >= 1) {
        if (!piece.empty()) piece += '*';
        piece += 'T';
        if (j > 1) piece += "^" + std::to_string(j);
      }
    }
    if (i >= 1) {
      if (!piece.empty()) piece += '*';
      piece += 'x';
      if (i > 1) piece += "^" + std::to_string(i);
    }
    out += piece;
  }
  return out;
}

// ------------------------------------------------------------------ parse

namespace {

struct Parser {
  const FqPtr& F;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && isspace(unsigned(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw error("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  unsigned long number() {
    skip();
    if (pos >= s.size() || !isdigit(unsigned(s[pos]))) fail("expected a number");
    unsigned long n = 0;
    while (pos < s.size() && isdigit(unsigned(s[pos]))) {
      n = n * 10 + (s[pos] - '0');
      if (n > 1000000) fail("number too large");
      ++pos;
    }
    return n;
  }

  BiPoly expr() {
    BiPoly r = termp();
    while (true) {
      if (eat('+')) {
        r = r + termp();
      } else if (eat('-')) {
        r = r - termp();
      } else {
        return r;
      }
    }
  }

  bool starts_factor() {
    char c = peek();
    return isdigit(unsigned(c)) || c == 'T' || c == 'x' || c == 'g' || c == '(';
  }

  BiPoly termp() {
    BiPoly r = factor();
    while (true) {
      if (eat('*')) {
        r = r * factor();
      } else if (starts_factor()) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  BiPoly factor() {
    if (eat('-')) return -factor();
    BiPoly base = atom();
    if (eat('^')) return base.pow(number());
    return base;
  }

  BiPoly atom() {
    char c = peek();
    if (isdigit(unsigned(c))) return BiPoly::constant(F, F->from_int(long(number())));
    if (c == 'T') {
      ++pos;
      return BiPoly::from_uni(UniPoly::var(F));
    }
    if (c == 'x') {
      ++pos;
      return BiPoly::x(F);
    }
    if (c == 'g') {
      ++pos;
      if (F->s() < 2) fail("'g' is only defined for non-prime fields");
      return BiPoly::constant(F, Elem(F->p()));
    }
    if (c == '(') {
      ++pos;
      BiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    fail("unexpected character");
  }
};

}  // namespace

BiPoly parse_bipoly(const FqPtr& F, const std::string& text) {
  Parser p{F, text};
  BiPoly r = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

// ------------------------------------------------------------------ Mobius

Mobius::Mobius(FqPtr F, Elem a, Elem b, Elem c, Elem d)
    : F_(std::move(F)), a_(a), b_(b), c_(c), d_(d) {
  Elem det = F_->sub(F_->mul(a_, d_), F_->mul(b_, c_));
  if (det == 0) throw error("Mobius: zero determinant");
  Elem lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : (c_ != 0 ? c_ : d_));
  Elem s = F_->inv(lead);
  a_ = F_->mul(a_, s);
  b_ = F_->mul(b_, s);
  c_ = F_->mul(c_, s);
  d_ = F_->mul(d_, s);
}

Mobius Mobius::inverse() const { return Mobius(F_, d_, F_->neg(b_), F_->neg(c_), a_); }

std::vector<Mobius> Mobius::all(const FqPtr& F) {
  std::vector<Mobius> out;
  auto q = Elem(F->q());
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        for (Elem d = 0; d < q; ++d) {
          if (F->sub(F->mul(a, d), F->mul(b, c)) == 0) continue;
          Elem lead = a != 0 ? a : (b != 0 ? b : (c != 0 ? c : d));
          if (lead != 1) continue;  // one representative per projective class
          out.emplace_back(F, a, b, c, d);
        }
  return out;
}

std::string Mobius::to_str() const {
  auto lin = [&](Elem u, Elem v) {
    UniPoly l(F_, {v, u});
    std::string s = l.to_str('x');
    return s;
  };
  return "(" + lin(a_, b_) + ")/(" + lin(c_, d_) + ")";
}

BiPoly transform_x(const BiPoly& f, const Mobius& m) {
  if (f.is_zero()) throw error("transform_x: zero polynomial");
  require_same_field(f.field(), m.field());
  const FqPtr& F = f.field();
  long n = f.deg_x();
  BiPoly A = BiPoly::x(F).scaled(m.a()) + BiPoly::constant(F, m.b());
  BiPoly C = BiPoly::x(F).scaled(m.c()) + BiPoly::constant(F, m.d());
  std::vector<BiPoly> apow(n + 1), cpow(n + 1);
  apow[0] = cpow[0] = BiPoly::constant(F, 1);
  for (long i = 1; i <= n; ++i) {
    apow[i] = apow[i - 1] * A;
    cpow[i] = cpow[i - 1] * C;
  }
  BiPoly r(F);
  for (long i = 0; i <= n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    r = r + (apow[i] * cpow[n - i]).scaled_uni(f.coeff(i));
  }
  if (r.is_zero()) throw error("transform_x: result vanishes identically");
  return r.normalize_minpoly();
}

// ------------------------------------------------------------------ places

Place Place::at(const UniPoly& pi) {
  if (pi.deg() < 1 || pi.lc() != 1) throw error("place: the polynomial must be monic of positive degree");
  if (!is_irreducible(pi)) throw error("place: the polynomial is not irreducible");
  return Place{false, pi};
}

long Place::value(const UniPoly& a) const {
  if (a.is_zero()) return val_infinite;
  if (at_infinity) return -a.deg();
  if (pi.deg() == 1 && pi.coeff(0) == 0) return a.trailing();
  return a.ord_at(pi);
}

long NewtonPolygon::pole_mass() const {
  long m = 0;
  for (size_t k = 0; k + 1 < vertices.size(); ++k)
    m += std::max(0L, vertices[k + 1].second - vertices[k].second);
  return m;
}

std::string NewtonPolygon::to_str() const {
  std::string s = "vertices:";
  for (auto& [i, v] : vertices) s += " (" + std::to_string(i) + "," + std::to_string(v) + ")";
  s += "; slopes:";
  for (auto& sl : slopes) {
    s += " " + std::to_string(sl.num);
    if (sl.den != 1) s += "/" + std::to_string(sl.den);
    s += " (len " + std::to_string(sl.length) + ")";
  }
  return s;
}

NewtonPolygon newton_polygon(const BiPoly& f, const Place& place) {
  if (f.is_zero()) throw error("newton_polygon: zero polynomial");
  std::vector<std::pair<long, long>> pts;
  for (long i = 0; i <= f.deg_x(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    pts.push_back({i, place.value(f.coeff(i))});
  }
  auto cross = [](std::pair<long, long> a, std::pair<long, long> b, std::pair<long, long> c) {
    return (b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * (c.first - a.first);
  };
  NewtonPolygon np;
  for (auto& p : pts) {
    while (np.vertices.size() >= 2 &&
           cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), p) <= 0)
      np.vertices.pop_back();
    np.vertices.push_back(p);
  }
  for (size_t k = 0; k + 1 < np.vertices.size(); ++k) {
    long di = np.vertices[k + 1].first - np.vertices[k].first;
    long dv = np.vertices[k + 1].second - np.vertices[k].second;
    long g = std::gcd(std::abs(dv), di);
    if (g == 0) g = 1;
    np.slopes.push_back({dv / g, di / g, di});
  }
  return np;
}

bool polygon_certifies_irreducible(const BiPoly& f, const Place& place) {
  if (f.is_zero() || f.deg_x() < 1) return false;
  if (f.coeff(0).is_zero()) return false;
  NewtonPolygon np = newton_polygon(f, place);
  if (np.vertices.size() != 2) return false;
  long run = np.vertices[1].first - np.vertices[0].first;
  long rise = std::abs(np.vertices[1].second - np.vertices[0].second);
  if (run != f.deg_x()) return false;
  return std::gcd(rise, run) == 1;
}

// -------------------------------------------------------------- resultants

BiPoly resultant_y(const std::vector<BiPoly>& A, const std::vector<BiPoly>& B) {
  auto top = [](const std::vector<BiPoly>& P) {
    long d = long(P.size()) - 1;
    while (d >= 0 && P[d].is_zero()) --d;
    return d;
  };
  long m = top(A), n = top(B);
  if (m < 1 || n < 1) throw error("resultant_y: degenerate degrees");
  const FqPtr& F = A[0].field();
  long N = m + n;
  std::vector<std::vector<BiPoly>> M(N, std::vector<BiPoly>(N, BiPoly::zero(F)));
  for (long r = 0; r < n; ++r)
    for (long j = 0; j <= m; ++j) M[r][r + j] = A[m - j];
  for (long r = 0; r < m; ++r)
    for (long j = 0; j <= n; ++j) M[n + r][r + j] = B[n - j];

  // Bareiss fraction-free elimination with row pivoting
  bool negate = false;
  BiPoly prev = BiPoly::constant(F, 1);
  for (long k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      long r = k + 1;
      while (r < N && M[r][k].is_zero()) ++r;
      if (r == N) return BiPoly::zero(F);
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    for (long i = k + 1; i < N; ++i) {
      for (long j = k + 1; j < N; ++j) {
        BiPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        auto q = t.exact_div(prev);
        if (!q) throw error("resultant_y: internal division failure");
        M[i][j] = *q;
      }
      M[i][k] = BiPoly::zero(F);
    }
    prev = M[k][k];
  }
  BiPoly res = M[N - 1][N - 1];
  if (negate) res = -res;
  return res;
}

}  // namespace tadic
