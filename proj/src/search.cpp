#include "tadic/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tadic {

std::uint64_t SplitMix64::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  s_ += 0x9E3779B97F4A7C15ULL;
  return mix64(s_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw error("below(0)");
  std::uint64_t limit = ~0ULL - (~0ULL % bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

BiPoly random_candidate(const FqPtr& F, const RandomSpec& spec, std::uint64_t k) {
  long n = spec.n;
  SplitMix64 rng(SplitMix64::mix64(spec.seed + (k + 1) * 0x9E3779B97F4A7C15ULL));
  auto draw_poly = [&](long deg) {
    std::vector<Elem> c(deg + 1, 0);
    do {
      c[0] = Elem(rng.below(F->q()));
    } while (c[0] == 0);
    for (long j = 1; j <= deg; ++j) c[j] = Elem(rng.below(F->q()));
    return UniPoly(F, std::move(c));
  };

  BiPoly f = BiPoly::constant(F, 1);
  UniPoly T = UniPoly::var(F);
  for (long i = 0; i < n; ++i) {
    UniPoly a = draw_poly(n);
    f = f * (BiPoly::term(T, 1) - BiPoly::from_uni(a));
  }
  for (Elem u = 0; u < F->q(); ++u)
    for (long i = 0; i < n; ++i) {
      UniPoly b = draw_poly(n - 1);
      f = f * (BiPoly::x(F) - BiPoly::constant(F, u) - BiPoly::from_uni(b.shifted(1)));
    }
  return f.truncate_T(n);
}

bool newton_filter(const BiPoly& f, long n) {
  const FqPtr& F = f.field();
  long q = long(F->q());
  std::vector<std::pair<long, long>> want = {{0, n}, {n, 0}, {n * q, 0}, {n * (q + 1), n}};
  for (Elem u = 0; u < F->q(); ++u) {
    if (newton_polygon(f.shift_x(u), Place::ord0(F)).vertices != want) return false;
  }
  return true;
}

SearchReport random_search(const FqPtr& F, const RandomSpec& spec, bool stop_after_first) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.q = F->q();
  rep.n = spec.n;
  rep.seed_or_space = "seed=" + std::to_string(spec.seed);
  for (std::uint64_t k = 1; k <= spec.budget; ++k) {
    BiPoly f = random_candidate(F, spec, k);
    ++rep.tested;
    if (!newton_filter(f, spec.n)) continue;
    ++rep.passed_newton;
    if (has_rational_root(f)) continue;
    ++rep.passed_rootless;
    if (!f.gcd_and_squarefree().second) continue;
    ++rep.passed_squarefree;
    std::vector<TruncSeries> roots;
    SplitProfile sp = split_profile_with_roots(f, -1, roots);
    if (!sp.splits) continue;
    ++rep.split_count;
    Factorization fact = recombine_irreducible(f, roots);
    if (!fact.is_irreducible()) continue;
    ++rep.irreducible_count;
    BiPoly g = f.normalize_minpoly();
    if (!check_min_height_criteria(g).pass)
      throw error("random_search: a full-pipeline hit failed re-verification");
    rep.hits.push_back(g.to_str());
    if (stop_after_first) break;
  }
  std::sort(rep.hits.begin(), rep.hits.end());
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ------------------------------------------------------------ linear system

namespace {

struct LinearSystem {
  const FqPtr& F;
  std::size_t vars;
  std::vector<std::vector<Elem>> rows;  // augmented, length vars + 1

  void add_row(std::vector<Elem> row) {
    bool all0 = std::all_of(row.begin(), row.end(), [](Elem e) { return e == 0; });
    if (!all0) rows.push_back(std::move(row));
  }
};

Elem binom_mod(const FqPtr& F, long n, long k, std::vector<std::vector<Elem>>& pascal) {
  if (k < 0 || k > n) return 0;
  while (long(pascal.size()) <= n) {
    long m = long(pascal.size());
    std::vector<Elem> row(m + 1, 1);
    for (long j = 1; j < m; ++j) row[j] = F->add(pascal[m - 1][j - 1], pascal[m - 1][j]);
    pascal.push_back(std::move(row));
  }
  return pascal[n][k];
}

}  // namespace

AffineSpace build_linear_system(const FqPtr& F, long n) {
  if (n < 1) throw error("build_linear_system: n must be positive");
  long q = long(F->q());
  long d = n * (q + 1);
  AffineSpace sp;
  sp.F = F;
  sp.n = n;
  sp.num_vars = std::size_t(d - 1) * std::size_t(n + 1);
  auto col = [&](long i, long j) { return std::size_t(i - 1) * std::size_t(n + 1) + std::size_t(j); };

  LinearSystem sys{F, sp.num_vars, {}};
  auto blank = [&] { return std::vector<Elem>(sp.num_vars + 1, 0); };
  std::vector<std::vector<Elem>> pascal;

  // left and right Newton-polygon edges: T^(n-i) | A_i and T^(n-i) | A_(d-i)
  for (long i = 1; i <= n - 1; ++i)
    for (long j = 0; j <= n - i - 1; ++j) {
      auto row = blank();
      row[col(i, j)] = 1;
      sys.add_row(row);
    }
  for (long i = 1; i <= n - 1; ++i)
    for (long j = 0; j <= n - i - 1; ++j) {
      auto row = blank();
      row[col(d - i, j)] = 1;
      sys.add_row(row);
    }
  // polygon vertices at (n, 0) and (nq, 0)
  {
    auto row = blank();
    row[col(n, 0)] = 1;
    row[sp.num_vars] = 1;
    sys.add_row(row);
  }
  {
    auto row = blank();
    row[col(n * q, 0)] = 1;
    row[sp.num_vars] = 1;
    sys.add_row(row);
  }

  // ord_0 f(1/T) >= -n: coefficients of T^e in sum_i A_i T^(d-i) vanish
  // below T^(d-n); the fixed ends contribute T^n (constant) only
  for (long e = 1; e <= d - n - 1; ++e) {
    auto row = blank();
    for (long i = 1; i <= d - 1; ++i) {
      long j = e - d + i;
      if (j >= 0 && j <= n) row[col(i, j)] = F->add(row[col(i, j)], 1);
    }
    if (e == n) row[sp.num_vars] = F->add(row[sp.num_vars], F->neg(1));
    // move constants to the right-hand side: sum = -constant
    if (row[sp.num_vars] != 0) row[sp.num_vars] = F->neg(row[sp.num_vars]);
    sys.add_row(row);
  }

  // ord_0 f(T+u) >= 2n for every u
  for (Elem u = 0; u < F->q(); ++u) {
    for (long e = 0; e <= 2 * n - 1; ++e) {
      auto row = blank();
      for (long i = 1; i <= d - 1; ++i)
        for (long j = 0; j <= std::min<long>(n, e); ++j) {
          long kk = e - j;
          if (kk > i) continue;
          Elem b = binom_mod(F, i, kk, pascal);
          if (b == 0) continue;
          Elem term = F->mul(b, F->pow(u, i - kk));
          row[col(i, j)] = F->add(row[col(i, j)], term);
        }
      Elem rhs = 0;
      if (e == n) rhs = F->add(rhs, 1);  // the constant coefficient T^n
      if (e >= n) {
        Elem b = binom_mod(F, d, e - n, pascal);
        rhs = F->add(rhs, F->mul(b, F->pow(u, d - (e - n))));  // T^n x^d at x = T+u
      }
      row[sp.num_vars] = F->neg(rhs);
      sys.add_row(row);
    }
  }

  sp.raw_constraints = sys.rows.size();

  // Gaussian elimination
  std::size_t nrows = sys.rows.size();
  std::vector<long> pivot_of_col(sp.num_vars, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < sp.num_vars && rank < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t r = rank; r < nrows; ++r)
      if (sys.rows[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel == nrows) continue;
    std::swap(sys.rows[rank], sys.rows[sel]);
    Elem inv = F->inv(sys.rows[rank][c]);
    for (auto& v : sys.rows[rank]) v = F->mul(v, inv);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || sys.rows[r][c] == 0) continue;
      Elem m = sys.rows[r][c];
      for (std::size_t cc = 0; cc <= sp.num_vars; ++cc)
        sys.rows[r][cc] = F->sub(sys.rows[r][cc], F->mul(m, sys.rows[rank][cc]));
    }
    pivot_of_col[c] = long(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < nrows; ++r)
    if (sys.rows[r][sp.num_vars] != 0) {
      sp.consistent = false;
      sp.dim = 0;
      return sp;
    }

  for (std::size_t c = 0; c < sp.num_vars; ++c)
    if (pivot_of_col[c] < 0) sp.free_cols.push_back(c);
  sp.dim = sp.free_cols.size();

  sp.particular.assign(sp.num_vars, 0);
  for (std::size_t c = 0; c < sp.num_vars; ++c)
    if (pivot_of_col[c] >= 0) sp.particular[c] = sys.rows[pivot_of_col[c]][sp.num_vars];

  for (std::size_t t = 0; t < sp.dim; ++t) {
    std::vector<Elem> v(sp.num_vars, 0);
    std::size_t fc = sp.free_cols[t];
    v[fc] = 1;
    for (std::size_t c = 0; c < sp.num_vars; ++c)
      if (pivot_of_col[c] >= 0) v[c] = F->neg(sys.rows[pivot_of_col[c]][fc]);
    sp.basis.push_back(std::move(v));
  }
  return sp;
}

std::uint64_t AffineSpace::hash() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001B3ULL;
  };
  mix(F->q());
  mix(std::uint64_t(n));
  mix(num_vars);
  mix(dim);
  for (Elem e : particular) mix(e + 1);
  for (auto& b : basis)
    for (Elem e : b) mix(e + 2);
  return h;
}

std::uint64_t AffineSpace::size() const {
  std::uint64_t s = 1;
  for (std::size_t t = 0; t < dim; ++t) {
    if (s > (~0ULL) / F->q()) throw error("affine space too large to enumerate");
    s *= F->q();
  }
  return consistent ? s : 0;
}

std::vector<Elem> AffineSpace::point_at(std::uint64_t index) const {
  std::vector<Elem> v = particular;
  for (std::size_t t = 0; t < dim; ++t) {
    Elem digit = Elem(index % F->q());
    index /= F->q();
    if (digit != 0)
      for (std::size_t c = 0; c < num_vars; ++c)
        v[c] = F->add(v[c], F->mul(digit, basis[t][c]));
  }
  return v;
}

BiPoly AffineSpace::materialize(const std::vector<Elem>& point) const {
  long q = long(F->q());
  long d = n * (q + 1);
  std::vector<UniPoly> xc(d + 1, UniPoly::zero(F));
  xc[0] = UniPoly::monomial(F, 1, unsigned(n));
  xc[d] = xc[0];
  for (long i = 1; i <= d - 1; ++i) {
    std::vector<Elem> c(n + 1, 0);
    for (long j = 0; j <= n; ++j) c[j] = point[std::size_t(i - 1) * (n + 1) + j];
    xc[i] = UniPoly(F, std::move(c));
  }
  return BiPoly(F, std::move(xc));
}

// -------------------------------------------------------------- exhaustive

namespace {

struct Checkpoint {
  std::uint64_t hash = 0;
  std::uint64_t q = 0;
  long n = 0;
  unsigned shard = 0, total = 1;
  std::uint64_t done = 0;
  std::uint64_t tested = 0, rootless = 0, squarefree = 0, split = 0, irreducible = 0;
  std::vector<std::string> hits;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw error("cannot write checkpoint: " + path);
    out << "tadic-checkpoint v1\n";
    out << "hash " << cp.hash << "\n";
    out << "q " << cp.q << "\nn " << cp.n << "\nshard " << cp.shard << "\ntotal " << cp.total
        << "\n";
    out << "done " << cp.done << "\n";
    out << "tested " << cp.tested << " rootless " << cp.rootless << " squarefree "
        << cp.squarefree << " split " << cp.split << " irreducible " << cp.irreducible << "\n";
    out << "hits " << cp.hits.size() << "\n";
    for (auto& h : cp.hits) out << h << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw error("cannot move checkpoint into place");
}

bool read_checkpoint(const std::string& path, Checkpoint& cp) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line, word;
  if (!std::getline(in, line) || line != "tadic-checkpoint v1")
    throw error("checkpoint refused: unknown header in " + path);
  in >> word >> cp.hash >> word >> cp.q >> word >> cp.n >> word >> cp.shard >> word >> cp.total;
  in >> word >> cp.done;
  in >> word >> cp.tested >> word >> cp.rootless >> word >> cp.squarefree >> word >> cp.split >>
      word >> cp.irreducible;
  std::size_t k = 0;
  in >> word >> k;
  std::getline(in, line);
  cp.hits.clear();
  for (std::size_t i = 0; i < k; ++i) {
    std::getline(in, line);
    cp.hits.push_back(line);
  }
  return true;
}

}  // namespace

SearchReport exhaustive_search(const AffineSpace& space, const ExhaustiveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  const FqPtr& F = space.F;
  std::uint64_t q = F->q();

  // total_shards must be a power of q not exceeding the space
  std::uint64_t t = 0, pow = 1;
  while (pow < opt.total_shards) {
    pow *= q;
    ++t;
  }
  if (pow != opt.total_shards || t > space.dim)
    throw error("exhaustive_search: total_shards must be a power of q within the space");
  if (opt.shard >= opt.total_shards) throw error("exhaustive_search: shard index out of range");

  SearchReport rep;
  rep.q = q;
  rep.n = space.n;
  rep.shard = opt.shard;
  rep.total_shards = opt.total_shards;
  {
    std::ostringstream os;
    os << "space dim=" << space.dim << " hash=" << space.hash();
    rep.seed_or_space = os.str();
  }

  std::uint64_t block = 1;
  for (std::size_t i = 0; i < space.dim - t; ++i) block *= q;
  if (!space.consistent) {
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  Checkpoint cp;
  cp.hash = space.hash();
  cp.q = q;
  cp.n = space.n;
  cp.shard = opt.shard;
  cp.total = opt.total_shards;
  if (!opt.checkpoint_path.empty()) {
    Checkpoint old;
    if (read_checkpoint(opt.checkpoint_path, old)) {
      if (old.hash != cp.hash || old.q != cp.q || old.n != cp.n || old.shard != cp.shard ||
          old.total != cp.total) {
        std::ostringstream os;
        os << "checkpoint refused: mismatch (file: hash=" << old.hash << " q=" << old.q
           << " n=" << old.n << " shard=" << old.shard << "/" << old.total
           << "; expected: hash=" << cp.hash << " q=" << cp.q << " n=" << cp.n
           << " shard=" << cp.shard << "/" << cp.total << ")";
        throw error(os.str());
      }
      cp = old;
    }
  }

  std::uint64_t base = std::uint64_t(opt.shard) * block;

  // word-packed path for q = 2: the whole coefficient vector fits in one
  // word and the f(1) = 0 prune is a block-fold of that word; candidates
  // walk a Gray code so only surviving ones are materialized
  bool fast2 = q == 2 && space.num_vars <= 64;
  std::uint64_t fold_particular = 0;
  std::vector<std::uint64_t> fold_basis(space.dim, 0);
  std::uint64_t block_mask = (space.n < 63) ? ((1ULL << (space.n + 1)) - 1) : ~0ULL;
  if (fast2) {
    auto fold_blocks = [&](const std::vector<Elem>& vec) {
      std::uint64_t v = 0;
      for (std::size_t c = 0; c < space.num_vars; ++c)
        if (vec[c]) v |= 1ULL << c;
      std::uint64_t f = 0;
      for (std::size_t i = 0; i < space.num_vars / (space.n + 1); ++i)
        f ^= (v >> (i * (space.n + 1))) & block_mask;
      return f;
    };
    fold_particular = fold_blocks(space.particular);
    for (std::size_t tt = 0; tt < space.dim; ++tt) fold_basis[tt] = fold_blocks(space.basis[tt]);
  }
  auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };

  rep.tested = cp.tested;
  rep.passed_rootless = cp.rootless;
  rep.passed_squarefree = cp.squarefree;
  rep.split_count = cp.split;
  rep.irreducible_count = cp.irreducible;
  rep.hits = cp.hits;

  auto save = [&](std::uint64_t done) {
    cp.done = done;
    cp.tested = rep.tested;
    cp.rootless = rep.passed_rootless;
    cp.squarefree = rep.passed_squarefree;
    cp.split = rep.split_count;
    cp.irreducible = rep.irreducible_count;
    cp.hits = rep.hits;
    write_checkpoint(opt.checkpoint_path, cp);
  };

  std::uint64_t low = cp.done;
  std::uint64_t steps = 0, since_save = 0;
  for (; low < block; ++low) {
    if (opt.limit && steps >= opt.limit) break;
    ++steps;
    std::uint64_t idx = base + (fast2 ? gray(low) : low);
    ++rep.tested;
    bool pruned = false;
    if (fast2) {
      std::uint64_t g = gray(low);
      if (t > 0) g |= std::uint64_t(opt.shard) << (space.dim - t);
      std::uint64_t fold = fold_particular;
      for (std::size_t tt = 0; tt < space.dim; ++tt)
        if ((g >> tt) & 1) fold ^= fold_basis[tt];
      pruned = fold == 0;  // f(1) = 0; f(0) = T^n never vanishes
    }
    if (!pruned) {
      BiPoly f = space.materialize(space.point_at(idx));
      if (fast2 || !has_rational_root(f)) {
        ++rep.passed_rootless;
        if (f.gcd_and_squarefree().second) {
          ++rep.passed_squarefree;
          std::vector<TruncSeries> roots;
          if (split_profile_with_roots(f, -1, roots).splits) {
            ++rep.split_count;
            if (recombine_irreducible(f, roots).is_irreducible()) {
              ++rep.irreducible_count;
              BiPoly hit = f.normalize_minpoly();
              if (!check_min_height_criteria(hit).pass)
                throw error("exhaustive_search: a hit failed re-verification");
              rep.hits.push_back(hit.to_str());
            }
          }
        }
      }
    }
    if (!opt.checkpoint_path.empty() && ++since_save >= opt.checkpoint_interval) {
      since_save = 0;
      save(low + 1);
    }
  }
  std::sort(rep.hits.begin(), rep.hits.end());
  rep.passed_newton = rep.tested;  // the space already encodes the polygon constraints
  if (!opt.checkpoint_path.empty()) save(low);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace tadic
