#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include "tadic/io.hpp"

using namespace tadic;
using nlohmann::json;

namespace {

FqPtr field_for(std::uint64_t q) {
  if (q < 2) throw error("q must be a prime power >= 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned s = 0;
  std::uint64_t r = q;
  while (r > 1) {
    if (r % p != 0) throw error("q = " + std::to_string(q) + " is not a prime power");
    r /= p;
    ++s;
  }
  return Fq::make(p, s);
}

void emit(const std::string& text, const json& j, const std::string& format,
          const std::string& out) {
  std::string payload = format == "json" ? j.dump(2) + "\n" : text;
  if (out.empty() || out == "-") {
    std::cout << payload;
  } else {
    std::ofstream os(out);
    if (!os) throw error("cannot open output file: " + out);
    os << payload;
  }
}

struct usage_error : error {
  using error::error;
};

int run(int argc, char** argv) {
  CLI::App app{"exact computations with totally T-adic algebraic functions over F_q(T)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", out;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "output path (default stdout)");

  auto* sv = app.add_subcommand("verify", "run the full pipeline on one polynomial");
  std::string poly_str;
  std::uint64_t q = 2;
  sv->add_option("poly", poly_str, "polynomial in T and x")->required();
  sv->add_option("--q", q, "field size")->required();

  auto* sh = app.add_subcommand("height", "height of a polynomial, two ways");
  std::string hpoly;
  std::uint64_t hq = 2;
  sh->add_option("poly", hpoly)->required();
  sh->add_option("--q", hq)->required();

  auto* sn = app.add_subcommand("np", "Newton polygon at a place");
  std::string npoly, place_str = "T";
  std::uint64_t nq = 2;
  sn->add_option("poly", npoly)->required();
  sn->add_option("--q", nq)->required();
  sn->add_option("--place", place_str, "T, inf, or a monic irreducible in T");

  auto* sc = app.add_subcommand("construct", "generate and verify a family member");
  std::string family;
  std::uint64_t cq = 2;
  long cn = 0, cj = 0;
  sc->add_option("--family", family,
                 "gonality-one | cyclic | char2 | phi-tower | psi-tower | integral | unit")
      ->required();
  sc->add_option("--q", cq)->required();
  sc->add_option("--n", cn, "family parameter n");
  sc->add_option("--j", cj, "tower level j");

  auto* ss = app.add_subcommand("search", "randomized or exhaustive search");
  ss->require_subcommand(1);
  auto* sr = ss->add_subcommand("random", "randomized candidate search");
  std::uint64_t rq = 3, rbudget = 1024, rseed = 0;
  long rn = 1;
  bool rall = false;
  sr->add_option("--q", rq)->required();
  sr->add_option("--n", rn)->required();
  sr->add_option("--budget", rbudget)->required();
  sr->add_option("--seed", rseed)->required();
  sr->add_flag("--all", rall, "keep searching after the first hit");

  auto* se = ss->add_subcommand("exhaustive", "enumerate the constrained affine space");
  std::uint64_t eq = 2;
  long en = 1;
  unsigned eshard = 0, etotal = 1, ejobs = 1;
  std::string echeckpoint;
  se->add_option("--q", eq)->required();
  se->add_option("--n", en)->required();
  se->add_option("--shard", eshard);
  se->add_option("--total-shards", etotal);
  se->add_option("--jobs", ejobs, "run all shards of the layout on this many threads");
  se->add_option("--checkpoint", echeckpoint, "checkpoint file (per shard)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (sv->parsed()) {
    FqPtr F = field_for(q);
    CandidateReport rep = verify_candidate(parse_bipoly(F, poly_str));
    emit(render_text(rep), to_json(rep), format, out);
    return rep.certified_minimal ? 0 : 1;
  }

  if (sh->parsed()) {
    FqPtr F = field_for(hq);
    BiPoly f = parse_bipoly(F, hpoly);
    HeightValue hm = height_minpoly(f);
    json j{{"poly", f.normalize_minpoly().to_str()}, {"height", hm.to_str()}};
    std::string text = "height " + hm.to_str() + "\n";
    if (f.deg_x() >= 1 && f.gcd_and_squarefree().second) {
      HeightValue hl = height_local(f);
      j["height_by_places"] = hl.to_str();
      text += "by places " + hl.to_str() + "\n";
    }
    emit(text, j, format, out);
    return 0;
  }

  if (sn->parsed()) {
    FqPtr F = field_for(nq);
    BiPoly f = parse_bipoly(F, npoly);
    Place pl = Place::ord0(F);
    if (place_str == "inf" || place_str == "infinity") {
      pl = Place::infinity();
    } else if (place_str != "T") {
      BiPoly pp = parse_bipoly(F, place_str);
      if (pp.deg_x() != 0) throw usage_error("a place must be a polynomial in T only");
      pl = Place::at(pp.coeff(0));
    }
    NewtonPolygon np = newton_polygon(f, pl);
    emit(np.to_str() + "\n", to_json(np), format, out);
    return 0;
  }

  if (sc->parsed()) {
    FqPtr F = field_for(cq);
    auto fam = family_from_name(family);
    if (!fam) throw usage_error("unknown family: " + family);
    ConstructionResult res;
    try {
      switch (*fam) {
        case Family::gonality_one: res = gonality_one(F); break;
        case Family::cyclic: res = cyclic_family(F, cn); break;
        case Family::char2_hyperelliptic: res = char2_hyperelliptic(F); break;
        case Family::phi_tower: res = phi_tower(F, cj ? cj : cn); break;
        case Family::psi_tower: res = psi_tower(F, cn ? cn : cj); break;
        case Family::integral_base: res = base_examples(F).first; break;
        case Family::unit_base: res = base_examples(F).second; break;
      }
    } catch (const error& e) {
      // family preconditions are usage errors
      throw usage_error(e.what());
    }
    emit(render_text(res), to_json(res), format, out);
    return res.verified ? 0 : 1;
  }

  if (sr->parsed()) {
    FqPtr F = field_for(rq);
    SearchReport rep = random_search(F, RandomSpec{rq, rn, rbudget, rseed}, !rall);
    emit(render_text(rep), to_json(rep), format, out);
    return 0;
  }

  if (se->parsed()) {
    FqPtr F = field_for(eq);
    AffineSpace space = build_linear_system(F, en);
    if (double(space.dim) * std::log2(double(eq)) > 34)
      std::cerr << "warning: the space has q^" << space.dim
                << " candidates; expect a very long enumeration\n";
    if (ejobs > 1 && se->count("--shard") == 0) {
      unsigned total = etotal;
      if (total == 1)
        while (total < ejobs) total *= unsigned(eq);
      std::vector<SearchReport> reps(total);
      std::vector<std::thread> pool;
      std::atomic<unsigned> next{0};
      for (unsigned w = 0; w < ejobs; ++w)
        pool.emplace_back([&, total] {
          while (true) {
            unsigned shard = next.fetch_add(1);
            if (shard >= total) return;
            ExhaustiveOptions o;
            o.shard = shard;
            o.total_shards = total;
            if (!echeckpoint.empty())
              o.checkpoint_path = echeckpoint + ".shard" + std::to_string(shard);
            reps[shard] = exhaustive_search(space, o);
          }
        });
      for (auto& th : pool) th.join();
      SearchReport rep = reps[0];
      for (unsigned shard = 1; shard < total; ++shard) {
        rep.tested += reps[shard].tested;
        rep.passed_newton += reps[shard].passed_newton;
        rep.passed_rootless += reps[shard].passed_rootless;
        rep.passed_squarefree += reps[shard].passed_squarefree;
        rep.split_count += reps[shard].split_count;
        rep.irreducible_count += reps[shard].irreducible_count;
        rep.hits.insert(rep.hits.end(), reps[shard].hits.begin(), reps[shard].hits.end());
      }
      std::sort(rep.hits.begin(), rep.hits.end());
      rep.shard = 0;
      rep.total_shards = 1;
      emit(render_text(rep), to_json(rep), format, out);
      return 0;
    }
    {
      std::uint64_t pow = 1;
      while (pow < etotal) pow *= eq;
      if (pow != etotal || eshard >= etotal)
        throw usage_error("invalid shard layout: shard must be below total-shards, a power of q");
    }
    ExhaustiveOptions o;
    o.shard = eshard;
    o.total_shards = etotal;
    o.checkpoint_path = echeckpoint;
    SearchReport rep = exhaustive_search(space, o);
    emit(render_text(rep), to_json(rep), format, out);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string what = e.what();
    if (what.find("parse error") != std::string::npos || what.find("prime power") != std::string::npos)
      return 2;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
