#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tadic/io.hpp"

namespace py = pybind11;
using namespace tadic;

namespace {

FqPtr field_for(std::uint64_t q) {
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned s = 0;
  std::uint64_t r = q;
  while (r > 1) {
    if (r % p != 0) throw error("q is not a prime power");
    r /= p;
    ++s;
  }
  return Fq::make(p, s);
}

py::object json_to_py(const nlohmann::json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

ConstructionResult construct_impl(const std::string& family, std::uint64_t q, long param) {
  FqPtr F = field_for(q);
  auto fam = family_from_name(family);
  if (!fam) throw error("unknown family: " + family);
  switch (*fam) {
    case Family::gonality_one: return gonality_one(F);
    case Family::cyclic: return cyclic_family(F, param);
    case Family::char2_hyperelliptic: return char2_hyperelliptic(F);
    case Family::phi_tower: return phi_tower(F, param);
    case Family::psi_tower: return psi_tower(F, param);
    case Family::integral_base: return base_examples(F).first;
    case Family::unit_base: return base_examples(F).second;
  }
  throw error("unreachable");
}

}  // namespace

PYBIND11_MODULE(_tadic, m) {
  m.doc() = "exact computations with totally T-adic algebraic functions over F_q(T)";

  py::register_exception<error>(m, "TadicError");

  m.def(
      "verify",
      [](const std::string& poly, std::uint64_t q) {
        return json_to_py(to_json(verify_candidate(parse_bipoly(field_for(q), poly))));
      },
      py::arg("poly"), py::arg("q"),
      "Full pipeline on one polynomial: split profile, irreducibility, height, criteria.");

  m.def(
      "height",
      [](const std::string& poly, std::uint64_t q) {
        return height_minpoly(parse_bipoly(field_for(q), poly)).to_str();
      },
      py::arg("poly"), py::arg("q"));

  m.def(
      "newton_polygon",
      [](const std::string& poly, std::uint64_t q, const std::string& place) {
        FqPtr F = field_for(q);
        BiPoly f = parse_bipoly(F, poly);
        Place pl = Place::ord0(F);
        if (place == "inf")
          pl = Place::infinity();
        else if (place != "T")
          pl = Place::at(parse_bipoly(F, place).coeff(0));
        return json_to_py(to_json(tadic::newton_polygon(f, pl)));
      },
      py::arg("poly"), py::arg("q"), py::arg("place") = "T");

  m.def(
      "construct",
      [](const std::string& family, std::uint64_t q, long param) {
        return json_to_py(to_json(construct_impl(family, q, param)));
      },
      py::arg("family"), py::arg("q"), py::arg("param") = 0,
      "Generate and verify one member of a named family.");

  m.def(
      "search_random",
      [](std::uint64_t q, long n, std::uint64_t budget, std::uint64_t seed, bool all) {
        FqPtr F = field_for(q);
        return json_to_py(to_json(random_search(F, RandomSpec{q, n, budget, seed}, !all)));
      },
      py::arg("q"), py::arg("n"), py::arg("budget"), py::arg("seed"), py::arg("all") = false);

  m.def(
      "search_exhaustive",
      [](std::uint64_t q, long n, unsigned shard, unsigned total_shards) {
        FqPtr F = field_for(q);
        AffineSpace space = build_linear_system(F, n);
        ExhaustiveOptions o;
        o.shard = shard;
        o.total_shards = total_shards;
        return json_to_py(to_json(exhaustive_search(space, o)));
      },
      py::arg("q"), py::arg("n"), py::arg("shard") = 0, py::arg("total_shards") = 1);

  m.def(
      "space_dimension",
      [](std::uint64_t q, long n) {
        AffineSpace s = build_linear_system(field_for(q), n);
        return py::make_tuple(s.raw_constraints, s.dim, s.consistent);
      },
      py::arg("q"), py::arg("n"),
      "Raw constraint count, dimension, and consistency of the search space.");

  m.def(
      "genus_bounds",
      [](std::uint64_t q, long n) {
        GenusBounds g = tadic::genus_bounds(q, n);
        return py::make_tuple(g.lower, g.upper);
      },
      py::arg("q"), py::arg("n"));

  m.def(
      "canonical",
      [](const std::string& poly, std::uint64_t q) {
        return parse_bipoly(field_for(q), poly).to_str();
      },
      py::arg("poly"), py::arg("q"), "Parse and reprint in canonical form.");
}
