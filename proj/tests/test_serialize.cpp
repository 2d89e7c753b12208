#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "kext/serialize.hpp"

using namespace kext;

namespace {

bool same_vec(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.equal(a[i], b[i])) return false;
  return true;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  return same_field(*a.field(), *b.field()) && a.dim() == b.dim() &&
         same_vec(*a.field(), a.structure_constants(), b.structure_constants()) &&
         same_vec(*a.field(), a.unit(), b.unit());
}

bool same_module(const Module& m, const Module& n) {
  if (!same_algebra(*m.algebra(), *n.algebra()) || m.dim() != n.dim()) return false;
  for (std::size_t i = 0; i < m.actions().size(); ++i)
    if (!(m.action(i) == n.action(i))) return false;
  return true;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

const RefLoader load = default_loader(".");

}  // namespace

TEST_CASE("fields by name and as towers") {
  CHECK(same_field(*field_from_json("GF4"), *named_field("GF(4)")));
  for (const auto& name : named_field_names()) {
    CAPTURE(name);
    const auto f = named_field(name);
    CHECK(same_field(*field_from_json(field_to_json(f)), *f));
  }
  const json tower = json::parse(R"j({"base": "GF(2)", "steps": [{"transcendental": "t"},
      {"algebraic": {"var": "s", "minpoly": ["t", "0", "1"]}}]})j");
  CHECK(same_field(*field_from_json(tower), *named_field("GF(2)(t)(s)")));
  CHECK(kind_of([] { field_from_json("GF(6)"); }) != ErrorKind::Internal);
}

TEST_CASE("every catalog algebra and module round trips") {
  for (const auto& ca : catalog().algebras()) {
    CAPTURE(ca.name);
    const auto j = algebra_to_json(*ca.algebra);
    const auto back = algebra_from_json(json::parse(j.dump()), load);
    CHECK(same_algebra(*back, *ca.algebra));
    CHECK(back->name() == ca.name);
    for (const auto& m : ca.modules) {
      CAPTURE(m.name);
      const auto mj = module_to_json(*m.module);
      CHECK(same_module(*module_from_json(json::parse(mj.dump()), nullptr, load), *m.module));
    }
  }
}

TEST_CASE("full-form algebra") {
  // Q[x]/(x^2) with basis 1, x
  const json j = json::parse(R"j({"field": "Q", "dim": 2,
      "sc": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]], "unit": ["1","0"]})j");
  const auto a = algebra_from_json(j, load);
  CHECK(a->dim() == 2);
  CHECK(a->radical().dim() == 1);
  const json bad_assoc = json::parse(R"j({"field": "Q", "dim": 2,
      "sc": [[["1","0"],["0","1"]], [["0","1"],["1","1"]]], "unit": ["0","1"]})j");
  CHECK_THROWS_AS(algebra_from_json(bad_assoc, load), Error);
  CHECK(kind_of([] { algebra_from_json(json::parse(R"j({"field": "Q"})j"), load); }) == ErrorKind::ParseError);
}

TEST_CASE("algebra shorthands") {
  CHECK(algebra_from_json(json::parse(R"j({"field": "Q", "quaternion": ["-1", "-1"]})j"), load)->dim() == 4);
  CHECK(algebra_from_json(json::parse(R"j({"field": "GF(3)", "polyquotient": ["1", "0", "1"]})j"), load)->dim() == 2);
  CHECK(algebra_from_json(json::parse(R"j({"field": "GF(2)", "triangular": 3})j"), load)->dim() == 6);
  CHECK(algebra_from_json(json::parse(R"j({"field": "Q", "matrix": 2})j"), load)->dim() == 4);
  const auto p = algebra_from_json(json::parse(R"j({"product": [{"field": "Q", "group": "C2"},
      {"field": "Q", "matrix": 2}]})j"), load);
  CHECK(p->dim() == 6);
  const auto c3 = algebra_from_json(json::parse(R"j({"field": "Q", "group": "C3"})j"), load);
  CHECK(same_algebra(*c3, *catalog().algebra("Q[C3]").algebra));
}

TEST_CASE("cycle notation") {
  const auto perm = parse_cycles({"e", "(1,2,3)", "(1 3 2)", "(1,2)(3)"}, 3);
  REQUIRE(perm.size() == 4);
  CHECK(perm[0] == std::vector<int>{0, 1, 2});
  CHECK(perm[1] == std::vector<int>{1, 2, 0});
  CHECK(perm[2] == std::vector<int>{2, 0, 1});
  CHECK(perm[3] == std::vector<int>{1, 0, 2});
  CHECK(kind_of([] { parse_cycles({"(1,4)"}, 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_cycles({"(1,2"}, 3); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_cycles({"(1,1)"}, 3); }) == ErrorKind::ParseError);
}

TEST_CASE("module shorthands") {
  const auto c3 = catalog().algebra("GF(2)[C3]").algebra;
  // C3 acting on three points by rotation: the regular module
  const auto g = c3->group();
  REQUIRE(g);
  std::vector<std::string> cyc;
  for (std::size_t x = 0; x < 3; ++x) {
    // point k is group element k; x sends 1 to x, then to x*x
    if (static_cast<int>(x) == g->identity) {
      cyc.push_back("e");
      continue;
    }
    cyc.push_back("(1," + std::to_string(x + 1) + "," + std::to_string(g->table[x][x] + 1) + ")");
  }
  const auto perm = module_from_json(json{{"permutation", cyc}}, c3, load);
  CHECK(perm->dim() == 3);
  CHECK(hom_dim(perm, trivial_module(c3)) == 1);
  CHECK(are_isomorphic(perm, regular_module(c3)));

  const auto coset = module_from_json(json{{"coset", std::vector<int>{}}}, c3, load);
  CHECK(coset->dim() == 3);

  const auto s2 = module_from_json(json{{"simple", "simple2"}}, c3, load);
  CHECK(s2->dim() == 2);
  CHECK(module_from_json(json{{"simple", 0}}, c3, load)->dim() == 1);
  const auto sum = module_from_json(json::parse(R"j({"sum": [{"trivial": true}, {"simple": "simple2"}]})j"), c3, load);
  CHECK(are_isomorphic(sum, regular_module(c3)));
  const auto ten = module_from_json(json::parse(R"j({"tensor": [{"simple": "simple2"}, {"simple": "simple2"}]})j"), c3, load);
  CHECK(ten->dim() == 4);
  CHECK(module_from_json(json::parse(R"j({"dual": {"simple": "simple2"}})j"), c3, load)->dim() == 2);
  CHECK(kind_of([&] { module_from_json(json{{"simple", "nope"}}, c3, load); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { module_from_json(json{{"regular", true}}, nullptr, load); }) == ErrorKind::ParseError);
}

TEST_CASE("catalog references and override directory") {
  const auto a = algebra_from_json("catalog:Q[C3]", load);
  CHECK(a->dim() == 3);
  const auto m = module_from_json("catalog:GF(2)[C3]:simple2", nullptr, load);
  CHECK(m->dim() == 2);
  CHECK(kind_of([] { algebra_from_json("catalog:nothing", load); }) == ErrorKind::ParseError);

  const auto dir = std::filesystem::temp_directory_path() / "kext_catalog_override";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "Q[C3].json") << R"j({"field": "Q", "group": "C5"})j";
  setenv("KEXT_CATALOG_DIR", dir.c_str(), 1);
  CHECK(algebra_from_json("catalog:Q[C3]", load)->dim() == 5);
  CHECK(algebra_from_json("catalog:Q[C4]", load)->dim() == 4);
  unsetenv("KEXT_CATALOG_DIR");
  CHECK(algebra_from_json("catalog:Q[C3]", load)->dim() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports serialize") {
  const auto& s = catalog().module("GF(2)[C3]:simple2").module;
  const auto& inc = catalog().inclusion(named_field("GF(2)"), named_field("GF(4)"));
  const auto j = split_report_to_json(split_simple(s, inc), inc);
  const auto back = json::parse(j.dump());
  CHECK(back["length"] == 2);
  CHECK(back["decomposition"]["summands"].size() == 2);
  for (const auto& x : back["decomposition"]["summands"]) {
    const auto mod = module_from_json(x["module"], inc.extend(s->algebra()), load);
    CHECK(mod->dim() == 1);
  }
  const auto f = filtration_to_json(socle_filtration(catalog().module("GF(2)[C2]:regular").module));
  CHECK(f["socle_length"] == 2);
}
