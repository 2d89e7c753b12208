#include "kext/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kext {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing '") + key + "'");
  return j.at(key);
}

std::size_t need_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

json builtin_catalog_entry(const std::string& name) {
  const Catalog& c = catalog();
  if (c.has_algebra(name)) return algebra_to_json(*c.algebra(name).algebra);
  if (c.has_module(name)) return module_to_json(*c.module(name).module);
  bad("no catalog entry '" + name + "'");
}

bool is_named_group(const Group& g) {
  const auto& names = named_group_names();
  if (std::find(names.begin(), names.end(), g.name) == names.end()) return false;
  return named_group(g.name).table == g.table;
}

}  // namespace

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) bad("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(p.string() + ": " + e.what());
  }
}

RefLoader default_loader(std::filesystem::path base) {
  return [base](const std::string& ref) -> json {
    std::string name = ref;
    const bool tagged = name.rfind("catalog:", 0) == 0;
    if (tagged) name = name.substr(8);
    if (tagged) {
      if (const char* dir = std::getenv("KEXT_CATALOG_DIR"); dir && *dir) {
        const auto p = std::filesystem::path(dir) / (name + ".json");
        if (std::filesystem::exists(p)) return read_json_file(p);
      }
      return builtin_catalog_entry(name);
    }
    const auto p = std::filesystem::path(ref).is_absolute() ? std::filesystem::path(ref) : base / ref;
    if (std::filesystem::exists(p)) return read_json_file(p);
    return builtin_catalog_entry(name);
  };
}

FieldPtr field_from_json(const json& j) {
  if (j.is_string()) return named_field(j.get<std::string>());
  return FieldTower::from_json(j).field();
}

json field_to_json(const FieldPtr& f) { return FieldTower(f).to_json(); }

json vec_to_json(const Field& f, std::span<const Elem> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(f.to_string(x));
  return a;
}

json matrix_to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(*m.field(), m.row(i)));
  return a;
}

Mat matrix_from_json(const FieldPtr& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("expected " + std::to_string(rows) + " matrix rows");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("expected rows of length " + std::to_string(cols));
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, parse_scalar(*f, j[i][k]));
  }
  return m;
}

AlgebraPtr algebra_from_json(const json& j, const RefLoader& load) {
  if (j.is_string()) return algebra_from_json(load(j.get<std::string>()), load);
  if (!j.is_object()) bad("algebra must be an object or a reference");
  AlgebraPtr a;
  if (j.contains("product")) {
    const json& p = j.at("product");
    if (!p.is_array() || p.size() != 2) bad("'product' takes two algebras");
    a = product_algebra(*algebra_from_json(p[0], load), *algebra_from_json(p[1], load));
  } else {
    const FieldPtr f = field_from_json(need(j, "field"));
    if (j.contains("group")) {
      const json& g = j.at("group");
      if (g.is_string()) a = group_algebra(named_group(g.get<std::string>()), f);
      else a = group_algebra(make_group(need(g, "table").get<std::vector<std::vector<int>>>(), g.value("name", "G")), f);
    } else if (j.contains("quaternion")) {
      const json& q = j.at("quaternion");
      if (!q.is_array() || q.size() != 2) bad("'quaternion' takes [a, b]");
      a = quaternion_algebra(parse_scalar(*f, q[0]), parse_scalar(*f, q[1]), f);
    } else if (j.contains("polyquotient")) {
      const json& p = j.at("polyquotient");
      const json& c = p.is_object() ? need(p, "minpoly") : p;
      if (!c.is_array() || c.empty()) bad("'polyquotient' needs a coefficient list");
      upoly::Coeffs cs;
      for (const auto& x : c) cs.push_back(parse_scalar(*f, x));
      a = polyquotient_algebra(Poly(f, cs));
    } else if (j.contains("triangular")) {
      a = triangular_algebra(need_size(j.at("triangular"), "'triangular'"), f, j.value("lower", false));
    } else if (j.contains("matrix")) {
      a = matrix_algebra(need_size(j.at("matrix"), "'matrix'"), f);
    } else {
      const std::size_t n = need_size(need(j, "dim"), "'dim'");
      const json& sc = need(j, "sc");
      if (!sc.is_array() || sc.size() != n) bad("'sc' must have dim entries");
      std::vector<Elem> c;
      c.reserve(n * n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!sc[i].is_array() || sc[i].size() != n) bad("'sc' must be dim x dim x dim");
        for (std::size_t k = 0; k < n; ++k) {
          const json& v = sc[i][k];
          if (!v.is_array() || v.size() != n) bad("'sc' must be dim x dim x dim");
          for (const auto& x : v) c.push_back(parse_scalar(*f, x));
        }
      }
      const json& u = need(j, "unit");
      if (!u.is_array() || u.size() != n) bad("'unit' must have dim entries");
      Vec unit;
      for (const auto& x : u) unit.push_back(parse_scalar(*f, x));
      a = build_algebra(f, n, std::move(c), std::move(unit), j.value("name", ""));
    }
  }
  if (j.contains("name") && j.at("name").is_string() && a->name() != j.at("name").get<std::string>()) {
    auto named = std::make_shared<Algebra>(a->field(), a->dim(), a->structure_constants(), a->unit(),
                                           j.at("name").get<std::string>());
    if (a->group()) named->set_group(*a->group());
    a = named;
  }
  return a;
}

json algebra_to_json(const Algebra& a) {
  json j;
  j["name"] = a.name();
  j["field"] = field_to_json(a.field());
  if (a.group() && is_named_group(*a.group())) {
    j["group"] = a.group()->name;
    return j;
  }
  if (a.group()) {
    j["group"] = json{{"name", a.group()->name}, {"table", a.group()->table}};
    return j;
  }
  const Field& f = *a.field();
  const std::size_t n = a.dim();
  j["dim"] = n;
  json sc = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      json v = json::array();
      for (std::size_t l = 0; l < n; ++l) v.push_back(f.to_string(a.c(i, k, l)));
      row.push_back(v);
    }
    sc.push_back(row);
  }
  j["sc"] = sc;
  j["unit"] = vec_to_json(f, a.unit());
  return j;
}

std::vector<std::vector<int>> parse_cycles(const std::vector<std::string>& cycles, int points) {
  std::vector<std::vector<int>> perm;
  for (const auto& text : cycles) {
    std::vector<int> img(points);
    for (int x = 0; x < points; ++x) img[x] = x;
    std::vector<bool> moved(points, false);
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (text.substr(pos) == "e" || text.substr(pos) == "id") pos = text.size();
    while (pos < text.size()) {
      if (text[pos] != '(') bad("bad cycle notation '" + text + "'");
      ++pos;
      std::vector<int> cyc;
      for (;;) {
        skip();
        if (pos >= text.size()) bad("unterminated cycle in '" + text + "'");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(text.substr(pos), &used);
        } catch (const std::exception&) {
          bad("bad point in '" + text + "'");
        }
        pos += used;
        if (v < 1 || v > points) bad("point " + std::to_string(v) + " out of range in '" + text + "'");
        if (moved[v - 1]) bad("point " + std::to_string(v) + " repeated in '" + text + "'");
        moved[v - 1] = true;
        cyc.push_back(v - 1);
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
      skip();
    }
    perm.push_back(std::move(img));
  }
  return perm;
}

ModulePtr module_from_json(const json& j, const AlgebraPtr& fallback, const RefLoader& load) {
  if (j.is_string()) return module_from_json(load(j.get<std::string>()), fallback, load);
  if (!j.is_object()) bad("module must be an object or a reference");
  const AlgebraPtr a = j.contains("algebra") ? algebra_from_json(j.at("algebra"), load) : fallback;
  if (!a) bad("module has no 'algebra' and none was supplied");
  const std::string name = j.value("name", "");
  auto named = [&](ModulePtr m) -> ModulePtr {
    if (name.empty() || m->name() == name) return m;
    return std::make_shared<Module>(m->algebra(), m->dim(), m->actions(), name);
  };

  if (j.value("regular", false)) return named(regular_module(a));
  if (j.value("trivial", false)) return named(trivial_module(a));
  if (j.contains("permutation")) {
    const auto cycles = j.at("permutation").get<std::vector<std::string>>();
    int points = j.value("points", 0);
    if (points == 0)
      for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size();) {
          if (std::isdigit(static_cast<unsigned char>(c[i]))) {
            std::size_t used = 0;
            points = std::max(points, std::stoi(c.substr(i), &used));
            i += used;
          } else {
            ++i;
          }
        }
    if (!a->group()) raise(ErrorKind::NotAGroupAlgebra, "'" + a->name() + "' is not a group algebra");
    if (cycles.size() != a->group()->order())
      bad("'permutation' needs one cycle string per group element (" + std::to_string(a->group()->order()) + ")");
    return named(permutation_module(a, parse_cycles(cycles, points)));
  }
  if (j.contains("coset")) return named(coset_module(a, j.at("coset").get<std::vector<int>>()));
  if (j.contains("simple")) {
    const auto simples = labelled_simples(decompose(regular_module(a)));
    const json& s = j.at("simple");
    if (s.is_number_integer()) {
      const auto k = need_size(s, "'simple'");
      if (k >= simples.size()) bad("simple index out of range");
      return named(simples[k].second);
    }
    for (const auto& [label, m] : simples)
      if (label == s.get<std::string>()) return named(m);
    bad("no simple labelled '" + s.get<std::string>() + "'");
  }
  if (j.contains("sum") || j.contains("tensor")) {
    const bool sum = j.contains("sum");
    const json& p = j.at(sum ? "sum" : "tensor");
    if (!p.is_array() || p.size() < 2) bad("'sum' and 'tensor' take a list of modules");
    ModulePtr m = module_from_json(p[0], a, load);
    for (std::size_t i = 1; i < p.size(); ++i) {
      const auto n = module_from_json(p[i], a, load);
      m = sum ? direct_sum(*m, *n) : tensor_module(m, n);
    }
    return named(m);
  }
  if (j.contains("dual")) return named(dual_module(module_from_json(j.at("dual"), a, load)));

  const std::size_t d = need_size(need(j, "dim"), "'dim'");
  const json& act = need(j, "action");
  if (!act.is_array() || act.size() != a->dim())
    bad("'action' needs one matrix per algebra basis element (" + std::to_string(a->dim()) + ")");
  std::vector<Mat> mats;
  for (const auto& m : act) mats.push_back(matrix_from_json(a->field(), m, d, d));
  return make_module(a, std::move(mats), name);
}

json module_to_json(const Module& m, bool with_algebra) {
  json j;
  if (with_algebra) j["algebra"] = algebra_to_json(*m.algebra());
  if (!m.name().empty()) j["name"] = m.name();
  j["dim"] = m.dim();
  json act = json::array();
  for (const auto& a : m.actions()) act.push_back(matrix_to_json(a));
  j["action"] = act;
  return j;
}

json decomposition_to_json(const DecompositionReport& d) {
  json s = json::array();
  for (const auto& x : d.summands)
    s.push_back(json{{"dim", x.simple->dim()},
                     {"multiplicity", x.multiplicity},
                     {"end_dim", x.end_dim},
                     {"module", module_to_json(*x.simple, false)}});
  json j{{"semisimple", d.semisimple}, {"certified", d.certified}, {"length", d.length}, {"summands", s}};
  if (d.change_of_basis) {
    j["block_sizes"] = d.block_sizes;
    j["block_summand"] = d.block_summand;
    j["change_of_basis"] = matrix_to_json(*d.change_of_basis);
  }
  return j;
}

json filtration_to_json(const FiltrationReport& f) {
  json dims = json::array(), layers = json::array();
  for (const auto& c : f.chain) dims.push_back(c.dim());
  for (const auto& l : f.layers) layers.push_back(l->dim());
  return json{{"socle_length", f.socle_length}, {"chain_dims", dims}, {"layer_dims", layers}};
}

json witness_to_json(const NilpotentWitness& w, const Field& f) {
  json j{{"z", vec_to_json(f, w.element)}, {"exponent", w.exponent}};
  if (w.action.rows() > 0) j["action"] = matrix_to_json(w.action);
  return j;
}

json split_report_to_json(const SplitReport& r, const TowerInclusion& inc) {
  json j;
  j["extension"] = inc.name();
  j["separable_extension"] = inc.separable();
  j["source"] = r.source->name();
  j["dim"] = r.extended->dim();
  j["end_dim_small"] = r.end_dim_small;
  j["end_dim_large"] = r.end_dim_large;
  j["end_is_frobenius"] = r.end_is_frobenius;
  j["semisimple"] = r.semisimple ? json(*r.semisimple) : json(nullptr);
  j["length"] = r.length ? json(*r.length) : json(nullptr);
  j["end_length"] = r.end_length ? json(*r.end_length) : json(nullptr);
  j["consistent"] = r.consistent;
  if (r.decomposition) j["decomposition"] = decomposition_to_json(*r.decomposition);
  if (r.filtration) j["filtration"] = filtration_to_json(*r.filtration);
  if (r.witness) j["witness"] = witness_to_json(*r.witness, *inc.large());
  if (!r.sandwich.empty()) j["epi_mono"] = r.sandwich;
  return j;
}

}  // namespace kext
