#include "kext/catalog.hpp"

#include <algorithm>
#include <map>

namespace kext {

namespace {

struct FieldTable {
  std::vector<std::pair<std::string, FieldPtr>> fields;  // canonical names in build order
  std::map<std::string, std::string> alias;

  FieldPtr get(const std::string& canonical) const {
    for (const auto& [n, f] : fields)
      if (n == canonical) return f;
    raise(ErrorKind::Internal, "missing catalog field " + canonical);
  }
};

FieldPtr step(const FieldPtr& f, const std::string& var, std::vector<std::string> minpoly) {
  return tower_extend(FieldTower(f), {StepInput::algebraic(var, std::move(minpoly))}).field();
}

const FieldTable& field_table() {
  static const FieldTable t = [] {
    FieldTable t;
    auto add = [&](const std::string& name, FieldPtr f, std::vector<std::string> aliases) {
      t.fields.emplace_back(name, std::move(f));
      t.alias[name] = name;
      for (auto& a : aliases) t.alias[a] = name;
    };
    auto q = make_rationals();
    auto f2 = make_prime_field(2);
    auto f3 = make_prime_field(3);
    add("Q", q, {"QQ"});
    add("GF(2)", f2, {"GF2", "F2"});
    add("GF(3)", f3, {"GF3", "F3"});
    auto f4 = step(f2, "w", {"1", "1", "1"});
    add("GF(4)", f4, {"GF4", "F4"});
    add("GF(16)", step(f4, "v", {"w", "1", "1"}), {"GF16", "F16"});
    add("GF(9)", step(f3, "j", {"1", "0", "1"}), {"GF9", "F9"});
    auto qi = step(q, "i", {"1", "0", "1"});
    auto qw = step(q, "w", {"1", "1", "1"});
    add("Q(i)", qi, {"Qi"});
    add("Q(w)", qw, {"Qw", "Q(omega)", "Qomega"});
    add("Q(i)(r)", step(qi, "r", {"-2", "0", "1"}), {"Qi(r)"});
    add("Q(w)(r)", step(qw, "r", {"-2", "0", "1"}), {"Qw(r)"});
    auto f2t = tower_build(BaseKind::PrimeField, 2, {StepInput::transcendental("t")}).field();
    add("GF(2)(t)", f2t, {"GF2(t)"});
    add("GF(2)(t)(s)", step(f2t, "s", {"t", "0", "1"}), {"GF2(t)(s)"});
    add("GF(2)(t)(u)", step(f2t, "u", {"t", "1", "1"}), {"GF2(t)(u)"});
    auto f3t = tower_build(BaseKind::PrimeField, 3, {StepInput::transcendental("t")}).field();
    add("GF(3)(t)", f3t, {"GF3(t)"});
    add("GF(3)(t)(s)", step(f3t, "s", {"-t", "0", "0", "1"}), {"GF3(t)(s)"});
    return t;
  }();
  return t;
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

AlgebraPtr pq(const FieldPtr& f, std::vector<std::string> c) { return polyquotient_algebra(Poly::from_strings(f, c)); }

bool radical_available(const Field& f) { return f.characteristic() == 0 || f.is_finite(); }

void add_modules(CatalogAlgebra& ca) {
  const auto& a = ca.algebra;
  auto reg = regular_module(a);
  ca.modules.push_back({ca.name + ":regular", reg, false});
  if (a->group()) ca.modules.push_back({ca.name + ":trivial", trivial_module(a), true});
  if (radical_available(*a->field())) {
    const auto d = decompose(reg);
    if (!d.certified) return;
    ca.modules[0].simple = d.length == 1;
    for (auto& [label, m] : labelled_simples(d)) ca.modules.push_back({ca.name + ":" + label, m, true});
  } else {
    const auto r = test_simple(reg);
    ca.modules[0].simple = r.verdict == Simplicity::Simple && r.certified;
  }
}

}  // namespace

std::vector<std::pair<std::string, ModulePtr>> labelled_simples(const DecompositionReport& d) {
  std::map<std::size_t, std::size_t> per_dim, seen;
  for (const auto& s : d.summands) ++per_dim[s.simple->dim()];
  std::vector<std::pair<std::string, ModulePtr>> out;
  for (const auto& s : d.summands) {
    const std::size_t dim = s.simple->dim();
    std::string label = "simple" + std::to_string(dim);
    if (per_dim[dim] > 1) label += "_" + std::to_string(++seen[dim]);
    out.emplace_back(label, std::make_shared<Module>(s.simple->algebra(), dim, s.simple->actions(), label));
  }
  return out;
}

FieldPtr named_field(const std::string& name) {
  const auto& t = field_table();
  auto it = t.alias.find(strip_spaces(name));
  if (it == t.alias.end()) raise(ErrorKind::BadParameters, "unknown field '" + name + "'");
  return t.get(it->second);
}

const std::vector<std::string>& named_field_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : field_table().fields) n.push_back(k);
    return n;
  }();
  return names;
}

std::string field_label(const FieldPtr& f) {
  for (const auto& [k, g] : field_table().fields)
    if (same_field(*f, *g)) return k;
  return FieldTower(f).label();
}

const CatalogAlgebra& Catalog::algebra(const std::string& name) const {
  for (const auto& a : algebras_)
    if (a.name == name) return a;
  raise(ErrorKind::BadParameters, "no catalog algebra named '" + name + "'");
}

const CatalogModule& Catalog::module(const std::string& name) const {
  for (const auto& a : algebras_)
    for (const auto& m : a.modules)
      if (m.name == name) return m;
  raise(ErrorKind::BadParameters, "no catalog module named '" + name + "'");
}

bool Catalog::has_algebra(const std::string& name) const {
  return std::any_of(algebras_.begin(), algebras_.end(), [&](const auto& a) { return a.name == name; });
}

bool Catalog::has_module(const std::string& name) const {
  for (const auto& a : algebras_)
    for (const auto& m : a.modules)
      if (m.name == name) return true;
  return false;
}

const TowerInclusion& Catalog::inclusion(const FieldPtr& small, const FieldPtr& large) const {
  for (const auto& i : inclusions_)
    if (same_field(*i.small(), *small) && same_field(*i.large(), *large)) return i;
  raise(ErrorKind::BadParameters, "no catalog extension " + field_label(small) + " -> " + field_label(large));
}

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog c;
    const std::vector<std::pair<std::string, std::string>> incs = {
        {"Q", "Q(i)"},         {"Q", "Q(w)"},           {"GF(2)", "GF(4)"},       {"GF(2)", "GF(16)"},
        {"GF(4)", "GF(16)"},   {"GF(3)", "GF(9)"},      {"Q(i)", "Q(i)(r)"},      {"Q(w)", "Q(w)(r)"},
        {"GF(2)(t)", "GF(2)(t)(s)"}, {"GF(2)(t)", "GF(2)(t)(u)"}, {"GF(3)(t)", "GF(3)(t)(s)"}};
    for (const auto& [s, l] : incs) c.inclusions_.emplace_back(named_field(s), named_field(l));

    auto add = [&](AlgebraPtr a) {
      CatalogAlgebra ca;
      ca.name = a->name();
      ca.algebra = std::move(a);
      for (const auto& i : c.inclusions_)
        if (same_field(*i.small(), *ca.algebra->field())) ca.extensions.push_back(i);
      add_modules(ca);
      c.algebras_.push_back(std::move(ca));
    };

    const auto Q = named_field("Q"), F2 = named_field("GF(2)"), F3 = named_field("GF(3)");
    for (const auto& f : {Q, F2, F3})
      for (const auto& g : named_group_names()) add(group_algebra(named_group(g), f));

    for (auto c : std::vector<std::vector<std::string>>{{"0", "0", "1"},
                                                         {"1", "0", "1"},
                                                         {"1", "1", "1"},
                                                         {"-2", "0", "1"},
                                                         {"0", "0", "0", "1"},
                                                         {"-2", "0", "0", "1"},
                                                         {"0", "0", "1", "1"},
                                                         {"1", "0", "0", "0", "1"}})
      add(pq(Q, c));
    for (auto c : std::vector<std::vector<std::string>>{{"1", "1", "1"},
                                                         {"0", "0", "1"},
                                                         {"1", "0", "1"},
                                                         {"1", "1", "0", "1"},
                                                         {"0", "0", "0", "1"},
                                                         {"1", "1", "0", "0", "1"},
                                                         {"1", "1", "1", "1", "1"}})
      add(pq(F2, c));
    for (auto c : std::vector<std::vector<std::string>>{
             {"1", "0", "1"}, {"0", "0", "1"}, {"1", "-1", "0", "1"}, {"0", "0", "0", "1"}, {"1", "0", "0", "0", "1"}})
      add(pq(F3, c));
    for (const auto& f : {Q, F2, F3}) {
      add(triangular_algebra(2, f));
      add(triangular_algebra(3, f));
    }
    add(quaternion_algebra(Q->from_int(-1), Q->from_int(-1), Q));
    add(quaternion_algebra(F3->from_int(-1), F3->from_int(-1), F3));
    add(matrix_algebra(2, Q));
    add(matrix_algebra(2, F2));

    const auto F4 = named_field("GF(4)");
    add(group_algebra(named_group("C3"), F4));
    add(group_algebra(named_group("S3"), F4));
    add(pq(F4, {"w", "1", "1"}));
    add(pq(F4, {"0", "0", "1"}));
    const auto Qi = named_field("Q(i)");
    add(group_algebra(named_group("C4"), Qi));
    add(pq(Qi, {"-2", "0", "1"}));
    add(quaternion_algebra(Qi->from_int(-1), Qi->from_int(-1), Qi));
    const auto Qw = named_field("Q(w)");
    add(group_algebra(named_group("C3"), Qw));
    add(group_algebra(named_group("S3"), Qw));

    const auto F2t = named_field("GF(2)(t)");
    add(pq(F2t, {"t", "0", "1"}));
    add(pq(F2t, {"t", "1", "1"}));
    add(group_algebra(named_group("C2"), F2t));
    add(triangular_algebra(2, F2t));
    const auto F3t = named_field("GF(3)(t)");
    add(pq(F3t, {"-t", "0", "0", "1"}));
    return c;
  }();
  return c;
}

const std::string& catalog_version() {
  static const std::string v = "1";
  return v;
}

}  // namespace kext
