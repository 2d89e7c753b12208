#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kext/properties.hpp"
#include "kext/serialize.hpp"

using namespace kext;

namespace {

struct Options {
  std::string format = "json";
  std::string algebra, module, source, target, simple, extend, checks;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  bool time = false;
};

json load_ref_or_file(const std::string& ref, const RefLoader& load) {
  if (ref.empty()) return nullptr;
  if (!ref.empty() && (ref.front() == '{' || ref.front() == '"')) return json::parse(ref);
  return load(ref);
}

class Session {
public:
  explicit Session(const Options& o) : opt_(o), load_(default_loader(".")) {}

  AlgebraPtr algebra() {
    if (!alg_ && !opt_.algebra.empty()) alg_ = algebra_from_json(load_ref_or_file(opt_.algebra, load_), load_);
    return alg_;
  }
  ModulePtr module(const std::string& ref, const char* flag) {
    if (ref.empty()) throw CLI::ValidationError(std::string(flag), "required");
    return module_from_json(load_ref_or_file(ref, load_), algebra(), load_);
  }
  FieldPtr field(const std::string& ref) {
    if (std::filesystem::is_regular_file(ref)) return field_from_json(read_json_file(ref));
    if (!ref.empty() && ref.front() == '{') return field_from_json(json::parse(ref));
    return field_from_json(json(ref));
  }
  TowerInclusion inclusion(const FieldPtr& small) {
    if (opt_.extend.empty()) throw CLI::ValidationError("--extend", "required");
    return TowerInclusion(small, field(opt_.extend));
  }

private:
  const Options& opt_;
  RefLoader load_;
  AlgebraPtr alg_;
};

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !flat(x))) return false;
  return true;
}

void print_text(std::ostream& os, const json& j, const std::string& indent = "") {
  if (!j.is_object()) {
    os << indent << scalar_text(j) << "\n";
    return;
  }
  std::size_t w = 0;
  for (auto it = j.begin(); it != j.end(); ++it) w = std::max(w, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = it.key() + std::string(w - it.key().size(), ' ');
    if (flat(*it)) {
      os << indent << key << "  " << scalar_text(*it) << "\n";
    } else if (it->is_object()) {
      os << indent << it.key() << "\n";
      print_text(os, *it, indent + "  ");
    } else {
      os << indent << it.key() << "\n";
      std::size_t k = 0;
      for (const auto& x : *it) {
        os << indent << "  [" << k++ << "]\n";
        print_text(os, x, indent + "    ");
      }
    }
  }
}

void emit(const Options& o, const json& j) {
  if (o.format == "text")
    print_text(std::cout, j);
  else
    std::cout << j.dump() << "\n";
}

json algebra_info(const AlgebraPtr& a) {
  json j{{"name", a->name()}, {"field", field_label(a->field())}, {"dim", a->dim()}};
  if (a->group()) j["group_order"] = a->group()->order();
  j["center_dim"] = center(*a).dim();
  const Field& f = *a->field();
  if (f.characteristic() == 0 || f.is_finite()) {
    j["radical_dim"] = a->radical().dim();
    j["semisimple"] = is_semisimple(*a);
  }
  const auto fr = is_frobenius(*a);
  j["frobenius"] = fr.frobenius;
  if (!fr.certain) j["frobenius_certain"] = false;
  return j;
}

json module_info(const ModulePtr& m) {
  json j{{"name", m->name()}, {"algebra", m->algebra()->name()}, {"field", field_label(m->field())}, {"dim", m->dim()}};
  j["end_dim"] = hom_dim(m, m);
  const Field& f = *m->field();
  if (f.characteristic() == 0 || f.is_finite()) {
    j["socle_dim"] = socle(m).dim();
    j["length"] = composition_length(m);
    j["semisimple"] = is_semisimple_module(m);
  } else {
    const auto s = test_simple(m);
    j["simple"] = s.verdict == Simplicity::Simple       ? json(true)
                  : s.verdict == Simplicity::NotSimple ? json(false)
                                                               : json("unknown");
  }
  return j;
}

int run_checks(const Options& o, const std::vector<CheckId>& ids, bool suite) {
  bool all = true;
  for (auto id : ids) {
    const auto r = run_check(id, o.seed, o.trials);
    all = all && r.pass;
    const auto rep = r.to_json(o.time);
    if (o.format == "text") {
      for (const auto& x : rep["instances"])
        std::cout << check_name(id) << "  " << (x["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                  << x["instance"].get<std::string>() << "  " << x["dims"].dump() << "\n";
      std::cout << check_name(id) << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.instances.size()
                << " instances\n";
      if (r.counterexample) std::cout << "  counterexample " << r.counterexample->dump() << "\n";
    } else {
      for (const auto& x : rep["instances"]) {
        json line{{"check", check_name(id)}};
        line.update(x);
        std::cout << line.dump() << "\n";
      }
      json summary = rep;
      summary.erase("instances");
      summary["instance_count"] = r.instances.size();
      std::cout << summary.dump() << "\n";
    }
  }
  if (suite) {
    if (o.format == "text")
      std::cout << "suite  " << (all ? "PASS" : "FAIL") << "  " << ids.size() << " checks\n";
    else
      std::cout << json{{"suite", true}, {"seed", o.seed}, {"checks", ids.size()}, {"pass", all}}.dump() << "\n";
  }
  return all ? 0 : 1;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnsupportedField:
    case ErrorKind::Undecidable: return 3;
    case ErrorKind::Internal: return 4;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact scalar extension of module categories over finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    return s;
  };
  auto alg_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--algebra", o.algebra, "Algebra JSON file or catalog:NAME");
    if (required) opt->required();
  };

  auto* c_alg = sub("algebra-info", "Dimension, radical, semisimplicity, Frobenius");
  alg_opt(c_alg, true);
  auto* c_mod = sub("module-info", "Dimension, End, socle and length of a module");
  alg_opt(c_mod, false);
  c_mod->add_option("--module", o.module, "Module JSON file or catalog:NAME")->required();
  auto* c_hom = sub("homdim", "Dimension of Hom(source, target)");
  alg_opt(c_hom, false);
  c_hom->add_option("--source", o.source)->required();
  c_hom->add_option("--target", o.target)->required();
  auto* c_rad = sub("radical", "Jacobson radical of an algebra");
  alg_opt(c_rad, true);
  auto* c_soc = sub("socle", "Socle and socle filtration of a module");
  alg_opt(c_soc, false);
  c_soc->add_option("--module", o.module)->required();
  auto* c_ss = sub("semisimplify", "Direct sum of the socle layers");
  alg_opt(c_ss, false);
  c_ss->add_option("--module", o.module)->required();
  auto* c_dec = sub("decompose", "Isotypic decomposition of a semisimple module");
  alg_opt(c_dec, false);
  c_dec->add_option("--module", o.module)->required();
  auto* c_ext = sub("extend", "Extend scalars of an algebra or module");
  alg_opt(c_ext, false);
  c_ext->add_option("--module", o.module);
  c_ext->add_option("--extend", o.extend, "Target field: tower JSON or catalog field name")->required();
  auto* c_split = sub("split", "How a simple module decomposes after extension");
  alg_opt(c_split, false);
  c_split->add_option("--simple", o.simple)->required();
  c_split->add_option("--extend", o.extend)->required();
  auto* c_check = sub("check", "Run property checks");
  c_check->add_option("--check", o.checks, "Comma-separated check ids")->required();
  auto* c_suite = sub("suite", "Run every property check");
  for (auto* s : {c_check, c_suite}) {
    s->add_option("--seed", o.seed);
    s->add_option("--trials", o.trials);
    s->add_flag("--time", o.time, "Include wall time in reports");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Session s(o);
    if (c_alg->parsed()) {
      emit(o, algebra_info(s.algebra()));
    } else if (c_mod->parsed()) {
      emit(o, module_info(s.module(o.module, "--module")));
    } else if (c_hom->parsed()) {
      const auto m = s.module(o.source, "--source");
      const auto n = s.module(o.target, "--target");
      emit(o, json{{"dim", hom_dim(m, n)}});
    } else if (c_rad->parsed()) {
      const auto a = s.algebra();
      const auto& rad = a->radical();
      emit(o, json{{"algebra", a->name()}, {"dim", rad.dim()}, {"basis", matrix_to_json(rad.basis())}});
    } else if (c_soc->parsed()) {
      const auto m = s.module(o.module, "--module");
      const auto soc = socle(m);
      emit(o, json{{"module", m->name()},
                   {"dim", soc.dim()},
                   {"basis", matrix_to_json(soc.basis())},
                   {"filtration", filtration_to_json(socle_filtration(m))}});
    } else if (c_ss->parsed()) {
      const auto m = s.module(o.module, "--module");
      emit(o, module_to_json(*semisimplify(m)));
    } else if (c_dec->parsed()) {
      emit(o, decomposition_to_json(decompose(s.module(o.module, "--module"))));
    } else if (c_ext->parsed()) {
      if (!o.module.empty()) {
        const auto m = s.module(o.module, "--module");
        const auto inc = s.inclusion(m->field());
        emit(o, module_to_json(*t_extend_module(m, inc)));
      } else {
        const auto a = s.algebra();
        if (!a) throw CLI::ValidationError("extend", "needs --algebra or --module");
        emit(o, algebra_to_json(*s.inclusion(a->field()).extend(a)));
      }
    } else if (c_split->parsed()) {
      const auto m = s.module(o.simple, "--simple");
      const auto inc = s.inclusion(m->field());
      emit(o, split_report_to_json(split_simple(m, inc), inc));
    } else if (c_check->parsed()) {
      std::vector<CheckId> ids;
      std::stringstream ss(o.checks);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) ids.push_back(parse_check(tok));
      if (ids.empty()) throw CLI::ValidationError("--check", "no check ids");
      return run_checks(o, ids, false);
    } else if (c_suite->parsed()) {
      return run_checks(o, all_checks(), true);
    }
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << "kext: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "kext: " << e.what() << "\n";
    return exit_code(e);
  } catch (const json::exception& e) {
    std::cerr << "kext: ParseError: " << e.what() << "\n";
    return 2;
  }
}
