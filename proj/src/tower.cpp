#include "kext/tower.hpp"

#include <set>

#include "kext/factor.hpp"

namespace kext {

bool FieldTower::verified() const {
  for (std::size_t i = 0; i < num_steps(); ++i)
    if (!step(i).verified) return false;
  return true;
}

std::string FieldTower::name() const {
  const Field& base = top_->level(0);
  std::string s = base.base_kind() == BaseKind::Rationals ? "Q" : "GF(" + std::to_string(base.characteristic()) + ")";
  for (std::size_t i = 0; i < num_steps(); ++i) s += "(" + step(i).var + ")";
  return s;
}

std::string FieldTower::label() const {
  if (top_->is_finite()) return "GF(" + top_->order().get_str() + ")";
  return name();
}

json FieldTower::to_json() const {
  json j;
  const Field& base = top_->level(0);
  if (base.base_kind() == BaseKind::Rationals) j["base"] = "Q";
  else j["base"] = json{{"GF", base.characteristic()}};
  json steps = json::array();
  for (std::size_t i = 0; i < num_steps(); ++i) {
    const StepSpec& s = step(i);
    if (s.kind == StepKind::Transcendental) {
      steps.push_back(json{{"transcendental", s.var}});
    } else {
      const Field& below = top_->level(i);
      json coeffs = json::array();
      for (const auto& c : s.minpoly) coeffs.push_back(below.to_string(c));
      steps.push_back(json{{"algebraic", json{{"var", s.var}, {"minpoly", coeffs}}}});
    }
  }
  j["steps"] = steps;
  return j;
}

namespace {

std::string scalar_text(const json& c) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  raise(ErrorKind::ParseError, "scalar must be a string or integer, got " + c.dump());
}

}  // namespace

Elem parse_scalar(const Field& f, const json& j) { return f.parse(scalar_text(j)); }

FieldTower FieldTower::from_json(const json& j) {
  if (!j.is_object() || !j.contains("base")) raise(ErrorKind::ParseError, "tower needs a 'base'");
  BaseKind kind = BaseKind::Rationals;
  std::uint64_t p = 0;
  const json& b = j.at("base");
  if (b.is_string() && b.get<std::string>() == "Q") {
    kind = BaseKind::Rationals;
  } else if (b.is_object() && b.contains("GF")) {
    kind = BaseKind::PrimeField;
    p = b.at("GF").get<std::uint64_t>();
  } else if (b.is_string() && b.get<std::string>().rfind("GF(", 0) == 0 && b.get<std::string>().back() == ')') {
    kind = BaseKind::PrimeField;
    const std::string s = b.get<std::string>();
    try {
      p = std::stoull(s.substr(3, s.size() - 4));
    } catch (const std::exception&) {
      raise(ErrorKind::ParseError, "unknown base " + b.dump());
    }
  } else {
    raise(ErrorKind::ParseError, "unknown base " + b.dump());
  }
  std::vector<StepInput> steps;
  if (j.contains("steps")) {
    for (const auto& s : j.at("steps")) {
      if (s.contains("transcendental")) {
        steps.push_back(StepInput::transcendental(s.at("transcendental").get<std::string>()));
      } else if (s.contains("algebraic")) {
        const json& a = s.at("algebraic");
        std::vector<std::string> coeffs;
        for (const auto& c : a.at("minpoly")) coeffs.push_back(scalar_text(c));
        steps.push_back(StepInput::algebraic(a.at("var").get<std::string>(), coeffs));
      } else {
        raise(ErrorKind::ParseError, "unknown step " + s.dump());
      }
    }
  }
  return tower_build(kind, p, steps);
}

FieldTower tower_extend(const FieldTower& tower, const std::vector<StepInput>& steps) {
  FieldPtr level = tower.field();
  std::set<std::string> names;
  for (std::size_t d = 1; d <= level->depth(); ++d) names.insert(level->level(d).step()->var);
  for (const auto& s : steps) {
    if (s.var.empty()) raise(ErrorKind::BadParameters, "step variable name is empty");
    if (!names.insert(s.var).second) raise(ErrorKind::DuplicateVariable, "variable '" + s.var + "' already in tower");
    if (s.kind == StepKind::Transcendental) {
      level = adjoin_transcendental(level, s.var);
      continue;
    }
    std::vector<Elem> coeffs;
    for (const auto& c : s.minpoly) coeffs.push_back(level->parse(c));
    const Poly mp(level, coeffs);
    if (mp.degree() < 1) raise(ErrorKind::BadParameters, "minimal polynomial of '" + s.var + "' has degree < 1");
    if (!level->is_one(mp.leading())) raise(ErrorKind::BadParameters, "minimal polynomial of '" + s.var + "' is not monic");
    const Irreducibility irr = check_irreducible(mp);
    if (irr == Irreducibility::Reducible)
      raise(ErrorKind::ReducibleMinPoly, mp.to_string() + " is reducible over " + level->key());
    level = adjoin_algebraic(level, s.var, mp.coeffs(), irr == Irreducibility::Irreducible);
  }
  return FieldTower(level);
}

FieldTower tower_build(BaseKind base, std::uint64_t p, const std::vector<StepInput>& steps) {
  FieldPtr root = base == BaseKind::Rationals ? make_rationals() : make_prime_field(p);
  return tower_extend(FieldTower(root), steps);
}

}  // namespace kext
