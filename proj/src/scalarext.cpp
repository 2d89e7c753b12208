#include "kext/scalarext.hpp"

#include <algorithm>
#include <random>

#include "kext/factor.hpp"

namespace kext {

namespace {

bool radical_available(const Field& f) { return f.characteristic() == 0 || f.is_finite(); }

Poly step_poly(const Field& level) {
  const StepSpec& s = *level.step();
  return Poly(level.parent(), s.minpoly);
}

std::optional<Mat> full_rank_element(const HomSpace& h, std::size_t want, std::mt19937_64& rng) {
  for (const auto& b : h.basis)
    if (rank(b) == want) return b;
  if (h.dim() < 2) return std::nullopt;
  const Field& f = *h.source->field();
  for (int t = 0; t < 60; ++t) {
    Vec c;
    for (std::size_t i = 0; i < h.dim(); ++i) c.push_back(f.random(rng, 3));
    Mat m = h.element(c);
    if (rank(m) == want) return m;
  }
  return std::nullopt;
}

Mat end_element(const std::vector<Mat>& basis, std::span<const Elem> c, const FieldPtr& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!f->is_zero(c[i])) m = m + basis[i].scaled(c[i]);
  return m;
}

struct EndData {
  HomSpace hom;
  AlgebraPtr small, large;
  std::vector<Mat> large_basis;  // hom basis reinterpreted over F'
};

EndData end_data(const ModulePtr& s, const TowerInclusion& inc) {
  EndData d{hom_space(s, s), nullptr, nullptr, {}};
  d.small = endomorphism_algebra(d.hom);
  d.large = inc.extend(d.small);
  for (const auto& b : d.hom.basis) d.large_basis.push_back(b.embed_into(inc.large()));
  return d;
}

void require_simple(const ModulePtr& s) {
  const auto r = test_simple(s);
  if (r.verdict == Simplicity::NotSimple) raise(ErrorKind::NotSimple, "'" + s->name() + "' is not simple");
  if (r.verdict == Simplicity::Unknown)
    raise(ErrorKind::Undecidable, "simplicity of '" + s->name() + "' could not be decided");
}

std::vector<std::uint64_t> subspace_key(const SubspaceBasis& u) {
  const Field& f = *u.field();
  std::vector<std::uint64_t> k = {u.dim()};
  const Mat& b = u.basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (const auto& x : b.row(i)) k.push_back(f.to_index(x));
  return k;
}

}  // namespace

TowerInclusion::TowerInclusion(FieldPtr small, FieldPtr large) : small_(std::move(small)), large_(std::move(large)) {
  if (!is_prefix_of(*small_, *large_))
    raise(ErrorKind::FieldMismatch, FieldTower(large_).label() + " does not extend " + FieldTower(small_).label());
  for (std::size_t d = small_->depth() + 1; d <= large_->depth(); ++d) {
    const Field& lv = large_->level(d);
    if (lv.step()->kind == StepKind::Algebraic && !is_separable_step(step_poly(lv))) separable_ = false;
  }
}

std::optional<std::size_t> TowerInclusion::degree() const {
  std::size_t deg = 1;
  for (std::size_t d = small_->depth() + 1; d <= large_->depth(); ++d) {
    const StepSpec& s = *large_->level(d).step();
    if (s.kind == StepKind::Transcendental) return std::nullopt;
    deg *= s.minpoly.size() - 1;
  }
  return deg;
}

std::string TowerInclusion::name() const { return FieldTower(small_).label() + " -> " + FieldTower(large_).label(); }

AlgebraPtr TowerInclusion::extend(const AlgebraPtr& e) const {
  if (!same_field(*e->field(), *small_))
    raise(ErrorKind::FieldMismatch, "'" + e->name() + "' is not defined over " + FieldTower(small_).label());
  if (trivial()) return e;
  std::lock_guard lock(cache_->mu);
  auto it = cache_->map.find(e.get());
  if (it != cache_->map.end()) return it->second.second;
  auto r = change_field(*e, large_);
  cache_->map.emplace(e.get(), std::make_pair(e, r));
  return r;
}

AlgebraPtr extend_algebra(const AlgebraPtr& e, const TowerInclusion& inc) { return inc.extend(e); }

ModulePtr t_extend_module(const ModulePtr& m, const TowerInclusion& inc) {
  auto e = inc.extend(m->algebra());
  if (inc.trivial()) return m;
  return change_field(*m, e);
}

Mat t_extend_map(const Mat& f, const TowerInclusion& inc) {
  if (!same_field(*f.field(), *inc.small())) raise(ErrorKind::FieldMismatch, "map is not defined over the small field");
  return f.embed_into(inc.large());
}

FullFaithfulnessReport check_relative_full_faithfulness(const ModulePtr& m, const ModulePtr& n,
                                                        const TowerInclusion& inc) {
  FullFaithfulnessReport r;
  const HomSpace small = hom_space(m, n);
  const auto tm = t_extend_module(m, inc);
  const auto tn = t_extend_module(n, inc);
  const HomSpace large = hom_space(tm, tn);
  r.dim_small = small.dim();
  r.dim_large = large.dim();
  r.basis_intertwines = true;
  EchelonBuilder eb(inc.large(), m->dim() * n->dim());
  for (const auto& b : small.basis) {
    const Mat lb = t_extend_map(b, inc);
    r.basis_intertwines = r.basis_intertwines && is_intertwiner(*tm, *tn, lb);
    Vec flat;
    for (std::size_t i = 0; i < lb.rows(); ++i) flat.insert(flat.end(), lb.row(i).begin(), lb.row(i).end());
    eb.insert(flat);
  }
  r.basis_independent = eb.dim() == small.dim();
  r.pass = r.dim_small == r.dim_large && r.basis_independent && r.basis_intertwines;
  return r;
}

std::vector<Elem> trial_roots(const TowerInclusion& inc) {
  const Field& big = *inc.large();
  const long shifts = std::min<long>(big.characteristic() == 0 ? 2 : static_cast<long>(big.characteristic()), 5);
  std::vector<Elem> out;
  for (std::size_t d = inc.small()->depth() + 1; d <= big.depth(); ++d) {
    const Elem g = embed(big.level(d), big, big.level(d).generator());
    for (long c = 0; c < shifts; ++c) {
      out.push_back(big.add(g, big.from_int(c)));
      out.push_back(big.sub(big.from_int(c), g));
    }
  }
  return out;
}

std::optional<NilpotentWitness> find_nilpotent_central(const Algebra& e, std::span<const Elem> trial) {
  const Field& f = *e.field();
  const std::size_t n = e.dim();
  const SubspaceBasis z = center(e);
  std::vector<Vec> cands;
  for (std::size_t i = 0; i < z.dim(); ++i) cands.push_back(z.basis().row_vec(i));
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = i + 1; j < z.dim(); ++j) cands.push_back(vec_add(f, z.basis().row(i), z.basis().row(j)));

  auto nil_exponent = [&](const Vec& x) -> std::size_t {
    Vec p = x;
    for (std::size_t k = 1; k <= n; ++k) {
      if (vec_is_zero(f, p)) return k;
      p = e.mul(p, x);
    }
    return vec_is_zero(f, p) ? n + 1 : 0;
  };

  for (const auto& b : cands) {
    std::vector<Elem> roots = {f.zero()};
    const Poly m = element_minpoly(e, b);
    if (root_finding_supported(f)) {
      for (auto& r : poly_roots(m))
        if (!f.is_zero(r)) roots.push_back(r);
    } else {
      for (const auto& r : trial)
        if (!f.is_zero(r) && f.is_zero(upoly::eval(f, m.coeffs(), r))) roots.push_back(r);
    }
    for (const auto& a : roots) {
      const Vec x = vec_sub(f, b, vec_scale(f, e.unit(), a));
      if (vec_is_zero(f, x)) continue;
      if (const auto k = nil_exponent(x)) return NilpotentWitness{x, k, {}};
    }
  }
  return std::nullopt;
}

SplitReport split_simple(const ModulePtr& s, const TowerInclusion& inc) {
  require_simple(s);
  SplitReport r;
  r.source = s;
  r.extended = t_extend_module(s, inc);
  const EndData ed = end_data(s, inc);
  r.end_small = ed.small;
  r.end_large = ed.large;
  r.end_dim_small = ed.small->dim();
  r.end_dim_large = hom_dim(r.extended, r.extended);
  r.end_is_frobenius = is_frobenius(*ed.small).frobenius;

  if (radical_available(*inc.large())) {
    auto d = decompose(r.extended);
    r.semisimple = d.semisimple;
    r.length = d.length;
    r.end_length = composition_length(regular_module(ed.large));
    if (d.semisimple) {
      std::mt19937_64 rng(0x5eed);
      for (const auto& x : d.summands) {
        const bool epi = full_rank_element(hom_space(r.extended, x.simple), x.simple->dim(), rng).has_value();
        const bool mono = full_rank_element(hom_space(x.simple, r.extended), x.simple->dim(), rng).has_value();
        r.sandwich.push_back(epi && mono);
      }
      r.decomposition = std::move(d);
    } else {
      r.filtration = socle_filtration(r.extended);
      r.decomposition = std::move(d);
    }
  } else {
    r.witness = find_nilpotent_central(*ed.large, trial_roots(inc));
    if (r.witness) {
      r.witness->action = end_element(ed.large_basis, r.witness->element, inc.large(), s->dim());
      r.semisimple = false;
    } else {
      try {
        if (is_separable_algebra(*ed.large)) r.semisimple = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedField) throw;
      }
    }
  }
  if (r.length && r.end_length) r.consistent = *r.length == *r.end_length;
  for (bool b : r.sandwich) r.consistent = r.consistent && b;
  return r;
}

std::optional<std::size_t> SubmoduleLattice::find(const SubspaceBasis& u) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == u) return i;
  return std::nullopt;
}

SubmoduleLattice enumerate_submodules(const ModulePtr& m, std::uint64_t limit) {
  const FieldPtr& fp = m->field();
  const Field& f = *fp;
  const std::size_t n = m->dim();
  if (!f.is_finite()) raise(ErrorKind::TooLarge, "lattice enumeration needs a finite field");
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), f.order().get_mpz_t(), n);
  if (total > limit) raise(ErrorKind::TooLarge, "|F|^dim = " + total.get_str() + " exceeds " + std::to_string(limit));
  const std::uint64_t q = f.order().get_ui();

  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  std::vector<SubspaceBasis> found = {SubspaceBasis::zero(fp, n)};
  seen[subspace_key(found[0])] = 0;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const SubspaceBasis u = found[head];
    const auto free = u.complement_indices();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free.size(); ++i) count *= q;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      Vec v = zero_vec(f, n);
      std::uint64_t x = idx;
      for (auto c : free) {
        v[c] = f.from_index(x % q);
        x /= q;
      }
      Mat gens = u.basis();
      if (gens.rows() == 0) gens = Mat(fp, 0, n);
      gens.append_row(v);
      SubspaceBasis w = spin(*m, gens);
      auto key = subspace_key(w);
      if (seen.emplace(key, found.size()).second) found.push_back(std::move(w));
    }
  }
  std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> order(seen.begin(), seen.end());
  SubmoduleLattice lat;
  for (const auto& [k, i] : order) lat.members.push_back(found[i]);  // map order = (dim, entries)

  const std::size_t k = lat.members.size();
  std::vector<std::size_t> chain(k, 0);
  std::vector<bool> atom(k, false);
  for (std::size_t j = 1; j < k; ++j) {
    bool minimal = true;
    for (std::size_t i = 1; i < j; ++i) {
      if (lat.members[i].dim() >= lat.members[j].dim() || !lat.members[j].contains(lat.members[i])) continue;
      minimal = false;
      chain[j] = std::max(chain[j], chain[i] + 1);
    }
    if (minimal) chain[j] = 1;
    atom[j] = minimal;
  }
  lat.length = chain[k - 1];
  lat.socle = SubspaceBasis::zero(fp, n);
  for (std::size_t j = 1; j < k; ++j)
    if (atom[j]) lat.socle = lat.socle.sum(lat.members[j]);
  return lat;
}

IdealLatticeReport ideal_subobject_check(const ModulePtr& s, const TowerInclusion& inc) {
  if (!inc.large()->is_finite()) raise(ErrorKind::TooLarge, "ideal lattice enumeration needs a finite field");
  require_simple(s);
  const EndData ed = end_data(s, inc);
  const auto ts = t_extend_module(s, inc);
  const auto ideals = enumerate_submodules(regular_module(ed.large));
  const auto subs = enumerate_submodules(ts);

  IdealLatticeReport r;
  r.ideals = ideals.size();
  r.submodules = subs.size();
  std::vector<std::size_t> image;
  bool all_found = true;
  for (const auto& ideal : ideals.members) {
    Mat rows(inc.large(), 0, s->dim());
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      const Mat phi = end_element(ed.large_basis, ideal.basis().row(i), inc.large(), s->dim());
      for (std::size_t k = 0; k < phi.rows(); ++k) rows.append_row(phi.row(k));
    }
    const auto idx = subs.find(SubspaceBasis::span(rows));
    if (!idx) {
      all_found = false;
      break;
    }
    image.push_back(*idx);
  }
  if (all_found) {
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    r.bijective = r.ideals == r.submodules && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    r.inclusion_preserving = true;
    for (std::size_t a = 0; a < r.ideals && r.inclusion_preserving; ++a)
      for (std::size_t b = 0; b < r.ideals; ++b) {
        const bool lhs = ideals.members[b].contains(ideals.members[a]);
        const bool rhs = subs.members[image[b]].contains(subs.members[image[a]]);
        if (lhs != rhs) {
          r.inclusion_preserving = false;
          break;
        }
      }
  }
  r.pass = r.bijective && r.inclusion_preserving;
  return r;
}

TensorReport check_tensor_functoriality(const ModulePtr& m, const ModulePtr& n, const TowerInclusion& inc) {
  TensorReport r;
  const auto tm = t_extend_module(m, inc);
  const auto tn = t_extend_module(n, inc);
  auto same_actions = [](const ModulePtr& a, const ModulePtr& b) {
    if (a->dim() != b->dim() || a->actions().size() != b->actions().size()) return false;
    for (std::size_t i = 0; i < a->actions().size(); ++i)
      if (!(a->action(i) == b->action(i))) return false;
    return true;
  };
  r.tensor_equal = same_actions(t_extend_module(tensor_module(m, n), inc), tensor_module(tm, tn));
  r.dual_m_equal = same_actions(t_extend_module(dual_module(m), inc), dual_module(tm));
  r.dual_n_equal = same_actions(t_extend_module(dual_module(n), inc), dual_module(tn));
  r.pass = r.tensor_equal && r.dual_m_equal && r.dual_n_equal;
  return r;
}

PermanenceReport check_semisimplicity_permanence(const ModulePtr& m, const TowerInclusion& inc) {
  PermanenceReport r;
  if (radical_available(*inc.large())) {
    if (!is_semisimple_module(m)) raise(ErrorKind::NotSemisimple, "'" + m->name() + "' is not semisimple");
    r.regime = inc.separable() ? PermanenceRegime::SeparableExtension : PermanenceRegime::SeparableEnd;
    r.extended_semisimple = is_semisimple_module(t_extend_module(m, inc));
    r.pass = r.extended_semisimple;
    return r;
  }
  // Characteristic p over a function field: only simple modules, through
  // F' (x) End(S), whose right ideals mirror the submodules of t(S).
  require_simple(m);
  const EndData ed = end_data(m, inc);
  bool end_separable = false;
  try {
    end_separable = is_separable_algebra(*ed.small);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedField) throw;
  }
  if (auto w = find_nilpotent_central(*ed.large, trial_roots(inc))) {
    r.regime = PermanenceRegime::NilpotentWitness;
    w->action = end_element(ed.large_basis, w->element, inc.large(), m->dim());
    r.witness = std::move(w);
    r.extended_semisimple = false;
    r.pass = !inc.separable() && !end_separable;
    return r;
  }
  if (!inc.separable() && !end_separable)
    raise(ErrorKind::Undecidable, "no certificate regime applies to '" + m->name() + "' along " + inc.name());
  r.regime = inc.separable() ? PermanenceRegime::SeparableExtension : PermanenceRegime::SeparableEnd;
  try {
    r.extended_semisimple = is_separable_algebra(*ed.large);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedField) throw;
  }
  if (!r.extended_semisimple)
    raise(ErrorKind::Undecidable, "semisimplicity of t('" + m->name() + "') along " + inc.name() + " is not certifiable");
  r.pass = true;
  return r;
}

std::string regime_name(PermanenceRegime r) {
  switch (r) {
    case PermanenceRegime::SeparableExtension: return "separable-extension";
    case PermanenceRegime::SeparableEnd: return "separable-end";
    case PermanenceRegime::NilpotentWitness: return "nilpotent-witness";
  }
  return "?";
}

}  // namespace kext
