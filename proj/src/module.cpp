#include "kext/module.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kext/factor.hpp"

namespace kext {

namespace {

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim() || !same_field(*a.field(), *b.field())) return false;
  const Field& f = *a.field();
  for (std::size_t i = 0; i < a.structure_constants().size(); ++i)
    if (!f.equal(a.structure_constants()[i], b.structure_constants()[i])) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!f.equal(a.unit()[i], b.unit()[i])) return false;
  return true;
}

void require_same_algebra(const Module& m, const Module& n) {
  if (!same_algebra(*m.algebra(), *n.algebra()))
    raise(ErrorKind::DifferentAlgebras, "'" + m.name() + "' and '" + n.name() + "' live over different algebras");
}

const Group& require_group(const Algebra& a) {
  if (!a.group()) raise(ErrorKind::NotAGroupAlgebra, "'" + a.name() + "' is not a group algebra");
  return *a.group();
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) v.insert(v.end(), m.row(i).begin(), m.row(i).end());
  return v;
}

Mat unflatten(const FieldPtr& f, std::span<const Elem> v, std::size_t rows, std::size_t cols) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v[i * cols + j]);
  return m;
}

}  // namespace

Module::Module(AlgebraPtr alg, std::size_t dim, std::vector<Mat> action, std::string name)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)), name_(std::move(name)) {
  if (action_.size() != alg_->dim()) raise(ErrorKind::DimensionMismatch, "need one action matrix per basis element");
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) raise(ErrorKind::DimensionMismatch, "action matrix has wrong shape");
}

Mat Module::action_of(std::span<const Elem> a) const {
  const Field& f = *field();
  Mat r(field(), dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i)
    if (!f.is_zero(a[i])) r = r + action_[i].scaled(a[i]);
  return r;
}

ModulePtr make_module(AlgebraPtr alg, std::vector<Mat> action, std::string name) {
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  auto m = std::make_shared<Module>(alg, d, std::move(action), std::move(name));
  const Algebra& e = *alg;
  if (!m->action_of(e.unit()).is_identity()) raise(ErrorKind::BadParameters, "unit does not act as the identity");
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j) {
      const Vec prod = e.mul(e.basis_vec(i), e.basis_vec(j));
      if (!(m->action(i) * m->action(j) == m->action_of(prod)))
        raise(ErrorKind::BadParameters, "action does not respect e_" + std::to_string(i) + " * e_" + std::to_string(j));
    }
  return m;
}

ModulePtr regular_module(const AlgebraPtr& alg) {
  std::vector<Mat> act;
  for (std::size_t j = 0; j < alg->dim(); ++j) act.push_back(alg->regular_action(j));
  return std::make_shared<Module>(alg, alg->dim(), std::move(act), "regular(" + alg->name() + ")");
}

ModulePtr trivial_module(const AlgebraPtr& alg) {
  require_group(*alg);
  std::vector<Mat> act(alg->dim(), Mat::identity(alg->field(), 1));
  return std::make_shared<Module>(alg, 1, std::move(act), "trivial(" + alg->name() + ")");
}

ModulePtr permutation_module(const AlgebraPtr& alg, const std::vector<std::vector<int>>& perm) {
  const Group& g = require_group(*alg);
  if (perm.size() != g.order()) raise(ErrorKind::BadParameters, "need one permutation per group element");
  const std::size_t n = perm.empty() ? 0 : perm[0].size();
  std::vector<Mat> act;
  for (const auto& p : perm) {
    if (p.size() != n) raise(ErrorKind::BadParameters, "permutations act on different point sets");
    Mat m(alg->field(), n, n);
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (p[x] < 0 || static_cast<std::size_t>(p[x]) >= n || seen[p[x]])
        raise(ErrorKind::BadParameters, "not a permutation");
      seen[p[x]] = true;
      m.set(x, p[x], alg->field()->one());
    }
    act.push_back(std::move(m));
  }
  return make_module(alg, std::move(act), "permutation(" + alg->name() + ")");
}

ModulePtr coset_module(const AlgebraPtr& alg, const std::vector<int>& subgroup_gens) {
  const Group& g = require_group(*alg);
  const int n = static_cast<int>(g.order());
  std::vector<int> h = {g.identity};
  for (std::size_t head = 0; head < h.size(); ++head)
    for (int s : subgroup_gens) {
      if (s < 0 || s >= n) raise(ErrorKind::BadParameters, "subgroup generator out of range");
      const int x = g.table[h[head]][s];
      if (std::find(h.begin(), h.end(), x) == h.end()) h.push_back(x);
    }
  // Right cosets Hx labelled by their smallest element.
  std::vector<int> label(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    for (int y : h) label[g.table[y][x]] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<std::vector<int>> perm(n);
  for (int el = 0; el < n; ++el)
    for (int r : reps) perm[el].push_back(label[g.table[r][el]]);
  auto m = permutation_module(alg, perm);
  std::const_pointer_cast<Module>(m)->set_name("cosets(" + alg->name() + ")");
  return m;
}

ModulePtr direct_sum(const Module& a, const Module& b) {
  require_same_algebra(a, b);
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a.actions().size(); ++i)
    act.push_back(block_diagonal(a.field(), {a.action(i), b.action(i)}));
  return std::make_shared<Module>(a.algebra(), a.dim() + b.dim(), std::move(act), a.name() + " + " + b.name());
}

ModulePtr change_field(const Module& m, const AlgebraPtr& extended) {
  if (extended->dim() != m.algebra()->dim() || !is_prefix_of(*m.field(), *extended->field()))
    raise(ErrorKind::FieldMismatch, "extended algebra does not match module '" + m.name() + "'");
  std::vector<Mat> act;
  for (const auto& a : m.actions()) act.push_back(a.embed_into(extended->field()));
  return std::make_shared<Module>(extended, m.dim(), std::move(act), m.name());
}

// ---------------------------------------------------------------------------

Vec HomSpace::coords(const Mat& phi) const {
  const Vec flat = flatten(phi);
  Vec c;
  for (auto p : pivots) c.push_back(flat[p]);
  return c;
}

Mat HomSpace::element(std::span<const Elem> c) const {
  const FieldPtr& f = source->field();
  Mat r(f, source->dim(), target->dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!f->is_zero(c[i])) r = r + basis[i].scaled(c[i]);
  return r;
}

HomSpace hom_space(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(*m, *n);
  const Field& f = *m->field();
  const std::size_t dm = m->dim(), dn = n->dim(), unknowns = dm * dn;
  const auto& gens = m->algebra()->generators();
  Mat sys(m->field(), gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (auto g : gens) {
    const Mat& a = m->action(g);
    const Mat& b = n->action(g);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j, ++row) {
        for (std::size_t x = 0; x < dm; ++x)
          if (!f.is_zero(a(i, x))) sys.set(row, x * dn + j, f.add(sys(row, x * dn + j), a(i, x)));
        for (std::size_t y = 0; y < dn; ++y)
          if (!f.is_zero(b(y, j))) sys.set(row, i * dn + y, f.sub(sys(row, i * dn + y), b(y, j)));
      }
  }
  const Mat k = kernel(sys);
  HomSpace h{m, n, {}, {}};
  for (std::size_t r = 0; r < k.rows(); ++r) {
    const auto v = k.row(r);
    std::size_t p = 0;
    while (f.is_zero(v[p])) ++p;
    h.pivots.push_back(p);
    h.basis.push_back(unflatten(m->field(), v, dm, dn));
  }
  return h;
}

std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n) { return hom_space(m, n).dim(); }

bool is_intertwiner(const Module& m, const Module& n, const Mat& phi) {
  for (auto g : m.algebra()->generators())
    if (!(m.action(g) * phi == phi * n.action(g))) return false;
  return true;
}

AlgebraPtr endomorphism_algebra(const HomSpace& end) {
  const FieldPtr& fp = end.source->field();
  const Field& f = *fp;
  const std::size_t r = end.dim();
  std::vector<Elem> sc(r * r * r, f.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vec c = end.coords(end.basis[j] * end.basis[i]);
      for (std::size_t k = 0; k < r; ++k) sc[(i * r + j) * r + k] = c[k];
    }
  Vec unit = end.coords(Mat::identity(fp, end.source->dim()));
  return std::make_shared<Algebra>(fp, r, std::move(sc), std::move(unit), "End(" + end.source->name() + ")");
}

// ---------------------------------------------------------------------------

SubspaceBasis spin(const Module& m, const Mat& vectors) {
  EchelonBuilder eb(m.field(), m.dim());
  std::vector<Vec> queue;
  for (std::size_t r = 0; r < vectors.rows(); ++r)
    if (eb.insert(vectors.row(r))) queue.push_back(vectors.row_vec(r));
  const auto& gens = m.algebra()->generators();
  for (std::size_t head = 0; head < queue.size() && eb.dim() < m.dim(); ++head)
    for (auto g : gens) {
      Vec w = vec_mat(*m.field(), queue[head], m.action(g));
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  return eb.result();
}

SubspaceBasis spin_vector(const Module& m, std::span<const Elem> v) {
  return spin(m, Mat::from_rows(m.field(), m.dim(), {Vec(v.begin(), v.end())}));
}

bool is_submodule(const Module& m, const SubspaceBasis& u) {
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (auto g : m.algebra()->generators())
      if (!u.contains(vec_mat(*m.field(), u.basis().row(r), m.action(g)))) return false;
  return true;
}

ModulePtr submodule(const ModulePtr& m, const SubspaceBasis& u) {
  if (!is_submodule(*m, u)) raise(ErrorKind::BadParameters, "subspace is not a submodule");
  std::vector<Mat> act;
  for (const auto& a : m->actions()) {
    Mat s(m->field(), u.dim(), u.dim());
    for (std::size_t r = 0; r < u.dim(); ++r) s.set_row(r, u.coords(vec_mat(*m->field(), u.basis().row(r), a)));
    act.push_back(std::move(s));
  }
  return std::make_shared<Module>(m->algebra(), u.dim(), std::move(act), "sub(" + m->name() + ")");
}

ModulePtr quotient(const ModulePtr& m, const SubspaceBasis& u) {
  if (!is_submodule(*m, u)) raise(ErrorKind::BadParameters, "quotient by a subspace that is not a submodule");
  const auto cols = u.complement_indices();
  std::vector<Mat> act;
  for (const auto& a : m->actions()) {
    Mat q(m->field(), cols.size(), cols.size());
    for (std::size_t r = 0; r < cols.size(); ++r) {
      const Vec img = u.reduce(a.row(cols[r]));
      for (std::size_t c = 0; c < cols.size(); ++c) q.set(r, c, img[cols[c]]);
    }
    act.push_back(std::move(q));
  }
  return std::make_shared<Module>(m->algebra(), cols.size(), std::move(act), m->name() + "/U");
}

Mat quotient_projection(const Module& m, const SubspaceBasis& u) {
  const Field& f = *m.field();
  const auto cols = u.complement_indices();
  Mat p(m.field(), m.dim(), cols.size());
  for (std::size_t x = 0; x < m.dim(); ++x) {
    const Vec img = u.reduce(unit_vec(f, m.dim(), x));
    for (std::size_t c = 0; c < cols.size(); ++c) p.set(x, c, img[cols[c]]);
  }
  return p;
}

namespace {

Vec lift_from_quotient(const Field& f, std::size_t dim, const std::vector<std::size_t>& cols,
                       std::span<const Elem> w) {
  Vec v = zero_vec(f, dim);
  for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = w[c];
  return v;
}

}  // namespace

SubspaceBasis socle_with_radical(const Module& m, const SubspaceBasis& rad) {
  if (rad.dim() == 0 || m.dim() == 0) return SubspaceBasis::full(m.field(), m.dim());
  std::vector<Mat> blocks;
  for (std::size_t r = 0; r < rad.dim(); ++r) blocks.push_back(m.action_of(rad.basis().row(r)));
  return SubspaceBasis::span(left_kernel(hstack(blocks)));
}

SubspaceBasis socle(const ModulePtr& m) { return socle_with_radical(*m, m->algebra()->radical()); }

bool is_semisimple_module(const ModulePtr& m) { return socle(m).dim() == m->dim(); }

FiltrationReport socle_filtration(const ModulePtr& m) {
  const Field& f = *m->field();
  const SubspaceBasis& rad = m->algebra()->radical();
  FiltrationReport rep;
  SubspaceBasis current = SubspaceBasis::zero(m->field(), m->dim());
  rep.chain.push_back(current);
  while (current.dim() < m->dim()) {
    const ModulePtr q = quotient(m, current);
    const SubspaceBasis s = socle_with_radical(*q, rad);
    rep.layers.push_back(submodule(q, s));
    const auto cols = current.complement_indices();
    Mat lifted(m->field(), 0, m->dim());
    for (std::size_t r = 0; r < s.dim(); ++r) lifted.append_row(lift_from_quotient(f, m->dim(), cols, s.basis().row(r)));
    current = current.sum(SubspaceBasis::span(lifted));
    rep.chain.push_back(current);
  }
  rep.socle_length = rep.layers.size();
  std::vector<Mat> act;
  for (std::size_t i = 0; i < m->actions().size(); ++i) {
    std::vector<Mat> blocks;
    for (const auto& l : rep.layers) blocks.push_back(l->action(i));
    act.push_back(block_diagonal(m->field(), blocks));
  }
  rep.semisimplification = std::make_shared<Module>(m->algebra(), m->dim(), std::move(act), "ss(" + m->name() + ")");
  return rep;
}

ModulePtr semisimplify(const ModulePtr& m) { return socle_filtration(m).semisimplification; }

// ---------------------------------------------------------------------------

namespace {

bool radical_available(const Field& f) { return f.characteristic() == 0 || f.is_finite(); }

// All common row eigenvectors of the given matrices, as the intersection of
// eigenspaces; returns one if any exists. Needs root finding.
std::optional<Vec> common_eigenvector(const std::vector<Mat>& mats, std::size_t n, const FieldPtr& fp) {
  const Field& f = *fp;
  std::vector<SubspaceBasis> spaces = {SubspaceBasis::full(fp, n)};
  for (const auto& a : mats) {
    std::vector<SubspaceBasis> next;
    const auto roots = poly_roots(minimal_polynomial(a));
    for (const auto& lam : roots) {
      Mat shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, f.sub(shifted(i, i), lam));
      const SubspaceBasis eig = SubspaceBasis::span(left_kernel(shifted));
      for (const auto& s : spaces) {
        SubspaceBasis x = s.intersect(eig);
        if (x.dim() > 0) next.push_back(std::move(x));
      }
    }
    spaces = std::move(next);
    if (spaces.empty()) return std::nullopt;
  }
  return spaces.front().basis().row_vec(0);
}

// Proper nonzero submodule from an endomorphism whose minimal polynomial
// is not irreducible, if the field lets us see that.
std::optional<SubspaceBasis> split_by_endomorphism(const Mat& psi, bool& irreducible_full, std::size_t end_dim) {
  irreducible_full = false;
  const Poly mp = minimal_polynomial(psi);
  if (mp.degree() <= 1) return std::nullopt;
  const Field& f = *psi.field();
  std::optional<Poly> g;
  if (factorization_supported(f)) {
    const auto fs = poly_factor(mp);
    if (fs.size() > 1 || fs[0].multiplicity > 1) g = fs[0].poly;
    else if (static_cast<std::size_t>(mp.degree()) == end_dim) irreducible_full = true;
  } else {
    const Poly d = gcd(mp, mp.derivative());
    if (d.degree() > 0 && d.degree() < mp.degree()) {
      g = d;
    } else if (root_finding_supported(f)) {
      const auto roots = poly_roots(mp);
      if (!roots.empty()) g = Poly(psi.field(), {f.neg(roots[0]), f.one()});
      else if (mp.degree() <= 3 && d.degree() == 0 && static_cast<std::size_t>(mp.degree()) == end_dim)
        irreducible_full = true;
    }
  }
  if (!g) return std::nullopt;
  return SubspaceBasis::span(left_kernel(poly_eval_matrix(*g, psi)));
}

}  // namespace

SimplicityResult test_simple(const ModulePtr& m) {
  const std::size_t d = m->dim();
  const FieldPtr& fp = m->field();
  const Field& f = *fp;
  SimplicityResult res;
  if (d == 0) return {Simplicity::NotSimple, true, std::nullopt};
  if (d == 1) return {Simplicity::Simple, true, std::nullopt};
  for (std::size_t i = 0; i < d; ++i) {
    SubspaceBasis s = spin_vector(*m, unit_vec(f, d, i));
    if (s.dim() < d) return {Simplicity::NotSimple, true, std::move(s)};
  }
  bool semisimple_known = false;
  if (radical_available(f)) {
    SubspaceBasis soc = socle(m);
    if (soc.dim() < d) return {Simplicity::NotSimple, true, std::move(soc)};
    semisimple_known = true;
  }
  const HomSpace end = hom_space(m, m);
  const std::size_t r = end.dim();
  if (semisimple_known && r == 1) return {Simplicity::Simple, true, std::nullopt};

  auto try_element = [&](const Mat& psi, bool& full) { return split_by_endomorphism(psi, full, r); };
  bool full = false;
  // Structured pencil first.
  std::vector<Mat> pencil(end.basis.begin(), end.basis.end());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) pencil.push_back(end.basis[i] + end.basis[j]);
  bool found_full = false;
  for (const auto& psi : pencil) {
    if (auto u = try_element(psi, full)) return {Simplicity::NotSimple, true, std::move(u)};
    found_full |= full;
  }
  if (found_full && semisimple_known) return {Simplicity::Simple, true, std::nullopt};

  std::mt19937_64 rng(0xdecade);
  if (f.is_finite()) {
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), f.order().get_mpz_t(), r);
    if (total <= 4096) {
      const std::uint64_t q = f.order().get_ui(), count = total.get_ui();
      for (std::uint64_t code = 1; code < count; ++code) {
        Vec c;
        std::uint64_t x = code;
        for (std::size_t k = 0; k < r; ++k) {
          c.push_back(f.from_index(x % q));
          x /= q;
        }
        if (auto u = try_element(end.element(c), full)) return {Simplicity::NotSimple, true, std::move(u)};
      }
      // Every endomorphism has an irreducible minimal polynomial: End is a
      // division algebra.
      return {Simplicity::Simple, true, std::nullopt};
    }
  }
  if (!semisimple_known && d <= 3 && root_finding_supported(f)) {
    // A proper submodule has dimension 1 or d-1: a common eigenvector of
    // the action or of its transpose.
    std::vector<Mat> acts, transposed;
    for (auto g : m->algebra()->generators()) {
      acts.push_back(m->action(g));
      transposed.push_back(m->action(g).transpose());
    }
    if (auto v = common_eigenvector(acts, d, fp))
      return {Simplicity::NotSimple, true, SubspaceBasis::span(Mat::from_rows(fp, d, {*v}))};
    if (auto u = common_eigenvector(transposed, d, fp)) {
      Mat col(fp, d, 1);
      for (std::size_t i = 0; i < d; ++i) col.set(i, 0, (*u)[i]);
      return {Simplicity::NotSimple, true, SubspaceBasis::span(left_kernel(col))};
    }
    return {Simplicity::Simple, true, std::nullopt};
  }
  const int tries = f.is_finite() ? 400 : 60;
  for (int t = 0; t < tries; ++t) {
    Vec c;
    for (std::size_t k = 0; k < r; ++k) c.push_back(f.random(rng, 3));
    if (auto u = try_element(end.element(c), full)) return {Simplicity::NotSimple, true, std::move(u)};
    if (full && semisimple_known) return {Simplicity::Simple, true, std::nullopt};
  }
  if (semisimple_known) return {Simplicity::Simple, false, std::nullopt};
  return {Simplicity::Unknown, false, std::nullopt};
}

namespace {

struct Leaf {
  ModulePtr module;
  Mat rows;  // basis of the piece in coordinates of the decomposed module
  bool certified = true;
};

// E-stable complement of u in a semisimple module, via a section of the
// projection onto p/u.
SubspaceBasis complement(const ModulePtr& p, const SubspaceBasis& u) {
  const ModulePtr q = quotient(p, u);
  const Mat proj = quotient_projection(*p, u);
  const HomSpace sections = hom_space(q, p);
  const std::size_t dq = q->dim();
  Mat sys(p->field(), 0, dq * dq);
  for (const auto& h : sections.basis) sys.append_row(flatten(h * proj));
  const auto c = solve_left(sys, flatten(Mat::identity(p->field(), dq)));
  if (!c) raise(ErrorKind::NotSemisimple, "submodule has no invariant complement");
  return SubspaceBasis::span(sections.element(*c));
}

void split_into_simples(const ModulePtr& piece, const Mat& rows, std::vector<Leaf>& out) {
  if (piece->dim() == 0) return;
  SimplicityResult s = test_simple(piece);
  if (s.verdict == Simplicity::Unknown)
    raise(ErrorKind::UnsupportedField, "cannot decide simplicity over " + piece->field()->key());
  if (s.verdict == Simplicity::Simple) {
    out.push_back({piece, rows, s.certified});
    return;
  }
  const SubspaceBasis& u = *s.proper_submodule;
  const SubspaceBasis w = complement(piece, u);
  split_into_simples(submodule(piece, u), u.basis() * rows, out);
  split_into_simples(submodule(piece, w), w.basis() * rows, out);
}

}  // namespace

DecompositionReport decompose(const ModulePtr& m) {
  const Field& f = *m->field();
  if (!radical_available(f))
    raise(ErrorKind::UnsupportedField, "decomposition over " + f.key() + " needs a radical algorithm");
  DecompositionReport rep;
  if (m->dim() == 0) {
    rep.change_of_basis = Mat(m->field(), 0, 0);
    return rep;
  }
  if (!is_semisimple_module(m)) {
    DecompositionReport ss = decompose(semisimplify(m));
    ss.semisimple = false;
    ss.change_of_basis.reset();
    ss.block_sizes.clear();
    ss.block_summand.clear();
    return ss;
  }
  std::vector<Leaf> leaves;
  split_into_simples(m, Mat::identity(m->field(), m->dim()), leaves);

  std::vector<ModulePtr> reps;
  std::vector<std::size_t> mult, leaf_class;
  for (const auto& l : leaves) {
    rep.certified = rep.certified && l.certified;
    std::size_t cls = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (reps[k]->dim() == l.module->dim() && hom_dim(l.module, reps[k]) > 0) {
        cls = k;
        break;
      }
    if (cls == reps.size()) {
      reps.push_back(l.module);
      mult.push_back(0);
    }
    ++mult[cls];
    leaf_class.push_back(cls);
  }
  std::vector<std::size_t> end_dims;
  for (const auto& r : reps) end_dims.push_back(hom_dim(r, r));
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(reps[a]->dim(), end_dims[a]) < std::pair(reps[b]->dim(), end_dims[b]);
  });
  std::vector<std::size_t> position(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    rep.summands.push_back({reps[order[i]], mult[order[i]], end_dims[order[i]]});
    rep.length += mult[order[i]];
  }
  Mat cob(m->field(), 0, m->dim());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t r = 0; r < leaves[i].rows.rows(); ++r) cob.append_row(leaves[i].rows.row(r));
    rep.block_sizes.push_back(leaves[i].module->dim());
    rep.block_summand.push_back(position[leaf_class[i]]);
  }
  // Certificate: the new basis block-diagonalizes every action matrix.
  const auto inv = inverse(cob);
  if (!inv) raise(ErrorKind::Internal, "decomposition basis is singular");
  for (auto g : m->algebra()->generators()) {
    const Mat conj = cob * m->action(g) * *inv;
    std::size_t off = 0;
    for (auto bs : rep.block_sizes) {
      for (std::size_t i = off; i < off + bs; ++i)
        for (std::size_t j = 0; j < m->dim(); ++j)
          if ((j < off || j >= off + bs) && !f.is_zero(conj(i, j)))
            raise(ErrorKind::Internal, "decomposition basis does not block-diagonalize");
      off += bs;
    }
  }
  rep.change_of_basis = std::move(cob);
  return rep;
}

std::size_t composition_length(const ModulePtr& m) { return decompose(m).length; }

// ---------------------------------------------------------------------------

std::optional<Mat> find_isomorphism(const ModulePtr& a, const ModulePtr& b) {
  require_same_algebra(*a, *b);
  if (a->dim() != b->dim()) return std::nullopt;
  const FieldPtr& fp = a->field();
  if (a->dim() == 0) return Mat(fp, 0, 0);
  const HomSpace h = hom_space(a, b);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& phi : h.basis)
    if (inverse(phi)) return phi;
  std::mt19937_64 rng(0xab1e);
  for (int t = 0; t < 20; ++t) {
    Vec c;
    for (std::size_t k = 0; k < h.dim(); ++k) c.push_back(fp->random(rng, 50));
    Mat phi = h.element(c);
    if (inverse(phi)) return phi;
  }
  // Constructive route for semisimple modules: match simple summands.
  if (!radical_available(*fp) || !is_semisimple_module(a) || !is_semisimple_module(b)) return std::nullopt;
  const DecompositionReport da = decompose(a), db = decompose(b);
  std::vector<std::size_t> off_a, off_b;
  for (std::size_t i = 0, o = 0; i < da.block_sizes.size(); o += da.block_sizes[i++]) off_a.push_back(o);
  for (std::size_t i = 0, o = 0; i < db.block_sizes.size(); o += db.block_sizes[i++]) off_b.push_back(o);
  std::vector<bool> used(db.block_sizes.size(), false);
  // Each block of a goes isomorphically onto an unused matching block of b;
  // psi is then determined by S psi = T (sources and images stacked).
  auto block_rows = [&](const DecompositionReport& d, const std::vector<std::size_t>& off, std::size_t i,
                        std::size_t dim) {
    Mat rows(fp, 0, dim);
    for (std::size_t r = 0; r < d.block_sizes[i]; ++r) rows.append_row(d.change_of_basis->row(off[i] + r));
    return SubspaceBasis::span(rows);
  };
  Mat sources(fp, 0, a->dim()), images(fp, 0, b->dim());
  for (std::size_t i = 0; i < da.block_sizes.size(); ++i) {
    const SubspaceBasis ua = block_rows(da, off_a, i, a->dim());
    const ModulePtr pa = submodule(a, ua);
    bool matched = false;
    for (std::size_t j = 0; j < db.block_sizes.size() && !matched; ++j) {
      if (used[j] || db.block_sizes[j] != da.block_sizes[i]) continue;
      const SubspaceBasis ub = block_rows(db, off_b, j, b->dim());
      const HomSpace hs = hom_space(pa, submodule(b, ub));
      if (hs.dim() == 0) continue;
      // A nonzero map between simple modules is an isomorphism.
      const Mat img = hs.basis[0] * ub.basis();
      for (std::size_t r = 0; r < ua.dim(); ++r) {
        sources.append_row(ua.basis().row(r));
        images.append_row(img.row(r));
      }
      used[j] = true;
      matched = true;
    }
    if (!matched) return std::nullopt;
  }
  const auto sinv = inverse(sources);
  if (!sinv) raise(ErrorKind::Internal, "summands do not span the module");
  Mat psi = *sinv * images;
  if (!is_intertwiner(*a, *b, psi) || !inverse(psi)) raise(ErrorKind::Internal, "assembled isomorphism is invalid");
  return psi;
}

bool are_isomorphic(const ModulePtr& a, const ModulePtr& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------------------

ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(*m, *n);
  require_group(*m->algebra());
  std::vector<Mat> act;
  for (std::size_t g = 0; g < m->actions().size(); ++g) act.push_back(kron(m->action(g), n->action(g)));
  return std::make_shared<Module>(m->algebra(), m->dim() * n->dim(), std::move(act),
                                  "(" + m->name() + ")*(" + n->name() + ")");
}

ModulePtr dual_module(const ModulePtr& m) {
  const Group& g = require_group(*m->algebra());
  std::vector<Mat> act;
  for (std::size_t x = 0; x < m->actions().size(); ++x)
    act.push_back(m->action(static_cast<std::size_t>(g.inverse[x])).transpose());
  return std::make_shared<Module>(m->algebra(), m->dim(), std::move(act), "dual(" + m->name() + ")");
}

}  // namespace kext
