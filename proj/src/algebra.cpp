#include "kext/algebra.hpp"

#include <map>
#include <random>

#include "kext/factor.hpp"
#include "kext/tower.hpp"

namespace kext {

namespace {

std::string field_name(const FieldPtr& f) { return FieldTower(f).label(); }

}  // namespace

Algebra::Algebra(FieldPtr field, std::size_t dim, std::vector<Elem> sc, Vec unit, std::string name)
    : field_(std::move(field)), dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)), name_(std::move(name)) {
  if (sc_.size() != dim_ * dim_ * dim_ || unit_.size() != dim_)
    raise(ErrorKind::DimensionMismatch, "structure constants do not match dimension " + std::to_string(dim_));
}

Vec Algebra::mul(std::span<const Elem> a, std::span<const Elem> b) const {
  const Field& f = *field_;
  Vec r = zero_vec(f, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (f.is_zero(b[j])) continue;
      const Elem ab = f.mul(a[i], b[j]);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Elem& x = c(i, j, k);
        if (!f.is_zero(x)) r[k] = f.add(r[k], f.mul(ab, x));
      }
    }
  }
  return r;
}

Mat Algebra::right_mult(std::span<const Elem> a) const {
  const Field& f = *field_;
  Mat m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (f.is_zero(a[j])) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        const Elem& x = c(i, j, k);
        if (!f.is_zero(x)) m.set(i, k, f.add(m(i, k), f.mul(a[j], x)));
      }
    }
  return m;
}

Mat Algebra::left_mult(std::span<const Elem> a) const {
  const Field& f = *field_;
  Mat m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (f.is_zero(a[j])) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        const Elem& x = c(j, i, k);
        if (!f.is_zero(x)) m.set(i, k, f.add(m(i, k), f.mul(a[j], x)));
      }
    }
  return m;
}

const Mat& Algebra::regular_action(std::size_t j) const {
  std::lock_guard lock(mu_);
  if (regular_.empty()) {
    for (std::size_t b = 0; b < dim_; ++b) {
      Mat m(field_, dim_, dim_);
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) m.set(i, k, c(i, b, k));
      regular_.push_back(std::move(m));
    }
  }
  return regular_[j];
}

const std::vector<std::size_t>& Algebra::generators() const {
  {
    std::lock_guard lock(mu_);
    if (generators_) return *generators_;
  }
  // Greedy: add e_i whenever it is not in the subalgebra generated so far.
  std::vector<std::size_t> gens;
  auto closure = [&](const std::vector<std::size_t>& g) {
    EchelonBuilder eb(field_, dim_);
    std::vector<Vec> queue;
    if (eb.insert(unit_)) queue.push_back(unit_);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto gi : g) {
        Vec w = mul(queue[head], basis_vec(gi));
        if (eb.insert(w)) queue.push_back(std::move(w));
      }
    return eb.result();
  };
  SubspaceBasis sub = closure(gens);
  for (std::size_t i = 0; i < dim_ && sub.dim() < dim_; ++i) {
    if (sub.contains(basis_vec(i))) continue;
    gens.push_back(i);
    sub = closure(gens);
  }
  std::lock_guard lock(mu_);
  if (!generators_) generators_ = std::move(gens);
  return *generators_;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!field_->equal(c(i, j, k), c(j, i, k))) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::optional<std::array<std::size_t, 3>> associativity_witness(const Field& f, std::size_t n,
                                                               const std::vector<Elem>& sc) {
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Elem& { return sc[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Elem lhs = f.zero(), rhs = f.zero();
          for (std::size_t m = 0; m < n; ++m) {
            if (!f.is_zero(c(i, j, m)) && !f.is_zero(c(m, k, l))) lhs = f.add(lhs, f.mul(c(i, j, m), c(m, k, l)));
            if (!f.is_zero(c(j, k, m)) && !f.is_zero(c(i, m, l))) rhs = f.add(rhs, f.mul(c(j, k, m), c(i, m, l)));
          }
          if (!f.equal(lhs, rhs)) return std::array<std::size_t, 3>{i, j, k};
        }
  return std::nullopt;
}

AlgebraPtr build_algebra(FieldPtr field, std::size_t dim, std::vector<Elem> sc, Vec unit, std::string name) {
  if (sc.size() != dim * dim * dim) raise(ErrorKind::BadParameters, "expected dim^3 structure constants");
  if (unit.size() != dim) raise(ErrorKind::BadUnit, "unit vector has wrong length");
  if (auto w = associativity_witness(*field, dim, sc))
    raise(ErrorKind::NotAssociative, "witness (" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                                         std::to_string((*w)[2]) + ")");
  auto a = std::make_shared<Algebra>(field, dim, std::move(sc), std::move(unit), std::move(name));
  for (std::size_t i = 0; i < dim; ++i) {
    const Vec e = a->basis_vec(i);
    const Vec l = a->mul(a->unit(), e), r = a->mul(e, a->unit());
    for (std::size_t k = 0; k < dim; ++k)
      if (!field->equal(l[k], e[k]) || !field->equal(r[k], e[k]))
        raise(ErrorKind::BadUnit, "unit law fails on basis element " + std::to_string(i));
  }
  return a;
}

AlgebraPtr group_algebra(const Group& g, FieldPtr field) {
  const std::size_t n = g.order();
  std::vector<Elem> sc(n * n * n, field->zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sc[(a * n + b) * n + g.table[a][b]] = field->one();
  Vec unit = unit_vec(*field, n, static_cast<std::size_t>(g.identity));
  auto alg = std::make_shared<Algebra>(field, n, std::move(sc), std::move(unit),
                                       field_name(field) + "[" + g.name + "]");
  alg->set_group(g);
  return alg;
}

AlgebraPtr quaternion_algebra(const Elem& a, const Elem& b, FieldPtr field) {
  const Field& f = *field;
  if (f.characteristic() == 2) raise(ErrorKind::BadParameters, "quaternion algebras need characteristic != 2");
  if (f.is_zero(a) || f.is_zero(b)) raise(ErrorKind::BadParameters, "quaternion parameters must be nonzero");
  std::vector<Elem> sc(64, f.zero());
  auto set = [&](int i, int j, int k, const Elem& v) { sc[(i * 4 + j) * 4 + k] = v; };
  const Elem one = f.one(), m1 = f.neg(f.one());
  const Elem ab = f.mul(a, b);
  // basis 1, i, j, k
  for (int x = 0; x < 4; ++x) {
    set(0, x, x, one);
    set(x, 0, x, one);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, f.neg(ab));
  set(1, 2, 3, one);
  set(2, 1, 3, m1);
  set(1, 3, 2, a);
  set(3, 1, 2, f.neg(a));
  set(2, 3, 1, f.neg(b));
  set(3, 2, 1, b);
  return std::make_shared<Algebra>(field, 4, std::move(sc), unit_vec(f, 4, 0),
                                   "(" + f.to_string(a) + "," + f.to_string(b) + ")_" + field_name(field));
}

AlgebraPtr polyquotient_algebra(const Poly& poly) {
  const FieldPtr& field = poly.field();
  const Field& f = *field;
  if (poly.degree() < 1) raise(ErrorKind::BadParameters, "polyquotient needs a polynomial of degree >= 1");
  const Poly m = poly.monic();
  const int d = m.degree();
  const std::size_t n = static_cast<std::size_t>(d);
  std::vector<Elem> sc(n * n * n, f.zero());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto r = upoly::rem(f, upoly::monomial(f, f.one(), i + j), m.coeffs());
      for (std::size_t k = 0; k < r.size(); ++k) sc[(i * n + j) * n + k] = r[k];
    }
  return std::make_shared<Algebra>(field, n, std::move(sc), unit_vec(f, n, 0),
                                   field_name(field) + "[x]/(" + m.to_string() + ")");
}

namespace {

AlgebraPtr matrix_units(std::size_t n, FieldPtr field, const std::vector<std::pair<std::size_t, std::size_t>>& units,
                        std::string name) {
  const Field& f = *field;
  const std::size_t d = units.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < d; ++a) index[units[a]] = a;
  std::vector<Elem> sc(d * d * d, f.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (units[a].second == units[b].first)
        sc[(a * d + b) * d + index.at({units[a].first, units[b].second})] = f.one();
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[index.at({i, i})] = f.one();
  return std::make_shared<Algebra>(field, d, std::move(sc), std::move(unit), std::move(name));
}

}  // namespace

AlgebraPtr triangular_algebra(std::size_t n, FieldPtr field, bool lower) {
  if (n == 0) raise(ErrorKind::BadParameters, "triangular algebra needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lower ? i >= j : i <= j) units.emplace_back(i, j);
  const std::string name = std::string(lower ? "L" : "T") + std::to_string(n) + "(" + field_name(field) + ")";
  return matrix_units(n, std::move(field), units, name);
}

AlgebraPtr matrix_algebra(std::size_t n, FieldPtr field) {
  if (n == 0) raise(ErrorKind::BadParameters, "matrix algebra needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) units.emplace_back(i, j);
  const std::string name = "M" + std::to_string(n) + "(" + field_name(field) + ")";
  return matrix_units(n, std::move(field), units, name);
}

AlgebraPtr product_algebra(const Algebra& a, const Algebra& b) {
  if (!same_field(*a.field(), *b.field()))
    raise(ErrorKind::FieldMismatch, "product of algebras over different fields");
  const Field& f = *a.field();
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<Elem> sc(d * d * d, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc[(i * d + j) * d + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) sc[((n + i) * d + n + j) * d + n + k] = b.c(i, j, k);
  Vec unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return std::make_shared<Algebra>(a.field(), d, std::move(sc), std::move(unit), a.name() + " x " + b.name());
}

AlgebraPtr quotient_algebra(const Algebra& e, const SubspaceBasis& ideal) {
  const Field& f = *e.field();
  for (std::size_t r = 0; r < ideal.dim(); ++r)
    for (auto g : e.generators()) {
      const auto row = ideal.basis().row(r);
      if (!ideal.contains(e.mul(row, e.basis_vec(g))) || !ideal.contains(e.mul(e.basis_vec(g), row)))
        raise(ErrorKind::BadParameters, "quotient by a subspace that is not a two-sided ideal");
    }
  const auto cols = ideal.complement_indices();
  const std::size_t d = cols.size();
  std::vector<Elem> sc(d * d * d, f.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vec p = ideal.reduce(e.mul(e.basis_vec(cols[a]), e.basis_vec(cols[b])));
      for (std::size_t k = 0; k < d; ++k) sc[(a * d + b) * d + k] = p[cols[k]];
    }
  const Vec u = ideal.reduce(e.unit());
  Vec unit;
  for (auto c : cols) unit.push_back(u[c]);
  return std::make_shared<Algebra>(e.field(), d, std::move(sc), std::move(unit), e.name() + "/I");
}

AlgebraPtr change_field(const Algebra& e, const FieldPtr& larger) {
  if (!is_prefix_of(*e.field(), *larger))
    raise(ErrorKind::FieldMismatch, larger->key() + " does not extend " + e.field()->key());
  std::vector<Elem> sc;
  sc.reserve(e.structure_constants().size());
  for (const auto& x : e.structure_constants()) sc.push_back(embed(*e.field(), *larger, x));
  Vec unit;
  for (const auto& x : e.unit()) unit.push_back(embed(*e.field(), *larger, x));
  std::string name = e.name();
  if (!same_field(*e.field(), *larger)) name = field_name(larger) + " (x) " + name;
  auto a = std::make_shared<Algebra>(larger, e.dim(), std::move(sc), std::move(unit), name);
  if (e.group()) a->set_group(*e.group());
  return a;
}

// ---------------------------------------------------------------------------

SubspaceBasis two_sided_ideal(const Algebra& e, const Mat& gens) {
  EchelonBuilder eb(e.field(), e.dim());
  std::vector<Vec> queue;
  for (std::size_t r = 0; r < gens.rows(); ++r)
    if (eb.insert(gens.row(r))) queue.push_back(gens.row_vec(r));
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto g : e.generators()) {
      const Vec b = e.basis_vec(g);
      for (Vec w : {e.mul(queue[head], b), e.mul(b, queue[head])})
        if (eb.insert(w)) queue.push_back(std::move(w));
    }
  return eb.result();
}

SubspaceBasis ideal_product(const Algebra& e, const SubspaceBasis& i, const SubspaceBasis& j) {
  EchelonBuilder eb(e.field(), e.dim());
  for (std::size_t a = 0; a < i.dim(); ++a)
    for (std::size_t b = 0; b < j.dim(); ++b) eb.insert(e.mul(i.basis().row(a), j.basis().row(b)));
  return eb.result();
}

namespace {

// Dickson: in characteristic 0 the radical is the kernel of the trace form
// (x, y) -> tr(R_{xy}) of the regular representation.
SubspaceBasis radical_char0(const Algebra& e) {
  const Field& f = *e.field();
  const std::size_t n = e.dim();
  std::vector<Elem> tau;
  for (std::size_t m = 0; m < n; ++m) {
    Elem t = f.zero();
    for (std::size_t i = 0; i < n; ++i) t = f.add(t, e.c(i, m, i));
    tau.push_back(t);
  }
  Mat form(e.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem s = f.zero();
      for (std::size_t m = 0; m < n; ++m)
        if (!f.is_zero(e.c(i, j, m)) && !f.is_zero(tau[m])) s = f.add(s, f.mul(e.c(i, j, m), tau[m]));
      form.set(i, j, s);
    }
  return SubspaceBasis::span(left_kernel(form));
}

using IMat = std::vector<std::uint64_t>;

IMat imat_mul(const IMat& a, const IMat& b, std::size_t n, std::uint64_t mod) {
  IMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + x * b[k * n + j]) % mod;
    }
  return r;
}

// Layered trace criterion over GF(p): I_{-1} = A, I_i = {a in I_{i-1} :
// g_i(ab) = 0 for all b}, g_i(a) = (Tr(lift(a)^{p^i}) mod p^{i+1}) / p^i; the
// radical is I_l with p^l <= n < p^{l+1}.
SubspaceBasis radical_prime_field(const Algebra& e) {
  const Field& f = *e.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t n = e.dim();
  std::vector<IMat> reg(n, IMat(n * n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) reg[m][i * n + k] = static_cast<std::uint64_t>(f.to_index(e.c(i, m, k)));
  int l = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++l;

  SubspaceBasis current = SubspaceBasis::full(e.field(), n);
  std::uint64_t pi = 1;  // p^i
  for (int i = 0; i <= l && current.dim() > 0; ++i, pi *= p) {
    const std::uint64_t mod = pi * p;
    Mat g(e.field(), current.dim(), n);
    for (std::size_t s = 0; s < current.dim(); ++s)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec a = e.mul(current.basis().row(s), e.basis_vec(j));
        IMat m(n * n, 0);
        for (std::size_t t = 0; t < n; ++t) {
          const std::uint64_t at = f.to_index(a[t]);
          if (at == 0) continue;
          for (std::size_t q = 0; q < n * n; ++q) m[q] = (m[q] + at * reg[t][q]) % mod;
        }
        IMat pw(n * n, 0);
        for (std::size_t q = 0; q < n; ++q) pw[q * n + q] = 1;
        IMat base = m;
        for (std::uint64_t ex = pi; ex > 0; ex >>= 1) {
          if (ex & 1) pw = imat_mul(pw, base, n, mod);
          if (ex > 1) base = imat_mul(base, base, n, mod);
        }
        std::uint64_t tr = 0;
        for (std::size_t q = 0; q < n; ++q) tr = (tr + pw[q * n + q]) % mod;
        if (tr % pi != 0) raise(ErrorKind::Internal, "trace not divisible in radical computation");
        g.set(s, j, f.from_index(tr / pi));
      }
    const Mat lk = left_kernel(g);
    Mat next(e.field(), 0, n);
    for (std::size_t r = 0; r < lk.rows(); ++r) next.append_row(vec_mat(f, lk.row(r), current.basis()));
    current = SubspaceBasis::span(next);
  }
  return current;
}

// Basis alpha_r = from_index(p^r) of a finite field over its prime field;
// coordinates are the base-p digits of the element index.
struct PrimeCoords {
  std::uint64_t p = 0;
  std::size_t degree = 0;
  std::vector<Elem> basis;

  explicit PrimeCoords(const Field& f) : p(f.characteristic()) {
    std::uint64_t pw = 1;
    for (mpz_class q = f.order(); q > 1; q /= static_cast<unsigned long>(p)) {
      basis.push_back(f.from_index(pw));
      pw *= p;
      ++degree;
    }
  }
  std::vector<std::uint64_t> coords(const Field& f, const Elem& x) const {
    std::uint64_t idx = f.to_index(x);
    std::vector<std::uint64_t> c(degree);
    for (std::size_t r = 0; r < degree; ++r) {
      c[r] = idx % p;
      idx /= p;
    }
    return c;
  }
};

SubspaceBasis radical_finite(const Algebra& e) {
  const Field& f = *e.field();
  if (f.depth() == 0) return radical_prime_field(e);
  // Restrict scalars to the prime field, where the trace criterion applies.
  const PrimeCoords pc(f);
  const std::size_t n = e.dim(), d = pc.degree, nd = n * d;
  FieldPtr fp = f.level_ptr(0);
  std::vector<Elem> sc(nd * nd * nd, fp->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (f.is_zero(e.c(i, j, k))) continue;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t s = 0; s < d; ++s) {
            const auto co = pc.coords(f, f.mul(e.c(i, j, k), f.mul(pc.basis[r], pc.basis[s])));
            for (std::size_t t = 0; t < d; ++t)
              sc[((i * d + r) * nd + j * d + s) * nd + k * d + t] = fp->from_index(co[t]);
          }
      }
  Vec unit(nd, fp->zero());
  for (std::size_t i = 0; i < n; ++i) {
    const auto co = pc.coords(f, e.unit()[i]);
    for (std::size_t t = 0; t < d; ++t) unit[i * d + t] = fp->from_index(co[t]);
  }
  const Algebra restricted(fp, nd, std::move(sc), std::move(unit));
  const SubspaceBasis rp = radical_prime_field(restricted);
  Mat back(e.field(), 0, n);
  for (std::size_t r = 0; r < rp.dim(); ++r) {
    Vec v = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        const Elem& x = rp.basis()(r, i * d + t);
        if (!fp->is_zero(x)) v[i] = f.add(v[i], f.mul(f.from_index(fp->to_index(x)), pc.basis[t]));
      }
    back.append_row(v);
  }
  return SubspaceBasis::span(back);
}

}  // namespace

const SubspaceBasis& Algebra::radical() const {
  {
    std::lock_guard lock(mu_);
    if (radical_) return *radical_;
  }
  SubspaceBasis rad;
  if (field_->characteristic() == 0) rad = radical_char0(*this);
  else if (field_->is_finite()) rad = radical_finite(*this);
  else raise(ErrorKind::UnsupportedField, "radical over " + field_name(field_) + " (characteristic p, infinite)");
  // Certify nilpotency.
  SubspaceBasis power = rad;
  for (std::size_t k = 0; power.dim() > 0; ++k) {
    if (k > dim_) raise(ErrorKind::Internal, "computed radical is not nilpotent");
    power = ideal_product(*this, power, rad);
  }
  std::lock_guard lock(mu_);
  if (!radical_) radical_ = std::move(rad);
  return *radical_;
}

SubspaceBasis radical(const Algebra& e) { return e.radical(); }

bool is_semisimple(const Algebra& e) { return e.radical().dim() == 0; }

SubspaceBasis center(const Algebra& e) {
  const Field& f = *e.field();
  const std::size_t n = e.dim();
  const auto& gens = e.generators();
  Mat m(e.field(), n, gens.size() * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t k = 0; k < n; ++k) m.set(i, g * n + k, f.sub(e.c(i, gens[g], k), e.c(gens[g], i, k)));
  if (gens.empty()) return SubspaceBasis::full(e.field(), n);
  return SubspaceBasis::span(left_kernel(m));
}

namespace {

bool separable_element(const Algebra& e, std::span<const Elem> x) {
  const Poly m = element_minpoly(e, x);
  return gcd(m, m.derivative()).degree() == 0;
}

}  // namespace

bool is_separable_algebra(const Algebra& e) {
  if (e.is_commutative()) {
    for (std::size_t i = 0; i < e.dim(); ++i)
      if (!separable_element(e, e.basis_vec(i))) return false;
    return true;
  }
  if (!is_semisimple(e)) return false;
  const SubspaceBasis z = center(e);
  for (std::size_t r = 0; r < z.dim(); ++r)
    if (!separable_element(e, z.basis().row(r))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Mat frobenius_gram(const Algebra& e, std::span<const Elem> lambda) {
  const Field& f = *e.field();
  const std::size_t n = e.dim();
  Mat g(e.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem s = f.zero();
      for (std::size_t k = 0; k < n; ++k)
        if (!f.is_zero(e.c(i, j, k)) && !f.is_zero(lambda[k])) s = f.add(s, f.mul(e.c(i, j, k), lambda[k]));
      g.set(i, j, s);
    }
  return g;
}

namespace {

// Sparse multivariate polynomial: exponent vector -> coefficient.
using MPoly = std::map<std::vector<int>, Elem>;

void mp_add_term(const Field& f, MPoly& p, const std::vector<int>& ex, const Elem& c) {
  if (f.is_zero(c)) return;
  auto [it, fresh] = p.emplace(ex, c);
  if (fresh) return;
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) p.erase(it);
}

// p * (sum_k lin[k] a_k)
MPoly mp_mul_linear(const Field& f, const MPoly& p, const std::vector<Elem>& lin) {
  MPoly r;
  for (const auto& [ex, c] : p)
    for (std::size_t k = 0; k < lin.size(); ++k) {
      if (f.is_zero(lin[k])) continue;
      auto e2 = ex;
      ++e2[k];
      mp_add_term(f, r, e2, f.mul(c, lin[k]));
    }
  return r;
}

MPoly mp_substitute(const Field& f, const MPoly& p, std::size_t var, const Elem& value) {
  MPoly r;
  for (const auto& [ex, c] : p) {
    auto e2 = ex;
    const int deg = e2[var];
    e2[var] = 0;
    mp_add_term(f, r, e2, f.mul(c, f.pow(value, static_cast<long>(deg))));
  }
  return r;
}

// Gram determinant as a polynomial in the functional's coordinates, by
// expansion over column subsets.
MPoly gram_determinant(const Algebra& e) {
  const Field& f = *e.field();
  const std::size_t n = e.dim();
  std::vector<MPoly> dp(std::size_t{1} << n);
  dp[0][std::vector<int>(n, 0)] = f.one();
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].empty()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      std::vector<Elem> lin(n);
      for (std::size_t k = 0; k < n; ++k) lin[k] = e.c(row, col, k);
      MPoly term = mp_mul_linear(f, dp[mask], lin);
      const int above = __builtin_popcountll(mask >> (col + 1));
      for (auto& [ex, c] : term) mp_add_term(f, dp[mask | (std::size_t{1} << col)], ex, above % 2 ? f.neg(c) : c);
    }
  }
  return dp.back();
}

bool nondegenerate(const Algebra& e, std::span<const Elem> lambda) {
  return !e.field()->is_zero(determinant(frobenius_gram(e, lambda)));
}

}  // namespace

FrobeniusResult is_frobenius(const Algebra& e) {
  const Field& f = *e.field();
  const std::size_t n = e.dim();
  if (n == 0) return {true, Vec{}, true};
  std::vector<Vec> candidates;
  for (std::size_t k = 0; k < n; ++k) candidates.push_back(e.basis_vec(k));
  Vec trace(n, f.zero()), ones(n, f.one());
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) trace[m] = f.add(trace[m], e.c(i, m, i));
  candidates.push_back(trace);
  candidates.push_back(ones);
  std::mt19937_64 rng(0x5eedf00dULL);
  for (int s = 0; s < 24; ++s) {
    Vec v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(f.random(rng, 1000));
    candidates.push_back(std::move(v));
  }
  for (const auto& c : candidates)
    if (nondegenerate(e, c)) return {true, c, true};

  if (f.is_finite()) {
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), f.order().get_mpz_t(), n);
    if (total <= 65536) {
      const std::uint64_t q = f.order().get_ui(), count = total.get_ui();
      for (std::uint64_t code = 0; code < count; ++code) {
        Vec v;
        std::uint64_t x = code;
        for (std::size_t k = 0; k < n; ++k) {
          v.push_back(f.from_index(x % q));
          x /= q;
        }
        if (nondegenerate(e, v)) return {true, v, true};
      }
      return {false, std::nullopt, true};
    }
  }
  if (n <= 6) {
    MPoly det = gram_determinant(e);
    if (det.empty()) return {false, std::nullopt, true};
    // Each variable has degree <= n, so n + 1 trial values (or all of a
    // finite field with more than n elements) always leave a nonzero value.
    Vec point;
    for (std::size_t var = 0; var < n; ++var) {
      bool found = false;
      for (std::uint64_t t = 0; !found; ++t) {
        const Elem val = f.is_finite() ? f.from_index(t) : f.from_int(static_cast<long>(t));
        MPoly next = mp_substitute(f, det, var, val);
        if (!next.empty()) {
          det = std::move(next);
          point.push_back(val);
          found = true;
        }
        if (!found && t > n + 1) raise(ErrorKind::Internal, "no nonvanishing point on the grid");
      }
    }
    if (!nondegenerate(e, point)) raise(ErrorKind::Internal, "Frobenius witness failed verification");
    return {true, point, true};
  }
  for (int s = 0; s < 200; ++s) {
    Vec v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(f.random(rng, 1000000));
    if (nondegenerate(e, v)) return {true, v, true};
  }
  return {false, std::nullopt, false};
}

// ---------------------------------------------------------------------------

namespace {

// Minimal polynomial of v under right multiplication by a.
upoly::Coeffs vector_minpoly(const Field& f, const Vec& v, const Mat& a) {
  std::vector<Vec> krylov = {v};
  Mat stack = Mat::from_rows(a.field(), a.cols(), {v});
  for (;;) {
    Vec next = vec_mat(f, krylov.back(), a);
    if (auto x = solve_left(stack, next)) {
      upoly::Coeffs m;
      for (const auto& c : *x) m.push_back(f.neg(c));
      m.push_back(f.one());
      return m;
    }
    stack.append_row(next);
    krylov.push_back(std::move(next));
  }
}

}  // namespace

Poly minimal_polynomial(const Mat& a) {
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  upoly::Coeffs m = upoly::constant(f, f.one());
  for (std::size_t i = 0; i < n; ++i) {
    Vec w = unit_vec(f, n, i);
    // w <- e_i m(a)
    Vec acc = zero_vec(f, n);
    for (std::size_t k = m.size(); k-- > 0;) {
      acc = vec_mat(f, acc, a);
      if (!f.is_zero(m[k])) acc = vec_add(f, acc, vec_scale(f, w, m[k]));
    }
    if (vec_is_zero(f, acc)) continue;
    m = upoly::mul(f, m, vector_minpoly(f, acc, a));
  }
  return Poly(a.field(), m);
}

Poly element_minpoly(const Algebra& e, std::span<const Elem> x) { return minimal_polynomial(e.right_mult(x)); }

Mat poly_eval_matrix(const Poly& p, const Mat& a) {
  const Field& f = *a.field();
  Mat r(a.field(), a.rows(), a.cols());
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    r = r * a;
    if (!f.is_zero(c[k]))
      for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, i, f.add(r(i, i), c[k]));
  }
  return r;
}

}  // namespace kext
