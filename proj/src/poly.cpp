#include "kext/poly.hpp"

namespace kext {
namespace upoly {

void trim(const Field& f, Coeffs& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Coeffs& a) { return a.empty(); }

bool equal(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.equal(a[i], b[i])) return false;
  return true;
}

Coeffs constant(const Field& f, const Elem& c) {
  if (f.is_zero(c)) return {};
  return {c};
}

Coeffs monomial(const Field& f, const Elem& c, int deg) {
  if (f.is_zero(c)) return {};
  Coeffs r(static_cast<std::size_t>(deg) + 1, f.zero());
  r.back() = c;
  return r;
}

Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r = a.size() >= b.size() ? a : b;
  const Coeffs& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = f.add(r[i], s[i]);
  trim(f, r);
  return r;
}

Coeffs neg(const Field& f, const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(f.neg(c));
  return r;
}

Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  if (r.size() < b.size()) r.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (f.is_zero(b[j])) continue;
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(f, r);
  return r;
}

Coeffs scale(const Field& f, const Coeffs& a, const Elem& c) {
  if (f.is_zero(c)) return {};
  Coeffs r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

std::pair<Coeffs, Coeffs> divmod(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (b.empty()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  Coeffs r = a;
  if (r.size() < b.size()) return {{}, r};
  Coeffs q(r.size() - b.size() + 1, f.zero());
  const Elem lc_inv = f.inv(b.back());
  const bool monic_divisor = f.is_one(b.back());
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k) + b.size() - 1;
    if (f.is_zero(r[top])) continue;
    const Elem c = monic_divisor ? r[top] : f.mul(r[top], lc_inv);
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (f.is_zero(b[j])) continue;
      r[static_cast<std::size_t>(k) + j] = f.sub(r[static_cast<std::size_t>(k) + j], f.mul(c, b[j]));
    }
  }
  trim(f, q);
  trim(f, r);
  return {q, r};
}

Coeffs rem(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.size() < b.size()) return a;
  return divmod(f, a, b).second;
}

Coeffs quo(const Field& f, const Coeffs& a, const Coeffs& b) { return divmod(f, a, b).first; }

Coeffs monic(const Field& f, const Coeffs& a) {
  if (a.empty() || f.is_one(a.back())) return a;
  return scale(f, a, f.inv(a.back()));
}

Coeffs gcd(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs x = a, y = b;
  while (!y.empty()) {
    Coeffs r = rem(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(f, x);
}

Xgcd xgcd(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0 = constant(f, f.one()), s1;
  Coeffs t0, t1 = constant(f, f.one());
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Coeffs s2 = sub(f, s0, mul(f, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Coeffs t2 = sub(f, t0, mul(f, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const Elem lc_inv = f.inv(r0.back());
  return {scale(f, r0, lc_inv), scale(f, s0, lc_inv), scale(f, t0, lc_inv)};
}

Coeffs derivative(const Field& f, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1, f.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], f.from_int(static_cast<long>(i)));
  trim(f, r);
  return r;
}

Elem eval(const Field& f, const Coeffs& a, const Elem& x) {
  Elem r = f.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b, const Coeffs& mod) {
  return rem(f, mul(f, a, b), mod);
}

Coeffs powmod(const Field& f, const Coeffs& base, const mpz_class& e, const Coeffs& mod) {
  Coeffs result = rem(f, constant(f, f.one()), mod);
  Coeffs b = rem(f, base, mod);
  const std::size_t bits = e > 0 ? mpz_sizeinbase(e.get_mpz_t(), 2) : 0;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(f, result, b, mod);
    if (i + 1 < bits) b = mulmod(f, b, b, mod);
  }
  return result;
}

Coeffs compose_linear(const Field& f, const Coeffs& p, const Elem& a, const Elem& b) {
  const Coeffs lin = [&] {
    Coeffs l{b, a};
    trim(f, l);
    return l;
  }();
  Coeffs r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = add(f, mul(f, r, lin), constant(f, *it));
  return r;
}

Coeffs embed(const Field& from, const Field& to, const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(kext::embed(from, to, c));
  return r;
}

namespace {

bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == '/' || s[i] == '*') return true;
  return false;
}

}  // namespace

std::string to_string(const Field& f, const Coeffs& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int k = degree(a); k >= 0; --k) {
    const Elem& c = a[static_cast<std::size_t>(k)];
    if (f.is_zero(c)) continue;
    std::string term;
    const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    const std::string cs = f.to_string(c);
    if (k == 0) {
      term = needs_parens(cs) && !out.empty() ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
      term = (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += term;
    else out += "+" + term;
  }
  return out;
}

}  // namespace upoly

Poly::Poly(FieldPtr field, upoly::Coeffs coeffs, std::string var)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), var_(std::move(var)) {
  upoly::trim(*field_, coeffs_);
}

namespace {
void require_same(const Poly& a, const Poly& b) {
  if (!same_field(*a.field(), *b.field())) raise(ErrorKind::MixedFields, "polynomials over different fields");
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
  require_same(*this, o);
  return Poly(field_, upoly::add(*field_, coeffs_, o.coeffs_), var_);
}

Poly Poly::operator-(const Poly& o) const {
  require_same(*this, o);
  return Poly(field_, upoly::sub(*field_, coeffs_, o.coeffs_), var_);
}

Poly Poly::operator*(const Poly& o) const {
  require_same(*this, o);
  return Poly(field_, upoly::mul(*field_, coeffs_, o.coeffs_), var_);
}

bool Poly::operator==(const Poly& o) const {
  return same_field(*field_, *o.field_) && upoly::equal(*field_, coeffs_, o.coeffs_);
}

Poly Poly::derivative() const { return Poly(field_, upoly::derivative(*field_, coeffs_), var_); }

Poly Poly::monic() const { return Poly(field_, upoly::monic(*field_, coeffs_), var_); }

std::string Poly::to_string() const { return upoly::to_string(*field_, coeffs_, var_); }

Poly Poly::from_strings(FieldPtr field, const std::vector<std::string>& coeffs, std::string var) {
  upoly::Coeffs c;
  for (const auto& s : coeffs) c.push_back(field->parse(s));
  return Poly(std::move(field), std::move(c), std::move(var));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  return Poly(a.field(), upoly::gcd(*a.field(), a.coeffs(), b.coeffs()), a.var());
}

}  // namespace kext
