#include "kext/factor.hpp"

#include <algorithm>
#include <map>

namespace kext {

using upoly::Coeffs;

namespace {

bool is_number_field(const Field& f) {
  return f.base_kind() == BaseKind::Rationals && f.depth() == 1 && f.step()->kind == StepKind::Algebraic;
}

bool is_function_field_over_finite(const Field& f) {
  return f.depth() >= 1 && f.step()->kind == StepKind::Transcendental && f.parent()->is_finite();
}

Coeffs x_poly(const Field& f) { return {f.zero(), f.one()}; }

// ---------------------------------------------------------------------------
// Squarefree decomposition

std::vector<std::pair<Coeffs, int>> sqf_char0(const Field& f, const Coeffs& in) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs a = upoly::monic(f, in);
  if (upoly::degree(a) < 1) return out;
  Coeffs d = upoly::derivative(f, a);
  Coeffs a0 = upoly::gcd(f, a, d);
  Coeffs b = upoly::quo(f, a, a0);
  Coeffs c = upoly::quo(f, d, a0);
  Coeffs dd = upoly::sub(f, c, upoly::derivative(f, b));
  int i = 1;
  while (upoly::degree(b) > 0) {
    Coeffs ai = upoly::gcd(f, b, dd);
    Coeffs nb = upoly::quo(f, b, ai);
    Coeffs nc = upoly::quo(f, dd, ai);
    if (upoly::degree(ai) > 0) out.emplace_back(ai, i);
    b = std::move(nb);
    dd = upoly::sub(f, nc, upoly::derivative(f, b));
    ++i;
  }
  return out;
}

// p-th root of a polynomial whose exponents are all multiples of p, over a
// finite field (where a -> a^(q/p) inverts Frobenius).
Coeffs poly_pth_root(const Field& f, const Coeffs& a) {
  const std::uint64_t p = f.characteristic();
  const mpz_class e = f.order() / p;
  Coeffs r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(f.pow(a[i], e));
  upoly::trim(f, r);
  return r;
}

std::vector<std::pair<Coeffs, int>> sqf_finite(const Field& f, const Coeffs& in) {
  std::vector<std::pair<Coeffs, int>> out;
  Coeffs a = upoly::monic(f, in);
  if (upoly::degree(a) < 1) return out;
  const int p = static_cast<int>(f.characteristic());
  Coeffs d = upoly::derivative(f, a);
  if (!d.empty()) {
    Coeffs c = upoly::gcd(f, a, d);
    Coeffs w = upoly::quo(f, a, c);
    int i = 1;
    while (upoly::degree(w) > 0) {
      Coeffs y = upoly::gcd(f, w, c);
      Coeffs fac = upoly::quo(f, w, y);
      if (upoly::degree(fac) > 0) out.emplace_back(fac, i);
      ++i;
      w = std::move(y);
      c = upoly::quo(f, c, w);
    }
    if (upoly::degree(c) > 0) {
      for (auto& [h, m] : sqf_finite(f, poly_pth_root(f, c))) out.emplace_back(h, m * p);
    }
  } else {
    for (auto& [h, m] : sqf_finite(f, poly_pth_root(f, a))) out.emplace_back(h, m * p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite fields: distinct-degree then equal-degree (Cantor-Zassenhaus)

std::vector<std::pair<Coeffs, int>> ddf(const Field& f, Coeffs a) {
  std::vector<std::pair<Coeffs, int>> out;
  const Coeffs x = x_poly(f);
  Coeffs h = upoly::rem(f, x, a);
  int d = 1;
  while (upoly::degree(a) >= 2 * d) {
    h = upoly::powmod(f, h, f.order(), a);
    Coeffs g = upoly::gcd(f, upoly::sub(f, h, x), a);
    if (upoly::degree(g) > 0) {
      out.emplace_back(g, d);
      a = upoly::quo(f, a, g);
      h = upoly::rem(f, h, a);
    }
    ++d;
  }
  if (upoly::degree(a) > 0) out.emplace_back(a, upoly::degree(a));
  return out;
}

void edf(const Field& f, const Coeffs& g, int d, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  const int n = upoly::degree(g);
  if (n <= d) {
    out.push_back(upoly::monic(f, g));
    return;
  }
  const std::uint64_t p = f.characteristic();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), f.order().get_mpz_t(), static_cast<unsigned long>(d));
  // total number of Frobenius squarings for the trace map when p = 2
  const std::size_t k2 = p == 2 ? mpz_sizeinbase(qd.get_mpz_t(), 2) - 1 : 0;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Coeffs a;
    for (int i = 0; i < n; ++i) a.push_back(f.random(rng, 3));
    upoly::trim(f, a);
    if (upoly::degree(a) < 1) continue;
    Coeffs b;
    if (p == 2) {
      Coeffs term = a;
      b = a;
      for (std::size_t i = 1; i < k2; ++i) {
        term = upoly::mulmod(f, term, term, g);
        b = upoly::add(f, b, term);
      }
    } else {
      b = upoly::sub(f, upoly::powmod(f, a, (qd - 1) / 2, g), {f.one()});
    }
    Coeffs h = upoly::gcd(f, b, g);
    const int dh = upoly::degree(h);
    if (dh > 0 && dh < n) {
      edf(f, h, d, rng, out);
      edf(f, upoly::quo(f, g, h), d, rng, out);
      return;
    }
  }
  raise(ErrorKind::Undecidable, "equal-degree factorization did not converge");
}

std::vector<std::pair<Coeffs, int>> factor_finite(const Field& f, const Coeffs& a) {
  std::vector<std::pair<Coeffs, int>> out;
  std::mt19937_64 rng(0x6b657874);
  for (auto& [part, mult] : sqf_finite(f, a)) {
    for (auto& [g, d] : ddf(f, part)) {
      std::vector<Coeffs> pieces;
      edf(f, g, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials and Zassenhaus over Q

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  mpz_class g = zcontent(a);
  if (g == 0) return a;
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<ZPoly> zdivexact(ZPoly a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.size() < b.size()) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(a.size() - b.size()); k >= 0; --k) {
    mpz_class& top = a[static_cast<std::size_t>(k) + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(k) + j] -= c * b[j];
  }
  ztrim(a);
  if (!a.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

Coeffs to_gfp(const Field& fp, const ZPoly& a) {
  Coeffs r;
  for (const auto& c : a) r.push_back(fp.from_integer(c));
  upoly::trim(fp, r);
  return r;
}

ZPoly from_gfp(const Coeffs& a) {
  ZPoly r;
  for (const auto& c : a) r.push_back(mpz_class(static_cast<long>(c.small())));
  ztrim(r);
  return r;
}

// Lifts F = g*h (mod p) to F = G*H (mod p^k); g monic.
std::pair<ZPoly, ZPoly> hensel_lift(const Field& fp, const ZPoly& F, ZPoly g, ZPoly h, const mpz_class& p, int k) {
  const auto x = upoly::xgcd(fp, to_gfp(fp, g), to_gfp(fp, h));
  if (upoly::degree(x.g) != 0) raise(ErrorKind::Undecidable, "Hensel lifting needs coprime factors");
  const Coeffs& t = x.t;
  mpz_class pj = p;
  for (int j = 1; j < k; ++j) {
    const mpz_class pj1 = pj * p;
    ZPoly diff = F;
    const ZPoly gh = zmul(g, h);
    if (diff.size() < gh.size()) diff.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    diff = zmod(diff, pj1);
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    const Coeffs e = to_gfp(fp, diff);
    const Coeffs gbar = to_gfp(fp, g);
    const Coeffs hbar = to_gfp(fp, h);
    const Coeffs dg = upoly::rem(fp, upoly::mul(fp, t, e), gbar);
    const Coeffs dh = upoly::quo(fp, upoly::sub(fp, e, upoly::mul(fp, hbar, dg)), gbar);
    const ZPoly zdg = from_gfp(dg), zdh = from_gfp(dh);
    if (g.size() < zdg.size()) g.resize(zdg.size(), 0);
    for (std::size_t i = 0; i < zdg.size(); ++i) g[i] += pj * zdg[i];
    if (h.size() < zdh.size()) h.resize(zdh.size(), 0);
    for (std::size_t i = 0; i < zdh.size(); ++i) h[i] += pj * zdh[i];
    g = zmod(g, pj1);
    h = zmod(h, pj1);
    pj = pj1;
  }
  return {g, h};
}

mpz_class zinverse(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) raise(ErrorKind::DivisionByZero, "no inverse mod p^k");
  return r;
}

// F primitive, squarefree, deg >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& F) {
  const int n = static_cast<int>(F.size()) - 1;
  if (n <= 1) return {F};
  static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                               101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191};
  FieldPtr fp;
  std::vector<Coeffs> modp;
  long p = 0;
  for (int cand : primes) {
    if (mpz_divisible_ui_p(F.back().get_mpz_t(), static_cast<unsigned long>(cand))) continue;
    FieldPtr fld = make_prime_field(static_cast<std::uint64_t>(cand));
    const Coeffs fbar = to_gfp(*fld, F);
    if (upoly::degree(upoly::gcd(*fld, fbar, upoly::derivative(*fld, fbar))) != 0) continue;
    fp = fld;
    p = cand;
    for (auto& [g, m] : factor_finite(*fld, fbar)) modp.push_back(g);
    break;
  }
  if (!fp) raise(ErrorKind::Undecidable, "no suitable prime for Zassenhaus");
  if (modp.size() == 1) return {F};

  mpz_class maxc = 0;
  for (const auto& c : F) maxc = std::max(maxc, mpz_class(abs(c)));
  const mpz_class lc = F.back();
  mpz_class bound = 2 * lc * maxc * (n + 1);
  bound <<= static_cast<unsigned long>(n);
  int k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  // Multifactor lift by peeling one factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly cur = zmod(F, pk);
  for (std::size_t i = 0; i + 1 < modp.size(); ++i) {
    Coeffs rest = {fp->from_integer(lc)};
    for (std::size_t j = i + 1; j < modp.size(); ++j) rest = upoly::mul(*fp, rest, modp[j]);
    auto [G, H] = hensel_lift(*fp, cur, from_gfp(modp[i]), from_gfp(rest), mpz_class(p), k);
    lifted.push_back(G);
    cur = H;
  }
  {
    const mpz_class inv = zinverse(cur.back(), pk);
    for (auto& c : cur) c *= inv;
    lifted.push_back(zmod(cur, pk));
  }

  std::vector<ZPoly> result;
  ZPoly rem_poly = F;
  std::vector<ZPoly> pool = lifted;
  std::size_t d = 1;
  while (2 * d <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      ZPoly G{rem_poly.back()};
      for (auto i : idx) G = zmod(zmul(G, pool[i]), pk);
      G = zprimitive(zsymmetric(G, pk));
      if (auto q = zdivexact(rem_poly, G)) {
        result.push_back(G);
        rem_poly = *q;
        std::vector<ZPoly> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        pool = std::move(next);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(d) - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool.size() - d + static_cast<std::size_t>(pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++d;
  }
  if (rem_poly.size() > 1) result.push_back(zprimitive(rem_poly));
  return result;
}

std::vector<std::pair<Coeffs, int>> factor_rational(const Field& q, const Coeffs& a) {
  std::vector<std::pair<Coeffs, int>> out;
  for (auto& [part, mult] : sqf_char0(q, a)) {
    mpz_class den = 1;
    for (const auto& c : part) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    ZPoly z;
    for (const auto& c : part) z.push_back(mpz_class(c.rational() * den));
    z = zprimitive(z);
    for (auto& g : zassenhaus(z)) {
      Coeffs c;
      for (const auto& x : g) c.push_back(q.from_integer(x));
      upoly::trim(q, c);
      out.emplace_back(upoly::monic(q, c), mult);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number fields Q(a): Trager's norm method

std::vector<mpq_class> nf_coords(const Field& K, const Elem& v) {
  const int d = upoly::degree(K.step()->minpoly);
  std::vector<mpq_class> c(static_cast<std::size_t>(d), 0);
  if (v.ext())
    for (std::size_t i = 0; i < v.ext()->num.size(); ++i) c[i] = v.ext()->num[i].rational();
  return c;
}

mpq_class q_det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

mpq_class nf_norm(const Field& K, const Elem& v) {
  const int d = upoly::degree(K.step()->minpoly);
  std::vector<std::vector<mpq_class>> m;
  Elem basis = K.one();
  const Elem gen = K.generator();
  for (int i = 0; i < d; ++i) {
    m.push_back(nf_coords(K, K.mul(v, basis)));
    basis = K.mul(basis, gen);
  }
  return q_det(std::move(m));
}

// Norm of P in K[x] down to Q[x], by evaluation and Newton interpolation.
Coeffs nf_poly_norm(const Field& K, const Field& Q, const Coeffs& P) {
  const int d = upoly::degree(K.step()->minpoly);
  const int D = d * upoly::degree(P);
  std::vector<mpq_class> xs, ys;
  for (int i = 0; i <= D; ++i) {
    xs.emplace_back(i);
    ys.push_back(nf_norm(K, upoly::eval(K, P, K.from_int(i))));
  }
  // divided differences
  std::vector<mpq_class> coef = ys;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) coef[static_cast<std::size_t>(i)] = (coef[static_cast<std::size_t>(i)] - coef[static_cast<std::size_t>(i - 1)]) / (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
  Coeffs result;
  for (int i = D; i >= 0; --i) {
    // result = result * (x - xs[i]) + coef[i]
    Coeffs lin = {Q.from_rational(-xs[static_cast<std::size_t>(i)]), Q.one()};
    result = upoly::add(Q, upoly::mul(Q, result, lin), upoly::constant(Q, Q.from_rational(coef[static_cast<std::size_t>(i)])));
  }
  return result;
}

std::vector<std::pair<Coeffs, int>> factor_number_field(const Field& K, const Coeffs& a) {
  const Field& Q = *K.parent();
  std::vector<std::pair<Coeffs, int>> out;
  const Elem alpha = K.generator();
  for (auto& [g, mult] : sqf_char0(K, a)) {
    if (upoly::degree(g) == 1) {
      out.emplace_back(g, mult);
      continue;
    }
    for (long s = 0;; s = s > 0 ? -s : -s + 1) {
      const Elem shift = K.mul(K.from_int(s), alpha);
      const Coeffs gs = upoly::compose_linear(K, g, K.one(), K.neg(shift));
      const Coeffs N = nf_poly_norm(K, Q, gs);
      if (upoly::degree(upoly::gcd(Q, N, upoly::derivative(Q, N))) != 0) continue;
      for (auto& [nj, m1] : factor_rational(Q, N)) {
        const Coeffs back = upoly::compose_linear(K, upoly::embed(Q, K, nj), K.one(), shift);
        Coeffs h = upoly::gcd(K, g, back);
        if (upoly::degree(h) > 0) out.emplace_back(std::move(h), mult);
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Roots in k(t), k finite: rational root test over k[t].

std::vector<Coeffs> monic_divisors(const Field& k, const Coeffs& c) {
  std::vector<Coeffs> divs{{k.one()}};
  if (upoly::degree(c) < 1) return divs;
  for (auto& [g, m] : factor_finite(k, c)) {
    std::vector<Coeffs> next;
    for (const auto& dv : divs) {
      Coeffs cur = dv;
      for (int e = 0; e <= m; ++e) {
        next.push_back(cur);
        cur = upoly::mul(k, cur, g);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

std::vector<Elem> roots_function_field(const Field& F, const Coeffs& f) {
  const Field& k = *F.parent();
  // Clear denominators: numerators times lcm of denominators.
  Coeffs lcm{k.one()};
  for (const auto& c : f)
    if (c.ext()) {
      const Coeffs& den = c.ext()->den;
      lcm = upoly::quo(k, upoly::mul(k, lcm, den), upoly::gcd(k, lcm, den));
    }
  std::vector<Coeffs> z;
  for (const auto& c : f) {
    if (!c.ext()) {
      z.push_back({});
      continue;
    }
    z.push_back(upoly::quo(k, upoly::mul(k, c.ext()->num, lcm), c.ext()->den));
  }
  std::vector<Elem> roots;
  std::size_t low = 0;
  while (low < z.size() && z[low].empty()) ++low;
  if (low > 0) roots.push_back(F.zero());
  if (z.size() - low <= 1) return roots;
  const auto nums = monic_divisors(k, z[low]);
  const auto dens = monic_divisors(k, z.back());
  const auto to_F = [&](const Coeffs& c) {
    Elem r = F.zero();
    Elem tp = F.one();
    const Elem t = F.generator();
    for (const auto& x : c) {
      r = F.add(r, F.mul(F.embed_from_parent(x), tp));
      tp = F.mul(tp, t);
    }
    return r;
  };
  const std::uint64_t q = k.order().get_ui();
  for (const auto& a : nums)
    for (const auto& b : dens) {
      if (upoly::degree(upoly::gcd(k, a, b)) > 0) continue;
      const Elem base = F.div(to_F(a), to_F(b));
      for (std::uint64_t u = 1; u < q; ++u) {
        const Elem r = F.mul(base, F.embed_from_parent(k.from_index(u)));
        if (!F.is_zero(upoly::eval(F, f, r))) continue;
        bool dup = false;
        for (const auto& x : roots) dup = dup || F.equal(x, r);
        if (!dup) roots.push_back(r);
      }
    }
  return roots;
}

}  // namespace

bool factorization_supported(const Field& f) {
  return f.is_finite() || (f.base_kind() == BaseKind::Rationals && f.depth() == 0) || is_number_field(f);
}

bool root_finding_supported(const Field& f) { return factorization_supported(f) || is_function_field_over_finite(f); }

std::vector<Factor> poly_factor(const Poly& f) {
  const Field& F = *f.field();
  if (f.is_zero()) raise(ErrorKind::BadParameters, "cannot factor the zero polynomial");
  std::vector<std::pair<Coeffs, int>> raw;
  if (F.is_finite()) raw = factor_finite(F, f.coeffs());
  else if (F.depth() == 0) raw = factor_rational(F, f.coeffs());
  else if (is_number_field(F)) raw = factor_number_field(F, f.coeffs());
  else raise(ErrorKind::UnsupportedField, "no factorization over " + F.key());
  std::vector<Factor> out;
  for (auto& [c, m] : raw) {
    Poly p(f.field(), upoly::monic(F, c), f.var());
    bool merged = false;
    for (auto& o : out)
      if (o.poly == p) {
        o.multiplicity += m;
        merged = true;
      }
    if (!merged) out.push_back({p, m});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.to_string() < b.poly.to_string();
  });
  return out;
}

std::vector<Factor> squarefree_decomposition(const Poly& f) {
  const Field& F = *f.field();
  std::vector<std::pair<Coeffs, int>> raw;
  if (F.characteristic() == 0) raw = sqf_char0(F, f.coeffs());
  else if (F.is_finite()) raw = sqf_finite(F, f.coeffs());
  else raise(ErrorKind::UnsupportedField, "squarefree decomposition over " + F.key());
  std::vector<Factor> out;
  for (auto& [c, m] : raw) out.push_back({Poly(f.field(), c, f.var()), m});
  return out;
}

std::vector<Elem> poly_roots(const Poly& f) {
  const Field& F = *f.field();
  if (f.is_zero()) raise(ErrorKind::BadParameters, "roots of the zero polynomial");
  if (is_function_field_over_finite(F)) return roots_function_field(F, f.coeffs());
  std::vector<Elem> roots;
  for (const auto& fac : poly_factor(f))
    if (fac.poly.degree() == 1) roots.push_back(F.neg(fac.poly.coeffs()[0]));
  return roots;
}

bool is_separable_step(const Poly& f) {
  const Poly g = gcd(f, f.derivative());
  return g.degree() == 0;
}

Irreducibility check_irreducible(const Poly& f) {
  const Field& F = *f.field();
  if (f.degree() < 1) return Irreducibility::Reducible;
  if (f.degree() == 1) return Irreducibility::Irreducible;
  if (factorization_supported(F)) {
    const auto fs = poly_factor(f);
    return fs.size() == 1 && fs[0].multiplicity == 1 ? Irreducibility::Irreducible : Irreducibility::Reducible;
  }
  if (is_function_field_over_finite(F)) {
    if (!poly_roots(f).empty()) return Irreducibility::Reducible;
    if (f.degree() <= 3) return Irreducibility::Irreducible;
  }
  return Irreducibility::Unknown;
}

}  // namespace kext
