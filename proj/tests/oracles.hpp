// Brute-force reference computations used to cross-check the engine. These
// deliberately avoid the engine's algorithms (no trace forms, no spinning
// with echelon builders, no factorization).
#pragma once

#include <functional>
#include <vector>

#include <algorithm>
#include <set>

#include "kext/module.hpp"

namespace oracle {

using namespace kext;

inline std::uint64_t ipow(std::uint64_t q, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= q;
  return r;
}

// Every vector of F^n for a finite field F, in index order.
inline void for_each_vector(const Field& f, std::size_t n, const std::function<void(const Vec&)>& fn) {
  const std::uint64_t q = f.order().get_ui(), total = ipow(q, n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec v;
    std::uint64_t x = code;
    for (std::size_t k = 0; k < n; ++k) {
      v.push_back(f.from_index(x % q));
      x /= q;
    }
    fn(v);
  }
}

inline bool is_nilpotent_matrix(const Mat& m) {
  Mat p = m;
  for (std::size_t k = 0; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

// x is in the radical iff x*y is nilpotent for every y.
inline std::vector<Vec> radical_elements(const Algebra& e) {
  std::vector<Vec> all;
  for_each_vector(*e.field(), e.dim(), [&](const Vec& v) { all.push_back(v); });
  std::vector<Vec> rad;
  for (const auto& x : all) {
    bool ok = true;
    for (const auto& y : all) {
      if (!is_nilpotent_matrix(e.right_mult(e.mul(x, y)))) {
        ok = false;
        break;
      }
    }
    if (ok) rad.push_back(x);
  }
  return rad;
}

inline std::size_t log_q(std::uint64_t q, std::size_t count) {
  std::size_t d = 0;
  for (std::uint64_t c = 1; c < count; c *= q) ++d;
  return d;
}

// Subspaces as sorted sets of vector indices (finite fields only).
using VecSet = std::vector<std::uint64_t>;

struct Lattice {
  std::vector<VecSet> submodules;  // every E-stable subspace
  std::size_t length = 0;          // longest chain 0 < ... < M
  VecSet socle;                    // join of the minimal nonzero submodules
};

inline std::uint64_t encode(const Field& f, const Vec& v) {
  const std::uint64_t q = f.order().get_ui();
  std::uint64_t code = 0, scale = 1;
  for (const auto& x : v) {
    code += f.to_index(x) * scale;
    scale *= q;
  }
  return code;
}

inline Vec decode(const Field& f, std::size_t n, std::uint64_t code) {
  const std::uint64_t q = f.order().get_ui();
  Vec v;
  for (std::size_t k = 0; k < n; ++k) {
    v.push_back(f.from_index(code % q));
    code /= q;
  }
  return v;
}

inline Vec row_times(const Field& f, const Vec& v, const Mat& a) {
  Vec r(a.cols(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], a(i, j)));
  return r;
}

// Span of a set of vectors as an explicit element set.
inline VecSet span_set(const Field& f, std::size_t n, const std::vector<Vec>& gens) {
  std::set<std::uint64_t> s = {encode(f, Vec(n, f.zero()))};
  const std::uint64_t q = f.order().get_ui();
  for (const auto& g : gens) {
    std::vector<std::uint64_t> cur(s.begin(), s.end());
    for (auto c : cur)
      for (std::uint64_t a = 1; a < q; ++a) {
        Vec v = decode(f, n, c);
        for (std::size_t k = 0; k < n; ++k) v[k] = f.add(v[k], f.mul(f.from_index(a), g[k]));
        s.insert(encode(f, v));
      }
  }
  return VecSet(s.begin(), s.end());
}

inline bool subset_of(const VecSet& a, const VecSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Lattice submodule_lattice(const Module& m) {
  const Field& f = *m.field();
  const std::size_t n = m.dim();
  // All subspaces, grown one vector at a time.
  std::set<VecSet> seen;
  std::vector<VecSet> all;
  const VecSet zero = span_set(f, n, {});
  seen.insert(zero);
  all.push_back(zero);
  const std::uint64_t total = ipow(f.order().get_ui(), n);
  for (std::size_t head = 0; head < all.size(); ++head) {
    std::vector<Vec> gens;
    for (auto c : all[head]) gens.push_back(decode(f, n, c));
    for (std::uint64_t c = 0; c < total; ++c) {
      if (std::binary_search(all[head].begin(), all[head].end(), c)) continue;
      std::vector<Vec> g2 = gens;
      g2.push_back(decode(f, n, c));
      VecSet s = span_set(f, n, g2);
      if (seen.insert(s).second) all.push_back(std::move(s));
    }
  }
  Lattice lat;
  for (const auto& s : all) {
    bool stable = true;
    for (auto c : s) {
      const Vec v = decode(f, n, c);
      for (const auto& a : m.actions())
        if (!std::binary_search(s.begin(), s.end(), encode(f, row_times(f, v, a)))) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable) lat.submodules.push_back(s);
  }
  std::sort(lat.submodules.begin(), lat.submodules.end(),
            [](const VecSet& a, const VecSet& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  std::vector<std::size_t> chain(lat.submodules.size(), 0);
  for (std::size_t i = 0; i < lat.submodules.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lat.submodules[j].size() < lat.submodules[i].size() && subset_of(lat.submodules[j], lat.submodules[i]))
        chain[i] = std::max(chain[i], chain[j] + 1);
  lat.length = chain.back();
  std::vector<Vec> soc_gens;
  for (std::size_t i = 1; i < lat.submodules.size(); ++i)
    if (chain[i] == 1)
      for (auto c : lat.submodules[i]) soc_gens.push_back(decode(f, n, c));
  lat.socle = span_set(f, n, soc_gens);
  return lat;
}

inline VecSet elements_of(const SubspaceBasis& s) {
  const Field& f = *s.field();
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < s.dim(); ++r) gens.push_back(s.basis().row_vec(r));
  return span_set(f, s.ambient(), gens);
}

}  // namespace oracle
