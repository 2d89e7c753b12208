#include <algorithm>
#include <functional>
#include <map>

#include "kext/algebra.hpp"

namespace kext {

Group make_group(std::vector<std::vector<int>> table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) raise(ErrorKind::NotAGroup, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) raise(ErrorKind::NotAGroup, "table is not square");
    for (int x : row)
      if (x < 0 || x >= n) raise(ErrorKind::NotAGroup, "entry " + std::to_string(x) + " out of range");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) raise(ErrorKind::NotAGroup, "no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          raise(ErrorKind::NotAGroup, "not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] < 0) raise(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  Group g;
  g.name = std::move(name);
  g.table = std::move(table);
  g.inverse = std::move(inv);
  g.identity = e;
  return g;
}

namespace {

using Table = std::vector<std::vector<int>>;

Table table_from(int n, const std::function<int(int, int)>& op) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = op(a, b);
  return t;
}

Table cyclic(int n) {
  return table_from(n, [n](int a, int b) { return (a + b) % n; });
}

Table direct(const Table& g, const Table& h) {
  const int m = static_cast<int>(h.size());
  const int n = static_cast<int>(g.size()) * m;
  return table_from(n, [&](int a, int b) { return g[a / m][b / m] * m + h[a % m][b % m]; });
}

// r^i s^j stored at i + n*j
Table dihedral(int n) {
  return table_from(2 * n, [n](int a, int b) {
    const int i = a % n, j = a / n, k = b % n, l = b / n;
    const int r = ((j ? i - k : i + k) % n + n) % n;
    return r + n * ((j + l) % 2);
  });
}

// a^i x^j with a of order 2m, x^2 = a^m, x a x^-1 = a^-1
Table dicyclic(int m) {
  const int n = 2 * m;
  return table_from(2 * n, [n, m](int p, int q) {
    const int i = p % n, j = p / n, k = q % n, l = q / n;
    int r = j ? i - k : i + k;
    int s = j + l;
    if (s == 2) {
      r += m;
      s = 0;
    }
    return ((r % n) + n) % n + n * s;
  });
}

Table alternating4() {
  using Perm = std::vector<int>;
  auto compose = [](const Perm& a, const Perm& b) {  // first a, then b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  const std::vector<Perm> gens = {{1, 2, 0, 3}, {1, 0, 3, 2}};
  std::vector<Perm> elems = {{0, 1, 2, 3}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      Perm p = compose(elems[head], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  std::sort(elems.begin(), elems.end());
  const int n = static_cast<int>(elems.size());
  return table_from(n, [&](int a, int b) {
    const Perm p = compose(elems[a], elems[b]);
    return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  });
}

const std::map<std::string, std::function<Table()>>& registry() {
  static const std::map<std::string, std::function<Table()>> r = [] {
    std::map<std::string, std::function<Table()>> m;
    for (int n = 1; n <= 12; ++n) m["C" + std::to_string(n)] = [n] { return cyclic(n); };
    m["V4"] = [] { return direct(cyclic(2), cyclic(2)); };
    m["C2xC2"] = m["V4"];
    m["C4xC2"] = [] { return direct(cyclic(4), cyclic(2)); };
    m["C2xC2xC2"] = [] { return direct(direct(cyclic(2), cyclic(2)), cyclic(2)); };
    m["C3xC3"] = [] { return direct(cyclic(3), cyclic(3)); };
    m["C6xC2"] = [] { return direct(cyclic(6), cyclic(2)); };
    m["S3"] = [] { return dihedral(3); };
    m["D3"] = m["S3"];
    m["D4"] = [] { return dihedral(4); };
    m["D5"] = [] { return dihedral(5); };
    m["D6"] = [] { return dihedral(6); };
    m["Q8"] = [] { return dicyclic(2); };
    m["Dic3"] = [] { return dicyclic(3); };
    m["A4"] = [] { return alternating4(); };
    return m;
  }();
  return r;
}

}  // namespace

Group named_group(const std::string& name) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) raise(ErrorKind::BadParameters, "unknown group '" + name + "'");
  return make_group(it->second(), name);
}

const std::vector<std::string>& named_group_names() {
  static const std::vector<std::string> names = {
      "C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2",
      "D4", "Q8", "C9", "C3xC3", "C10", "D5", "C11", "C12", "C6xC2", "A4", "D6", "Dic3"};
  return names;
}

}  // namespace kext
