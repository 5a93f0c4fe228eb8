#include "pgmd/group.hpp"

#include <algorithm>
#include <set>

#include "pgmd/errors.hpp"

namespace pgmd {

namespace {

int find_identity(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::string label,
                                    std::vector<std::string> element_labels) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw Error("group order must be at least 1");
  if (n > kMaxOrder)
    throw Error("group order " + std::to_string(n) + " exceeds the explicit-table limit of " +
                std::to_string(kMaxOrder));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ParseError("multiplication table is not square: row " + std::to_string(i) +
                       " has " + std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw ParseError("table entry at row " + std::to_string(i) + ", column " +
                         std::to_string(j) + " is out of range: " +
                         std::to_string(table[i][j]));
  }

  const int e = find_identity(table);
  if (e < 0) throw NoIdentityError();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAssociativeError(a, b, c);

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == e && table[b][a] == e) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0) throw NoInverseError(a);
  }

  if (element_labels.empty()) {
    element_labels.resize(n);
    for (int i = 0; i < n; ++i)
      element_labels[i] = i == e ? "e" : "g" + std::to_string(i);
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.identity_ = e;
  g.label_ = std::move(label);
  g.element_labels_ = std::move(element_labels);
  return g;
}

namespace {

std::string power_label(const std::string& base, int k) {
  if (k == 0) return "e";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be at least 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = power_label("x", i);
  return FiniteGroup::from_table(std::move(t), "Z" + std::to_string(n),
                                 std::move(labels));
}

FiniteGroup make_dihedral(int n) {
  if (n < 1) throw Error("dihedral parameter must be at least 1");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const bool ri = i >= n, rj = j >= n;
      const int a = i % n, b = j % n;
      if (!ri && !rj) t[i][j] = (a + b) % n;                // a^i a^j
      else if (!ri && rj) t[i][j] = n + (a + b) % n;        // a^i (a^j b)
      else if (ri && !rj) t[i][j] = n + (a - b + n) % n;    // (a^i b) a^j
      else t[i][j] = (a - b + n) % n;                       // (a^i b)(a^j b)
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i) labels[i] = power_label("a", i);
  for (int i = 0; i < n; ++i)
    labels[n + i] = i == 0 ? "b" : (i == 1 ? "ab" : "a^" + std::to_string(i) + "b");
  std::string label = "D" + std::to_string(m);
  if (n < 3) label += " (degenerate)";
  return FiniteGroup::from_table(std::move(t), std::move(label), std::move(labels));
}

FiniteGroup make_direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw Error("direct product needs at least one factor");
  long long order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > FiniteGroup::kMaxOrder)
      throw Error("direct-product order exceeds the explicit-table limit of " +
                  std::to_string(FiniteGroup::kMaxOrder));
  }
  const int n = static_cast<int>(order);
  const int k = static_cast<int>(factors.size());

  auto decode = [&](int idx) {
    std::vector<int> comp(k);
    for (int f = k - 1; f >= 0; --f) {
      comp[f] = idx % factors[f].order();
      idx /= factors[f].order();
    }
    return comp;
  };
  auto encode = [&](const std::vector<int>& comp) {
    int idx = 0;
    for (int f = 0; f < k; ++f) idx = idx * factors[f].order() + comp[f];
    return idx;
  };

  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const auto ci = decode(i);
    for (int j = 0; j < n; ++j) {
      const auto cj = decode(j);
      std::vector<int> cp(k);
      for (int f = 0; f < k; ++f) cp[f] = factors[f].mul(ci[f], cj[f]);
      t[i][j] = encode(cp);
    }
  }

  std::string label;
  for (int f = 0; f < k; ++f) {
    if (f) label += " x ";
    label += factors[f].label();
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    const auto c = decode(i);
    std::string s = "(";
    for (int f = 0; f < k; ++f) {
      if (f) s += ",";
      s += factors[f].element_labels()[c[f]];
    }
    labels[i] = s + ")";
  }
  return FiniteGroup::from_table(std::move(t), std::move(label), std::move(labels));
}

FiniteGroup make_from_cayley(std::vector<std::vector<int>> table) {
  const auto n = table.size();
  return FiniteGroup::from_table(std::move(table),
                                 "cayley(" + std::to_string(n) + ")");
}

int element_order(const FiniteGroup& g, int x) {
  int p = x, m = 1;
  while (p != g.identity()) {
    p = g.mul(p, x);
    ++m;
  }
  return m;
}

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x) {
  std::set<int> seen;
  int p = g.identity();
  seen.insert(p);
  do {
    p = g.mul(p, x);
    seen.insert(p);
  } while (p != g.identity());
  return {seen.begin(), seen.end()};
}

std::vector<int> involutions(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (x != g.identity() && g.mul(x, x) == g.identity()) out.push_back(x);
  return out;
}

bool is_cyclic(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

bool is_abelian(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::vector<std::pair<long long, int>> prime_factorization(long long n) {
  if (n < 1) throw Error("prime_factorization requires n >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    out.emplace_back(p, r);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace pgmd
