#include "pgmd/twins.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pgmd/errors.hpp"

namespace pgmd {

Bitset open_neighborhood(const SimpleGraph& g, int u) { return g.neighbors(u); }

Bitset closed_neighborhood(const SimpleGraph& g, int u) {
  Bitset b = g.neighbors(u);
  b.set(u);
  return b;
}

bool are_twins(const SimpleGraph& g, int u, int v) {
  if (u == v) return true;
  if (g.neighbors(u) == g.neighbors(v)) return true;
  return closed_neighborhood(g, u) == closed_neighborhood(g, v);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

TwinPartition twin_partition(const SimpleGraph& g) {
  const int n = g.vertex_count();
  UnionFind uf(n);

  // Group on exact neighborhood equality, under either key.
  std::unordered_map<Bitset, int, BitsetHash> open_rep, closed_rep;
  for (int v = 0; v < n; ++v) {
    if (auto [it, fresh] = open_rep.try_emplace(open_neighborhood(g, v), v); !fresh)
      uf.unite(v, it->second);
    if (auto [it, fresh] = closed_rep.try_emplace(closed_neighborhood(g, v), v);
        !fresh)
      uf.unite(v, it->second);
  }

  TwinPartition part;
  part.class_of.assign(n, -1);
  std::unordered_map<int, int> root_to_id;
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    auto [it, fresh] = root_to_id.try_emplace(root, part.class_count());
    if (fresh) part.classes.emplace_back();
    part.class_of[v] = it->second;
    part.classes[it->second].push_back(v);
  }
  // Roots are class minima and vertices were scanned in order, so classes
  // are already sorted by least member with ascending members.

  // Certify: the two neighborhood-equality relations only chain through
  // genuine twins, so every intra-class pair must satisfy the definition.
  for (const auto& cls : part.classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!are_twins(g, cls[i], cls[j]))
          throw Error("twin grouping produced a non-twin pair (" +
                      std::to_string(cls[i]) + ", " + std::to_string(cls[j]) +
                      ")");

  for (int id = 0; id < part.class_count(); ++id)
    if (part.classes[id].size() == 1) part.singleton_ids.push_back(id);
  return part;
}

std::vector<int> singleton_twins(const SimpleGraph& g) {
  const TwinPartition part = twin_partition(g);
  std::vector<int> out;
  for (int id : part.singleton_ids) out.push_back(part.classes[id][0]);
  std::sort(out.begin(), out.end());
  return out;
}

MdReport md_formula_no_singleton(const SimpleGraph& g) {
  const TwinPartition part = twin_partition(g);
  if (!part.singleton_ids.empty())
    throw HasSingletonTwinError(part.classes[part.singleton_ids[0]][0]);

  MdReport report;
  report.beta = g.vertex_count() - part.class_count();
  report.method = MdMethod::formula_theorem1;
  // All vertices except the least member of each class form a basis.
  std::vector<char> excluded(g.vertex_count(), 0);
  for (const auto& cls : part.classes) excluded[cls[0]] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!excluded[v]) report.witness_basis.push_back(v);
  return report;
}

}  // namespace pgmd
