#include "pgmd/graph.hpp"

#include <cassert>
#include <queue>
#include <random>

#include "pgmd/errors.hpp"
#include "pgmd/parallel.hpp"

namespace pgmd {

void SimpleGraph::add_edge(int u, int v) {
  assert(u >= 0 && u < vertex_count() && v >= 0 && v < vertex_count());
  if (u == v) throw Error("self-loop rejected: vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (int u = 0; u < vertex_count(); ++u) total += degree(u);
  return total / 2;
}

bool SimpleGraph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    adj_[u].for_each([&](int v) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    });
  }
  return visited == n;
}

DistanceMatrix all_pairs_distances(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) * n,
                        DistanceMatrix::kUnreachable);
  parallel_for(0, n, [&](int src) {
    int* row = dist.data() + static_cast<std::size_t>(src) * n;
    row[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      g.neighbors(u).for_each([&](int v) {
        if (row[v] == DistanceMatrix::kUnreachable) {
          row[v] = row[u] + 1;
          q.push(v);
        }
      });
    }
  });
  return {n, std::move(dist)};
}

SimpleGraph power_graph(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Bitset> reach(n, Bitset(n));  // reach[x] = <x>
  for (int x = 0; x < n; ++x)
    for (int p : cyclic_subgroup(g, x)) reach[x].set(p);

  SimpleGraph pg(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (reach[x].test(y) || reach[y].test(x)) pg.add_edge(x, y);

  assert(pg.is_connected());
  return pg;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw Error("complete graph needs at least one vertex");
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph wheel_graph(int n) {
  if (n < 3)
    throw Error("wheel graph needs at least 3 rim vertices, got " +
                std::to_string(n));
  SimpleGraph g(n + 1);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n);
  }
  return g;
}

SimpleGraph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error("tree needs at least one vertex");
  SimpleGraph g(n);
  std::mt19937_64 rng(seed);
  for (int v = 1; v < n; ++v) {
    // Plain modulo keeps the sequence identical across platforms.
    const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    g.add_edge(parent, v);
  }
  return g;
}

}  // namespace pgmd
