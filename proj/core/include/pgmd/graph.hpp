#ifndef PGMD_GRAPH_HPP
#define PGMD_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pgmd/bitset.hpp"
#include "pgmd/group.hpp"

namespace pgmd {

// Simple undirected graph over dense vertex indices. Adjacency is stored as
// per-vertex bitsets; no self-loops, symmetric by construction. Immutable
// once built (add_edge is only used during construction).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count)
      : adj_(vertex_count, Bitset(vertex_count)) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }

  const Bitset& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return adj_[u].count(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool is_connected() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<Bitset> adj_;
};

// All-pairs hop distances. Unreachable pairs carry the distinguished
// kUnreachable value; power graphs never produce it, arbitrary edge-list
// inputs can.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> dist)
      : n_(n), dist_(std::move(dist)) {}

  int vertex_count() const { return n_; }
  int at(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

// BFS from every source; rows are computed by parallel workers when the
// worker count allows.
DistanceMatrix all_pairs_distances(const SimpleGraph& g);

// Undirected power graph of g: vertices are the group elements, {x, y} is an
// edge iff one of x, y is a positive power of the other. Always connected
// (the identity is adjacent to every element); connectivity is asserted.
SimpleGraph power_graph(const FiniteGroup& g);

SimpleGraph complete_graph(int n);

// n rim vertices 0..n-1 forming a cycle plus hub vertex n adjacent to all
// rim vertices (n+1 vertices total). Rejects n < 3.
SimpleGraph wheel_graph(int n);

// Uniform random recursive tree: vertex i >= 1 attaches to a parent drawn
// uniformly from 0..i-1. Deterministic per seed.
SimpleGraph random_tree(int n, std::uint64_t seed);

}  // namespace pgmd

#endif  // PGMD_GRAPH_HPP
