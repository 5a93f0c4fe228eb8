#ifndef PGMD_TESTS_NAIVE_ORACLE_HPP
#define PGMD_TESTS_NAIVE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "pgmd/graph.hpp"

// Reference implementations used only by tests. Deliberately share nothing
// with the search engine: distances come from Floyd-Warshall instead of BFS,
// subsets are swept exhaustively with no twin pruning, and representation
// distinctness is checked pairwise.
namespace naive {

std::vector<std::vector<int>> floyd_warshall(const pgmd::SimpleGraph& g);

bool is_resolving(const std::vector<std::vector<int>>& dist,
                  const std::vector<int>& w);

struct MdResult {
  int beta = 0;
  std::vector<int> basis;  // lexicographically first witness
};

// Ascends k = 1, 2, ... over all C(n, k) subsets in lexicographic order.
MdResult metric_dimension(const pgmd::SimpleGraph& g);

// Every minimal resolving set, by full subset sweep; sorted by size then
// lexicographically.
std::vector<std::vector<int>> minimal_resolving_sets(const pgmd::SimpleGraph& g);

// Literal exchange check over the naive minimal-set list.
bool exchange_property(const pgmd::SimpleGraph& g);

}  // namespace naive

#endif  // PGMD_TESTS_NAIVE_ORACLE_HPP
