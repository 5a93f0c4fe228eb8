#ifndef PGMD_TWINS_HPP
#define PGMD_TWINS_HPP

#include <vector>

#include "pgmd/bitset.hpp"
#include "pgmd/graph.hpp"
#include "pgmd/md_report.hpp"

namespace pgmd {

// Classes of the twin relation: u and v are twins when N(u) = N(v) or
// N[u] = N[v]. Classes are sorted by least member, members ascending.
struct TwinPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;      // vertex -> class id
  std::vector<int> singleton_ids; // class ids of size-1 classes, ascending

  int class_count() const { return static_cast<int>(classes.size()); }
};

Bitset open_neighborhood(const SimpleGraph& g, int u);
Bitset closed_neighborhood(const SimpleGraph& g, int u);

// True iff N(u) = N(v) or N[u] = N[v]; reflexive by convention.
bool are_twins(const SimpleGraph& g, int u, int v);

TwinPartition twin_partition(const SimpleGraph& g);

// Vertices whose twin class is {u} itself, ascending.
std::vector<int> singleton_twins(const SimpleGraph& g);

// Twin-class dimension formula: when no twin class is a singleton,
// beta = |V| - (number of classes), every minimal resolving set is a basis,
// and all-but-one-vertex-per-class is a witness basis. Throws
// HasSingletonTwinError naming a witness vertex otherwise.
MdReport md_formula_no_singleton(const SimpleGraph& g);

}  // namespace pgmd

#endif  // PGMD_TWINS_HPP
