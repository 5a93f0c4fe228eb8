#ifndef PGMD_GRAPH_IO_HPP
#define PGMD_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pgmd/graph.hpp"

namespace pgmd {

// Edge-list format: header line `p <vertex_count>` followed by one `u v`
// pair of 0-based indices per line. Writing sorts edges lexicographically,
// so output is byte-deterministic for a given graph.
std::string write_edge_list(const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in, const std::string& source_name);
SimpleGraph read_edge_list_file(const std::string& path);

// Graphviz output; vertices listed in index order, edges sorted. When
// labels are supplied they become node label attributes.
std::string write_dot(const SimpleGraph& g,
                      const std::vector<std::string>& labels = {});

}  // namespace pgmd

#endif  // PGMD_GRAPH_IO_HPP
