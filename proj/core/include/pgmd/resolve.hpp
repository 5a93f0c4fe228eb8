#ifndef PGMD_RESOLVE_HPP
#define PGMD_RESOLVE_HPP

#include <optional>
#include <vector>

#include "pgmd/graph.hpp"
#include "pgmd/md_report.hpp"

namespace pgmd {

struct ResolveOptions {
  // Vertex caps for the exact searches. Larger graphs are rejected with
  // TooLargeError; the CLI exposes --cap-oracle / --cap-enum overrides.
  int oracle_cap = 22;
  int enum_cap = 18;
  int threads = 0;  // 0 = PGMD_THREADS env var, else hardware default
};

// Which replacement vertices the exchange check accepts. `literal` allows
// any v in W2 (including v = u); `strict` requires v in W2 \ W1 and ranges
// over distinct pairs only.
enum class ExchangeReading { literal, strict };

// Ordered tuple of hop distances from v to each landmark, in landmark order.
std::vector<int> representation(const DistanceMatrix& dist, int v,
                                const std::vector<int>& landmarks);

// True iff all vertices have pairwise distinct representations w.r.t. W.
// Checked directly from the definition; the search engines use an
// equivalent pair-mask formulation that tests validate against this one.
bool is_resolving(const DistanceMatrix& dist, const std::vector<int>& w);

// W is minimal iff it resolves and no single removal keeps it resolving
// (sufficient because resolvability is monotone under supersets). The empty
// set is never a resolving set.
bool is_minimal_resolving(const DistanceMatrix& dist, const std::vector<int>& w);

// Exact metric dimension with a lexicographically-least witness basis.
// Ascends by cardinality; from each twin class of size m at least m-1
// vertices are forced into every candidate, so only the per-class excluded
// vertex and the singleton classes are free choices.
MdReport metric_dimension_oracle(const SimpleGraph& g, const DistanceMatrix& dist,
                                 const ResolveOptions& opts = {});

// All minimal resolving sets (of size <= max_size when given), sorted by
// size then lexicographically.
std::vector<std::vector<int>> enumerate_minimal_resolving_sets(
    const SimpleGraph& g, const DistanceMatrix& dist,
    const ResolveOptions& opts = {},
    std::optional<int> max_size = std::nullopt);

// Decides the exchange property over all ordered pairs of minimal resolving
// sets. A reported counterexample (W1, W2, u) has no v in W2 making
// (W1 \ {u}) union {v} minimal resolving.
ExchangeReport exchange_property(const SimpleGraph& g, const DistanceMatrix& dist,
                                 const ResolveOptions& opts = {},
                                 ExchangeReading reading = ExchangeReading::literal);

}  // namespace pgmd

#endif  // PGMD_RESOLVE_HPP
