#ifndef PGMD_THEORY_HPP
#define PGMD_THEORY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgmd/graph.hpp"
#include "pgmd/group.hpp"
#include "pgmd/md_report.hpp"
#include "pgmd/resolve.hpp"
#include "pgmd/twins.hpp"

namespace pgmd {

// A group together with its power graph, cached distances, and twin
// partition. Everything downstream reads from here; nothing is recomputed.
struct PowerGraphContext {
  FiniteGroup group;
  SimpleGraph graph;
  DistanceMatrix dist;
  TwinPartition twins;
};

PowerGraphContext analyze_power_graph(FiniteGroup g);

// R{x,y}: vertices z of the power graph with d(x,z) != d(y,z). Always
// contains x and y; equals {x,y} exactly when x and y are twins.
std::vector<int> r_set(const PowerGraphContext& ctx, int x, int y);

// Involutions w for which some pair x, y outside w's twin class satisfies
// r_set(x, y) = {x, y, w}, each with one witnessing pair (the
// lexicographically first).
struct InvolutionReport {
  std::vector<int> resolving_involutions;          // ascending
  std::map<int, std::pair<int, int>> witnesses;    // w -> (x, y)
};

InvolutionReport resolving_involutions(const PowerGraphContext& ctx);

// Membership in the class of noncyclic groups that, for some odd prime p,
// satisfy:
//   C1  the prime divisors of |G| are exactly 2 and p
//   C2  the subgroup of order p is unique (|{x : x^p = e}| = p)
//   C3  no element has order 4
//   C4  every involution lies in a cyclic subgroup of order 2p
struct PsiCondition {
  bool holds = false;
  std::string witness;  // element or short description; empty when vacuous
};

struct PsiVerdict {
  bool in_psi = false;
  long long odd_prime = 0;  // the p of C1, 0 when C1 fails
  PsiCondition noncyclic, c1, c2, c3, c4;
};

PsiVerdict psi_membership(const FiniteGroup& g);

// Group-level dimension formula: |V| - (twin class count) + 1 for Psi
// members, |V| - (twin class count) + (number of resolving involutions)
// otherwise. Oracle-verified when the graph is within the oracle cap.
MdReport md_formula_mdpg(const PowerGraphContext& ctx,
                         const ResolveOptions& opts = {});

// Closed form for cyclic groups, n >= 2, over n = p1^r1 ... pt^rt:
//   t = 1                ->  n - 1
//   t = 2, p1 = 2, r1 = 1 -> n - 2*r2
//   t = 2, p1 = 2, r2 = 1 -> n - 2*r1
//   otherwise            ->  n + 1 - prod(ri + 1)
// The two middle cases overlap consistently at n = 2p. Oracle-verified when
// within cap; a disagreement is reported, never silently accepted.
MdReport md_formula_cyclic(int n, const ResolveOptions& opts = {});

// Dihedral dimension: beta(P_{Z_n}) + n - 2, n >= 3. Oracle-verified when
// the 2n-vertex power graph is within cap.
MdReport md_dihedral(int n, const ResolveOptions& opts = {});

// The two sufficient conditions for the power graph to have the exchange
// property. NotCovered carries no claim either way.
enum class ExchangeSufficiency {
  SufficientOddCyclic,
  SufficientAbelianPrimePower,
  NotCovered,
};

std::string to_string(ExchangeSufficiency s);

ExchangeSufficiency exchange_sufficient(const FiniteGroup& g);

// Batch cross-validation of every closed form against the exact search.
struct VerifySpec {
  std::vector<int> cyclic_ns = {4, 6, 8, 9, 10, 12, 15, 16, 18, 20};
  std::vector<int> dihedral_ns = {3, 4, 5, 6, 7, 8};
  std::vector<int> odd_cyclic_ns = {3, 5, 7, 9};
  ResolveOptions options;
};

struct VerificationRow {
  std::string case_name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool all_pass() const;
};

VerificationReport verify_theorems(const VerifySpec& spec = {});

}  // namespace pgmd

#endif  // PGMD_THEORY_HPP
