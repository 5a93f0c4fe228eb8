#include "pgmd/theory.hpp"

#include <algorithm>
#include <set>

#include "pgmd/errors.hpp"

namespace pgmd {

PowerGraphContext analyze_power_graph(FiniteGroup g) {
  SimpleGraph graph = power_graph(g);
  DistanceMatrix dist = all_pairs_distances(graph);
  TwinPartition twins = twin_partition(graph);
  return {std::move(g), std::move(graph), std::move(dist), std::move(twins)};
}

std::vector<int> r_set(const PowerGraphContext& ctx, int x, int y) {
  const int n = ctx.graph.vertex_count();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw Error("r_set: vertex out of range");
  if (x == y) throw Error("r_set requires two distinct elements");
  std::vector<int> out;
  for (int z = 0; z < n; ++z)
    if (ctx.dist.at(x, z) != ctx.dist.at(y, z)) out.push_back(z);
  return out;
}

InvolutionReport resolving_involutions(const PowerGraphContext& ctx) {
  const int n = ctx.graph.vertex_count();
  const std::vector<int> invs = involutions(ctx.group);
  std::vector<char> is_inv(n, 0);
  for (int w : invs) is_inv[w] = 1;

  InvolutionReport report;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      // Collect the differing vertices; only |R| = 3 can name an involution.
      int third = -1, count = 0;
      for (int z = 0; z < n && count <= 3; ++z) {
        if (ctx.dist.at(x, z) != ctx.dist.at(y, z)) {
          ++count;
          if (z != x && z != y) third = z;
        }
      }
      if (count != 3 || third < 0 || !is_inv[third]) continue;
      const int w = third;
      if (ctx.twins.class_of[x] == ctx.twins.class_of[w] ||
          ctx.twins.class_of[y] == ctx.twins.class_of[w])
        continue;
      report.witnesses.try_emplace(w, x, y);
    }
  }
  for (const auto& [w, xy] : report.witnesses)
    report.resolving_involutions.push_back(w);
  return report;
}

namespace {

int pow_element(const FiniteGroup& g, int x, long long k) {
  int acc = g.identity();
  for (long long i = 0; i < k; ++i) acc = g.mul(acc, x);
  return acc;
}

}  // namespace

PsiVerdict psi_membership(const FiniteGroup& g) {
  PsiVerdict v;
  const int n = g.order();

  v.noncyclic.holds = !is_cyclic(g);
  if (!v.noncyclic.holds) {
    for (int x = 0; x < n; ++x)
      if (element_order(g, x) == n) {
        v.noncyclic.witness = "cyclic: element " + std::to_string(x) +
                              " generates the group";
        break;
      }
  }

  const auto factors = prime_factorization(n);
  if (factors.size() == 2 && factors[0].first == 2) {
    v.c1.holds = true;
    v.odd_prime = factors[1].first;
    v.c1.witness = "|G| = 2^" + std::to_string(factors[0].second) + " * " +
                   std::to_string(v.odd_prime) + "^" +
                   std::to_string(factors[1].second);
  } else {
    v.c1.holds = false;
    v.c1.witness = "prime divisors of " + std::to_string(n) + " are not {2, p}";
  }

  v.c3.holds = true;
  for (int x = 0; x < n; ++x) {
    if (element_order(g, x) == 4) {
      v.c3.holds = false;
      v.c3.witness = "element " + std::to_string(x) + " has order 4";
      break;
    }
  }

  if (v.c1.holds) {
    const long long p = v.odd_prime;
    int solutions = 0;
    for (int x = 0; x < n; ++x)
      if (pow_element(g, x, p) == g.identity()) ++solutions;
    v.c2.holds = solutions == p;
    v.c2.witness = "|{x : x^p = e}| = " + std::to_string(solutions);

    v.c4.holds = true;
    const auto invs = involutions(g);
    std::vector<std::vector<int>> order_2p_subgroups;
    for (int c = 0; c < n; ++c)
      if (element_order(g, c) == 2 * p)
        order_2p_subgroups.push_back(cyclic_subgroup(g, c));
    for (int w : invs) {
      bool contained = false;
      for (const auto& sub : order_2p_subgroups)
        if (std::binary_search(sub.begin(), sub.end(), w)) {
          contained = true;
          break;
        }
      if (!contained) {
        v.c4.holds = false;
        v.c4.witness = "involution " + std::to_string(w) +
                       " lies in no cyclic subgroup of order " +
                       std::to_string(2 * p);
        break;
      }
    }
  } else {
    v.c2.holds = false;
    v.c2.witness = "not evaluated: C1 provides no odd prime p";
    v.c4.holds = false;
    v.c4.witness = "not evaluated: C1 provides no odd prime p";
  }

  v.in_psi = v.noncyclic.holds && v.c1.holds && v.c2.holds && v.c3.holds &&
             v.c4.holds;
  return v;
}

namespace {

std::optional<CrossCheck> oracle_cross_check(const SimpleGraph& g,
                                             const DistanceMatrix& dist,
                                             int formula_beta,
                                             const ResolveOptions& opts) {
  if (g.vertex_count() > std::min(opts.oracle_cap, 64))
    return CrossCheck::not_attempted("not attempted (cap)");
  const MdReport oracle = metric_dimension_oracle(g, dist, opts);
  if (oracle.beta == formula_beta) return CrossCheck::agree();
  return CrossCheck::disagree("formula=" + std::to_string(formula_beta) +
                              " oracle=" + std::to_string(oracle.beta));
}

int cyclic_beta_formula(int n) {
  const auto f = prime_factorization(n);
  const int t = static_cast<int>(f.size());
  if (t == 1) return n - 1;
  if (t == 2 && f[0].first == 2 && f[0].second == 1)
    return n - 2 * f[1].second;
  if (t == 2 && f[0].first == 2 && f[1].second == 1)
    return n - 2 * f[0].second;
  long long prod = 1;
  for (const auto& [p, r] : f) prod *= r + 1;
  return static_cast<int>(n + 1 - prod);
}

}  // namespace

MdReport md_formula_mdpg(const PowerGraphContext& ctx, const ResolveOptions& opts) {
  const int vertex_count = ctx.graph.vertex_count();
  const int class_count = ctx.twins.class_count();
  const PsiVerdict psi = psi_membership(ctx.group);

  MdReport report;
  report.method = MdMethod::formula_mdpg;
  if (psi.in_psi) {
    report.beta = vertex_count - class_count + 1;
  } else {
    const auto inv = resolving_involutions(ctx);
    report.beta = vertex_count - class_count +
                  static_cast<int>(inv.resolving_involutions.size());
  }
  report.cross_check = oracle_cross_check(ctx.graph, ctx.dist, report.beta, opts);
  return report;
}

MdReport md_formula_cyclic(int n, const ResolveOptions& opts) {
  if (n < 2) throw Error("md_formula_cyclic requires n >= 2");
  MdReport report;
  report.method = MdMethod::formula_mdcyc;
  report.beta = cyclic_beta_formula(n);
  if (n <= std::min(opts.oracle_cap, 64)) {
    const SimpleGraph pg = power_graph(make_cyclic(n));
    const DistanceMatrix dist = all_pairs_distances(pg);
    report.cross_check = oracle_cross_check(pg, dist, report.beta, opts);
  } else {
    report.cross_check = CrossCheck::not_attempted("not attempted (cap)");
  }
  return report;
}

MdReport md_dihedral(int n, const ResolveOptions& opts) {
  if (n < 3) throw Error("md_dihedral requires n >= 3");
  MdReport report;
  report.method = MdMethod::formula_mdDi;
  report.beta = cyclic_beta_formula(n) + n - 2;
  if (2 * n <= std::min(opts.oracle_cap, 64)) {
    const SimpleGraph pg = power_graph(make_dihedral(n));
    const DistanceMatrix dist = all_pairs_distances(pg);
    report.cross_check = oracle_cross_check(pg, dist, report.beta, opts);
  } else {
    report.cross_check = CrossCheck::not_attempted("not attempted (cap)");
  }
  return report;
}

std::string to_string(ExchangeSufficiency s) {
  switch (s) {
    case ExchangeSufficiency::SufficientOddCyclic:
      return "SufficientOddCyclic";
    case ExchangeSufficiency::SufficientAbelianPrimePower:
      return "SufficientAbelianPrimePower";
    case ExchangeSufficiency::NotCovered:
      return "NotCovered";
  }
  return "NotCovered";
}

ExchangeSufficiency exchange_sufficient(const FiniteGroup& g) {
  if (g.order() >= 3 && g.order() % 2 == 1 && is_cyclic(g))
    return ExchangeSufficiency::SufficientOddCyclic;
  if (prime_factorization(g.order()).size() == 1 && is_abelian(g))
    return ExchangeSufficiency::SufficientAbelianPrimePower;
  return ExchangeSufficiency::NotCovered;
}

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerificationRow& r) { return r.pass; });
}

namespace {

// Replaces each base vertex by a bag of vertices; bags of adjacent base
// vertices are fully joined. adjacent_twins makes each bag a clique, so its
// members are twins via closed neighborhoods instead of open ones.
SimpleGraph blow_up(const SimpleGraph& base, const std::vector<int>& sizes,
                    bool adjacent_twins) {
  int total = 0;
  std::vector<int> start(base.vertex_count());
  for (int v = 0; v < base.vertex_count(); ++v) {
    start[v] = total;
    total += sizes[v];
  }
  SimpleGraph g(total);
  for (int v = 0; v < base.vertex_count(); ++v) {
    if (adjacent_twins)
      for (int i = 0; i < sizes[v]; ++i)
        for (int j = i + 1; j < sizes[v]; ++j)
          g.add_edge(start[v] + i, start[v] + j);
    for (const auto& [a, b] : base.edges()) {
      if (a != v) continue;
      for (int i = 0; i < sizes[a]; ++i)
        for (int j = 0; j < sizes[b]; ++j)
          g.add_edge(start[a] + i, start[b] + j);
    }
  }
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

std::vector<NamedGraph> no_singleton_roster() {
  std::vector<NamedGraph> out;
  for (int n = 2; n <= 8; ++n)
    out.push_back({"K" + std::to_string(n), complete_graph(n)});
  out.push_back({"path2-bag(2,3)", blow_up(path_graph(2), {2, 3}, false)});
  out.push_back({"path3-bag(2,2,2)", blow_up(path_graph(3), {2, 2, 2}, false)});
  out.push_back({"path3-clique-bag(2,2,2)", blow_up(path_graph(3), {2, 2, 2}, true)});
  out.push_back({"path4-bag(2,2,2,2)", blow_up(path_graph(4), {2, 2, 2, 2}, false)});
  out.push_back({"cycle4-bag(2,2,2,2)", blow_up(cycle_graph(4), {2, 2, 2, 2}, false)});
  out.push_back({"cycle5-bag(2,2,2,2,2)",
                 blow_up(cycle_graph(5), {2, 2, 2, 2, 2}, false)});
  out.push_back({"cycle3-clique-bag(2,3,2)", blow_up(cycle_graph(3), {2, 3, 2}, true)});
  for (int n : {3, 5, 7, 9, 15})
    out.push_back({"P_Z" + std::to_string(n), power_graph(make_cyclic(n))});
  return out;
}

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

FiniteGroup product_of_cyclics(const std::vector<int>& ns) {
  std::vector<FiniteGroup> fs;
  fs.reserve(ns.size());
  for (int n : ns) fs.push_back(make_cyclic(n));
  return make_direct_product(fs);
}

std::vector<NamedGroup> abelian_prime_power_roster() {
  std::vector<NamedGroup> out;
  out.push_back({"Z4", make_cyclic(4)});
  out.push_back({"Z8", make_cyclic(8)});
  out.push_back({"Z9", make_cyclic(9)});
  out.push_back({"Z2xZ2", product_of_cyclics({2, 2})});
  out.push_back({"Z3xZ3", product_of_cyclics({3, 3})});
  out.push_back({"Z2xZ4", product_of_cyclics({2, 4})});
  out.push_back({"Z2xZ2xZ2", product_of_cyclics({2, 2, 2})});
  return out;
}

std::string describe_error(const std::exception& e) {
  return std::string("error: ") + e.what();
}

}  // namespace

VerificationReport verify_theorems(const VerifySpec& spec) {
  VerificationReport report;
  const ResolveOptions& opts = spec.options;

  auto add_row = [&](std::string name, std::string expected,
                     std::string computed) {
    VerificationRow row;
    row.pass = expected == computed;
    row.case_name = std::move(name);
    row.expected = std::move(expected);
    row.computed = std::move(computed);
    report.rows.push_back(std::move(row));
  };

  // Twin-class formula and uniform minimal sizes on graphs without
  // singleton twins; the exchange property must hold on each of them.
  for (const auto& [name, graph] : no_singleton_roster()) {
    const DistanceMatrix dist = all_pairs_distances(graph);
    try {
      const MdReport formula = md_formula_no_singleton(graph);
      const MdReport oracle = metric_dimension_oracle(graph, dist, opts);
      add_row("twin-formula/" + name, std::to_string(formula.beta),
              std::to_string(oracle.beta));

      const auto minimal = enumerate_minimal_resolving_sets(graph, dist, opts);
      bool uniform = !minimal.empty();
      for (const auto& s : minimal)
        uniform = uniform && static_cast<int>(s.size()) == formula.beta;
      add_row("minimal-sets-uniform/" + name,
              "all minimal sets have size " + std::to_string(formula.beta),
              uniform ? "all minimal sets have size " + std::to_string(formula.beta)
                      : "sizes differ");

      const ExchangeReport ex = exchange_property(graph, dist, opts);
      add_row("exchange-no-singleton/" + name, "holds",
              ex.holds ? "holds" : "fails");
    } catch (const Error& e) {
      add_row("twin-formula/" + name, "checked", describe_error(e));
    }
  }

  // Dihedral dimension formula against the exact search.
  for (int n : spec.dihedral_ns) {
    const std::string name = "dihedral-dimension/D" + std::to_string(2 * n);
    try {
      const MdReport formula = md_dihedral(n, opts);
      const SimpleGraph pg = power_graph(make_dihedral(n));
      const DistanceMatrix dist = all_pairs_distances(pg);
      const MdReport oracle = metric_dimension_oracle(pg, dist, opts);
      add_row(name, std::to_string(formula.beta), std::to_string(oracle.beta));
    } catch (const Error& e) {
      add_row(name, "formula = oracle", describe_error(e));
    }
  }

  // Cyclic dimension formula against the exact search.
  for (int n : spec.cyclic_ns) {
    const std::string name = "cyclic-dimension/Z" + std::to_string(n);
    try {
      const MdReport formula = md_formula_cyclic(n, opts);
      const SimpleGraph pg = power_graph(make_cyclic(n));
      const DistanceMatrix dist = all_pairs_distances(pg);
      const MdReport oracle = metric_dimension_oracle(pg, dist, opts);
      add_row(name, std::to_string(formula.beta), std::to_string(oracle.beta));
    } catch (const Error& e) {
      add_row(name, "formula = oracle", describe_error(e));
    }
  }

  // Group-formula spot checks and singleton-twin structure across every
  // group the sweep touches.
  std::vector<NamedGroup> groups;
  for (int n : spec.cyclic_ns)
    groups.push_back({"Z" + std::to_string(n), make_cyclic(n)});
  for (int n : spec.dihedral_ns)
    groups.push_back({"D" + std::to_string(2 * n), make_dihedral(n)});
  for (auto& g : abelian_prime_power_roster()) groups.push_back(std::move(g));
  groups.push_back({"Z2xZ2xZ3", product_of_cyclics({2, 2, 3})});

  for (const auto& [name, group] : groups) {
    const PowerGraphContext ctx = analyze_power_graph(group);

    const auto singles = singleton_twins(ctx.graph);
    const auto invs = involutions(ctx.group);
    bool structural = true;
    for (int s : singles)
      structural = structural &&
                   (s == ctx.group.identity() ||
                    std::binary_search(invs.begin(), invs.end(), s));
    add_row("singleton-twins-structure/" + name,
            "singletons are the identity or involutions",
            structural ? "singletons are the identity or involutions"
                       : "unexpected singleton");

    const std::string name2 = "group-formula/" + name;
    try {
      const MdReport formula = md_formula_mdpg(ctx, opts);
      const MdReport oracle = metric_dimension_oracle(ctx.graph, ctx.dist, opts);
      add_row(name2, std::to_string(formula.beta), std::to_string(oracle.beta));
    } catch (const Error& e) {
      add_row(name2, "formula = oracle", describe_error(e));
    }
  }

  // Exchange confirmations for the two sufficient families.
  for (int n : spec.odd_cyclic_ns) {
    const std::string name = "exchange-odd-cyclic/Z" + std::to_string(n);
    try {
      const PowerGraphContext ctx = analyze_power_graph(make_cyclic(n));
      const ExchangeReport ex = exchange_property(ctx.graph, ctx.dist, opts);
      add_row(name, "holds", ex.holds ? "holds" : "fails");
    } catch (const Error& e) {
      add_row(name, "holds", describe_error(e));
    }
  }
  for (const auto& [name, group] : abelian_prime_power_roster()) {
    const std::string row_name = "exchange-abelian-prime-power/" + name;
    try {
      const PowerGraphContext ctx = analyze_power_graph(group);
      const ExchangeReport ex = exchange_property(ctx.graph, ctx.dist, opts);
      add_row(row_name, "holds", ex.holds ? "holds" : "fails");
    } catch (const Error& e) {
      add_row(row_name, "holds", describe_error(e));
    }
  }

  return report;
}

}  // namespace pgmd
