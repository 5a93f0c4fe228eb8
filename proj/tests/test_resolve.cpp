#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "graph_gen.hpp"
#include "naive_oracle.hpp"
#include "pgmd/errors.hpp"
#include "pgmd/resolve.hpp"
#include "pgmd/twins.hpp"

using namespace pgmd;

namespace {

struct Prepared {
  SimpleGraph graph;
  DistanceMatrix dist;
};

Prepared prep(SimpleGraph g) {
  DistanceMatrix d = all_pairs_distances(g);
  return {std::move(g), std::move(d)};
}

}  // namespace

TEST_CASE("representation") {
  const Prepared p = prep(power_graph(make_cyclic(6)));
  CHECK(representation(p.dist, 2, {3}) == std::vector<int>{2});
  CHECK(representation(p.dist, 3, {3, 1}) == std::vector<int>{0, 1});

  const Prepared k4 = prep(complete_graph(4));
  CHECK(representation(k4.dist, 0, {1, 2}) == std::vector<int>{1, 1});
}

TEST_CASE("is_resolving") {
  const Prepared k4 = prep(complete_graph(4));
  CHECK(is_resolving(k4.dist, {0, 1, 2, 3}));  // W = V always resolves
  for (int drop = 0; drop < 4; ++drop) {
    std::vector<int> w;
    for (int v = 0; v < 4; ++v)
      if (v != drop) w.push_back(v);
    CHECK(is_resolving(k4.dist, w));
  }
  CHECK_FALSE(is_resolving(k4.dist, {0, 1}));

  const Prepared pz6 = prep(power_graph(make_cyclic(6)));
  // {x, x^2, x^3, x^4} leaves the twins e and x^5 unresolved
  CHECK_FALSE(is_resolving(pz6.dist, {1, 2, 3, 4}));
  CHECK(is_resolving(pz6.dist, {0, 1, 2, 3}));
}

TEST_CASE("is_minimal_resolving") {
  const Prepared k4 = prep(complete_graph(4));
  CHECK(is_minimal_resolving(k4.dist, {0, 1, 2}));
  CHECK_FALSE(is_minimal_resolving(k4.dist, {0, 1, 2, 3}));

  const Prepared pz6 = prep(power_graph(make_cyclic(6)));
  CHECK(is_minimal_resolving(pz6.dist, {0, 1, 2, 3}));
  CHECK_FALSE(is_minimal_resolving(pz6.dist, {1, 2, 3, 4}));
}

TEST_CASE("metric dimension oracle") {
  const Prepared k5 = prep(complete_graph(5));
  const MdReport r5 = metric_dimension_oracle(k5.graph, k5.dist);
  CHECK(r5.beta == 4);
  CHECK(r5.method == MdMethod::oracle);

  const Prepared pz6 = prep(power_graph(make_cyclic(6)));
  const MdReport r6 = metric_dimension_oracle(pz6.graph, pz6.dist);
  CHECK(r6.beta == 4);
  CHECK(r6.witness_basis == std::vector<int>{0, 1, 2, 3});
  CHECK(is_minimal_resolving(pz6.dist, r6.witness_basis));

  const Prepared p5 = prep(gen::path_graph(5));
  CHECK(metric_dimension_oracle(p5.graph, p5.dist).beta == 1);

  const Prepared k1 = prep(complete_graph(1));
  CHECK(metric_dimension_oracle(k1.graph, k1.dist).beta == 1);
  // the empty set is never resolving, so {0} is the unique minimal set
  CHECK_FALSE(is_resolving(k1.dist, {}));
  CHECK(is_minimal_resolving(k1.dist, {0}));
  CHECK(enumerate_minimal_resolving_sets(k1.graph, k1.dist) ==
        std::vector<std::vector<int>>{{0}});

  SimpleGraph disconnected(3);
  disconnected.add_edge(0, 1);
  const DistanceMatrix dd = all_pairs_distances(disconnected);
  CHECK_THROWS_AS(metric_dimension_oracle(disconnected, dd), DisconnectedError);

  const Prepared big = prep(complete_graph(23));
  CHECK_THROWS_AS(metric_dimension_oracle(big.graph, big.dist), TooLargeError);
  try {
    metric_dimension_oracle(big.graph, big.dist);
  } catch (const TooLargeError& e) {
    CHECK(std::string(e.what()).find("--cap-oracle") != std::string::npos);
  }
  ResolveOptions raised;
  raised.oracle_cap = 23;
  CHECK(metric_dimension_oracle(big.graph, big.dist, raised).beta == 22);
}

TEST_CASE("enumerate minimal resolving sets") {
  const Prepared k3 = prep(complete_graph(3));
  CHECK(enumerate_minimal_resolving_sets(k3.graph, k3.dist) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  const Prepared pz6 = prep(power_graph(make_cyclic(6)));
  const auto sets = enumerate_minimal_resolving_sets(pz6.graph, pz6.dist);
  CHECK(sets.size() == 11);
  for (const auto& s : sets) CHECK(s.size() == 4);

  // star: the three leaf pairs
  const Prepared star = prep(power_graph(gen::product_of_cyclics({2, 2})));
  CHECK(enumerate_minimal_resolving_sets(star.graph, star.dist) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});

  const auto capped =
      enumerate_minimal_resolving_sets(k3.graph, k3.dist, {}, 1);
  CHECK(capped.empty());

  const Prepared big = prep(complete_graph(19));
  CHECK_THROWS_AS(enumerate_minimal_resolving_sets(big.graph, big.dist),
                  TooLargeError);
  try {
    enumerate_minimal_resolving_sets(big.graph, big.dist);
  } catch (const TooLargeError& e) {
    CHECK(std::string(e.what()).find("--cap-enum") != std::string::npos);
  }
}

TEST_CASE("exchange property") {
  const Prepared pz6 = prep(power_graph(make_cyclic(6)));
  const ExchangeReport r = exchange_property(pz6.graph, pz6.dist);
  CHECK(r.holds);
  CHECK(r.minimal_sets_count == 11);
  CHECK_FALSE(r.counterexample.has_value());

  const Prepared w8 = prep(wheel_graph(8));
  const ExchangeReport rw = exchange_property(w8.graph, w8.dist);
  CHECK_FALSE(rw.holds);
  REQUIRE(rw.counterexample.has_value());
  // re-validate the counterexample from scratch
  const auto& ce = *rw.counterexample;
  CHECK(is_minimal_resolving(w8.dist, ce.w1));
  CHECK(is_minimal_resolving(w8.dist, ce.w2));
  CHECK(std::find(ce.w1.begin(), ce.w1.end(), ce.removed) != ce.w1.end());
  for (int v : ce.w2) {
    std::vector<int> candidate;
    for (int x : ce.w1)
      if (x != ce.removed) candidate.push_back(x);
    if (std::find(candidate.begin(), candidate.end(), v) == candidate.end())
      candidate.push_back(v);
    std::sort(candidate.begin(), candidate.end());
    CHECK_FALSE(is_minimal_resolving(w8.dist, candidate));
  }

  const Prepared tree = prep(random_tree(8, 1));
  CHECK(exchange_property(tree.graph, tree.dist).holds);

  // under the literal replacement rule a 4-path fails: {1,2} is minimal but
  // neither {1} nor {2} resolves, so the basis {0} admits no swap
  const Prepared p4 = prep(gen::path_graph(4));
  CHECK_FALSE(exchange_property(p4.graph, p4.dist).holds);
  CHECK(naive::exchange_property(p4.graph) == false);
}

TEST_CASE("strict exchange reading") {
  // complete graphs satisfy even the strict replacement rule
  const Prepared k4 = prep(complete_graph(4));
  CHECK(exchange_property(k4.graph, k4.dist, {}, ExchangeReading::strict).holds);

  // every minimal set of P_{Z3xZ3} is forced through the identity-free
  // pattern; strict replacement cannot repair a removal at an agreeing
  // position, while the literal rule holds
  const Prepared z33 = prep(power_graph(gen::product_of_cyclics({3, 3})));
  CHECK(exchange_property(z33.graph, z33.dist).holds);
  CHECK_FALSE(
      exchange_property(z33.graph, z33.dist, {}, ExchangeReading::strict).holds);
}

TEST_CASE("resolving supersets stay resolving") {
  std::mt19937 rng(7);
  for (const auto& [name, group] : gen::small_group_roster()) {
    const SimpleGraph g = power_graph(group);
    if (g.vertex_count() < 3) continue;
    CAPTURE(name);
    const DistanceMatrix d = all_pairs_distances(g);
    const MdReport base = metric_dimension_oracle(g, d);
    for (int trial = 0; trial < 10; ++trial) {
      std::set<int> w(base.witness_basis.begin(), base.witness_basis.end());
      const int extra = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < extra; ++i)
        w.insert(static_cast<int>(rng() % g.vertex_count()));
      CHECK(is_resolving(d, {w.begin(), w.end()}));
    }
  }
}

TEST_CASE("minimal sets omit at most one vertex per twin class") {
  for (const auto& [name, group] : gen::small_group_roster()) {
    const SimpleGraph g = power_graph(group);
    if (g.vertex_count() > 12) continue;
    CAPTURE(name);
    const DistanceMatrix d = all_pairs_distances(g);
    const TwinPartition part = twin_partition(g);
    for (const auto& w : enumerate_minimal_resolving_sets(g, d)) {
      std::vector<int> hits(part.class_count(), 0);
      for (int v : w) ++hits[part.class_of[v]];
      for (int id = 0; id < part.class_count(); ++id)
        CHECK(hits[id] >= static_cast<int>(part.classes[id].size()) - 1);
    }
  }
}

TEST_CASE("oracle equals minimum over enumeration") {
  for (const auto& [name, group] : gen::small_group_roster()) {
    const SimpleGraph g = power_graph(group);
    if (g.vertex_count() > 12 || g.vertex_count() < 2) continue;
    CAPTURE(name);
    const DistanceMatrix d = all_pairs_distances(g);
    const auto sets = enumerate_minimal_resolving_sets(g, d);
    REQUIRE_FALSE(sets.empty());
    CHECK(metric_dimension_oracle(g, d).beta ==
          static_cast<int>(sets.front().size()));
  }
}

TEST_CASE("no singleton twin forces uniform minimal sets and exchange") {
  for (const auto& [name, g] : gen::no_singleton_roster()) {
    if (g.vertex_count() > 14) continue;
    CAPTURE(name);
    const DistanceMatrix d = all_pairs_distances(g);
    const int beta = metric_dimension_oracle(g, d).beta;
    for (const auto& s : enumerate_minimal_resolving_sets(g, d))
      CHECK(static_cast<int>(s.size()) == beta);
    CHECK(exchange_property(g, d).holds);
  }
}

TEST_CASE("resolving test agrees with the pair-distinguisher form") {
  std::mt19937 rng(99);
  for (const auto& [name, group] : gen::small_group_roster()) {
    const SimpleGraph g = power_graph(group);
    const int n = g.vertex_count();
    if (n < 2) continue;
    CAPTURE(name);
    const DistanceMatrix d = all_pairs_distances(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> w;
      for (int v = 0; v < n; ++v)
        if (rng() % 2) w.push_back(v);
      if (w.empty()) continue;
      // W resolves iff it hits every pair's distinguisher set
      bool hits_all = true;
      for (int u = 0; u < n && hits_all; ++u)
        for (int v = u + 1; v < n && hits_all; ++v) {
          bool hit = false;
          for (int z : w)
            if (d.at(u, z) != d.at(v, z)) {
              hit = true;
              break;
            }
          hits_all = hit;
        }
      CHECK(is_resolving(d, w) == hits_all);
    }
  }
}

TEST_CASE("engine matches the naive sweep on small power graphs") {
  for (const auto& [name, group] : gen::small_group_roster()) {
    const SimpleGraph g = power_graph(group);
    if (g.vertex_count() > 10) continue;
    CAPTURE(name);
    const DistanceMatrix d = all_pairs_distances(g);
    const MdReport fast = metric_dimension_oracle(g, d);
    const naive::MdResult slow = naive::metric_dimension(g);
    CHECK(fast.beta == slow.beta);
    CHECK(fast.witness_basis == slow.basis);
    CHECK(enumerate_minimal_resolving_sets(g, d) ==
          naive::minimal_resolving_sets(g));
  }
}

TEST_CASE("worker count does not change oracle output") {
  const SimpleGraph g = power_graph(make_cyclic(12));
  const DistanceMatrix d = all_pairs_distances(g);
  ResolveOptions one;
  one.threads = 1;
  ResolveOptions many;
  many.threads = 4;
  const MdReport a = metric_dimension_oracle(g, d, one);
  const MdReport b = metric_dimension_oracle(g, d, many);
  CHECK(a.beta == b.beta);
  CHECK(a.witness_basis == b.witness_basis);
}
