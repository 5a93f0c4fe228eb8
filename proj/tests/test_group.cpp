#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "graph_gen.hpp"
#include "pgmd/errors.hpp"
#include "pgmd/group.hpp"
#include "pgmd/group_spec.hpp"

using namespace pgmd;

TEST_CASE("cyclic groups") {
  const FiniteGroup z1 = make_cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.identity() == 0);

  const FiniteGroup z6 = make_cyclic(6);
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 3) == 2);
  CHECK(element_order(z6, 0) == 1);

  const FiniteGroup z5 = make_cyclic(5);
  for (int x = 1; x < 5; ++x) CHECK(element_order(z5, x) == 5);

  CHECK_THROWS_AS(make_cyclic(0), Error);
}

TEST_CASE("dihedral groups") {
  const FiniteGroup d6 = make_dihedral(3);
  CHECK(d6.order() == 6);
  CHECK_FALSE(is_abelian(d6));
  // the three reflections are the only involutions
  CHECK(involutions(d6) == std::vector<int>{3, 4, 5});

  const FiniteGroup d4 = make_dihedral(2);  // Klein four-group
  for (int x = 1; x < 4; ++x) CHECK(element_order(d4, x) == 2);
  CHECK(is_abelian(d4));
  CHECK(d4.label() == "D4 (degenerate)");

  const FiniteGroup d10 = make_dihedral(5);
  for (int x = 5; x < 10; ++x) CHECK(d10.mul(x, x) == d10.identity());
  CHECK(element_order(d10, 1) == 5);

  CHECK_THROWS_AS(make_dihedral(0), Error);
}

TEST_CASE("direct products") {
  const FiniteGroup klein = gen::product_of_cyclics({2, 2});
  CHECK(klein.order() == 4);
  CHECK(is_abelian(klein));
  for (int x = 0; x < 4; ++x) CHECK(klein.mul(x, x) == klein.identity());

  const FiniteGroup g12 = gen::product_of_cyclics({2, 2, 3});
  CHECK(g12.order() == 12);
  CHECK(is_abelian(g12));
  CHECK_FALSE(is_cyclic(g12));  // no element of order 12

  const FiniteGroup z3 = gen::product_of_cyclics({3});
  CHECK(z3.order() == 3);
  CHECK(is_cyclic(z3));

  CHECK_THROWS_AS(make_direct_product({}), Error);
}

TEST_CASE("cayley table validation") {
  CHECK(make_from_cayley({{0}}).order() == 1);

  // Z3's table with two entries of row 1 swapped: still has identity 0 but
  // loses associativity.
  std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
  CHECK_THROWS_AS(make_from_cayley(bad), NotAssociativeError);

  // Latin square with no two-sided identity.
  std::vector<std::vector<int>> no_e{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  CHECK_THROWS_AS(make_from_cayley(no_e), NoIdentityError);

  std::vector<std::vector<int>> ragged{{0, 1}, {1}};
  CHECK_THROWS_AS(make_from_cayley(ragged), ParseError);

  std::vector<std::vector<int>> out_of_range{{0, 1}, {1, 7}};
  CHECK_THROWS_AS(make_from_cayley(out_of_range), ParseError);
}

TEST_CASE("cayley csv round-trip") {
  const FiniteGroup d6 = make_dihedral(3);
  const std::string path = "pgmd_test_d6.csv";
  {
    std::ofstream out(path);
    out << cayley_csv(d6);
  }
  const FiniteGroup back = make_from_cayley(read_cayley_csv(path));
  REQUIRE(back.order() == d6.order());
  for (int i = 0; i < d6.order(); ++i)
    for (int j = 0; j < d6.order(); ++j) CHECK(back.mul(i, j) == d6.mul(i, j));
  std::remove(path.c_str());
}

TEST_CASE("cyclic subgroups and involutions") {
  const FiniteGroup z6 = make_cyclic(6);
  CHECK(cyclic_subgroup(z6, 2) == std::vector<int>{0, 2, 4});
  CHECK(cyclic_subgroup(z6, 0) == std::vector<int>{0});
  CHECK(involutions(z6) == std::vector<int>{3});

  const FiniteGroup z5 = make_cyclic(5);
  CHECK(cyclic_subgroup(z5, 3).size() == 5);

  CHECK(involutions(make_cyclic(7)).empty());
  CHECK(involutions(make_dihedral(4)).size() == 5);  // a^2 plus four reflections
}

TEST_CASE("classification helpers") {
  CHECK(prime_factorization(12) ==
        std::vector<std::pair<long long, int>>{{2, 2}, {3, 1}});
  CHECK(prime_factorization(1).empty());
  CHECK_FALSE(is_cyclic(gen::product_of_cyclics({2, 2})));
  CHECK(is_cyclic(make_cyclic(8)));
  CHECK_FALSE(is_abelian(make_dihedral(3)));
  CHECK(is_abelian(make_cyclic(9)));
}

TEST_CASE("group axioms across the roster") {
  for (const auto& [name, g] : gen::small_group_roster()) {
    CAPTURE(name);
    int identity_like = 0;
    for (int x = 0; x < g.order(); ++x) {
      // Lagrange: element orders divide the group order.
      CHECK(g.order() % element_order(g, x) == 0);
      const auto sub = cyclic_subgroup(g, x);
      CHECK(static_cast<int>(sub.size()) == element_order(g, x));
      // closure of <x> under multiplication, and e belongs
      std::set<int> s(sub.begin(), sub.end());
      CHECK(s.count(g.identity()) == 1);
      for (int a : sub)
        for (int b : sub) CHECK(s.count(g.mul(a, b)) == 1);
      if (g.mul(x, x) == x) ++identity_like;
    }
    CHECK(identity_like == 1);  // only the identity is idempotent
  }
}

TEST_CASE("dihedral index conventions") {
  for (int n : {3, 4, 5, 6, 7}) {
    const FiniteGroup d = make_dihedral(n);
    CHECK(element_order(d, 1) == n);
    for (int i = n; i < 2 * n; ++i) CHECK(element_order(d, i) == 2);
  }
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("Z:6").kind == GroupKind::cyclic);
  CHECK(parse_group_spec("D:5").parameters == std::vector<int>{5});
  const GroupSpec p = parse_group_spec("P:Z:2xZ:2xZ:3");
  CHECK(p.kind == GroupKind::direct_product);
  CHECK(p.parameters == std::vector<int>{2, 2, 3});
  CHECK(parse_group_spec("C:/tmp/t.csv").path == "/tmp/t.csv");

  CHECK(build_group(parse_group_spec("Z:6")).order() == 6);
  CHECK(build_group(parse_group_spec("D:5")).order() == 10);
  CHECK(build_group(parse_group_spec("P:Z:2xZ:3")).order() == 6);

  for (const char* bad : {"Q:3", "Z:", "Z:-2", "Z:abc", "P:", "P:D:3", "", "Z6"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), ParseError);
  }
  // parse errors name the offending token
  try {
    parse_group_spec("Z:nope");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("Z:nope") != std::string::npos);
  }
}
