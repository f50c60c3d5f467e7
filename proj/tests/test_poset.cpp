#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "iolab/constructions.hpp"
#include "iolab/oracle.hpp"
#include "iolab/poset.hpp"

using namespace iolab;
using namespace iolab::testing;

TEST_CASE("from_pairs builds the closure and rejects cycles") {
  Poset c = Poset::from_pairs(2, {{0, 1}});
  CHECK(c.less(0, 1));
  CHECK_FALSE(c.less(1, 0));

  Poset t = two_plus_two();
  int comps = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) comps += t.less(i, j);
  CHECK(comps == 2);
  CHECK(t.less(0, 1));
  CHECK(t.less(2, 3));

  CHECK_THROWS_AS(Poset::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  try {
    Poset::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  } catch (const CycleError& e) {
    CHECK(e.cycle.size() >= 2);
  }
  CHECK_THROWS_AS(Poset::from_pairs(2, {{0, 5}}), IndexError);
}

TEST_CASE("constructor output satisfies the order axioms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Poset p = random_poset(rng, 8);
    for (int i = 0; i < 8; ++i) {
      CHECK_FALSE(p.less(i, i));
      for (int j = 0; j < 8; ++j) {
        CHECK_FALSE((p.less(i, j) && p.less(j, i)));
        for (int k = 0; k < 8; ++k)
          if (p.less(i, j) && p.less(j, k)) CHECK(p.less(i, k));
      }
    }
  }
}

TEST_CASE("down-, up- and incomparable sets") {
  CHECK(down_set(chain(3), 2) == std::vector<int>{0, 1});
  CHECK(incomparables(two_plus_two(), 0) == std::vector<int>{2, 3});
  CHECK(up_set(semiorder(6), 1) == std::vector<int>{3, 4, 5});

  std::mt19937 rng(11);
  Poset p = random_poset(rng, 9);
  for (int x = 0; x < p.size(); ++x) {
    std::set<int> all;
    for (int v : down_set(p, x)) all.insert(v);
    for (int v : up_set(p, x)) all.insert(v);
    for (int v : incomparables(p, x)) all.insert(v);
    all.insert(x);
    CHECK(static_cast<int>(all.size()) == p.size());
  }
  CHECK_THROWS_AS(down_set(p, 99), IndexError);
}

TEST_CASE("minimal and maximal elements") {
  CHECK(min_elements(antichain(3)) == std::vector<int>{0, 1, 2});
  CHECK(max_elements(antichain(3)) == std::vector<int>{0, 1, 2});
  CHECK(min_elements(chain(3)) == std::vector<int>{0});
  CHECK(max_elements(chain(3)) == std::vector<int>{2});
  CHECK(min_elements(semiorder(5)) == std::vector<int>{0, 1});
}

TEST_CASE("level decomposition") {
  LevelDecomposition c = levels(chain(4));
  CHECK(c.height() == 4);
  for (int i = 0; i < 4; ++i) CHECK(c.levels[i] == std::vector<int>{i});

  CHECK(levels(two_plus_two()).levels ==
        std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(levels(semiorder(7)).levels ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6}});

  std::mt19937 rng(13);
  Poset p = random_poset(rng, 10);
  LevelDecomposition d = levels(p);
  for (size_t l = 0; l < d.levels.size(); ++l) {
    for (int a : d.levels[l])
      for (int b : d.levels[l]) CHECK_FALSE(p.less(a, b));
    if (l == 0) continue;
    for (int a : d.levels[l]) {
      bool pred = false;
      for (size_t m = 0; m < l && !pred; ++m)
        for (int b : d.levels[m])
          if (p.less(b, a)) {
            pred = true;
            break;
          }
      CHECK(pred);
    }
  }
}

TEST_CASE("width") {
  CHECK(width(chain(6)) == 1);
  CHECK(width(two_plus_two()) == 2);
  for (int n = 2; n <= 10; ++n) CHECK(width(semiorder(n)) == 2);

  // Exact agreement with exhaustive antichain enumeration.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Poset p = random_poset(rng, 9);
    size_t best = 0;
    for (const auto& a : oracle::all_maximal_antichains(p)) best = std::max(best, a.size());
    CHECK(width(p) == static_cast<int>(best));
  }
}

TEST_CASE("comparability and incomparability graphs") {
  SimpleGraph comp = comparability_graph(chain(3));
  CHECK(comp.edges().size() == 3);
  CHECK(incomparability_graph(chain(3)).edges().size() == 0);
  CHECK(comparability_graph(antichain(3)).edges().size() == 0);
  CHECK(incomparability_graph(antichain(3)).edges().size() == 3);

  for (int n = 2; n <= 9; ++n) {
    SimpleGraph inc = incomparability_graph(semiorder(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(inc.adjacent(i, j) == (j - i == 1));
  }

  std::mt19937 rng(19);
  Poset p = random_poset(rng, 8);
  SimpleGraph c = comparability_graph(p), i = incomparability_graph(p);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      if (a == b) continue;
      CHECK(c.adjacent(a, b) != i.adjacent(a, b));
    }
}

TEST_CASE("dual") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = random_poset(rng, 7);
    CHECK(dual(dual(p)).same_relation(p));
  }
  Poset d = dual(chain(3));
  CHECK(d.less(2, 1));
  CHECK(d.less(1, 0));
  for (int n = 2; n <= 8; ++n) CHECK(are_isomorphic(dual(semiorder(n)), semiorder(n)));
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(chain(3), chain(3)));
  CHECK_FALSE(are_isomorphic(chain(3), antichain(3)));
  auto wit = find_isomorphism(semiorder(5), dual(semiorder(5)));
  REQUIRE(wit.has_value());
  const Poset &p = semiorder(5), d = dual(semiorder(5));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(p.less(a, b) == d.less((*wit)[a], (*wit)[b]));
  CHECK_THROWS_AS(are_isomorphic(antichain(13), antichain(13)), SizeGuardError);
}

TEST_CASE("graph basics") {
  SimpleGraph g = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.components() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  SimpleGraph co = g.complement();
  CHECK(co.adjacent(0, 2));
  CHECK_FALSE(co.adjacent(0, 1));
  CHECK(g.induced({0, 1}).edges().size() == 1);
}
