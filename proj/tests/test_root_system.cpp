#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "weyld/root_system.hpp"

using namespace weyld;

TEST_CASE("positive root counts and ordering") {
  CHECK(positive_roots(5).size() == 20);
  CHECK(positive_roots(7).size() == 42);
  const auto r2 = positive_roots(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == minus_root(1, 2));
  CHECK(r2[1] == plus_root(1, 2));

  CHECK_THROWS_AS(positive_roots(1), std::invalid_argument);

  // Canonical index round-trips and matches the enumeration order.
  for (const int rank : {2, 5, 7, 9}) {
    const auto all = positive_roots(rank);
    for (int idx = 0; idx < static_cast<int>(all.size()); ++idx) {
      CHECK(root_index(all[idx], rank) == idx);
      CHECK(root_from_index(idx, rank) == all[idx]);
    }
  }
}

TEST_CASE("coefficient vectors") {
  // e1 - e2 = alpha_1
  CHECK(coefficient_vector({1, -1, 0, 0, 0}, 5) ==
        std::vector<long long>{1, 0, 0, 0, 0});
  // e4 + e5 = alpha_5
  CHECK(coefficient_vector({0, 0, 0, 1, 1}, 5) ==
        std::vector<long long>{0, 0, 0, 0, 1});
  // e1 + e2 = alpha_1 + 2 alpha_2 + 2 alpha_3 + alpha_4 + alpha_5
  const std::vector<long long> m = coefficient_vector({1, 1, 0, 0, 0}, 5);
  CHECK(m == std::vector<long long>{1, 2, 2, 1, 1});

  // Reconstruction: sum m_a alpha_a recovers the coordinates.
  auto reconstruct = [](const std::vector<long long>& coeff, int rank) {
    std::vector<long long> x(rank, 0);
    for (int a = 1; a <= rank - 1; ++a) {
      x[a - 1] += coeff[a - 1];
      x[a] -= coeff[a - 1];
    }
    x[rank - 2] += coeff[rank - 1];
    x[rank - 1] += coeff[rank - 1];
    return x;
  };
  CHECK(reconstruct(m, 5) == std::vector<long long>{1, 1, 0, 0, 0});

  // Parity violation: e1 alone is not in the root lattice.
  CHECK_THROWS_AS(coefficient_vector({1, 0, 0, 0, 0}, 5), std::invalid_argument);

  // Every positive root has non-negative coefficients.
  for (const int rank : {2, 5, 7, 9})
    for (const Root& root : positive_roots(rank)) {
      std::vector<long long> x(rank, 0);
      x[root.i - 1] += 1;
      x[root.j - 1] += root.kind == RootKind::Plus ? 1 : -1;
      for (const long long c : coefficient_vector(x, rank)) CHECK(c >= 0);
    }
}

TEST_CASE("root order examples") {
  CHECK(root_leq(minus_root(2, 5), minus_root(1, 5), 5));
  CHECK(root_leq(plus_root(3, 5), plus_root(2, 5), 5));
  CHECK_FALSE(root_leq(plus_root(2, 5), plus_root(3, 5), 5));
  CHECK_FALSE(root_leq(plus_root(1, 5), minus_root(1, 2), 5));
  for (const Root& root : positive_roots(5)) CHECK(root_leq(root, root, 5));
}

TEST_CASE("root order is a partial order (exhaustive at rank 5)") {
  const auto all = positive_roots(5);
  for (const Root& a : all)
    for (const Root& b : all) {
      if (root_leq(a, b, 5) && root_leq(b, a, 5)) CHECK(a == b);
      for (const Root& c : all)
        if (root_leq(a, b, 5) && root_leq(b, c, 5)) CHECK(root_leq(a, c, 5));
    }
}

TEST_CASE("coefficient test agrees with the case-split closed forms") {
  for (const int rank : {5, 7}) {
    const auto all = positive_roots(rank);
    int covered = 0;
    for (const Root& rho : all)
      for (const Root& eta : all)
        if (const auto closed = root_leq_closed_form(rho, eta, rank)) {
          ++covered;
          CHECK(*closed == root_leq(rho, eta, rank));
        }
    CHECK(covered > 0);
  }
}

TEST_CASE("downward closures") {
  CHECK(adj({}, 5).empty());
  CHECK(adj({simple_root(1, 5)}, 5) == std::vector<Root>{simple_root(1, 5)});
  CHECK(adj({minus_root(1, 3)}, 5) ==
        std::vector<Root>{minus_root(1, 2), minus_root(1, 3), minus_root(2, 3)});
}

TEST_CASE("adj is idempotent and monotone") {
  std::mt19937 rng(20240811);
  for (const int rank : {5, 7}) {
    const auto all = positive_roots(rank);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Root> small, large;
      for (const Root& root : all) {
        const int draw = coin(rng);
        if (draw == 0) small.push_back(root);
        if (draw <= 1) large.push_back(root);  // small is not always a subset
      }
      const auto closure = adj(small, rank);
      CHECK(adj(closure, rank) == closure);
      // Monotonicity on an actual subset pair.
      std::vector<Root> superset = small;
      for (const Root& root : large)
        if (!contains_root(superset, root, rank)) superset.push_back(root);
      sort_roots(superset, rank);
      const auto super_closure = adj(superset, rank);
      for (const Root& root : closure)
        CHECK(contains_root(super_closure, root, rank));
    }
  }
}

TEST_CASE("root text form") {
  CHECK(root_to_string(minus_root(1, 3)) == "e1-e3");
  CHECK(root_to_string(plus_root(2, 5)) == "e2+e5");
  CHECK(parse_root("e1-e3", 5) == minus_root(1, 3));
  CHECK(parse_root("e2+e5", 5) == plus_root(2, 5));
  CHECK_THROWS_AS(parse_root("e5-e1", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("e1*e3", 5), std::invalid_argument);
  for (const Root& root : positive_roots(7))
    CHECK(parse_root(root_to_string(root), 7) == root);
}
