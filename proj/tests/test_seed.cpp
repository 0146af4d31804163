#include <set>

#include "doctest.h"
#include "qclab/bijection.hpp"
#include "qclab/seed.hpp"

using namespace qclab;

namespace {
PrincipalPair pp_a2() { return principal_pair(build_valued_quiver(2, {1, 1}, {{{0, 1, 1}}})); }
PrincipalPair pp_b2() { return principal_pair(build_valued_quiver(2, {2, 1}, {{{0, 1, 1}}})); }
PrincipalPair pp_g2() { return principal_pair(build_valued_quiver(2, {3, 1}, {{{0, 1, 1}}})); }
PrincipalPair pp_kron() { return principal_pair(build_valued_quiver(2, {1, 1}, {{{0, 1, 2}}})); }
}  // namespace

TEST_CASE("initial seed") {
  auto pair = pp_a2();
  QuantumSeed s = initial_seed(pair);
  for (int i = 0; i < 4; ++i) {
    Vec e(4, 0);
    e[i] = 1;
    CHECK(s.cluster[i] == TorusElement::monomial(s.lambda0, e));
    CHECK(bar_involution(s.cluster[i]) == s.cluster[i]);
  }
  CHECK(seed_quasi_commutes(s));
}

TEST_CASE("first mutation on the equal-valued pair") {
  auto pair = pp_a2();
  QuantumSeed s = mutate_seed(initial_seed(pair), 0);
  TorusElement want = TorusElement::monomial(s.lambda0, {-1, 0, 1, 0}) +
                      TorusElement::monomial(s.lambda0, {-1, 1, 0, 0});
  CHECK(s.cluster[0] == want);
  CHECK(denominator_vector(s.cluster[0], 2) == Vec({1, 0}));
  QuantumSeed back = mutate_seed(s, 0);
  CHECK(back.cluster[0] == initial_seed(pair).cluster[0]);
}

TEST_CASE("first mutation on the double-arrow pair") {
  auto pair = pp_kron();
  QuantumSeed s = mutate_seed(initial_seed(pair), 0);
  TorusElement want = TorusElement::monomial(s.lambda0, {-1, 0, 1, 0}) +
                      TorusElement::monomial(s.lambda0, {-1, 2, 0, 0});
  CHECK(s.cluster[0] == want);
  // Paths apply left to right: [1,2] reaches the (2,1) preinjective slot,
  // the mirrored path [2,1] the (1,2) preprojective one.
  QuantumSeed s2 = mutate_seed(s, 1);
  CHECK(denominator_vector(s2.cluster[1], 2) == Vec({2, 1}));
  QuantumSeed t = mutate_seed(mutate_seed(initial_seed(pair), 1), 0);
  CHECK(denominator_vector(t.cluster[0], 2) == Vec({1, 2}));
  CHECK(denominator_vector(TorusElement::monomial(s.lambda0, {1, 0, 0, 0}), 2) == Vec({0, 0}));
}

TEST_CASE("pentagon periodicity for the equal-valued pair") {
  auto pair = pp_a2();
  QuantumSeed s = initial_seed(pair);
  std::vector<int> path = {0, 1, 0, 1, 0};
  for (int k : path) s = mutate_seed(s, k);
  // The mutable variables return to the initial ones, swapped.
  QuantumSeed init = initial_seed(pair);
  std::set<std::string> got = {s.cluster[0].render(), s.cluster[1].render()};
  std::set<std::string> want = {init.cluster[0].render(), init.cluster[1].render()};
  CHECK(got == want);
}

TEST_CASE("variable_by_path and empty-path handling") {
  auto pair = pp_a2();
  CHECK(variable_by_path(pair, {}, 2) ==
        TorusElement::monomial(initial_seed(pair).lambda0, {0, 0, 1, 0}));
  CHECK_THROWS_AS(variable_by_path(pair, {}), Error);
  CHECK(variable_by_path(pair, {0}) == mutate_seed(initial_seed(pair), 0).cluster[0]);
}

TEST_CASE("finite type closures") {
  // Distinct mutable-slot variables across the exchange graph: 5 / 6 / 8.
  auto count_all = [&](const PrincipalPair& pair) {
    bool saturated = false;
    auto vars = explore_variables(pair, 12, &saturated);
    CHECK(saturated);
    return int(vars.size()) + pair.n;
  };
  CHECK(count_all(pp_a2()) == 5);
  CHECK(count_all(pp_b2()) == 6);
  CHECK(count_all(pp_g2()) == 8);
}

TEST_CASE("frozen directions are rejected") {
  auto pair = pp_a2();
  CHECK_THROWS_WITH_AS(mutate_seed(initial_seed(pair), 2), doctest::Contains("FrozenDirection"),
                       Error);
}
