#include "doctest.h"
#include "qclab/tilting.hpp"

using namespace qclab;

namespace {
QuiverPtr q_a2() { return build_valued_quiver(2, {1, 1}, {{{0, 1, 1}}}); }
QuiverPtr q_b2() { return build_valued_quiver(2, {2, 1}, {{{0, 1, 1}}}); }
QuiverPtr q_g2() { return build_valued_quiver(2, {3, 1}, {{{0, 1, 1}}}); }
QuiverPtr q_kron() { return build_valued_quiver(2, {1, 1}, {{{0, 1, 2}}}); }
}  // namespace

TEST_CASE("empty tilting reproduces the initial matrices") {
  for (auto qv : {q_a2(), q_b2(), q_g2(), q_kron()}) {
    auto pair = principal_pair(qv);
    auto ctx = make_context(qv, 2, 1);
    TiltingRep t0 = empty_tilting(ctx);
    CHECK(is_local_tilting(t0));
    TiltingMatrices tm = tilting_matrices(t0, pair);
    CHECK(tm.B == pair.Btilde);
    CHECK(tm.Lambda == pair.Lambda);
  }
}

TEST_CASE("empty tilting right duals are the simple classes") {
  auto qv = q_b2();
  auto pair = principal_pair(qv);
  auto ctx = make_context(qv, 2, 1);
  TiltingRep t0 = empty_tilting(ctx);
  for (int k = 0; k < pair.m; ++k) {
    DualVectors dv = dual_vectors(t0, pair, k);
    Vec cls(size_t(pair.m), 0);
    for (int j = 0; j < pair.m; ++j) {
      Vec pj = proj_dims_tilde(pair, j);
      for (int t = 0; t < pair.m; ++t) cls[t] += dv.rho_k[j] * pj[t];
    }
    Vec want(size_t(pair.m), 0);
    want[k] = 1;
    CHECK(cls == want);
  }
}

TEST_CASE("local tilting recognition") {
  auto qv = q_a2();
  auto ctx = make_context(qv, 2, 1);
  Rep s1 = simple_rep(ctx, 0);
  Rep p1 = projective_rep(ctx, 0);
  TiltingRep good{ctx, {{0, s1}, {1, p1}}};
  std::string diag;
  CHECK(is_local_tilting(good, Budgets{}, &diag));
  // Two copies of the same simple cannot carry distinct labels.
  TiltingRep bad{ctx, {{0, s1}, {1, s1}}};
  CHECK(!is_local_tilting(bad, Budgets{}, &diag));
  // A summand whose support misses its label.
  TiltingRep bad2{ctx, {{1, s1}}};
  CHECK(!is_local_tilting(bad2, Budgets{}, &diag));
  TiltingRep single{ctx, {{0, s1}}};
  CHECK(is_local_tilting(single));
}

TEST_CASE("mutation from the empty tilting and involutivity") {
  auto qv = q_a2();
  auto pair = principal_pair(qv);
  auto ctx = make_context(qv, 2, 1);
  TiltingRep t0 = empty_tilting(ctx);
  TiltingRep t1 = mutate_tilting(t0, pair, 0, {1, 0});
  REQUIRE(t1.summands.size() == 1);
  CHECK(are_isomorphic(t1.summands[0].second, simple_rep(ctx, 0)));
  TiltingRep back = mutate_tilting(t1, pair, 0, {0, 0});
  CHECK(back.summands.empty());
}

TEST_CASE("mutated exchange matrix equals the matrix mutation") {
  auto qv = q_b2();
  auto pair = principal_pair(qv);
  auto ctx = make_context(qv, 2, 1);
  TiltingRep t0 = empty_tilting(ctx);
  TiltingRep t1 = mutate_tilting(t0, pair, 0, {1, 0});
  TiltingMatrices tm = tilting_matrices(t1, pair);
  auto mut = fz_mutate(pair.Btilde, pair.Lambda, 0);
  CHECK(tm.B == mut.Btilde);
  CHECK(tm.Lambda == mut.Lambda);
}

TEST_CASE("tilting seed of the empty tilting is the initial seed") {
  auto qv = q_a2();
  auto pair = principal_pair(qv);
  auto ctx = make_context(qv, 2, 1);
  TiltingSeed ts = seed_of_tilting(empty_tilting(ctx), pair);
  QuantumSeed s = initial_seed(pair);
  for (int i = 0; i < pair.m; ++i) CHECK(ts.cluster[i].render() == s.cluster[i].render());
  CHECK(ts.B == pair.Btilde);
  CHECK(ts.Lambda == pair.Lambda);
}

TEST_CASE("lockstep sweeps on the triple-valued and double-arrow quivers") {
  // The triple valuation makes the extended-quiver endomorphism scans larger;
  // raise the enumeration budgets accordingly.
  Budgets big;
  big.end_enum = i64(1) << 22;
  big.hom_scan = i64(1) << 24;
  TiltingSweepReport g = verify_tilting_sweep(q_g2(), 2, 1, 3, 5, true, big);
  CHECK(g.pass());
  CHECK(g.edges.size() == 6);
  for (const auto& e : g.edges) {
    INFO("path ", e.path, " ", e.mult_kind);
    CHECK(e.pass());
  }
  TiltingSweepReport kr = verify_tilting_sweep(q_kron(), 2, 1, 3, 5, true, big);
  CHECK(kr.pass());
  CHECK(kr.edges.size() == 6);
}

TEST_CASE("lockstep sweeps with the multiplication theorems") {
  for (auto qv : {q_a2(), q_b2()}) {
    TiltingSweepReport r = verify_tilting_sweep(qv, 2, 1, 3, 5, true);
    CHECK(!r.edges.empty());
    for (const auto& e : r.edges) {
      INFO("path ", e.path, " mult ", e.mult_kind);
      CHECK(e.b_match);
      CHECK(e.lambda_match);
      CHECK(e.vars_match);
      CHECK(e.involutive);
      CHECK(e.class_identity);
      if (e.mult_checked) CHECK(e.mult_pass);
    }
    CHECK(r.pass());
  }
}
