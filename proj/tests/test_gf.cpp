#include "doctest.h"
#include "qclab/gf.hpp"

using namespace qclab;

TEST_CASE("GF(4) built from the least irreducible") {
  auto t = FieldTower::build(2, {1, 2});
  // x^2 + x + 1 is the defining polynomial.
  CHECK(t->defining_poly(2) == std::vector<int>({1, 1, 1}));
  CHECK(t->size(2) == 4);
  // w = code 2; w * (w+1) = 1, so inv(w) = w + 1.
  CHECK(t->mul(2, 2, 3) == 1);
  CHECK(t->inv(2, 2) == 3);
  CHECK(t->embed(1, 2, 1) == 1);
  CHECK_THROWS_AS(t->inv(2, 0), Error);
}

TEST_CASE("prime field arithmetic") {
  auto t = FieldTower::build(3, {1});
  CHECK(t->mul(1, 2, 2) == 1);
  CHECK(t->add(1, 2, 2) == 1);
  CHECK_THROWS_AS(FieldTower::build(4, {1}), Error);
  CHECK_THROWS_AS(FieldTower::build(2, {9}), Error);
}

TEST_CASE("field axioms exhaustively for all built fields up to 256") {
  for (i64 p : {2, 3, 5}) {
    std::vector<int> degrees = p == 2 ? std::vector<int>{1, 2, 3, 4, 6}
                                      : (p == 3 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2});
    auto t = FieldTower::build(p, degrees);
    for (int k : t->degrees()) {
      i64 q = t->size(k);
      if (q > 256) continue;
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
          CHECK(t->add(k, a, b) == t->add(k, b, a));
          CHECK(t->mul(k, a, b) == t->mul(k, b, a));
          for (int c = 0; c < q; ++c) {
            CHECK(t->mul(k, a, t->mul(k, b, c)) == t->mul(k, t->mul(k, a, b), c));
            CHECK(t->mul(k, a, t->add(k, b, c)) == t->add(k, t->mul(k, a, b), t->mul(k, a, c)));
          }
        }
        if (a) CHECK(t->mul(k, a, t->inv(k, a)) == 1);
      }
      // |GF(q)^x| = q - 1: every nonzero element invertible checked above.
    }
  }
}

TEST_CASE("embeddings are ring maps and compose along the divisor lattice") {
  auto t = FieldTower::build(2, {1, 2, 3, 6});
  for (int from : t->degrees())
    for (int to : t->degrees()) {
      if (to % from) continue;
      i64 qf = t->size(from);
      // Injective ring homomorphism.
      std::vector<bool> seen(size_t(t->size(to)), false);
      for (int a = 0; a < qf; ++a) {
        int ea = t->embed(from, to, a);
        CHECK(!seen[ea]);
        seen[ea] = true;
        for (int b = 0; b < qf; ++b) {
          CHECK(t->embed(from, to, t->add(from, a, b)) == t->add(to, ea, t->embed(from, to, b)));
          CHECK(t->embed(from, to, t->mul(from, a, b)) == t->mul(to, ea, t->embed(from, to, b)));
        }
      }
    }
  // Composition across every built triple.
  for (int k : t->degrees())
    for (int l : t->degrees())
      for (int r : t->degrees()) {
        if (l % k || r % l || k == l || l == r) continue;
        for (int a = 0; a < t->size(k); ++a)
          CHECK(t->embed(l, r, t->embed(k, l, a)) == t->embed(k, r, a));
      }
}

TEST_CASE("gcd closure makes awkward degree sets consistent") {
  auto t = FieldTower::build(2, {4, 6});
  CHECK(t->has(2));  // gcd(4, 6)
  CHECK(t->has(1));
}

TEST_CASE("subfield bases start at 1 and coordinates invert") {
  auto t = FieldTower::build(2, {2, 6});
  const auto& basis = t->basis_over(6, 2);
  CHECK(basis.size() == 3);
  CHECK(basis[0] == 1);
  for (int a = 0; a < t->size(6); ++a) {
    const auto& co = t->coords(6, 2, a);
    int acc = 0;
    for (size_t u = 0; u < basis.size(); ++u)
      acc = t->add(6, acc, t->mul(6, t->embed(2, 6, co[u]), basis[u]));
    CHECK(acc == a);
  }
}

TEST_CASE("GF matrices: rref, nullspace, inverse over GF(4)") {
  auto t = FieldTower::build(2, {1, 2});
  GFMat m(t, 2, 2, 3);
  // [1 w w+1; w w^2=w+1 ...] pick: rows dependent over GF(4)
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = t->mul(2, 2, 2); m(1, 2) = t->mul(2, 2, 3);
  CHECK(m.rank() == 1);  // second row = w * first row
  GFMat ns = m.null_space();
  CHECK(ns.rows() == 2);
  for (int r = 0; r < ns.rows(); ++r) {
    int acc0 = 0;
    for (int c = 0; c < 3; ++c) acc0 = t->add(2, acc0, t->mul(2, m(0, c), ns(r, c)));
    CHECK(acc0 == 0);
  }
  GFMat id = GFMat::identity(t, 2, 3);
  CHECK(id.inverse() == id);
}
