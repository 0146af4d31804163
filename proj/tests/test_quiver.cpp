#include "doctest.h"
#include "qclab/quiver.hpp"

using namespace qclab;

namespace {
QuiverPtr b2() { return build_valued_quiver(2, {2, 1}, {{{0, 1, 1}}}); }
QuiverPtr a2() { return build_valued_quiver(2, {1, 1}, {{{0, 1, 1}}}); }
QuiverPtr kronecker() { return build_valued_quiver(2, {1, 1}, {{{0, 1, 2}}}); }
}  // namespace

TEST_CASE("build validation") {
  CHECK_NOTHROW(b2());
  CHECK_NOTHROW(kronecker());
  CHECK_THROWS_WITH_AS(build_valued_quiver(2, {1, 1}, {{{0, 1, 1}}, {{1, 0, 1}}}),
                       doctest::Contains("MixedArrowDirection"), Error);
  CHECK_THROWS_AS(build_valued_quiver(2, {1, 0}, {}), Error);
  CHECK_THROWS_AS(build_valued_quiver(3, {1, 1, 1}, {{{0, 1, 1}}, {{1, 2, 1}}, {{2, 0, 1}}}),
                  Error);
}

TEST_CASE("derived matrices of the (2,1) two-vertex quiver") {
  auto mb = derived_matrices(*b2());
  CHECK(mb.B == IntMat({{0, 1}, {-2, 0}}));
  CHECK(mb.E_euler == IntMat({{2, -2}, {0, 1}}));
  CHECK(mb.Bminus == IntMat({{1, -1}, {0, 1}}));
  CHECK(mb.Bplus == IntMat({{1, 0}, {-2, 1}}));
  CHECK(star_left(mb, {0, 1}) == Vec({-1, 1}));
  CHECK((mb.D * mb.B).is_skew_symmetric());
  CHECK(mb.Bplus - mb.Bminus == mb.B);
  // With unequal valuations the transpose identity carries D on the other
  // side: D B+ = (B-)^T D.
  CHECK(mb.D * mb.Bplus == mb.Bminus.transpose() * mb.D);
}

TEST_CASE("no-arrow quiver gives identity duals") {
  auto q = build_valued_quiver(2, {3, 2}, {});
  auto mb = derived_matrices(*q);
  CHECK(mb.Bminus == IntMat::identity(2));
  CHECK(mb.Bplus == IntMat::identity(2));
  CHECK(star_left(mb, {5, -7}) == Vec({5, -7}));
}

TEST_CASE("principal pair of the (2,1) quiver") {
  auto pp = principal_pair(b2());
  CHECK(pp.Lambda == IntMat({{0, 0, -2, 0}, {0, 0, 0, -1}, {2, 0, 0, -2}, {0, 1, 2, 0}}));
  IntMat P = pp.Btilde.transpose() * pp.Lambda;
  CHECK(P == IntMat({{2, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(pp.Lambda.is_skew_symmetric());
}

TEST_CASE("principal pair of the equal-valued two-vertex quiver") {
  auto pp = principal_pair(a2());
  // The frozen-frozen block is -B.
  CHECK(pp.Lambda(2, 3) == -1);
  CHECK(pp.Lambda(3, 2) == 1);
  CHECK(compatible(pp.Btilde, pp.Lambda));
}

TEST_CASE("matrix mutation in direction 1 on the (2,1) principal pair") {
  auto pp = principal_pair(b2());
  auto r = fz_mutate(pp.Btilde, pp.Lambda, 0);
  CHECK(r.Btilde == IntMat({{0, -1}, {2, 0}, {-1, 1}, {0, 1}}));
  CHECK(r.E == IntMat({{-1, 0, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(compatible(r.Btilde, r.Lambda));
  auto back = fz_mutate(r.Btilde, r.Lambda, 0);
  CHECK(back.Btilde == pp.Btilde);
  CHECK(back.Lambda == pp.Lambda);
  CHECK_THROWS_AS(fz_mutate(pp.Btilde, pp.Lambda, 3), Error);
}

TEST_CASE("mutation involutive over all directions and quivers") {
  for (auto q : {a2(), b2(), kronecker()}) {
    auto pp = principal_pair(q);
    for (int k = 0; k < q->n; ++k) {
      auto r = fz_mutate(pp.Btilde, pp.Lambda, k);
      auto back = fz_mutate(r.Btilde, r.Lambda, k);
      CHECK(back.Btilde == pp.Btilde);
      CHECK(back.Lambda == pp.Lambda);
    }
  }
}

TEST_CASE("quiver file round-trip") {
  std::string text = "# a comment\nn 2\nd 2 1\narrow 1 2\n";
  auto q = parse_quiver_text(text, "mem");
  CHECK(q->n == 2);
  CHECK(q->d == Vec({2, 1}));
  CHECK(q->arrows.size() == 1);
  auto q2 = parse_quiver_text(write_quiver_text(*q), "mem2");
  CHECK(write_quiver_text(*q2) == write_quiver_text(*q));
  CHECK_THROWS_WITH_AS(parse_quiver_text("n 2\nd 1 1\narrow 1 3\n", "mem"),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("checked integer arithmetic fails loudly") {
  i64 big = i64(1) << 62;
  CHECK_THROWS_WITH_AS(cadd(big, big), doctest::Contains("Overflow"), Error);
  CHECK_THROWS_WITH_AS(cmul(big, 4), doctest::Contains("Overflow"), Error);
  CHECK(cadd(big, -big) == 0);
  CHECK(ipow(3, 4) == 81);
}
