#include "qclab/seed.hpp"

#include <algorithm>

namespace qclab {

QuantumSeed initial_seed(const PrincipalPair& pair) {
  QuantumSeed s;
  s.lambda0 = std::make_shared<IntMat>(pair.Lambda);
  for (int i = 0; i < pair.m; ++i) {
    Vec e(size_t(pair.m), 0);
    e[i] = 1;
    s.cluster.push_back(TorusElement::monomial(s.lambda0, e));
  }
  s.Btilde_cur = pair.Btilde;
  s.Lambda_cur = pair.Lambda;
  return s;
}

namespace {

/// Normalized monomial in the current cluster for a nonnegative vector c:
/// ordered product scaled by q^(-1/2 sum_{i<j} lambda_ij c_i c_j).
TorusElement cluster_monomial(const QuantumSeed& seed, const Vec& c) {
  TorusElement acc = TorusElement::one(seed.lambda0);
  for (int i = 0; i < seed.m(); ++i) {
    require(c[i] >= 0, Err::Internal, "cluster monomial needs nonnegative exponents");
    for (i64 t = 0; t < c[i]; ++t) acc = multiply(acc, seed.cluster[i]);
  }
  i64 half = 0;
  for (int i = 0; i < seed.m(); ++i)
    for (int j = i + 1; j < seed.m(); ++j)
      half = cadd(half, cmul(seed.Lambda_cur(i, j), cmul(c[i], c[j])));
  return acc.scaled(QHalfPoly::q_half_pow(-half));
}

}  // namespace

bool seed_quasi_commutes(const QuantumSeed& seed) {
  for (int i = 0; i < seed.m(); ++i)
    for (int j = 0; j < seed.m(); ++j) {
      if (i == j) continue;
      TorusElement lhs = multiply(seed.cluster[i], seed.cluster[j]);
      TorusElement rhs = multiply(seed.cluster[j], seed.cluster[i])
                             .scaled(QHalfPoly::q_half_pow(2 * seed.Lambda_cur(i, j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

QuantumSeed mutate_seed(const QuantumSeed& seed, int k) {
  int n = seed.n(), m = seed.m();
  require(k >= 0 && k < n, Err::FrozenDirection,
          "mutation direction " + std::to_string(k + 1) + " out of 1.." + std::to_string(n));

  Vec bplus(size_t(m), 0), bminus(size_t(m), 0), ek(size_t(m), 0);
  ek[k] = 1;
  for (int i = 0; i < m; ++i) {
    i64 b = seed.Btilde_cur(i, k);
    if (b > 0) bplus[i] = b;
    if (b < 0) bminus[i] = -b;
  }

  auto summand = [&](const Vec& bpart) {
    Vec diff(bpart);
    diff[k] = csub(diff[k], 1);
    i64 half = seed.Lambda_cur.pair(diff, ek);
    return cluster_monomial(seed, bpart).scaled(QHalfPoly::q_half_pow(half));
  };
  TorusElement N = summand(bplus) + summand(bminus);
  TorusElement xk = exact_divide(N, seed.cluster[k]);
  require(multiply(xk, seed.cluster[k]) == N, Err::Internal, "exchange product mismatch");
  require(bar_involution(xk) == xk, Err::Internal, "new variable not bar-invariant");

  MutationResult mut = fz_mutate(seed.Btilde_cur, seed.Lambda_cur, k);
  QuantumSeed out;
  out.lambda0 = seed.lambda0;
  out.cluster = seed.cluster;
  out.cluster[k] = xk;
  out.Btilde_cur = mut.Btilde;
  out.Lambda_cur = mut.Lambda;
  out.path = seed.path;
  out.path.push_back(k);
  require(seed_quasi_commutes(out), Err::Internal, "mutated cluster does not quasi-commute");
  return out;
}

TorusElement variable_by_path(const PrincipalPair& pair, const std::vector<int>& path,
                              int slot) {
  QuantumSeed s = initial_seed(pair);
  for (int k : path) s = mutate_seed(s, k);
  if (slot < 0) {
    require(!path.empty(), Err::ValidationError, "empty path needs an explicit slot");
    slot = path.back();
  }
  require(slot >= 0 && slot < s.m(), Err::ValidationError, "slot out of range");
  return s.cluster[slot];
}

Vec denominator_vector(const TorusElement& x, int n) {
  require(!x.is_zero(), Err::ValidationError, "denominator vector of zero");
  Vec d(size_t(n), 0);
  for (int i = 0; i < n; ++i) {
    i64 lo = 0;
    for (auto& [e, c] : x.terms()) lo = std::min(lo, e[i]);
    d[i] = -lo;
  }
  return d;
}

}  // namespace qclab
