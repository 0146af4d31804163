#pragma once

#include <string>
#include <vector>

#include "qclab/rep.hpp"

namespace qclab {

/// Integer counting polynomial of a rigid-representation Grassmannian,
/// interpolated from exact censuses at several field sizes.
struct CountingPoly {
  Vec e, v;
  std::vector<i64> coeffs;  // ascending degree
  std::vector<std::pair<i64, i64>> samples;             // (q, count) used
  std::vector<std::tuple<i64, i64, i64, bool>> holdouts;  // (q, predicted, census, pass)

  i64 eval(i64 q) const;
  std::string render() const;
};

/// Factors a prime power; ParseError if q0 is not one.
std::pair<i64, int> prime_power(i64 q0);

CountingPoly interpolate_counting_poly(const QuiverPtr& quiver, const Vec& v, const Vec& e,
                                       const std::vector<i64>& q_list, i64 holdout_q,
                                       i64 rng_seed, const Budgets& b = {});

struct UnimodularEvidence {
  bool nonnegative = false;
  bool single_center = false;           // all peeled runs share one center
  std::vector<std::pair<i64, i64>> runs;  // (shift, length)
};

/// Greedy peel of contiguous runs; reported as evidence, never asserted.
UnimodularEvidence unimodular_check(const CountingPoly& p);

}  // namespace qclab
