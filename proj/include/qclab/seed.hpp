#pragma once

#include <memory>
#include <vector>

#include "qclab/quiver.hpp"
#include "qclab/torus.hpp"

namespace qclab {

/// Quantum seed: every cluster variable is carried as an explicit Laurent
/// element of the initial torus.
struct QuantumSeed {
  std::shared_ptr<const IntMat> lambda0;  // initial commutation matrix
  std::vector<TorusElement> cluster;      // m variables
  IntMat Btilde_cur;
  IntMat Lambda_cur;
  std::vector<int> path;  // 0-based mutation history

  int n() const { return Btilde_cur.cols(); }
  int m() const { return Btilde_cur.rows(); }
};

QuantumSeed initial_seed(const PrincipalPair& pair);

/// One Berenstein-Zelevinsky mutation; asserts bar-invariance of the new
/// variable, the exchange product, and pairwise quasi-commutation.
QuantumSeed mutate_seed(const QuantumSeed& seed, int k);

/// All pairwise quasi-commutations against Lambda_cur, by explicit products.
bool seed_quasi_commutes(const QuantumSeed& seed);

/// Variable at `slot` after mutating along `path`; slot defaults to the
/// last entry of the path (and must be given explicitly for an empty path).
TorusElement variable_by_path(const PrincipalPair& pair, const std::vector<int>& path,
                              int slot = -1);

/// Coordinatewise negative-exponent support on the first n coordinates.
Vec denominator_vector(const TorusElement& x, int n);

}  // namespace qclab
