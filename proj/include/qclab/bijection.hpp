#pragma once

#include <string>
#include <vector>

#include "qclab/character.hpp"
#include "qclab/seed.hpp"

namespace qclab {

struct BijectionItem {
  std::string path;      // 1-based mutation path, comma separated
  int slot = 0;          // 1-based
  Vec denom;             // length n
  std::string status;    // matched / NotFound / Mismatch / NotExceptional
  bool matched = false;
  bool exceptional = false;
  Vec rep_dims;
};

struct BijectionReport {
  i64 p = 0;
  int s = 1;
  int depth = 0;
  i64 seed = 0;
  bool saturated = false;   // exploration closed before the depth cap
  int distinct_variables = 0;
  int matched = 0;
  bool injective = true;
  std::vector<BijectionItem> items;

  bool pass() const {
    return matched == distinct_variables && injective && distinct_variables > 0;
  }
};

/// Breadth-first seed mutation to `depth` (stopping early at saturation),
/// then one rigid representation per distinct non-initial variable, its
/// character, and an exact specialized comparison.
BijectionReport verify_bijection(const QuiverPtr& quiver, i64 p, int s, int depth, i64 seed,
                                 const Budgets& b = {});

/// Distinct non-initial variables reached by breadth-first mutation.
std::vector<std::pair<std::vector<int>, TorusElement>> explore_variables(
    const PrincipalPair& pair, int depth, bool* saturated = nullptr, int max_seeds = 100000);

}  // namespace qclab
