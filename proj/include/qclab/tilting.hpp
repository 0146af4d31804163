#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclab/character.hpp"
#include "qclab/rep.hpp"
#include "qclab/seed.hpp"

namespace qclab {

/// Local tilting representation: indecomposable rigid summands labeled by
/// the vertices of their joint support.
struct TiltingRep {
  CtxPtr ctx;
  std::vector<std::pair<int, Rep>> summands;  // sorted by vertex label

  bool has_label(int v) const;
  const Rep* summand_at(int v) const;
  std::vector<int> labels() const;
  Rep direct_sum_all() const;
};

TiltingRep empty_tilting(const CtxPtr& ctx);

bool is_local_tilting(const TiltingRep& T, const Budgets& b = {}, std::string* diag = nullptr);

/// Left/right duals of the T-basis element at k, as coefficient vectors in
/// the basis {[T_i]} for labeled i plus {[P_i]} elsewhere (length m over the
/// extended quiver).
struct DualVectors {
  Vec lambda_k;
  Vec rho_k;
};

/// All duals at once; columns indexed by extended-quiver vertices.
struct DualSolve {
  IntMat L;  // m x m, row k = lambda_k coefficients
  IntMat R;  // m x m, row k = rho_k coefficients
};

DualSolve solve_duals(const TiltingRep& T, const PrincipalPair& pair);
DualVectors dual_vectors(const TiltingRep& T, const PrincipalPair& pair, int k);

/// Exchange and commutation matrices attached to T.
struct TiltingMatrices {
  IntMat B;       // m x n
  IntMat Lambda;  // m x m
};
TiltingMatrices tilting_matrices(const TiltingRep& T, const PrincipalPair& pair);

/// Mutation at vertex k; the complement is searched at the seed-side
/// dimension hint and fully re-verified.
TiltingRep mutate_tilting(const TiltingRep& T, const PrincipalPair& pair, int k,
                          const Vec& dim_hint, const Budgets& b = {}, i64 rng_seed = 1);

struct TiltingSeed {
  std::vector<TorusElement> cluster;
  IntMat B;
  IntMat Lambda;
};
TiltingSeed seed_of_tilting(const TiltingRep& T, const PrincipalPair& pair,
                            const Budgets& b = {});

/// Extended-quiver projective and injective dimension vectors (length m).
Vec proj_dims_tilde(const PrincipalPair& pair, int i);
Vec inj_dims_tilde(const PrincipalPair& pair, int i);

struct TiltingEdge {
  std::string path;  // 1-based
  int k = 0;         // 1-based direction
  bool b_match = false;
  bool lambda_match = false;
  bool vars_match = false;
  bool involutive = false;
  bool class_identity = true;   // only for exchange edges
  std::string mult_kind;        // exchange-mult / proj-mult / (empty)
  bool mult_checked = false;
  bool mult_pass = true;
  bool pass() const {
    return b_match && lambda_match && vars_match && involutive && class_identity &&
           (!mult_checked || mult_pass);
  }
};

struct TiltingSweepReport {
  std::vector<TiltingEdge> edges;
  bool pass() const {
    if (edges.empty()) return false;
    for (const auto& e : edges)
      if (!e.pass()) return false;
    return true;
  }
};

/// Walks every mutation path (no immediate backtracking) of length <= depth
/// from the empty tilting representation, in lockstep with the seed engine,
/// and checks the correspondence on every edge. With mult_theorems set, the
/// two multiplication formulas are verified on each edge as well.
TiltingSweepReport verify_tilting_sweep(const QuiverPtr& quiver, i64 p, int s, int depth,
                                        i64 seed, bool mult_theorems, const Budgets& b = {});

}  // namespace qclab
