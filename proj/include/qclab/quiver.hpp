#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "qclab/intmat.hpp"

namespace qclab {

struct Arrow {
  int src = 0;
  int tgt = 0;
};

/// Acyclic valued quiver. Vertices are 0-based internally; parallel arrows
/// are stored expanded, in input order.
struct ValuedQuiver {
  int n = 0;
  Vec d;                      // valuation per vertex, positive
  std::vector<Arrow> arrows;  // expanded single arrows
  std::vector<int> topo;      // topological order (sources first)

  i64 arrow_count(int i, int j) const;  // arrows i -> j
};

using QuiverPtr = std::shared_ptr<const ValuedQuiver>;

/// Validates and builds; arrows are (src, tgt, mult) with 0-based vertices.
QuiverPtr build_valued_quiver(int n, Vec d, const std::vector<std::array<i64, 3>>& arrows);

QuiverPtr opposite(const QuiverPtr& q);

/// All the derived integer matrices of a valued quiver.
struct MatrixBundle {
  IntMat B;        // exchange matrix entries b_ij
  IntMat D;        // diag(d_i)
  IntMat E_euler;  // Euler form on simple classes
  IntMat Bminus;   // left dual: *e = Bminus e
  IntMat Bplus;    // right dual: e* = Bplus e
};

MatrixBundle derived_matrices(const ValuedQuiver& q);
Vec star_left(const MatrixBundle& mb, const Vec& e);
Vec star_right(const MatrixBundle& mb, const Vec& e);

/// Principal extension: frozen vertex n+i -> i with the same valuation,
/// Btilde = (B ; I), and the canonical compatible Lambda [[0,-D],[D,-DB]].
struct PrincipalPair {
  int n = 0;
  int m = 0;
  QuiverPtr Q;       // the mutable part
  QuiverPtr Qtilde;  // m vertices
  MatrixBundle bundle_tilde;  // matrices of Qtilde (m x m forms and duals)
  IntMat Btilde;     // m x n
  IntMat Lambda;     // m x m
  IntMat Dtilde;     // m x m diagonal

  /// Zero-pads a mutable-part vector to length m.
  Vec pad(const Vec& v) const;
};

PrincipalPair principal_pair(const QuiverPtr& q);

/// Checks Btilde^T Lambda = (D | 0) and returns the diagonal D.
bool compatible(const IntMat& Btilde, const IntMat& Lambda, Vec* d_out = nullptr);

struct MutationResult {
  IntMat Btilde;
  IntMat Lambda;
  IntMat E;  // m x m
  IntMat F;  // n x n
};

/// Fomin-Zelevinsky mutation in direction k (0-based, k < n), with the
/// E/F factorization and Lambda' = E^T Lambda E; compatibility is asserted.
MutationResult fz_mutate(const IntMat& Btilde, const IntMat& Lambda, int k);

/// Line-oriented quiver file: `n <int>`, `d <ints>`, `arrow <s> <t> [mult]`.
QuiverPtr read_quiver(const std::string& path);
QuiverPtr parse_quiver_text(const std::string& text, const std::string& origin);
std::string write_quiver_text(const ValuedQuiver& q);
void write_quiver(const ValuedQuiver& q, const std::string& path);

}  // namespace qclab
