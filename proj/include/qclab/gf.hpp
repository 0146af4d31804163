#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qclab/common.hpp"

namespace qclab {

/// Element of GF(p^deg) inside a FieldTower, encoded as an integer in
/// [0, p^deg) whose base-p digits are the coordinates in the polynomial basis.
struct FieldElem {
  int deg = 1;
  int code = 0;
};

/// A compatible tower of finite fields GF(p^k) for a gcd-closed set of
/// degrees k, with embedding tables along the divisor lattice.
///
/// Defining polynomials are the least-code monic irreducibles; embeddings are
/// chosen per divisor pair as the least root consistent with all previously
/// fixed embeddings, which keeps composition along chains exact.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> build(i64 p, std::vector<int> degrees,
                                                 int max_degree = 8);

  i64 p() const { return p_; }
  bool has(int deg) const { return levels_.count(deg) != 0; }
  i64 size(int deg) const { return level(deg).q; }
  const std::vector<int>& degrees() const { return degs_; }
  std::string field_name(int deg) const;

  int add(int deg, int a, int b) const;
  int sub(int deg, int a, int b) const;
  int neg(int deg, int a) const;
  int mul(int deg, int a, int b) const;
  int inv(int deg, int a) const;  // DivisionByZero on 0
  int pow(int deg, int a, i64 e) const;
  int from_int(int, i64 v) const { return int(((v % p_) + p_) % p_); }

  /// Ring embedding GF(p^from) -> GF(p^to); requires from | to, both built.
  int embed(int from, int to, int a) const;

  /// A GF(p^small)-basis of GF(p^big) under the fixed embedding; starts with 1.
  const std::vector<int>& basis_over(int big, int small) const;

  /// Coordinates of a in that basis: a = sum embed(x_u) * basis[u].
  const std::vector<int>& coords(int big, int small, int a) const;

  /// Trace of GF(p^big) down to GF(p^small) (value as a small-field code).
  int trace(int big, int small, int a) const;

  const std::vector<int>& defining_poly(int deg) const { return level(deg).defpoly; }

 private:
  struct Level {
    int k = 1;
    i64 q = 0;
    std::vector<int> defpoly;  // c0..ck, monic
    std::vector<int> exp_tab;  // exp_tab[i] = g^i, i in [0, q-1)
    std::vector<int> log_tab;  // log_tab[code], code >= 1
  };
  struct SubBasis {
    std::vector<int> basis;                // big-field codes
    std::vector<std::vector<int>> coords;  // [big code] -> small-field codes
  };

  const Level& level(int deg) const;
  int mul_slow(const Level& L, int a, int b) const;
  std::vector<int> poly_from_code(int deg, int code) const;
  int code_from_poly(const std::vector<int>& poly) const;

  i64 p_ = 0;
  std::vector<int> degs_;
  std::map<int, Level> levels_;
  std::map<std::pair<int, int>, std::vector<int>> embed_;
  std::map<std::pair<int, int>, SubBasis> bases_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Dense matrix over one field of a tower. Entries are element codes.
class GFMat {
 public:
  GFMat() = default;
  GFMat(TowerPtr tower, int deg, int rows, int cols)
      : t_(std::move(tower)), deg_(deg), r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}

  static GFMat identity(TowerPtr t, int deg, int n) {
    GFMat m(std::move(t), deg, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = m.t_->from_int(deg, 1);
    return m;
  }

  const TowerPtr& tower() const { return t_; }
  int deg() const { return deg_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  int& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  int operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  const std::vector<int>& data() const { return a_; }

  bool same_field(const GFMat& o) const {
    return t_ == o.t_ && deg_ == o.deg_;
  }
  friend bool operator==(const GFMat& a, const GFMat& b) {
    return a.deg_ == b.deg_ && a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  GFMat transpose() const;
  friend GFMat operator*(const GFMat& a, const GFMat& b);
  friend GFMat operator+(const GFMat& a, const GFMat& b);
  friend GFMat operator-(const GFMat& a, const GFMat& b);
  GFMat scaled(int c) const;

  GFMat hstack(const GFMat& o) const;
  GFMat vstack(const GFMat& o) const;
  GFMat block(int i0, int j0, int rows, int cols) const;
  void set_block(int i0, int j0, const GFMat& b);
  bool is_zero() const;

  /// In-place reduced row echelon form; returns rank.
  int rref();
  int rank() const;
  /// Rows spanning the right null space (x with (this) x = 0).
  GFMat null_space() const;
  /// Rows spanning the row space, in RREF.
  GFMat row_space() const;
  bool is_invertible() const;
  GFMat inverse() const;  // SingularSystem if not invertible
  /// One solution x of (this) x = b, if any.
  bool solve(const std::vector<int>& b, std::vector<int>* x) const;

  /// True if every row of `rows` lies in the span of this RREF basis.
  static bool rows_contained(const GFMat& rref_basis, const GFMat& rows);

  std::string render() const;

 private:
  TowerPtr t_;
  int deg_ = 1;
  int r_ = 0, c_ = 0;
  std::vector<int> a_;
};

}  // namespace qclab
