#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qclab/common.hpp"
#include "qclab/fraction.hpp"

namespace qclab {

/// Dense integer matrix with overflow-checked arithmetic.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<i64>> rows) {
    r_ = int(rows.size());
    c_ = r_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(r_) * c_);
    for (auto& row : rows) {
      require(int(row.size()) == c_, Err::Internal, "ragged initializer");
      for (i64 v : row) a_.push_back(v);
    }
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMat diag(const Vec& d) {
    IntMat m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  i64& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  i64 operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  IntMat transpose() const {
    IntMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMat operator*(const IntMat& a, const IntMat& b) {
    require(a.c_ == b.r_, Err::Internal, "IntMat mul shape");
    IntMat m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        i64 v = a(i, k);
        if (!v) continue;
        for (int j = 0; j < b.c_; ++j) m(i, j) = cadd(m(i, j), cmul(v, b(k, j)));
      }
    return m;
  }
  friend IntMat operator+(const IntMat& a, const IntMat& b) {
    require(a.r_ == b.r_ && a.c_ == b.c_, Err::Internal, "IntMat add shape");
    IntMat m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = cadd(a.a_[i], b.a_[i]);
    return m;
  }
  friend IntMat operator-(const IntMat& a, const IntMat& b) {
    require(a.r_ == b.r_ && a.c_ == b.c_, Err::Internal, "IntMat sub shape");
    IntMat m(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = csub(a.a_[i], b.a_[i]);
    return m;
  }
  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

  Vec mul_vec(const Vec& v) const {
    require(int(v.size()) == c_, Err::Internal, "mul_vec shape");
    Vec out(r_, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i] = cadd(out[i], cmul((*this)(i, j), v[j]));
    return out;
  }

  Vec column(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  /// x^T (this) y
  i64 pair(const Vec& x, const Vec& y) const {
    Vec my = mul_vec(y);
    require(x.size() == my.size(), Err::Internal, "pair shape");
    i64 s = 0;
    for (size_t i = 0; i < x.size(); ++i) s = cadd(s, cmul(x[i], my[i]));
    return s;
  }

  bool is_skew_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  /// Solves (this) x = rhs exactly over the rationals; requires a unique solution.
  std::vector<Frac> solve(const std::vector<Frac>& rhs) const {
    std::vector<std::vector<Frac>> A(r_, std::vector<Frac>(c_));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) A[i][j] = Frac((*this)(i, j));
    return solve_exact(A, rhs);
  }

  /// Integer solve; throws NonIntegerCoefficients if the solution is not integral.
  Vec solve_integer(const Vec& rhs) const {
    std::vector<Frac> b(rhs.begin(), rhs.end());
    auto x = solve(b);
    Vec out;
    out.reserve(x.size());
    for (auto& f : x) {
      require(f.is_integer(), Err::NonIntegerCoefficients, "expected integer solution");
      out.push_back(f.num);
    }
    return out;
  }

  std::string render() const {
    std::string s;
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) {
        if (j) s += ' ';
        s += std::to_string((*this)(i, j));
      }
      s += '\n';
    }
    return s;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<i64> a_;
};

}  // namespace qclab
