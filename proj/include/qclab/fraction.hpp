#pragma once

#include <vector>

#include "qclab/common.hpp"

namespace qclab {

/// Exact rational on checked 64-bit parts. Used for the small dense solves
/// (dual vectors, Lagrange interpolation); numbers stay tiny.
struct Frac {
  i64 num = 0;
  i64 den = 1;

  Frac() = default;
  Frac(i64 n) : num(n), den(1) {}
  Frac(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, Err::DivisionByZero, "fraction with zero denominator");
    if (den < 0) {
      num = csub(0, num);
      den = csub(0, den);
    }
    i64 g = gcd_i64(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(cadd(cmul(a.num, b.den), cmul(b.num, a.den)), cmul(a.den, b.den));
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(csub(cmul(a.num, b.den), cmul(b.num, a.den)), cmul(a.den, b.den));
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(cmul(a.num, b.num), cmul(a.den, b.den));
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    require(b.num != 0, Err::DivisionByZero, "fraction divide");
    return Frac(cmul(a.num, b.den), cmul(a.den, b.num));
  }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
};

/// Solves A x = b exactly by Gaussian elimination. A is row-major r x c.
/// Returns empty optional-style flag via thrown SingularSystem when no
/// unique solution exists (callers here always want the unique one).
inline std::vector<Frac> solve_exact(std::vector<std::vector<Frac>> A, std::vector<Frac> b) {
  size_t r = A.size();
  require(r > 0 && r == b.size(), Err::Internal, "solve_exact: shape");
  size_t c = A[0].size();
  require(r >= c, Err::Internal, "solve_exact: underdetermined");
  size_t row = 0;
  std::vector<size_t> pivot_row(c, SIZE_MAX);
  for (size_t col = 0; col < c && row < r; ++col) {
    size_t p = row;
    while (p < r && A[p][col].is_zero()) ++p;
    if (p == r) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    Frac inv = Frac(1) / A[row][col];
    for (size_t j = col; j < c; ++j) A[row][j] = A[row][j] * inv;
    b[row] = b[row] * inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == row || A[i][col].is_zero()) continue;
      Frac f = A[i][col];
      for (size_t j = col; j < c; ++j) A[i][j] = A[i][j] - f * A[row][j];
      b[i] = b[i] - f * b[row];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (size_t col = 0; col < c; ++col)
    require(pivot_row[col] != SIZE_MAX, Err::SingularSystem, "solve_exact: rank deficient");
  for (size_t i = row; i < r; ++i)
    require(b[i].is_zero(), Err::SingularSystem, "solve_exact: inconsistent");
  std::vector<Frac> x(c);
  for (size_t col = 0; col < c; ++col) x[col] = b[pivot_row[col]];
  return x;
}

}  // namespace qclab
