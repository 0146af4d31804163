#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qclab/intmat.hpp"

namespace qclab {

/// Laurent polynomial in q^(1/2): exponents counted in half-powers of q,
/// so {2: 3} means 3*q. No zero coefficients are stored.
class QHalfPoly {
 public:
  QHalfPoly() = default;
  static QHalfPoly integer(i64 c);
  static QHalfPoly q_half_pow(i64 half_exponent, i64 coeff = 1);

  bool is_zero() const { return c_.empty(); }
  const std::map<i64, i64>& terms() const { return c_; }
  void set(i64 e, i64 coeff);
  i64 coeff(i64 e) const;
  i64 min_exponent() const;  // requires nonzero

  friend QHalfPoly operator+(const QHalfPoly& a, const QHalfPoly& b);
  friend QHalfPoly operator-(const QHalfPoly& a, const QHalfPoly& b);
  friend QHalfPoly operator*(const QHalfPoly& a, const QHalfPoly& b);
  friend bool operator==(const QHalfPoly& a, const QHalfPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QHalfPoly& a, const QHalfPoly& b) { return !(a == b); }

  QHalfPoly shifted(i64 half_exponent) const;  // multiply by q^(half_exponent/2)
  QHalfPoly bar() const;                       // q^(1/2) -> q^(-1/2)
  /// Exact division; false if the quotient does not exist in Z[q^(+-1/2)].
  bool exact_div(const QHalfPoly& divisor, QHalfPoly* quotient) const;

  std::string render() const;

 private:
  std::map<i64, i64> c_;
};

/// Value in Z[t]/(t^2 - q0), t standing for q^(1/2) at a prime power q0.
struct SpecValue {
  i64 u = 0;
  i64 w = 0;
  friend bool operator==(const SpecValue& a, const SpecValue& b) {
    return a.u == b.u && a.w == b.w;
  }
  friend bool operator!=(const SpecValue& a, const SpecValue& b) { return !(a == b); }
};

/// Element of the quantum torus over a fixed skew-symmetric Lambda, written
/// in the basis of bar-invariant normalized monomials X^a.
class TorusElement {
 public:
  TorusElement() = default;
  explicit TorusElement(std::shared_ptr<const IntMat> lambda) : lambda_(std::move(lambda)) {}

  static TorusElement monomial(std::shared_ptr<const IntMat> lambda, const Vec& a,
                               QHalfPoly coeff = QHalfPoly::integer(1));
  static TorusElement one(std::shared_ptr<const IntMat> lambda);

  const std::shared_ptr<const IntMat>& lambda() const { return lambda_; }
  int rank() const { return lambda_ ? lambda_->rows() : 0; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Vec, QHalfPoly>& terms() const { return terms_; }

  void add_term(const Vec& a, const QHalfPoly& c);

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator-(const TorusElement& a, const TorusElement& b);
  friend bool operator==(const TorusElement& a, const TorusElement& b);
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  TorusElement scaled(const QHalfPoly& c) const;
  TorusElement bar() const;

  std::string render() const;

 private:
  std::shared_ptr<const IntMat> lambda_;
  std::map<Vec, QHalfPoly> terms_;
};

/// Lambda(a, b) = a^T Lambda b.
i64 lambda_form(const IntMat& lambda, const Vec& a, const Vec& b);

/// Product; untwisted uses X^a X^b = q^(Lambda(a,b)/2) X^(a+b), twisted drops
/// the q-power.
TorusElement multiply(const TorusElement& f, const TorusElement& g, bool twisted = false);
TorusElement bar_involution(const TorusElement& f);

/// Right division: the G with G*F = L, when it exists in the torus.
TorusElement exact_divide(const TorusElement& L, const TorusElement& F);

struct Specialization {
  i64 q0 = 0;
  i64 shift = 0;  // the whole element was premultiplied by q^(shift/2)
  std::map<Vec, SpecValue> values;
};

/// Evaluates coefficients in Z[t]/(t^2 - q0) after clearing negative
/// half-powers by one global shift.
Specialization specialize(const TorusElement& f, i64 q0, i64 min_shift = 0);

/// Minimal shift making every coefficient of f polynomial in t.
i64 specialization_shift(const TorusElement& f);

/// Termwise equality of two elements evaluated at the same q0 (a common
/// shift is applied to both).
bool specialized_equal(const TorusElement& a, const TorusElement& b, i64 q0);

}  // namespace qclab
