#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclab {

using i64 = long long;
using Vec = std::vector<i64>;

/// Failure categories named by the operation contracts.
enum class Err {
  CyclicQuiver,
  MixedArrowDirection,
  BadValuation,
  FrozenDirection,
  NotPrime,
  DegreeTooLarge,
  DivisionByZero,
  NotASubfield,
  ShapeMismatch,
  WrongField,
  NotASubrep,
  ExtTooLarge,
  BudgetExceeded,
  NotFound,
  LambdaMismatch,
  NonExactDivision,
  SingularSystem,
  ComplementNotFound,
  HintRejected,
  HypothesisFailed,
  ParseError,
  ValidationError,
  NonIntegerCoefficients,
  HoldoutMismatch,
  Overflow,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::CyclicQuiver: return "CyclicQuiver";
    case Err::MixedArrowDirection: return "MixedArrowDirection";
    case Err::BadValuation: return "BadValuation";
    case Err::FrozenDirection: return "FrozenDirection";
    case Err::NotPrime: return "NotPrime";
    case Err::DegreeTooLarge: return "DegreeTooLarge";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NotASubfield: return "NotASubfield";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::WrongField: return "WrongField";
    case Err::NotASubrep: return "NotASubrep";
    case Err::ExtTooLarge: return "ExtTooLarge";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotFound: return "NotFound";
    case Err::LambdaMismatch: return "LambdaMismatch";
    case Err::NonExactDivision: return "NonExactDivision";
    case Err::SingularSystem: return "SingularSystem";
    case Err::ComplementNotFound: return "ComplementNotFound";
    case Err::HintRejected: return "HintRejected";
    case Err::HypothesisFailed: return "HypothesisFailed";
    case Err::ParseError: return "ParseError";
    case Err::ValidationError: return "ValidationError";
    case Err::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Err::HoldoutMismatch: return "HoldoutMismatch";
    case Err::Overflow: return "Overflow";
    case Err::Internal: return "Internal";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, Err kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

// Checked 64-bit integer arithmetic. Entries stay tiny at desk scale;
// any overflow throws instead of wrapping.
inline i64 cadd(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer add");
  return r;
}
inline i64 csub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "integer sub");
  return r;
}
inline i64 cmul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer mul");
  return r;
}

inline i64 pos_part(i64 b) { return b > 0 ? b : 0; }

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// q^e for small integer arguments, checked.
inline i64 ipow(i64 base, i64 e) {
  require(e >= 0, Err::Internal, "ipow: negative exponent");
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) r = cmul(r, base);
  return r;
}

}  // namespace qclab
