#include "qclab/torus.hpp"

#include <algorithm>
#include <sstream>

namespace qclab {

QHalfPoly QHalfPoly::integer(i64 c) {
  QHalfPoly p;
  if (c) p.c_[0] = c;
  return p;
}

QHalfPoly QHalfPoly::q_half_pow(i64 e, i64 coeff) {
  QHalfPoly p;
  if (coeff) p.c_[e] = coeff;
  return p;
}

void QHalfPoly::set(i64 e, i64 coeff) {
  if (coeff)
    c_[e] = coeff;
  else
    c_.erase(e);
}

i64 QHalfPoly::coeff(i64 e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

i64 QHalfPoly::min_exponent() const {
  require(!c_.empty(), Err::Internal, "min_exponent of zero");
  return c_.begin()->first;
}

QHalfPoly operator+(const QHalfPoly& a, const QHalfPoly& b) {
  QHalfPoly r = a;
  for (auto& [e, c] : b.c_) {
    i64 v = cadd(r.coeff(e), c);
    r.set(e, v);
  }
  return r;
}

QHalfPoly operator-(const QHalfPoly& a, const QHalfPoly& b) {
  QHalfPoly r = a;
  for (auto& [e, c] : b.c_) {
    i64 v = csub(r.coeff(e), c);
    r.set(e, v);
  }
  return r;
}

QHalfPoly operator*(const QHalfPoly& a, const QHalfPoly& b) {
  QHalfPoly r;
  for (auto& [ea, ca] : a.c_)
    for (auto& [eb, cb] : b.c_) {
      i64 e = cadd(ea, eb);
      r.set(e, cadd(r.coeff(e), cmul(ca, cb)));
    }
  return r;
}

QHalfPoly QHalfPoly::shifted(i64 e) const {
  QHalfPoly r;
  for (auto& [k, c] : c_) r.c_[cadd(k, e)] = c;
  return r;
}

QHalfPoly QHalfPoly::bar() const {
  QHalfPoly r;
  for (auto& [k, c] : c_) r.c_[csub(0, k)] = c;
  return r;
}

bool QHalfPoly::exact_div(const QHalfPoly& divisor, QHalfPoly* quotient) const {
  require(!divisor.is_zero(), Err::DivisionByZero, "coefficient division by zero");
  QHalfPoly rem = *this;
  QHalfPoly quo;
  auto lead = [](const QHalfPoly& p) { return *p.c_.rbegin(); };
  auto [de, dc] = lead(divisor);
  while (!rem.is_zero()) {
    auto [re, rc] = lead(rem);
    if (rc % dc != 0) return false;
    i64 qe = csub(re, de), qc = rc / dc;
    quo.set(qe, cadd(quo.coeff(qe), qc));
    rem = rem - divisor.shifted(qe) * QHalfPoly::integer(qc);
    if (!rem.is_zero() && rem.c_.rbegin()->first >= re) return false;  // no progress
  }
  if (quotient) *quotient = quo;
  return true;
}

std::string QHalfPoly::render() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    i64 mag = c < 0 ? -c : c;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      if (e % 2 == 0)
        out << "q^" << (e / 2);
      else
        out << "q^(" << e << "/2)";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

i64 lambda_form(const IntMat& lambda, const Vec& a, const Vec& b) {
  require(int(a.size()) == lambda.rows() && int(b.size()) == lambda.rows(), Err::ShapeMismatch,
          "lambda_form length");
  return lambda.pair(a, b);
}

TorusElement TorusElement::monomial(std::shared_ptr<const IntMat> lambda, const Vec& a,
                                    QHalfPoly coeff) {
  TorusElement t(std::move(lambda));
  require(int(a.size()) == t.rank(), Err::ShapeMismatch, "monomial exponent length");
  if (!coeff.is_zero()) t.terms_[a] = std::move(coeff);
  return t;
}

TorusElement TorusElement::one(std::shared_ptr<const IntMat> lambda) {
  Vec zero(size_t(lambda->rows()), 0);
  return monomial(std::move(lambda), zero);
}

void TorusElement::add_term(const Vec& a, const QHalfPoly& c) {
  require(int(a.size()) == rank(), Err::ShapeMismatch, "term exponent length");
  auto it = terms_.find(a);
  QHalfPoly sum = (it == terms_.end()) ? c : it->second + c;
  if (sum.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[a] = std::move(sum);
  }
}

namespace {
void check_same_lambda(const TorusElement& a, const TorusElement& b) {
  require(a.lambda() && b.lambda(), Err::LambdaMismatch, "element without Lambda");
  if (a.lambda() != b.lambda())
    require(*a.lambda() == *b.lambda(), Err::LambdaMismatch,
            "operands live over different commutation matrices");
}
}  // namespace

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
  check_same_lambda(a, b);
  TorusElement r = a;
  for (auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) {
  check_same_lambda(a, b);
  TorusElement r = a;
  for (auto& [e, c] : b.terms()) r.add_term(e, QHalfPoly::integer(0) - c);
  return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  check_same_lambda(a, b);
  return a.terms_ == b.terms_;
}

TorusElement TorusElement::scaled(const QHalfPoly& c) const {
  TorusElement r(lambda_);
  if (c.is_zero()) return r;
  for (auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

TorusElement TorusElement::bar() const {
  TorusElement r(lambda_);
  for (auto& [e, k] : terms_) r.terms_[e] = k.bar();
  return r;
}

TorusElement multiply(const TorusElement& f, const TorusElement& g, bool twisted) {
  check_same_lambda(f, g);
  TorusElement r(f.lambda());
  const IntMat& L = *f.lambda();
  for (auto& [a, ca] : f.terms())
    for (auto& [b, cb] : g.terms()) {
      Vec ab(a.size());
      for (size_t i = 0; i < a.size(); ++i) ab[i] = cadd(a[i], b[i]);
      QHalfPoly c = ca * cb;
      if (!twisted) c = c.shifted(lambda_form(L, a, b));
      r.add_term(ab, c);
    }
  return r;
}

TorusElement bar_involution(const TorusElement& f) { return f.bar(); }

namespace {
// Graded-lex order on exponent vectors (total degree, then lex).
bool grlex_less(const Vec& a, const Vec& b) {
  i64 sa = 0, sb = 0;
  for (i64 v : a) sa = cadd(sa, v);
  for (i64 v : b) sb = cadd(sb, v);
  if (sa != sb) return sa < sb;
  return a < b;
}

const Vec& leading_monomial(const TorusElement& f) {
  require(!f.is_zero(), Err::Internal, "leading monomial of zero");
  const Vec* best = nullptr;
  for (auto& [e, c] : f.terms())
    if (!best || grlex_less(*best, e)) best = &e;
  return *best;
}
}  // namespace

TorusElement exact_divide(const TorusElement& L, const TorusElement& F) {
  check_same_lambda(L, F);
  require(!F.is_zero(), Err::DivisionByZero, "division by zero element");
  const IntMat& lam = *L.lambda();
  TorusElement rem = L;
  TorusElement quo(L.lambda());
  Vec fb = leading_monomial(F);
  const QHalfPoly& fc = F.terms().at(fb);
  i64 cap = cadd(cmul(i64(L.terms().size()), i64(F.terms().size())), 1);
  for (i64 step = 0; !rem.is_zero(); ++step) {
    require(step < cap, Err::NonExactDivision, "iteration cap exceeded");
    Vec t = leading_monomial(rem);
    const QHalfPoly& rc = rem.terms().at(t);
    Vec a(t.size());
    for (size_t i = 0; i < t.size(); ++i) a[i] = csub(t[i], fb[i]);
    // g * X^a * f_lead * X^fb = g*f_lead*q^(Lambda(a,fb)/2) X^t
    QHalfPoly target = rc.shifted(-lambda_form(lam, a, fb));
    QHalfPoly g;
    require(target.exact_div(fc, &g), Err::NonExactDivision, "leading coefficient not divisible");
    TorusElement gterm = TorusElement::monomial(L.lambda(), a, g);
    quo = quo + gterm;
    rem = rem - multiply(gterm, F);
  }
  return quo;
}

i64 specialization_shift(const TorusElement& f) {
  i64 shift = 0;
  for (auto& [e, c] : f.terms())
    if (!c.is_zero()) shift = std::max(shift, -c.min_exponent());
  return shift;
}

Specialization specialize(const TorusElement& f, i64 q0, i64 min_shift) {
  require(q0 >= 2, Err::ValidationError, "specialization point must be >= 2");
  Specialization s;
  s.q0 = q0;
  s.shift = std::max(specialization_shift(f), min_shift);
  for (auto& [e, c] : f.terms()) {
    SpecValue v;
    for (auto& [k, coeff] : c.terms()) {
      i64 ks = cadd(k, s.shift);
      require(ks >= 0, Err::Internal, "negative power after shift");
      if (ks % 2 == 0)
        v.u = cadd(v.u, cmul(coeff, ipow(q0, ks / 2)));
      else
        v.w = cadd(v.w, cmul(coeff, ipow(q0, (ks - 1) / 2)));
    }
    s.values[e] = v;
  }
  return s;
}

bool specialized_equal(const TorusElement& a, const TorusElement& b, i64 q0) {
  check_same_lambda(a, b);
  i64 shift = std::max(specialization_shift(a), specialization_shift(b));
  Specialization sa = specialize(a, q0, shift), sb = specialize(b, q0, shift);
  return sa.values == sb.values;
}

std::string TorusElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.render() << ")*X^[";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out << ",";
      out << e[i];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace qclab
