#include "qclab/interp.hpp"

#include <algorithm>
#include <sstream>

#include "qclab/fraction.hpp"

namespace qclab {

i64 CountingPoly::eval(i64 q) const {
  i64 acc = 0, pw = 1;
  for (i64 c : coeffs) {
    acc = cadd(acc, cmul(c, pw));
    pw = cmul(pw, q);
  }
  return acc;
}

std::string CountingPoly::render() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = int(coeffs.size()) - 1; d >= 0; --d) {
    if (!coeffs[d]) continue;
    if (!first) out << (coeffs[d] > 0 ? " + " : " - ");
    else if (coeffs[d] < 0) out << "-";
    first = false;
    i64 mag = coeffs[d] < 0 ? -coeffs[d] : coeffs[d];
    if (d == 0 || mag != 1) out << mag;
    if (d >= 1) out << (mag != 1 ? "*q" : "q");
    if (d >= 2) out << "^" << d;
  }
  if (first) return "0";
  return out.str();
}

std::pair<i64, int> prime_power(i64 q0) {
  require(q0 >= 2, Err::ParseError, "field size must be at least 2");
  i64 p = q0;
  for (i64 d = 2; d * d <= q0; ++d)
    if (q0 % d == 0) {
      p = d;
      break;
    }
  int s = 0;
  i64 t = q0;
  while (t > 1) {
    require(t % p == 0, Err::ParseError, std::to_string(q0) + " is not a prime power");
    t /= p;
    ++s;
  }
  return {p, s};
}

CountingPoly interpolate_counting_poly(const QuiverPtr& quiver, const Vec& v, const Vec& e,
                                       const std::vector<i64>& q_list, i64 holdout_q,
                                       i64 rng_seed, const Budgets& b) {
  require(v.size() == e.size() && int(v.size()) == quiver->n, Err::ValidationError,
          "dimension vector lengths");
  for (size_t i = 0; i < v.size(); ++i)
    require(e[i] >= 0 && e[i] <= v[i], Err::ValidationError, "e must sit inside the box");

  auto census_at = [&](i64 q0) {
    auto [p, s] = prime_power(q0);
    CtxPtr ctx = make_context(quiver, p, s);
    auto rigid = search_rigid(ctx, v, b, rng_seed);
    require(rigid.has_value(), Err::NotFound,
            "no rigid representation of that dimension vector at q=" + std::to_string(q0));
    CountTable t = grassmannian_census(*rigid, b);
    auto it = t.find(e);
    return it == t.end() ? 0 : it->second;
  };

  CountingPoly cp;
  cp.e = e;
  cp.v = v;
  Vec rest(v);
  for (size_t i = 0; i < v.size(); ++i) rest[i] = csub(rest[i], e[i]);
  MatrixBundle mb = derived_matrices(*quiver);
  i64 bound = std::max<i64>(0, mb.E_euler.pair(e, rest));
  size_t needed = size_t(bound) + 1;
  require(q_list.size() >= needed, Err::ValidationError,
          "need at least " + std::to_string(needed) + " sample fields");

  std::vector<std::pair<i64, i64>> pts;
  for (i64 q0 : q_list) pts.emplace_back(q0, census_at(q0));
  cp.samples.assign(pts.begin(), pts.begin() + long(needed));

  // Exact Lagrange interpolation through the first (bound+1) samples.
  std::vector<Frac> coeffs(needed, Frac(0));
  for (size_t i = 0; i < needed; ++i) {
    // Basis polynomial for sample i, expanded incrementally.
    std::vector<Frac> basis = {Frac(1)};
    Frac denom(1);
    for (size_t j = 0; j < needed; ++j) {
      if (j == i) continue;
      std::vector<Frac> next(basis.size() + 1, Frac(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] = next[t + 1] + basis[t];
        next[t] = next[t] - basis[t] * Frac(cp.samples[j].first);
      }
      basis = std::move(next);
      denom = denom * Frac(cp.samples[i].first - cp.samples[j].first);
    }
    Frac scale = Frac(cp.samples[i].second) / denom;
    for (size_t t = 0; t < basis.size(); ++t) coeffs[t] = coeffs[t] + basis[t] * scale;
  }
  for (auto& c : coeffs) {
    require(c.is_integer(), Err::NonIntegerCoefficients, "interpolated coefficient not integer");
    cp.coeffs.push_back(c.num);
  }
  while (!cp.coeffs.empty() && cp.coeffs.back() == 0) cp.coeffs.pop_back();
  if (cp.coeffs.empty()) cp.coeffs.push_back(0);

  // Internal holdouts: the unused samples must already match.
  for (size_t i = needed; i < pts.size(); ++i) {
    i64 pred = cp.eval(pts[i].first);
    bool ok = (pred == pts[i].second);
    cp.holdouts.emplace_back(pts[i].first, pred, pts[i].second, ok);
    require(ok, Err::HoldoutMismatch,
            "internal holdout at q=" + std::to_string(pts[i].first) + " disagrees");
  }
  // External holdout with a fresh census.
  i64 fresh = census_at(holdout_q);
  i64 pred = cp.eval(holdout_q);
  bool ok = (pred == fresh);
  cp.holdouts.emplace_back(holdout_q, pred, fresh, ok);
  require(ok, Err::HoldoutMismatch, "holdout census at q=" + std::to_string(holdout_q) +
                                        " gives " + std::to_string(fresh) + ", polynomial gives " +
                                        std::to_string(pred));
  return cp;
}

UnimodularEvidence unimodular_check(const CountingPoly& p) {
  UnimodularEvidence ev;
  ev.nonnegative = true;
  for (i64 c : p.coeffs)
    if (c < 0) ev.nonnegative = false;
  if (!ev.nonnegative) return ev;
  std::vector<i64> work = p.coeffs;
  while (true) {
    size_t a = 0;
    while (a < work.size() && work[a] == 0) ++a;
    if (a == work.size()) break;
    size_t bend = a;
    while (bend < work.size() && work[bend] > 0) ++bend;
    for (size_t t = a; t < bend; ++t) --work[t];
    ev.runs.emplace_back(i64(a), i64(bend - a));
  }
  ev.single_center = true;
  for (size_t i = 1; i < ev.runs.size(); ++i) {
    // centers 2a + len - 1 must agree
    if (2 * ev.runs[i].first + ev.runs[i].second != 2 * ev.runs[0].first + ev.runs[0].second)
      ev.single_center = false;
  }
  return ev;
}

}  // namespace qclab
