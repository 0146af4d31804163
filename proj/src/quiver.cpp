#include "qclab/quiver.hpp"

#include <array>
#include <fstream>
#include <queue>
#include <sstream>

namespace qclab {

i64 ValuedQuiver::arrow_count(int i, int j) const {
  i64 c = 0;
  for (const auto& a : arrows)
    if (a.src == i && a.tgt == j) ++c;
  return c;
}

QuiverPtr build_valued_quiver(int n, Vec d, const std::vector<std::array<i64, 3>>& arrows) {
  require(n >= 0, Err::ValidationError, "negative vertex count");
  require(int(d.size()) == n, Err::ValidationError, "valuation list length != n");
  for (i64 v : d) require(v >= 1, Err::BadValuation, "valuations must be positive");

  auto q = std::make_shared<ValuedQuiver>();
  q->n = n;
  q->d = std::move(d);
  for (const auto& a : arrows) {
    require(a[0] >= 0 && a[0] < n && a[1] >= 0 && a[1] < n, Err::ValidationError,
            "arrow endpoint out of range");
    require(a[0] != a[1], Err::CyclicQuiver, "loop arrow");
    require(a[2] >= 1, Err::ValidationError, "arrow multiplicity must be >= 1");
    for (i64 c = 0; c < a[2]; ++c) q->arrows.push_back({int(a[0]), int(a[1])});
  }

  // All arrows between an unordered pair must share one direction.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(q->arrow_count(i, j) == 0 || q->arrow_count(j, i) == 0,
              Err::MixedArrowDirection,
              "arrows between " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                  " run both ways");

  // Topological order (Kahn); failure means a directed cycle.
  std::vector<int> indeg(n, 0);
  for (const auto& a : q->arrows) ++indeg[a.tgt];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < n; ++i)
    if (!indeg[i]) ready.push(i);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    q->topo.push_back(v);
    for (const auto& a : q->arrows)
      if (a.src == v && --indeg[a.tgt] == 0) ready.push(a.tgt);
  }
  require(int(q->topo.size()) == n, Err::CyclicQuiver, "quiver has a directed cycle");
  return q;
}

QuiverPtr opposite(const QuiverPtr& q) {
  std::vector<std::array<i64, 3>> arrows;
  for (const auto& a : q->arrows) arrows.push_back({a.tgt, a.src, 1});
  return build_valued_quiver(q->n, q->d, arrows);
}

MatrixBundle derived_matrices(const ValuedQuiver& q) {
  int n = q.n;
  MatrixBundle mb{IntMat(n, n), IntMat::diag(q.d), IntMat(n, n), IntMat(n, n), IntMat(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      i64 g = gcd_i64(q.d[i], q.d[j]);
      i64 fwd = q.arrow_count(i, j), back = q.arrow_count(j, i);
      if (fwd)
        mb.B(i, j) = cmul(fwd, q.d[j] / g);
      else if (back)
        mb.B(i, j) = -cmul(back, q.d[j] / g);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        mb.E_euler(i, j) = q.d[i];
        mb.Bminus(i, j) = 1;
        mb.Bplus(i, j) = 1;
      } else {
        mb.E_euler(i, j) = -pos_part(cmul(q.d[i], mb.B(i, j)));
        mb.Bminus(i, j) = -pos_part(mb.B(i, j));
        mb.Bplus(i, j) = -pos_part(-mb.B(i, j));
      }
    }
  require((mb.D * mb.B).is_skew_symmetric(), Err::Internal, "DB not skew");
  return mb;
}

Vec star_left(const MatrixBundle& mb, const Vec& e) { return mb.Bminus.mul_vec(e); }
Vec star_right(const MatrixBundle& mb, const Vec& e) { return mb.Bplus.mul_vec(e); }

Vec PrincipalPair::pad(const Vec& v) const {
  require(int(v.size()) == n || int(v.size()) == m, Err::ShapeMismatch, "pad length");
  Vec out(v);
  out.resize(size_t(m), 0);
  return out;
}

PrincipalPair principal_pair(const QuiverPtr& q) {
  PrincipalPair pp;
  pp.n = q->n;
  pp.m = 2 * q->n;
  pp.Q = q;

  Vec dt = q->d;
  dt.insert(dt.end(), q->d.begin(), q->d.end());
  std::vector<std::array<i64, 3>> arrows;
  for (const auto& a : q->arrows) arrows.push_back({a.src, a.tgt, 1});
  for (int i = 0; i < q->n; ++i) arrows.push_back({q->n + i, i, 1});
  pp.Qtilde = build_valued_quiver(pp.m, dt, arrows);
  pp.bundle_tilde = derived_matrices(*pp.Qtilde);
  pp.Dtilde = IntMat::diag(dt);

  MatrixBundle mb = derived_matrices(*q);
  pp.Btilde = IntMat(pp.m, pp.n);
  for (int i = 0; i < pp.n; ++i)
    for (int j = 0; j < pp.n; ++j) pp.Btilde(i, j) = mb.B(i, j);
  for (int i = 0; i < pp.n; ++i) pp.Btilde(pp.n + i, i) = 1;

  // Lambda = [[0, -D], [D, -DB]]
  pp.Lambda = IntMat(pp.m, pp.m);
  IntMat DB = mb.D * mb.B;
  for (int i = 0; i < pp.n; ++i) {
    pp.Lambda(i, pp.n + i) = -q->d[i];
    pp.Lambda(pp.n + i, i) = q->d[i];
    for (int j = 0; j < pp.n; ++j) pp.Lambda(pp.n + i, pp.n + j) = -DB(i, j);
  }
  require(pp.Lambda.is_skew_symmetric(), Err::Internal, "Lambda not skew");
  require(compatible(pp.Btilde, pp.Lambda), Err::Internal, "principal pair incompatible");
  return pp;
}

bool compatible(const IntMat& Btilde, const IntMat& Lambda, Vec* d_out) {
  int m = Btilde.rows(), n = Btilde.cols();
  if (Lambda.rows() != m || Lambda.cols() != m) return false;
  IntMat P = Btilde.transpose() * Lambda;  // n x m
  Vec d(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        if (P(i, j) <= 0) return false;
        d[i] = P(i, j);
      } else if (P(i, j) != 0) {
        return false;
      }
    }
  if (d_out) *d_out = d;
  return true;
}

MutationResult fz_mutate(const IntMat& Btilde, const IntMat& Lambda, int k) {
  int m = Btilde.rows(), n = Btilde.cols();
  require(k >= 0 && k < n, Err::FrozenDirection,
          "mutation direction " + std::to_string(k + 1) + " out of 1.." + std::to_string(n));
  require(compatible(Btilde, Lambda), Err::ValidationError, "incompatible pair");

  MutationResult r{IntMat(m, n), IntMat(m, m), IntMat(m, m), IntMat(n, n)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        r.Btilde(i, j) = -Btilde(i, j);
      else
        r.Btilde(i, j) =
            cadd(Btilde(i, j), cadd(cmul(pos_part(Btilde(i, k)), Btilde(k, j)),
                                    cmul(Btilde(i, k), pos_part(-Btilde(k, j)))));
    }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (j != k)
        r.E(i, j) = (i == j) ? 1 : 0;
      else if (i == k)
        r.E(i, j) = -1;
      else
        r.E(i, j) = pos_part(-Btilde(i, k));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != k)
        r.F(i, j) = (i == j) ? 1 : 0;
      else if (j == k)
        r.F(i, j) = -1;
      else
        r.F(i, j) = pos_part(Btilde(k, j));
    }

  require(r.Btilde == r.E * Btilde * r.F, Err::Internal, "EBF mismatch");
  r.Lambda = r.E.transpose() * Lambda * r.E;
  require(compatible(r.Btilde, r.Lambda), Err::Internal, "mutated pair incompatible");
  return r;
}

// ---------------------------------------------------------------------------
// File format

namespace {
[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& what) {
  fail(Err::ParseError, origin + ":" + std::to_string(line) + ": " + what);
}
}  // namespace

QuiverPtr parse_quiver_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  Vec d;
  std::vector<std::array<i64, 3>> arrows;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "n") {
      if (!(ls >> n) || n < 0) parse_fail(origin, lineno, "bad vertex count");
    } else if (key == "d") {
      if (n < 0) parse_fail(origin, lineno, "d before n");
      d.resize(size_t(n));
      for (int i = 0; i < n; ++i)
        if (!(ls >> d[i])) parse_fail(origin, lineno, "expected " + std::to_string(n) + " valuations");
    } else if (key == "arrow") {
      if (n < 0) parse_fail(origin, lineno, "arrow before n");
      i64 s, t, mult = 1;
      if (!(ls >> s >> t)) parse_fail(origin, lineno, "arrow needs source and target");
      ls >> mult;
      if (s < 1 || s > n || t < 1 || t > n)
        parse_fail(origin, lineno, "arrow vertex out of range 1.." + std::to_string(n));
      arrows.push_back({s - 1, t - 1, mult});
    } else {
      parse_fail(origin, lineno, "unknown directive '" + key + "'");
    }
  }
  if (n < 0) fail(Err::ParseError, origin + ": missing 'n' line");
  if (int(d.size()) != n) fail(Err::ParseError, origin + ": missing 'd' line");
  return build_valued_quiver(n, d, arrows);
}

QuiverPtr read_quiver(const std::string& path) {
  std::ifstream f(path);
  require(bool(f), Err::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_quiver_text(ss.str(), path);
}

std::string write_quiver_text(const ValuedQuiver& q) {
  std::ostringstream out;
  out << "n " << q.n << "\n";
  out << "d";
  for (i64 v : q.d) out << " " << v;
  out << "\n";
  for (const auto& a : q.arrows) out << "arrow " << a.src + 1 << " " << a.tgt + 1 << "\n";
  return out.str();
}

void write_quiver(const ValuedQuiver& q, const std::string& path) {
  std::ofstream f(path);
  require(bool(f), Err::ParseError, "cannot open " + path + " for writing");
  f << write_quiver_text(q);
}

}  // namespace qclab
