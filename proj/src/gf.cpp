#include "qclab/gf.hpp"

#include <algorithm>
#include <numeric>

namespace qclab {

namespace {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors c0..cn, trimmed.
void trim(std::vector<int>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, i64 p) {
  trim(a);
  int dm = int(m.size()) - 1;
  while (int(a.size()) - 1 >= dm) {
    int da = int(a.size()) - 1;
    i64 lead = a.back();  // m is monic
    int shift = da - dm;
    for (int i = 0; i <= dm; ++i) {
      i64 v = (a[i + shift] - lead * m[i]) % p;
      a[i + shift] = int((v + p) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, i64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = int((c[i + j] + i64(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(c), m, p);
}

// Divisibility test for monic divisor.
bool poly_divides(const std::vector<int>& div, std::vector<int> a, i64 p) {
  return poly_mod(std::move(a), div, p).empty();
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> fs;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

const FieldTower::Level& FieldTower::level(int deg) const {
  auto it = levels_.find(deg);
  require(it != levels_.end(), Err::NotASubfield,
          "degree " + std::to_string(deg) + " not in tower");
  return it->second;
}

std::vector<int> FieldTower::poly_from_code(int deg, int code) const {
  std::vector<int> f;
  f.reserve(deg);
  for (int i = 0; i < deg; ++i) {
    f.push_back(int(code % p_));
    code = int(code / p_);
  }
  trim(f);
  return f;
}

int FieldTower::code_from_poly(const std::vector<int>& poly) const {
  i64 code = 0, pw = 1;
  for (int c : poly) {
    code += c * pw;
    pw *= p_;
  }
  return int(code);
}

int FieldTower::add(int deg, int a, int b) const {
  i64 code = 0, pw = 1;
  for (int i = 0; i < deg; ++i) {
    i64 da = (a / pw) % p_, db = (b / pw) % p_;
    code += ((da + db) % p_) * pw;
    pw *= p_;
  }
  return int(code);
}

int FieldTower::neg(int deg, int a) const {
  i64 code = 0, pw = 1;
  for (int i = 0; i < deg; ++i) {
    i64 da = (a / pw) % p_;
    code += ((p_ - da) % p_) * pw;
    pw *= p_;
  }
  return int(code);
}

int FieldTower::sub(int deg, int a, int b) const { return add(deg, a, neg(deg, b)); }

int FieldTower::mul_slow(const Level& L, int a, int b) const {
  auto f = poly_mul_mod(poly_from_code(L.k, a), poly_from_code(L.k, b), L.defpoly, p_);
  return code_from_poly(f);
}

int FieldTower::mul(int deg, int a, int b) const {
  if (a == 0 || b == 0) return 0;
  const Level& L = level(deg);
  i64 e = i64(L.log_tab[a]) + L.log_tab[b];
  if (e >= L.q - 1) e -= L.q - 1;
  return L.exp_tab[e];
}

int FieldTower::inv(int deg, int a) const {
  require(a != 0, Err::DivisionByZero, "inverse of zero in " + field_name(deg));
  const Level& L = level(deg);
  i64 e = (L.q - 1 - L.log_tab[a]) % (L.q - 1);
  return L.exp_tab[e];
}

int FieldTower::pow(int deg, int a, i64 e) const {
  if (a == 0) {
    require(e > 0, Err::DivisionByZero, "0^0 or 0^negative");
    return 0;
  }
  const Level& L = level(deg);
  i64 ord = L.q - 1;
  i64 le = (i64(L.log_tab[a]) * (e % ord)) % ord;
  if (le < 0) le += ord;
  return L.exp_tab[le];
}

int FieldTower::embed(int from, int to, int a) const {
  if (from == to) {
    level(from);
    return a;
  }
  auto it = embed_.find({from, to});
  require(it != embed_.end(), Err::NotASubfield,
          field_name(from) + " does not embed in " + field_name(to));
  return it->second[a];
}

const std::vector<int>& FieldTower::basis_over(int big, int small) const {
  auto it = bases_.find({big, small});
  require(it != bases_.end(), Err::NotASubfield, "no basis for that pair");
  return it->second.basis;
}

const std::vector<int>& FieldTower::coords(int big, int small, int a) const {
  auto it = bases_.find({big, small});
  require(it != bases_.end(), Err::NotASubfield, "no coords for that pair");
  return it->second.coords[a];
}

int FieldTower::trace(int big, int small, int a) const {
  if (big == small) return a;
  // Sum of Frobenius conjugates a^(p^small)^t over t = 0..big/small-1,
  // pulled back through the fixed embedding.
  i64 qs = 1;
  for (int i = 0; i < small; ++i) qs *= p_;
  int acc = 0, cur = a;
  for (int t = 0; t < big / small; ++t) {
    acc = add(big, acc, cur);
    cur = pow(big, cur, qs);
  }
  // acc lies in the embedded small field; invert the embedding.
  const auto& emb = embed_.at({small, big});
  for (int c = 0; c < int(size(small)); ++c)
    if (emb[c] == acc) return c;
  fail(Err::Internal, "trace not in subfield");
}

std::string FieldTower::field_name(int deg) const {
  i64 q = 1;
  for (int i = 0; i < deg; ++i) q *= p_;
  return "GF(" + std::to_string(q) + ")";
}

std::shared_ptr<const FieldTower> FieldTower::build(i64 p, std::vector<int> degrees,
                                                    int max_degree) {
  require(is_prime(p), Err::NotPrime, std::to_string(p) + " is not prime");
  require(!degrees.empty(), Err::Internal, "empty degree set");
  // gcd-close the degree set and include 1 so pairwise embedding choices
  // always extend compatibly across the divisor lattice.
  std::set<int> degs(degrees.begin(), degrees.end());
  degs.insert(1);
  for (int k : degs) require(k >= 1, Err::DegreeTooLarge, "degree must be positive");
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(degs.begin(), degs.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        int g = int(gcd_i64(cur[i], cur[j]));
        if (!degs.count(g)) {
          degs.insert(g);
          grew = true;
        }
      }
  }

  auto tower = std::make_shared<FieldTower>();
  tower->p_ = p;
  tower->degs_.assign(degs.begin(), degs.end());

  for (int k : tower->degs_) {
    require(k <= max_degree, Err::DegreeTooLarge,
            "degree " + std::to_string(k) + " exceeds the desk-scale cap");
    Level L;
    L.k = k;
    L.q = 1;
    for (int i = 0; i < k; ++i) {
      L.q *= p;
      require(L.q <= (1 << 20), Err::DegreeTooLarge, "field too large for tables");
    }
    if (k == 1) {
      L.defpoly = {0, 1};  // x
    } else {
      // Least-code monic irreducible of degree k.
      bool found = false;
      for (i64 code = 0; code < L.q && !found; ++code) {
        std::vector<int> f;
        i64 c = code;
        for (int i = 0; i < k; ++i) {
          f.push_back(int(c % p));
          c /= p;
        }
        f.push_back(1);
        bool irred = true;
        // Trial division by all monic polynomials of degree 1..k/2.
        for (int dd = 1; dd <= k / 2 && irred; ++dd) {
          i64 nd = 1;
          for (int i = 0; i < dd; ++i) nd *= p;
          for (i64 dc = 0; dc < nd && irred; ++dc) {
            std::vector<int> g;
            i64 t = dc;
            for (int i = 0; i < dd; ++i) {
              g.push_back(int(t % p));
              t /= p;
            }
            g.push_back(1);
            if (poly_divides(g, f, p)) irred = false;
          }
        }
        if (irred) {
          L.defpoly = f;
          found = true;
        }
      }
      require(found, Err::Internal, "no irreducible polynomial found");
    }
    // Multiplication via discrete logs on a generator.
    L.exp_tab.assign(size_t(L.q - 1), 0);
    L.log_tab.assign(size_t(L.q), 0);
    auto fs = prime_factors(L.q - 1);
    int gen = 0;
    for (int c = 1; c < L.q && !gen; ++c) {
      if (L.q == 2) {
        gen = 1;
        break;
      }
      bool ok = true;
      for (i64 f : fs) {
        if (!ok) break;
        // c^((q-1)/f) by square-and-multiply with slow multiplication
        i64 e = (L.q - 1) / f;
        int acc = 1, base = c;
        while (e) {
          if (e & 1) acc = tower->mul_slow(L, acc, base);
          base = tower->mul_slow(L, base, base);
          e >>= 1;
        }
        if (acc == 1) ok = false;
      }
      if (ok) gen = c;
    }
    require(gen != 0, Err::Internal, "no multiplicative generator found");
    int cur = 1;
    for (i64 i = 0; i < L.q - 1; ++i) {
      L.exp_tab[i] = cur;
      L.log_tab[cur] = int(i);
      cur = tower->mul_slow(L, cur, gen);
    }
    require(cur == 1, Err::Internal, "generator order mismatch");
    tower->levels_[k] = std::move(L);
  }

  // Embeddings, in increasing target then increasing source order; each new
  // choice must commute with everything already fixed.
  for (int l : tower->degs_) {
    for (int k : tower->degs_) {
      if (k >= l || l % k != 0) continue;
      const Level& Lk = tower->levels_[k];
      const Level& Ll = tower->levels_[l];
      // Candidate images of the class of x: roots of defpoly_k in GF(p^l).
      int chosen = -1;
      for (int beta = 0; beta < Ll.q && chosen < 0; ++beta) {
        // Evaluate defpoly_k at beta inside GF(p^l) (Horner; coefficients are scalars).
        int val = 0;
        for (int i = int(Lk.defpoly.size()) - 1; i >= 0; --i) {
          val = tower->mul(l, val, beta);
          val = tower->add(l, val, Lk.defpoly[i] % int(p));
        }
        if (val != 0) continue;
        // Build the embedding table from beta.
        std::vector<int> tab(size_t(Lk.q));
        for (int a = 0; a < Lk.q; ++a) {
          int img = 0, pw = 1;  // pw = beta^i
          i64 c = a;
          for (int i = 0; i < k; ++i) {
            int digit = int(c % p);
            c /= p;
            if (digit) img = tower->add(l, img, tower->mul(l, digit, pw));
            if (i + 1 < k) pw = tower->mul(l, pw, beta);
          }
          tab[a] = img;
        }
        // Consistency with previously fixed embeddings through every proper
        // subfield present in the tower: checking on the ring generator x
        // suffices since both sides are ring maps fixing GF(p).
        bool ok = true;
        for (int kk : tower->degs_) {
          if (kk >= k || k % kk != 0 || kk == 1) continue;
          int gen_kk = int(p);  // class of x in GF(p^kk)
          int via = tab[tower->embed_.at({kk, k})[gen_kk]];
          int direct = tower->embed_.at({kk, l})[gen_kk];
          if (via != direct) {
            ok = false;
            break;
          }
        }
        if (ok) {
          tower->embed_[{k, l}] = std::move(tab);
          chosen = beta;
        }
      }
      require(chosen >= 0, Err::Internal, "no compatible embedding found");
    }
  }

  // Bases and coordinate tables for every divisor pair (including big==small).
  for (int big : tower->degs_) {
    for (int small : tower->degs_) {
      if (big % small != 0) continue;
      SubBasis sb;
      int t = big / small;
      const i64 qbig = tower->levels_[big].q;
      const i64 qsmall = tower->levels_[small].q;
      // Greedy basis scan; 1 always enters first.
      std::set<int> span = {0};
      for (int c = 0; c < qbig && int(sb.basis.size()) < t; ++c) {
        if (span.count(c)) continue;
        sb.basis.push_back(c);
        std::set<int> nspan;
        for (int s : span)
          for (int x = 0; x < qsmall; ++x) {
            int xe = (big == small) ? x : tower->embed_.at({small, big})[x];
            nspan.insert(tower->add(big, s, tower->mul(big, xe, c)));
          }
        span = std::move(nspan);
      }
      require(int(sb.basis.size()) == t && int(span.size()) == qbig, Err::Internal,
              "basis construction failed");
      require(sb.basis[0] == 1, Err::Internal, "basis must start at 1");
      // Coordinates by exhausting all tuples.
      sb.coords.assign(size_t(qbig), {});
      std::vector<int> tuple(size_t(t), 0);
      for (i64 count = 0;; ++count) {
        int val = 0;
        for (int u = 0; u < t; ++u) {
          if (!tuple[u]) continue;
          int xe = (big == small) ? tuple[u] : tower->embed_.at({small, big})[tuple[u]];
          val = tower->add(big, val, tower->mul(big, xe, sb.basis[u]));
        }
        bool all_zero = true;
        for (int u = 0; u < t; ++u)
          if (tuple[u]) all_zero = false;
        require(sb.coords[val].empty() || (val == 0 && all_zero), Err::Internal,
                "coords collision");
        if (sb.coords[val].empty()) sb.coords[val] = tuple;
        // next tuple
        int u = 0;
        while (u < t) {
          if (++tuple[u] < qsmall) break;
          tuple[u] = 0;
          ++u;
        }
        if (u == t) break;
      }
      sb.coords[0].assign(size_t(t), 0);
      tower->bases_[{big, small}] = std::move(sb);
    }
  }

  return tower;
}

// ---------------------------------------------------------------------------
// GFMat

GFMat GFMat::transpose() const {
  GFMat t(t_, deg_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

GFMat operator*(const GFMat& a, const GFMat& b) {
  require(a.same_field(b), Err::WrongField, "GFMat mul: field mismatch");
  require(a.c_ == b.r_, Err::ShapeMismatch, "GFMat mul: shape");
  GFMat m(a.t_, a.deg_, a.r_, b.c_);
  const FieldTower& T = *a.t_;
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      int v = a(i, k);
      if (!v) continue;
      for (int j = 0; j < b.c_; ++j) {
        int w = b(k, j);
        if (!w) continue;
        m(i, j) = T.add(a.deg_, m(i, j), T.mul(a.deg_, v, w));
      }
    }
  return m;
}

GFMat operator+(const GFMat& a, const GFMat& b) {
  require(a.same_field(b) && a.r_ == b.r_ && a.c_ == b.c_, Err::ShapeMismatch, "GFMat add");
  GFMat m(a.t_, a.deg_, a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.t_->add(a.deg_, a.a_[i], b.a_[i]);
  return m;
}

GFMat operator-(const GFMat& a, const GFMat& b) {
  require(a.same_field(b) && a.r_ == b.r_ && a.c_ == b.c_, Err::ShapeMismatch, "GFMat sub");
  GFMat m(a.t_, a.deg_, a.r_, a.c_);
  for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.t_->sub(a.deg_, a.a_[i], b.a_[i]);
  return m;
}

GFMat GFMat::scaled(int c) const {
  GFMat m(t_, deg_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = t_->mul(deg_, a_[i], c);
  return m;
}

GFMat GFMat::hstack(const GFMat& o) const {
  require(same_field(o) && r_ == o.r_, Err::ShapeMismatch, "hstack");
  GFMat m(t_, deg_, r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

GFMat GFMat::vstack(const GFMat& o) const {
  require(same_field(o) && c_ == o.c_, Err::ShapeMismatch, "vstack");
  GFMat m(t_, deg_, r_ + o.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
  for (int i = 0; i < o.r_; ++i)
    for (int j = 0; j < c_; ++j) m(r_ + i, j) = o(i, j);
  return m;
}

GFMat GFMat::block(int i0, int j0, int rows, int cols) const {
  require(i0 + rows <= r_ && j0 + cols <= c_, Err::ShapeMismatch, "block");
  GFMat m(t_, deg_, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
  return m;
}

void GFMat::set_block(int i0, int j0, const GFMat& b) {
  require(i0 + b.r_ <= r_ && j0 + b.c_ <= c_, Err::ShapeMismatch, "set_block");
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

bool GFMat::is_zero() const {
  for (int v : a_)
    if (v) return false;
  return true;
}

int GFMat::rref() {
  const FieldTower& T = *t_;
  int rank = 0;
  for (int col = 0; col < c_ && rank < r_; ++col) {
    int piv = -1;
    for (int i = rank; i < r_; ++i)
      if ((*this)(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < c_; ++j) std::swap((*this)(piv, j), (*this)(rank, j));
    int inv = T.inv(deg_, (*this)(rank, col));
    for (int j = 0; j < c_; ++j) (*this)(rank, j) = T.mul(deg_, (*this)(rank, j), inv);
    for (int i = 0; i < r_; ++i) {
      if (i == rank) continue;
      int f = (*this)(i, col);
      if (!f) continue;
      for (int j = 0; j < c_; ++j)
        (*this)(i, j) = T.sub(deg_, (*this)(i, j), T.mul(deg_, f, (*this)(rank, j)));
    }
    ++rank;
  }
  return rank;
}

int GFMat::rank() const {
  GFMat m = *this;
  return m.rref();
}

GFMat GFMat::row_space() const {
  GFMat m = *this;
  int rk = m.rref();
  return m.block(0, 0, rk, c_);
}

GFMat GFMat::null_space() const {
  GFMat m = *this;
  int rk = m.rref();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(c_, false);
  for (int i = 0, col = 0; i < rk; ++i) {
    while (col < c_ && !m(i, col)) ++col;
    pivot_col.push_back(col);
    is_pivot[col] = true;
  }
  GFMat basis(t_, deg_, c_ - rk, c_);
  int row = 0;
  for (int free = 0; free < c_; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = t_->from_int(deg_, 1);
    for (int i = 0; i < rk; ++i)
      basis(row, pivot_col[i]) = t_->neg(deg_, m(i, free));
    ++row;
  }
  return basis;
}

bool GFMat::is_invertible() const { return r_ == c_ && rank() == r_; }

GFMat GFMat::inverse() const {
  require(r_ == c_, Err::ShapeMismatch, "inverse of non-square");
  GFMat aug = hstack(identity(t_, deg_, r_));
  int rk = aug.rref();
  require(rk == r_, Err::SingularSystem, "matrix not invertible");
  return aug.block(0, r_, r_, r_);
}

bool GFMat::solve(const std::vector<int>& b, std::vector<int>* x) const {
  require(int(b.size()) == r_, Err::ShapeMismatch, "solve rhs");
  GFMat rhs(t_, deg_, r_, 1);
  for (int i = 0; i < r_; ++i) rhs(i, 0) = b[i];
  GFMat aug = hstack(rhs);
  int rk = aug.rref();
  // Inconsistent if a pivot lands in the rhs column.
  for (int i = 0; i < rk; ++i) {
    int col = 0;
    while (col <= c_ && !aug(i, col)) ++col;
    if (col == c_) return false;
  }
  if (x) {
    x->assign(size_t(c_), 0);
    for (int i = 0; i < rk; ++i) {
      int col = 0;
      while (col < c_ && !aug(i, col)) ++col;
      (*x)[col] = aug(i, c_);
    }
  }
  return true;
}

bool GFMat::rows_contained(const GFMat& rref_basis, const GFMat& rows) {
  require(rref_basis.same_field(rows) && rref_basis.c_ == rows.c_, Err::ShapeMismatch,
          "rows_contained");
  const FieldTower& T = *rows.t_;
  int deg = rows.deg_;
  // Reduce each candidate row against the RREF basis.
  std::vector<int> pivot_col(rref_basis.r_);
  for (int i = 0; i < rref_basis.r_; ++i) {
    int col = 0;
    while (col < rref_basis.c_ && !rref_basis(i, col)) ++col;
    pivot_col[i] = col;
  }
  for (int r = 0; r < rows.r_; ++r) {
    std::vector<int> v(rows.c_);
    for (int j = 0; j < rows.c_; ++j) v[j] = rows(r, j);
    for (int i = 0; i < rref_basis.r_; ++i) {
      int f = v[pivot_col[i]];
      if (!f) continue;
      for (int j = 0; j < rows.c_; ++j)
        v[j] = T.sub(deg, v[j], T.mul(deg, f, rref_basis(i, j)));
    }
    for (int j = 0; j < rows.c_; ++j)
      if (v[j]) return false;
  }
  return true;
}

std::string GFMat::render() const {
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

}  // namespace qclab
