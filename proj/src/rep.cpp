#include "qclab/rep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace qclab {

// ---------------------------------------------------------------------------
// Field-coordinate helpers. All restrictions of scalars use the tower's
// fixed bases with entry-major layout: the coordinates of D^n over a
// subfield list, for each D-entry, that entry's coordinates in basis_over.

namespace {

GFMat mult_matrix(const TowerPtr& T, int big, int small, int elem) {
  const auto& basis = T->basis_over(big, small);
  int t = int(basis.size());
  GFMat m(T, small, t, t);
  for (int u = 0; u < t; ++u) {
    const auto& co = T->coords(big, small, T->mul(big, elem, basis[u]));
    for (int r = 0; r < t; ++r) m(r, u) = co[r];
  }
  return m;
}

int elem_from_coords(const TowerPtr& T, int big, int small, const std::vector<int>& co) {
  const auto& basis = T->basis_over(big, small);
  require(co.size() == basis.size(), Err::Internal, "coords length");
  int acc = 0;
  for (size_t u = 0; u < basis.size(); ++u) {
    if (!co[u]) continue;
    acc = T->add(big, acc, T->mul(big, T->embed(small, big, co[u]), basis[u]));
  }
  return acc;
}

}  // namespace

GFMat blow_down(const GFMat& m, int small_deg) {
  const TowerPtr& T = m.tower();
  int big = m.deg();
  if (big == small_deg) return m;
  int t = big / small_deg;
  GFMat out(T, small_deg, m.rows() * t, m.cols() * t);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j)) continue;
      out.set_block(i * t, j * t, mult_matrix(T, big, small_deg, m(i, j)));
    }
  return out;
}

GFMat embed_entries(const GFMat& m, int big_deg) {
  const TowerPtr& T = m.tower();
  GFMat out(T, big_deg, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = T->embed(m.deg(), big_deg, m(i, j));
  return out;
}

namespace {

/// Columns express the product basis (u over basis_over(vdeg,gdeg),
/// w over basis_over(gdeg,s)) in the direct basis_over(vdeg,s) coordinates.
GFMat prod_to_direct(const TowerPtr& T, int s, int vdeg, int gdeg) {
  const auto& outer = T->basis_over(vdeg, gdeg);
  const auto& inner = T->basis_over(gdeg, s);
  int d = vdeg / s;
  GFMat conv(T, s, d, d);
  int col = 0;
  for (int u = 0; u < int(outer.size()); ++u)
    for (int w = 0; w < int(inner.size()); ++w, ++col) {
      int elem = T->mul(vdeg, outer[u], T->embed(gdeg, vdeg, inner[w]));
      const auto& co = T->coords(vdeg, s, elem);
      for (int r = 0; r < d; ++r) conv(r, col) = co[r];
    }
  return conv;
}

GFMat blockdiag_copies(const GFMat& b, int copies) {
  GFMat out(b.tower(), b.deg(), b.rows() * copies, b.cols() * copies);
  for (int k = 0; k < copies; ++k) out.set_block(k * b.rows(), k * b.cols(), b);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Context and representations

CtxPtr make_context(QuiverPtr q, TowerPtr tower, int s) {
  auto ctx = std::make_shared<RepContext>();
  ctx->Q = q;
  ctx->tower = std::move(tower);
  ctx->s = s;
  ctx->mats = derived_matrices(*q);
  require(ctx->tower->has(s), Err::NotASubfield, "tower lacks the base field");
  for (int i = 0; i < q->n; ++i)
    require(ctx->tower->has(ctx->vdeg(i)), Err::NotASubfield, "tower lacks a vertex field");
  return ctx;
}

CtxPtr make_context(QuiverPtr q, i64 p, int s) {
  std::vector<int> degs = {s};
  for (int i = 0; i < q->n; ++i) degs.push_back(s * int(q->d[i]));
  for (const auto& a : q->arrows)
    degs.push_back(s * int(gcd_i64(q->d[a.src], q->d[a.tgt])));
  return make_context(q, FieldTower::build(p, degs), s);
}

i64 Rep::dim_total_over_base() const {
  i64 t = 0;
  for (int i = 0; i < ctx->Q->n; ++i) t = cadd(t, cmul(dims[i], ctx->Q->d[i]));
  return t;
}

bool Rep::is_zero_rep() const {
  for (i64 v : dims)
    if (v) return false;
  return true;
}

std::string Rep::key() const {
  std::string k;
  for (i64 v : dims) k += std::to_string(v) + ",";
  for (const auto& m : arrow) {
    k += "|";
    for (int v : m.data()) k += std::to_string(v) + ",";
  }
  return k;
}

Rep build_rep(const CtxPtr& ctx, Vec dims, std::vector<GFMat> arrow_maps) {
  require(int(dims.size()) == ctx->Q->n, Err::ShapeMismatch, "dims length");
  for (i64 v : dims) require(v >= 0, Err::ValidationError, "negative dimension");
  require(arrow_maps.size() == ctx->Q->arrows.size(), Err::ShapeMismatch,
          "one matrix per arrow required");
  for (size_t a = 0; a < arrow_maps.size(); ++a) {
    const GFMat& m = arrow_maps[a];
    require(m.tower() == ctx->tower, Err::WrongField, "matrix from another tower");
    require(m.deg() == ctx->gdeg(int(a)), Err::WrongField, "matrix over the wrong field");
    require(m.rows() == ctx->arrow_rows(int(a), dims) && m.cols() == ctx->arrow_cols(int(a), dims),
            Err::ShapeMismatch, "arrow matrix shape");
    i64 qg = ctx->tower->size(m.deg());
    for (int v : m.data()) require(v >= 0 && v < qg, Err::WrongField, "entry code out of range");
  }
  return Rep{ctx, std::move(dims), std::move(arrow_maps)};
}

Rep zero_rep(const CtxPtr& ctx) {
  Vec dims(size_t(ctx->Q->n), 0);
  std::vector<GFMat> maps;
  for (size_t a = 0; a < ctx->Q->arrows.size(); ++a)
    maps.emplace_back(ctx->tower, ctx->gdeg(int(a)), 0, 0);
  return Rep{ctx, std::move(dims), std::move(maps)};
}

Rep direct_sum(const Rep& a, const Rep& b) {
  require(a.ctx == b.ctx, Err::WrongField, "direct sum across contexts");
  Vec dims(a.dims.size());
  for (size_t i = 0; i < dims.size(); ++i) dims[i] = cadd(a.dims[i], b.dims[i]);
  std::vector<GFMat> maps;
  for (size_t k = 0; k < a.arrow.size(); ++k) {
    GFMat m(a.ctx->tower, a.ctx->gdeg(int(k)), a.ctx->arrow_rows(int(k), dims),
            a.ctx->arrow_cols(int(k), dims));
    m.set_block(0, 0, a.arrow[k]);
    m.set_block(a.arrow[k].rows(), a.arrow[k].cols(), b.arrow[k]);
    maps.push_back(std::move(m));
  }
  return Rep{a.ctx, std::move(dims), std::move(maps)};
}

// ---------------------------------------------------------------------------
// Morphisms

bool is_morphism(const Rep& V, const Rep& W, const Morphism& th) {
  const RepContext& C = *V.ctx;
  if (V.ctx != W.ctx || int(th.theta.size()) != C.Q->n) return false;
  for (int i = 0; i < C.Q->n; ++i) {
    const GFMat& t = th.theta[i];
    if (t.deg() != C.vdeg(i) || t.rows() != int(W.dims[i]) || t.cols() != int(V.dims[i]))
      return false;
  }
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    const Arrow& ar = C.Q->arrows[a];
    int g = C.gdeg(int(a));
    GFMat lhs = blow_down(th.theta[ar.tgt], g) * V.arrow[a];
    GFMat rhs = W.arrow[a] * blow_down(th.theta[ar.src], g);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Morphism identity_morphism(const Rep& V) {
  Morphism th;
  for (int i = 0; i < V.ctx->Q->n; ++i)
    th.theta.push_back(GFMat::identity(V.ctx->tower, V.ctx->vdeg(i), int(V.dims[i])));
  return th;
}

Morphism compose(const Rep& U, const Rep& V, const Rep& W, const Morphism& g,
                 const Morphism& f) {
  (void)U;
  (void)V;
  (void)W;
  Morphism th;
  for (size_t i = 0; i < f.theta.size(); ++i) th.theta.push_back(g.theta[i] * f.theta[i]);
  return th;
}

bool is_invertible_morphism(const Morphism& th) {
  for (const auto& m : th.theta)
    if (m.rows() != m.cols() || !m.is_invertible()) return false;
  return true;
}

namespace {

Morphism scale_morphism(const RepContext& C, const Morphism& th, int c_base) {
  Morphism out;
  for (int i = 0; i < C.Q->n; ++i)
    out.theta.push_back(th.theta[i].scaled(C.tower->embed(C.s, C.vdeg(i), c_base)));
  return out;
}

Morphism add_morphisms(const Morphism& a, const Morphism& b) {
  Morphism out;
  for (size_t i = 0; i < a.theta.size(); ++i) out.theta.push_back(a.theta[i] + b.theta[i]);
  return out;
}


}  // namespace

Morphism zero_morphism(const Rep& V, const Rep& W) {
  Morphism th;
  for (int i = 0; i < V.ctx->Q->n; ++i)
    th.theta.emplace_back(V.ctx->tower, V.ctx->vdeg(i), int(W.dims[i]), int(V.dims[i]));
  return th;
}

Morphism combine_hom_basis(const Rep& V, const Rep& W, const std::vector<Morphism>& basis,
                           const std::vector<int>& combo) {
  Morphism acc = zero_morphism(V, W);
  for (size_t t = 0; t < basis.size(); ++t)
    if (combo[t]) acc = add_morphisms(acc, scale_morphism(*V.ctx, basis[t], combo[t]));
  return acc;
}

bool is_zero_morphism(const Morphism& th) {
  for (const auto& m : th.theta)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

std::vector<int> flatten_morphism(const RepContext& C, const Morphism& th) {
  std::vector<int> flat;
  for (int i = 0; i < C.Q->n; ++i) {
    const GFMat& m = th.theta[i];
    int vd = C.vdeg(i);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const auto& co = C.tower->coords(vd, C.s, m(r, c));
        flat.insert(flat.end(), co.begin(), co.end());
      }
  }
  return flat;
}

}  // namespace

i64 euler_form(const RepContext& ctx, const Vec& v, const Vec& w) {
  return ctx.mats.E_euler.pair(v, w);
}

HomBasis hom_basis(const Rep& V, const Rep& W) {
  require(V.ctx == W.ctx, Err::WrongField, "hom across contexts");
  const RepContext& C = *V.ctx;
  const TowerPtr& T = C.tower;
  int n = C.Q->n;

  // Unknown layout: per vertex, entry-major theta entries, then base-field
  // coordinate within the entry.
  std::vector<int> voffset(n + 1, 0);
  for (int i = 0; i < n; ++i)
    voffset[i + 1] = voffset[i] + int(W.dims[i] * V.dims[i]) * (C.vdeg(i) / C.s);
  int nunk = voffset[n];

  // Constraint rows: per arrow, per target G-entry, per base coordinate.
  std::vector<int> aoffset(C.Q->arrows.size() + 1, 0);
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    int g = C.gdeg(int(a));
    int rows = C.arrow_rows(int(a), W.dims);
    int cols = C.arrow_cols(int(a), V.dims);
    aoffset[a + 1] = aoffset[a] + rows * cols * (g / C.s);
  }
  int neq = aoffset[C.Q->arrows.size()];

  GFMat sys(T, C.s, neq ? neq : 1, nunk ? nunk : 1);
  for (int i = 0; i < n; ++i) {
    int vd = C.vdeg(i);
    const auto& base = T->basis_over(vd, C.s);
    int per = vd / C.s;
    for (int r = 0; r < int(W.dims[i]); ++r)
      for (int c = 0; c < int(V.dims[i]); ++c)
        for (int w = 0; w < per; ++w) {
          int unk = voffset[i] + (r * int(V.dims[i]) + c) * per + w;
          // Elementary theta at vertex i.
          GFMat el(T, vd, int(W.dims[i]), int(V.dims[i]));
          el(r, c) = base[w];
          for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
            const Arrow& ar = C.Q->arrows[a];
            if (ar.src != i && ar.tgt != i) continue;
            int g = C.gdeg(int(a));
            GFMat contrib(T, g, C.arrow_rows(int(a), W.dims), C.arrow_cols(int(a), V.dims));
            if (ar.tgt == i) contrib = contrib + blow_down(el, g) * V.arrow[a];
            if (ar.src == i) contrib = contrib - W.arrow[a] * blow_down(el, g);
            int gs = g / C.s;
            for (int rr = 0; rr < contrib.rows(); ++rr)
              for (int cc = 0; cc < contrib.cols(); ++cc) {
                const auto& co = T->coords(g, C.s, contrib(rr, cc));
                int row0 = aoffset[a] + (rr * contrib.cols() + cc) * gs;
                for (int k = 0; k < gs; ++k) sys(row0 + k, unk) = co[k];
              }
          }
        }
  }

  HomBasis hb;
  hb.dims_v = V.dims;
  hb.dims_w = W.dims;
  if (nunk == 0) {
    hb.dimF = 0;
    return hb;
  }
  GFMat null = sys.null_space();
  hb.dimF = null.rows();
  for (int b = 0; b < null.rows(); ++b) {
    Morphism th = zero_morphism(V, W);
    for (int i = 0; i < n; ++i) {
      int vd = C.vdeg(i);
      int per = vd / C.s;
      for (int r = 0; r < int(W.dims[i]); ++r)
        for (int c = 0; c < int(V.dims[i]); ++c) {
          std::vector<int> co(size_t(per), 0);
          for (int w = 0; w < per; ++w)
            co[w] = null(b, voffset[i] + (r * int(V.dims[i]) + c) * per + w);
          th.theta[i](r, c) = elem_from_coords(T, vd, C.s, co);
        }
    }
    hb.basis.push_back(std::move(th));
  }
  return hb;
}

i64 hom_dim(const Rep& V, const Rep& W) { return hom_basis(V, W).dimF; }

i64 ext_dim(const Rep& V, const Rep& W) {
  i64 e = hom_dim(V, W) - euler_form(*V.ctx, V.dims, W.dims);
  require(e >= 0, Err::Internal, "negative ext dimension");
  return e;
}

// ---------------------------------------------------------------------------
// Extensions

ExtSpace ext_space(const Rep& V, const Rep& W) {
  require(V.ctx == W.ctx, Err::WrongField, "ext across contexts");
  const RepContext& C = *V.ctx;
  const TowerPtr& T = C.tower;
  int n = C.Q->n;

  ExtSpace es;
  es.V = V;
  es.W = W;
  // Cocycle coordinates: per arrow, a G-matrix V_src -> W_tgt, flattened as
  // entry-major then base-field coordinate.
  es.z_arrow_offset.assign(C.Q->arrows.size() + 1, 0);
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    int g = C.gdeg(int(a));
    int rows = C.arrow_rows(int(a), W.dims);
    int cols = C.arrow_cols(int(a), V.dims);
    es.z_arrow_offset[a + 1] = es.z_arrow_offset[a] + rows * cols * (g / C.s);
  }
  int zdim = es.z_arrow_offset[C.Q->arrows.size()];

  // Coboundary image: columns are the hom-style contributions of elementary
  // vertex maps V_i -> W_i.
  std::vector<std::vector<int>> cob;
  for (int i = 0; i < n; ++i) {
    int vd = C.vdeg(i);
    const auto& base = T->basis_over(vd, C.s);
    int per = vd / C.s;
    for (int r = 0; r < int(W.dims[i]); ++r)
      for (int c = 0; c < int(V.dims[i]); ++c)
        for (int w = 0; w < per; ++w) {
          GFMat el(T, vd, int(W.dims[i]), int(V.dims[i]));
          el(r, c) = base[w];
          std::vector<int> col(size_t(zdim), 0);
          for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
            const Arrow& ar = C.Q->arrows[a];
            if (ar.src != i && ar.tgt != i) continue;
            int g = C.gdeg(int(a));
            GFMat contrib(T, g, C.arrow_rows(int(a), W.dims), C.arrow_cols(int(a), V.dims));
            if (ar.tgt == i) contrib = contrib + blow_down(el, g) * V.arrow[a];
            if (ar.src == i) contrib = contrib - W.arrow[a] * blow_down(el, g);
            int gs = g / C.s;
            for (int rr = 0; rr < contrib.rows(); ++rr)
              for (int cc = 0; cc < contrib.cols(); ++cc) {
                const auto& co = T->coords(g, C.s, contrib(rr, cc));
                for (int k = 0; k < gs; ++k)
                  col[es.z_arrow_offset[a] + (rr * contrib.cols() + cc) * gs + k] = co[k];
              }
          }
          cob.push_back(std::move(col));
        }
  }

  GFMat im(T, C.s, int(cob.size()) ? int(cob.size()) : 1, zdim ? zdim : 1);
  for (size_t r = 0; r < cob.size(); ++r)
    for (int c = 0; c < zdim; ++c) im(int(r), c) = cob[r][c];
  int rank = im.rref();
  es.dimF = zdim - rank;
  require(es.dimF == ext_dim(V, W), Err::Internal, "ext dimension mismatch with Euler form");

  // Complement: unit cocycles at the non-pivot coordinates of the image.
  std::vector<bool> is_pivot(size_t(zdim), false);
  for (int i = 0, col = 0; i < rank; ++i) {
    while (col < zdim && !im(i, col)) ++col;
    is_pivot[col] = true;
  }
  for (int c = 0; c < zdim; ++c)
    if (!is_pivot[c]) {
      std::vector<int> e(size_t(zdim), 0);
      e[c] = T->from_int(C.s, 1);
      es.rep_cocycles.push_back(std::move(e));
    }
  return es;
}

Rep ExtSpace::middle_term(const std::vector<int>& combo, Morphism* incl, Morphism* proj) const {
  const RepContext& C = *V.ctx;
  const TowerPtr& T = C.tower;
  require(int(combo.size()) == dimF, Err::ShapeMismatch, "combo length");
  int zdim = z_arrow_offset.back();
  std::vector<int> flat(size_t(zdim), 0);
  for (int t = 0; t < dimF; ++t) {
    if (!combo[t]) continue;
    for (int k = 0; k < zdim; ++k)
      flat[k] = T->add(C.s, flat[k], T->mul(C.s, combo[t], rep_cocycles[t][k]));
  }

  Vec dims(W.dims);
  for (size_t i = 0; i < dims.size(); ++i) dims[i] = cadd(dims[i], V.dims[i]);
  std::vector<GFMat> maps;
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    int g = C.gdeg(int(a));
    int gs = g / C.s;
    int rW = C.arrow_rows(int(a), W.dims), cW = C.arrow_cols(int(a), W.dims);
    int rV = C.arrow_rows(int(a), V.dims), cV = C.arrow_cols(int(a), V.dims);
    GFMat m(T, g, rW + rV, cW + cV);
    m.set_block(0, 0, W.arrow[a]);
    m.set_block(rW, cW, V.arrow[a]);
    GFMat xi(T, g, rW, cV);
    for (int rr = 0; rr < rW; ++rr)
      for (int cc = 0; cc < cV; ++cc) {
        std::vector<int> co(size_t(gs), 0);
        for (int k = 0; k < gs; ++k)
          co[k] = flat[z_arrow_offset[a] + (rr * cV + cc) * gs + k];
        xi(rr, cc) = elem_from_coords(T, g, C.s, co);
      }
    m.set_block(0, cW, xi);
    maps.push_back(std::move(m));
  }
  Rep M = build_rep(V.ctx, dims, std::move(maps));
  if (incl) {
    incl->theta.clear();
    for (int i = 0; i < C.Q->n; ++i) {
      GFMat t(T, C.vdeg(i), int(M.dims[i]), int(W.dims[i]));
      t.set_block(0, 0, GFMat::identity(T, C.vdeg(i), int(W.dims[i])));
      incl->theta.push_back(std::move(t));
    }
  }
  if (proj) {
    proj->theta.clear();
    for (int i = 0; i < C.Q->n; ++i) {
      GFMat t(T, C.vdeg(i), int(V.dims[i]), int(M.dims[i]));
      t.set_block(0, int(W.dims[i]), GFMat::identity(T, C.vdeg(i), int(V.dims[i])));
      proj->theta.push_back(std::move(t));
    }
  }
  return M;
}

// ---------------------------------------------------------------------------
// Canonical representations

Rep simple_rep(const CtxPtr& ctx, int i) {
  require(i >= 0 && i < ctx->Q->n, Err::ValidationError, "vertex out of range");
  Rep r = zero_rep(ctx);
  r.dims[i] = 1;
  for (size_t a = 0; a < ctx->Q->arrows.size(); ++a)
    r.arrow[a] = GFMat(ctx->tower, ctx->gdeg(int(a)), ctx->arrow_rows(int(a), r.dims),
                       ctx->arrow_cols(int(a), r.dims));
  return r;
}

namespace {

/// All projectives, built by induction along the topological order, plus the
/// right-multiplication morphisms used by the transpose construction.
struct ProjSys {
  CtxPtr ctx;
  std::vector<Rep> P;
  // Entry offset of each incoming arrow's summand at each vertex, per root.
  std::vector<std::vector<std::map<int, int>>> offset;

  explicit ProjSys(const CtxPtr& c) : ctx(c) {
    const ValuedQuiver& Q = *c->Q;
    for (int root = 0; root < Q.n; ++root) {
      Vec dims(size_t(Q.n), 0);
      std::vector<std::map<int, int>> off(size_t(Q.n));
      for (int j : Q.topo) {
        int at = (j == root) ? 1 : 0;
        for (size_t a = 0; a < Q.arrows.size(); ++a) {
          if (Q.arrows[a].tgt != j) continue;
          int u = Q.arrows[a].src;
          off[j][int(a)] = at;
          at += int(dims[u]) * (c->vdeg(u) / c->gdeg(int(a)));
        }
        dims[j] = at;
      }
      std::vector<GFMat> maps;
      for (size_t a = 0; a < Q.arrows.size(); ++a) {
        int u = Q.arrows[a].src, j = Q.arrows[a].tgt;
        int g = c->gdeg(int(a));
        GFMat m(c->tower, g, c->arrow_rows(int(a), dims), c->arrow_cols(int(a), dims));
        int tj = c->vdeg(j) / g;
        for (int r = 0; r < int(dims[u]) * (c->vdeg(u) / g); ++r)
          m((off[j][int(a)] + r) * tj, r) = c->tower->from_int(g, 1);
        maps.push_back(std::move(m));
      }
      P.push_back(Rep{c, dims, std::move(maps)});
      offset.push_back(std::move(off));
    }
  }

  /// Extends a starting vertex map to a morphism src -> dst between
  /// induced representations (both built by the same recursion).
  Morphism extend(int start, const GFMat& at_start, const Rep& src, const Rep& dst,
                  const std::vector<std::map<int, int>>& src_off,
                  const std::vector<std::map<int, int>>& dst_off) const {
    const ValuedQuiver& Q = *ctx->Q;
    Morphism th;
    th.theta.resize(size_t(Q.n));
    for (int i = 0; i < Q.n; ++i)
      th.theta[i] = GFMat(ctx->tower, ctx->vdeg(i), int(dst.dims[i]), int(src.dims[i]));
    bool seen_start = false;
    for (int j : Q.topo) {
      if (j == start) {
        th.theta[j] = at_start;
        seen_start = true;
        continue;
      }
      if (!seen_start || src.dims[j] == 0) continue;
      GFMat m(ctx->tower, ctx->vdeg(j), int(dst.dims[j]), int(src.dims[j]));
      for (size_t a = 0; a < Q.arrows.size(); ++a) {
        if (Q.arrows[a].tgt != j) continue;
        int u = Q.arrows[a].src;
        if (src.dims[u] == 0) continue;
        int g = ctx->gdeg(int(a));
        GFMat block = embed_entries(blow_down(th.theta[u], g), ctx->vdeg(j));
        m.set_block(dst_off[j].at(int(a)), src_off[j].at(int(a)), block);
      }
      th.theta[j] = std::move(m);
    }
    return th;
  }

  Morphism right_mult_scalar(int k, int c_vdeg) const {
    GFMat at(ctx->tower, ctx->vdeg(k), 1, 1);
    at(0, 0) = c_vdeg;
    Morphism th = extend(k, at, P[k], P[k], offset[k], offset[k]);
    require(is_morphism(P[k], P[k], th), Err::Internal, "scalar action not a morphism");
    return th;
  }

  /// For arrow a: i -> j, right multiplication P_j -> P_i.
  Morphism right_mult_arrow(int a) const {
    int i = ctx->Q->arrows[a].src, j = ctx->Q->arrows[a].tgt;
    GFMat at(ctx->tower, ctx->vdeg(j), int(P[i].dims[j]), 1);
    at(offset[i][j].at(a), 0) = ctx->tower->from_int(ctx->vdeg(j), 1);
    Morphism th = extend(j, at, P[j], P[i], offset[j], offset[i]);
    require(is_morphism(P[j], P[i], th), Err::Internal, "arrow action not a morphism");
    return th;
  }
};

/// Trace-form Gram matrix of D^copies over the subfield, block diagonal.
GFMat trace_gram(const TowerPtr& T, int big, int small, int copies) {
  const auto& basis = T->basis_over(big, small);
  int t = int(basis.size());
  GFMat g(T, small, t, t);
  for (int u = 0; u < t; ++u)
    for (int v = 0; v < t; ++v) g(u, v) = T->trace(big, small, T->mul(big, basis[u], basis[v]));
  return blockdiag_copies(g, copies);
}

/// Linear duality: representation of the opposite quiver -> representation
/// of this quiver, via trace-form adjoints.
Rep dualize(const Rep& Xop, const CtxPtr& ctx) {
  const ValuedQuiver& Q = *ctx->Q;
  require(int(Xop.dims.size()) == Q.n, Err::ShapeMismatch, "dualize dims");
  std::vector<GFMat> maps;
  for (size_t a = 0; a < Q.arrows.size(); ++a) {
    int u = Q.arrows[a].src, w = Q.arrows[a].tgt;
    int g = ctx->gdeg(int(a));
    const GFMat& N = Xop.arrow[a];  // maps X_w -> X_u in the opposite quiver
    GFMat Su = trace_gram(ctx->tower, ctx->vdeg(u), g, int(Xop.dims[u]));
    GFMat Sw = trace_gram(ctx->tower, ctx->vdeg(w), g, int(Xop.dims[w]));
    maps.push_back(Sw.inverse() * N.transpose() * Su);
  }
  return build_rep(ctx, Xop.dims, std::move(maps));
}

CtxPtr opposite_context(const CtxPtr& ctx) {
  return make_context(opposite(ctx->Q), ctx->tower, ctx->s);
}

}  // namespace

Rep projective_rep(const CtxPtr& ctx, int i) {
  require(i >= 0 && i < ctx->Q->n, Err::ValidationError, "vertex out of range");
  return ProjSys(ctx).P[i];
}

Rep injective_rep(const CtxPtr& ctx, int i) {
  require(i >= 0 && i < ctx->Q->n, Err::ValidationError, "vertex out of range");
  CtxPtr op = opposite_context(ctx);
  Rep pop = projective_rep(op, i);
  return dualize(pop, ctx);
}

// ---------------------------------------------------------------------------
// Subobjects and quotients

namespace {

/// Arrow map in direct base-field coordinates (vertex bases over s).
GFMat arrow_matrix_F(const Rep& V, int a) {
  const RepContext& C = *V.ctx;
  int g = C.gdeg(a);
  const Arrow& ar = C.Q->arrows[a];
  GFMat core = blow_down(V.arrow[a], C.s);
  GFMat cv_src = blockdiag_copies(prod_to_direct(C.tower, C.s, C.vdeg(ar.src), g),
                                  int(V.dims[ar.src]));
  GFMat cv_tgt = blockdiag_copies(prod_to_direct(C.tower, C.s, C.vdeg(ar.tgt), g),
                                  int(V.dims[ar.tgt]));
  return cv_tgt * core * cv_src.inverse();
}

/// Base-field rows spanning the same subspace as the vertex-field rows.
GFMat subspace_rows_F(const RepContext& C, int vertex, const GFMat& rows_vdeg) {
  int vd = C.vdeg(vertex);
  GFMat out(C.tower, C.s, rows_vdeg.rows() * (vd / C.s), rows_vdeg.cols() * (vd / C.s));
  for (int r = 0; r < rows_vdeg.rows(); ++r) {
    GFMat one(C.tower, vd, 1, rows_vdeg.cols());
    for (int c = 0; c < rows_vdeg.cols(); ++c) one(0, c) = rows_vdeg(r, c);
    out.set_block(r * (vd / C.s), 0, blow_down(one, C.s));
  }
  return out;
}

/// Vertex-field row vector from direct base-field coordinates.
GFMat row_from_F(const RepContext& C, int vertex, const std::vector<int>& flat) {
  int vd = C.vdeg(vertex);
  int per = vd / C.s;
  GFMat row(C.tower, vd, 1, int(flat.size()) / per);
  for (int c = 0; c < row.cols(); ++c) {
    std::vector<int> co(flat.begin() + c * per, flat.begin() + (c + 1) * per);
    row(0, c) = elem_from_coords(C.tower, vd, C.s, co);
  }
  return row;
}

/// Extract a vertex-field basis from an F-stable, vertex-field-stable span.
GFMat extract_vertex_basis(const RepContext& C, int vertex, const GFMat& f_rows) {
  int vd = C.vdeg(vertex);
  int per = vd / C.s;
  int ncols = f_rows.cols();
  std::vector<GFMat> actions;
  const auto& base = C.tower->basis_over(vd, C.s);
  for (int b : base)
    actions.push_back(blockdiag_copies(mult_matrix(C.tower, vd, C.s, b), ncols / per));
  GFMat span(C.tower, C.s, 0, ncols);
  std::vector<std::vector<int>> picked;
  for (int r = 0; r < f_rows.rows(); ++r) {
    std::vector<int> v(ncols);
    for (int c = 0; c < ncols; ++c) v[c] = f_rows(r, c);
    GFMat candidate(C.tower, C.s, 1, ncols);
    for (int c = 0; c < ncols; ++c) candidate(0, c) = v[c];
    GFMat test = span.rows() ? span.vstack(candidate) : candidate;
    if (test.rank() == span.rows()) continue;  // already in span
    picked.push_back(v);
    for (const auto& act : actions) {
      GFMat img(C.tower, C.s, 1, ncols);
      std::vector<int> x;
      // img = act * v (column), stored as a row
      for (int i = 0; i < ncols; ++i) {
        int acc = 0;
        for (int j = 0; j < ncols; ++j)
          if (act(i, j) && v[j]) acc = C.tower->add(C.s, acc, C.tower->mul(C.s, act(i, j), v[j]));
        img(0, i) = acc;
      }
      span = span.rows() ? span.vstack(img) : img;
    }
    int rk = span.rref();
    span = span.block(0, 0, rk, ncols);
  }
  GFMat basis(C.tower, vd, int(picked.size()), ncols / per);
  for (size_t r = 0; r < picked.size(); ++r) {
    GFMat row = row_from_F(C, vertex, picked[r]);
    for (int c = 0; c < row.cols(); ++c) basis(int(r), c) = row(0, c);
  }
  return basis;
}

}  // namespace

Rep sub_rep(const Rep& V, const SubspaceData& sub, Morphism* inclusion) {
  const RepContext& C = *V.ctx;
  require(int(sub.size()) == C.Q->n, Err::ShapeMismatch, "subspace list length");
  Vec dims(size_t(C.Q->n));
  Morphism incl;
  for (int i = 0; i < C.Q->n; ++i) {
    const GFMat& rows = sub[i];
    require(rows.deg() == C.vdeg(i) && rows.cols() == int(V.dims[i]), Err::ShapeMismatch,
            "subspace rows shape at vertex " + std::to_string(i + 1));
    require(rows.rank() == rows.rows(), Err::NotASubrep, "subspace rows not independent");
    dims[i] = rows.rows();
    incl.theta.push_back(rows.transpose());
  }
  std::vector<GFMat> maps;
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    const Arrow& ar = C.Q->arrows[a];
    int g = C.gdeg(int(a));
    GFMat inc_t = blow_down(incl.theta[ar.tgt], g);
    GFMat rhs = V.arrow[a] * blow_down(incl.theta[ar.src], g);
    // Solve inc_t * X = rhs column by column; failure means not arrow-closed.
    GFMat X(C.tower, g, inc_t.cols(), rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
      std::vector<int> b(size_t(rhs.rows()));
      for (int r = 0; r < rhs.rows(); ++r) b[r] = rhs(r, c);
      std::vector<int> x;
      require(inc_t.solve(b, &x), Err::NotASubrep,
              "subspaces not closed under arrow " + std::to_string(a + 1));
      for (int r = 0; r < X.rows(); ++r) X(r, c) = x[r];
    }
    maps.push_back(std::move(X));
  }
  Rep U = build_rep(V.ctx, dims, std::move(maps));
  require(is_morphism(U, V, incl), Err::Internal, "inclusion not a morphism");
  if (inclusion) *inclusion = incl;
  return U;
}

Rep quotient_rep(const Rep& V, const SubspaceData& sub, Morphism* projection) {
  const RepContext& C = *V.ctx;
  require(int(sub.size()) == C.Q->n, Err::ShapeMismatch, "subspace list length");
  // Complete each subspace basis by standard vectors at non-pivot columns.
  std::vector<GFMat> full, inv;
  Vec dims(size_t(C.Q->n));
  Morphism proj;
  for (int i = 0; i < C.Q->n; ++i) {
    GFMat rows = sub[i];
    int rk = rows.rref();
    require(rk == rows.rows(), Err::NotASubrep, "subspace rows not independent");
    std::vector<bool> pivot(size_t(V.dims[i]), false);
    for (int r = 0, col = 0; r < rk; ++r) {
      while (col < rows.cols() && !rows(r, col)) ++col;
      pivot[col] = true;
    }
    GFMat fullb(C.tower, C.vdeg(i), int(V.dims[i]), int(V.dims[i]));
    fullb.set_block(0, 0, rows);
    int r = rk;
    for (int c = 0; c < int(V.dims[i]); ++c)
      if (!pivot[c]) fullb(r++, c) = C.tower->from_int(C.vdeg(i), 1);
    require(r == int(V.dims[i]), Err::Internal, "basis completion failed");
    GFMat Pt = fullb.transpose();       // columns are basis vectors
    GFMat Pti = Pt.inverse();           // old coords -> new coords
    dims[i] = V.dims[i] - rk;
    proj.theta.push_back(Pti.block(rk, 0, int(dims[i]), int(V.dims[i])));
    full.push_back(std::move(Pt));
    inv.push_back(std::move(Pti));
  }
  std::vector<GFMat> maps;
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    const Arrow& ar = C.Q->arrows[a];
    int g = C.gdeg(int(a));
    GFMat conj = blow_down(inv[ar.tgt], g) * V.arrow[a] * blow_down(full[ar.src], g);
    int sub_t = int(V.dims[ar.tgt] - dims[ar.tgt]) * (C.vdeg(ar.tgt) / g);
    int sub_s = int(V.dims[ar.src] - dims[ar.src]) * (C.vdeg(ar.src) / g);
    require(conj.block(sub_t, 0, conj.rows() - sub_t, sub_s).is_zero(), Err::NotASubrep,
            "subspaces not closed under arrow " + std::to_string(a + 1));
    maps.push_back(conj.block(sub_t, sub_s, conj.rows() - sub_t, conj.cols() - sub_s));
  }
  Rep Qr = build_rep(V.ctx, dims, std::move(maps));
  require(is_morphism(V, Qr, proj), Err::Internal, "projection not a morphism");
  if (projection) *projection = proj;
  return Qr;
}

SubspaceData kernel_subspace(const Rep& V, const Rep& W, const Morphism& th) {
  (void)W;
  SubspaceData out;
  for (int i = 0; i < V.ctx->Q->n; ++i) out.push_back(th.theta[i].null_space());
  return out;
}

SubspaceData image_subspace(const Rep& V, const Rep& W, const Morphism& th) {
  (void)V;
  (void)W;
  SubspaceData out;
  for (const auto& t : th.theta) out.push_back(t.transpose().row_space());
  return out;
}

Rep kernel_rep(const Rep& V, const Rep& W, const Morphism& th) {
  return sub_rep(V, kernel_subspace(V, W, th));
}

Rep cokernel_rep(const Rep& V, const Rep& W, const Morphism& th) {
  return quotient_rep(W, image_subspace(V, W, th));
}

SubspaceData radical_subspace(const Rep& V) {
  const RepContext& C = *V.ctx;
  SubspaceData out;
  for (int i = 0; i < C.Q->n; ++i) {
    int fcols = int(V.dims[i]) * (C.vdeg(i) / C.s);
    GFMat rows(C.tower, C.s, 0, fcols);
    for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
      if (C.Q->arrows[a].tgt != i) continue;
      GFMat img = arrow_matrix_F(V, int(a)).transpose().row_space();
      rows = rows.rows() ? rows.vstack(img) : img;
    }
    if (rows.rows()) {
      // Close under the vertex field action.
      const auto& base = C.tower->basis_over(C.vdeg(i), C.s);
      GFMat closed = rows;
      for (int b : base) {
        GFMat act = blockdiag_copies(mult_matrix(C.tower, C.vdeg(i), C.s, b), int(V.dims[i]));
        closed = closed.vstack((act * rows.transpose()).transpose());
      }
      int rk = closed.rref();
      rows = closed.block(0, 0, rk, fcols);
    }
    out.push_back(extract_vertex_basis(C, i, rows));
  }
  return out;
}

SubspaceData socle_subspace(const Rep& V) {
  const RepContext& C = *V.ctx;
  SubspaceData out;
  for (int i = 0; i < C.Q->n; ++i) {
    int fcols = int(V.dims[i]) * (C.vdeg(i) / C.s);
    GFMat constraints(C.tower, C.s, 0, fcols);
    std::vector<GFMat> outgoing;
    for (size_t a = 0; a < C.Q->arrows.size(); ++a)
      if (C.Q->arrows[a].src == i) outgoing.push_back(arrow_matrix_F(V, int(a)));
    const auto& base = C.tower->basis_over(C.vdeg(i), C.s);
    for (const auto& phi : outgoing)
      for (int b : base) {
        GFMat act = blockdiag_copies(mult_matrix(C.tower, C.vdeg(i), C.s, b), int(V.dims[i]));
        GFMat cons = phi * act;
        constraints = constraints.rows() ? constraints.vstack(cons) : cons;
      }
    GFMat basisF = constraints.rows()
                       ? constraints.null_space()
                       : GFMat::identity(C.tower, C.s, fcols);
    out.push_back(extract_vertex_basis(C, i, basisF));
  }
  return out;
}

Rep radical_rep(const Rep& V) { return sub_rep(V, radical_subspace(V)); }
Rep socle_rep(const Rep& V) { return sub_rep(V, socle_subspace(V)); }
Rep top_rep(const Rep& V) { return quotient_rep(V, radical_subspace(V)); }

// ---------------------------------------------------------------------------
// Grassmannians

namespace {

/// All k-dimensional subspaces of F^v over the vertex field, as RREF rows.
std::vector<GFMat> enumerate_subspaces(const TowerPtr& T, int deg, int v, int k) {
  std::vector<GFMat> out;
  if (k < 0 || k > v) return out;
  if (k == 0) {
    out.emplace_back(T, deg, 0, v);
    return out;
  }
  i64 Qf = T->size(deg);
  std::vector<int> piv(size_t(k), 0);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // Free positions: (r, c) with c > piv[r], c not a pivot.
    std::vector<std::pair<int, int>> free_pos;
    std::vector<bool> is_piv(size_t(v), false);
    for (int r = 0; r < k; ++r) is_piv[piv[r]] = true;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < v; ++c)
        if (!is_piv[c]) free_pos.emplace_back(r, c);
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      GFMat m(T, deg, k, v);
      for (int r = 0; r < k; ++r) m(r, piv[r]) = T->from_int(deg, 1);
      for (size_t t = 0; t < free_pos.size(); ++t) m(free_pos[t].first, free_pos[t].second) = vals[t];
      out.push_back(std::move(m));
      size_t t = 0;
      while (t < vals.size()) {
        if (++vals[t] < Qf) break;
        vals[t] = 0;
        ++t;
      }
      if (t == vals.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[i] == v - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

i64 count_subspaces(i64 Qf, int v, int k) {
  // Gaussian binomial [v choose k]_Qf.
  i64 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num = cmul(num, csub(ipow(Qf, v - i), 1));
    den = cmul(den, csub(ipow(Qf, i + 1), 1));
  }
  require(num % den == 0, Err::Internal, "gaussian binomial");
  return num / den;
}

struct CensusContext {
  const Rep* V;
  std::vector<std::vector<GFMat>> subs;        // per vertex: all subspaces (vdeg rows)
  std::vector<std::vector<GFMat>> subsF;       // their F-rowspaces, RREF
  std::vector<GFMat> arrowF;                   // arrow maps in F coordinates
  std::vector<std::vector<GFMat>> image_memo;  // per arrow, per source subspace
};

void census_prepare(const Rep& V, const Budgets& b, CensusContext* cc) {
  const RepContext& C = *V.ctx;
  i64 work = 1;
  for (int i = 0; i < C.Q->n; ++i) {
    i64 total = 0;
    for (int k = 0; k <= int(V.dims[i]); ++k)
      total = cadd(total, count_subspaces(C.tower->size(C.vdeg(i)), int(V.dims[i]), k));
    work = cmul(work, total);
    require(work <= b.grass_work, Err::BudgetExceeded, "grassmannian work over budget");
  }
  cc->V = &V;
  cc->subs.resize(size_t(C.Q->n));
  cc->subsF.resize(size_t(C.Q->n));
  for (int i = 0; i < C.Q->n; ++i) {
    for (int k = 0; k <= int(V.dims[i]); ++k)
      for (auto& m : enumerate_subspaces(C.tower, C.vdeg(i), int(V.dims[i]), k))
        cc->subs[i].push_back(std::move(m));
    for (const auto& m : cc->subs[i])
      cc->subsF[i].push_back(subspace_rows_F(C, i, m).row_space());
  }
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) cc->arrowF.push_back(arrow_matrix_F(V, int(a)));
  cc->image_memo.assign(C.Q->arrows.size(), {});
  for (size_t a = 0; a < C.Q->arrows.size(); ++a)
    cc->image_memo[a].resize(cc->subs[C.Q->arrows[a].src].size());
}

template <typename Leaf>
void census_dfs(CensusContext& cc, std::vector<int>& choice, size_t t, const Leaf& leaf) {
  const RepContext& C = *cc.V->ctx;
  if (t == C.Q->topo.size()) {
    leaf(choice);
    return;
  }
  int j = C.Q->topo[t];
  for (size_t si = 0; si < cc.subs[j].size(); ++si) {
    choice[j] = int(si);
    bool ok = true;
    for (size_t a = 0; a < C.Q->arrows.size() && ok; ++a) {
      if (C.Q->arrows[a].tgt != j) continue;
      int src = C.Q->arrows[a].src;
      GFMat& img = cc.image_memo[a][choice[src]];
      if (img.tower() == nullptr)
        img = cc.subsF[src][choice[src]] * cc.arrowF[a].transpose();
      ok = GFMat::rows_contained(cc.subsF[j][si], img);
    }
    if (ok) census_dfs(cc, choice, t + 1, leaf);
  }
  choice[j] = -1;
}

}  // namespace

CountTable grassmannian_census(const Rep& V, const Budgets& b) {
  CensusContext cc;
  census_prepare(V, b, &cc);
  const RepContext& C = *V.ctx;
  CountTable table;
  std::vector<int> choice(size_t(C.Q->n), -1);
  census_dfs(cc, choice, 0, [&](const std::vector<int>& ch) {
    Vec e(size_t(C.Q->n));
    for (int i = 0; i < C.Q->n; ++i) e[i] = cc.subs[i][ch[i]].rows();
    ++table[e];
  });
  return table;
}

std::vector<std::pair<Vec, SubspaceData>> subrep_list(const Rep& V, const Budgets& b) {
  CensusContext cc;
  census_prepare(V, b, &cc);
  const RepContext& C = *V.ctx;
  std::vector<std::pair<Vec, SubspaceData>> out;
  std::vector<int> choice(size_t(C.Q->n), -1);
  census_dfs(cc, choice, 0, [&](const std::vector<int>& ch) {
    Vec e(size_t(C.Q->n));
    SubspaceData sd;
    for (int i = 0; i < C.Q->n; ++i) {
      e[i] = cc.subs[i][ch[i]].rows();
      sd.push_back(cc.subs[i][ch[i]]);
    }
    out.emplace_back(std::move(e), std::move(sd));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

/// Runs fn over all nonzero base-field coefficient combinations; stops early
/// when fn returns true. Returns whether fn ever returned true.
bool scan_combos(const RepContext& C, int dim, i64 budget,
                 const std::function<bool(const std::vector<int>&)>& fn) {
  i64 q = C.q();
  i64 total = 1;
  for (int i = 0; i < dim; ++i) {
    total = cmul(total, q);
    require(total <= budget, Err::BudgetExceeded, "combination scan over budget");
  }
  std::vector<int> combo(size_t(dim), 0);
  for (i64 it = 0;; ++it) {
    if (it > 0) {
      int t = 0;
      while (t < dim) {
        if (++combo[t] < q) break;
        combo[t] = 0;
        ++t;
      }
      if (t == dim) break;
    }
    if (fn(combo)) return true;
    if (dim == 0) break;
  }
  return false;
}

bool morphism_equal(const Morphism& a, const Morphism& b) {
  for (size_t i = 0; i < a.theta.size(); ++i)
    if (!(a.theta[i] == b.theta[i])) return false;
  return true;
}

}  // namespace

RepClass classify_rep(const Rep& V, const Budgets& b) {
  RepClass rc;
  HomBasis end = hom_basis(V, V);
  rc.dimF_end = end.dimF;
  rc.is_rigid = (end.dimF == euler_form(*V.ctx, V.dims, V.dims));
  if (V.is_zero_rep()) {
    rc.is_indecomposable = false;
    return rc;
  }
  i64 q = V.ctx->q();
  i64 size = 1;
  bool small = true;
  for (int i = 0; i < end.dimF && small; ++i) {
    size = cmul(size, q);
    if (size > b.end_enum) small = false;
  }
  if (small) {
    Morphism id = identity_morphism(V);
    bool found = scan_combos(*V.ctx, end.dimF, b.end_enum, [&](const std::vector<int>& combo) {
      Morphism th = combine_hom_basis(V, V, end.basis, combo);
      if (is_zero_morphism(th) || morphism_equal(th, id)) return false;
      Morphism sq = compose(V, V, V, th, th);
      return morphism_equal(sq, th);  // nontrivial idempotent
    });
    rc.is_indecomposable = !found;
    return rc;
  }
  // Fitting fallback: deterministic pseudo-random endomorphisms; a split is
  // conclusive, absence after the trials is reported as indecomposable.
  std::mt19937_64 rng(0x51ab5eedULL);
  i64 total_dim = 0;
  for (int i = 0; i < V.ctx->Q->n; ++i) total_dim += V.dims[i];
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<int> combo(size_t(end.dimF), 0);
    for (auto& c : combo) c = int(rng() % q);
    Morphism th = combine_hom_basis(V, V, end.basis, combo);
    // Stabilize th^(2^k).
    for (int k = 0; k < 12; ++k) th = compose(V, V, V, th, th);
    SubspaceData ker = kernel_subspace(V, V, th);
    i64 kdim = 0;
    for (const auto& m : ker) kdim += m.rows();
    if (kdim > 0 && kdim < total_dim) {
      rc.is_indecomposable = false;
      return rc;
    }
  }
  rc.is_indecomposable = true;
  return rc;
}

bool are_isomorphic(const Rep& V, const Rep& W, const Budgets& b) {
  require(V.ctx == W.ctx, Err::WrongField, "iso across contexts");
  if (V.dims != W.dims) return false;
  if (V.is_zero_rep()) return true;
  if (V.key() == W.key()) return true;
  HomBasis hb = hom_basis(V, W);
  if (hb.dimF == 0) return false;
  if (hom_dim(W, V) != hb.dimF) return false;
  return scan_combos(*V.ctx, hb.dimF, b.hom_scan, [&](const std::vector<int>& combo) {
    Morphism th = combine_hom_basis(V, W, hb.basis, combo);
    return is_invertible_morphism(th);
  });
}

i64 aut_count(const Rep& V, const Budgets& b) {
  if (V.is_zero_rep()) return 1;
  HomBasis end = hom_basis(V, V);
  i64 count = 0;
  scan_combos(*V.ctx, end.dimF, b.end_enum, [&](const std::vector<int>& combo) {
    Morphism th = combine_hom_basis(V, V, end.basis, combo);
    if (is_invertible_morphism(th)) ++count;
    return false;
  });
  return count;
}

std::vector<Rep> decompose_indecomposables(const Rep& V, const Budgets& b) {
  if (V.is_zero_rep()) return {};
  HomBasis end = hom_basis(V, V);
  Morphism id = identity_morphism(V);
  Morphism found = zero_morphism(V, V);
  bool has = scan_combos(*V.ctx, end.dimF, b.end_enum, [&](const std::vector<int>& combo) {
    Morphism th = combine_hom_basis(V, V, end.basis, combo);
    if (is_zero_morphism(th) || morphism_equal(th, id)) return false;
    if (!morphism_equal(compose(V, V, V, th, th), th)) return false;
    found = th;
    return true;
  });
  if (!has) return {V};
  Rep A = sub_rep(V, image_subspace(V, V, found));
  Rep B = sub_rep(V, kernel_subspace(V, V, found));
  std::vector<Rep> out = decompose_indecomposables(A, b);
  for (auto& r : decompose_indecomposables(B, b)) out.push_back(std::move(r));
  return out;
}

bool is_projective_rep(const Rep& V) {
  for (int j = 0; j < V.ctx->Q->n; ++j)
    if (ext_dim(V, simple_rep(V.ctx, j)) != 0) return false;
  return true;
}

bool is_injective_rep(const Rep& V) {
  for (int j = 0; j < V.ctx->Q->n; ++j)
    if (ext_dim(simple_rep(V.ctx, j), V) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Auslander-Reiten translation via the transpose of a minimal projective
// presentation, then linear duality.

namespace {

struct MinimalPresentation {
  Rep P0, P1;
  Morphism f;      // P1 -> P0 (inclusion of the kernel)
  Morphism cover;  // P0 -> V
};

MinimalPresentation minimal_presentation(const Rep& V, const ProjSys& ps) {
  const RepContext& C = *V.ctx;
  Rep top = top_rep(V);
  // Lift a top basis: representatives completing the radical at each vertex.
  std::vector<Morphism> columns;  // morphisms P_i -> V, in summand order
  std::vector<int> roots;
  SubspaceData rad = radical_subspace(V);
  for (int i = 0; i < C.Q->n; ++i) {
    if (top.dims[i] == 0) continue;
    // Complete rad_i to a basis of V_i; the added vectors are the lifts.
    GFMat rows = rad[i];
    int rk = rows.rref();
    std::vector<bool> pivot(size_t(V.dims[i]), false);
    for (int r = 0, col = 0; r < rk; ++r) {
      while (col < rows.cols() && !rows(r, col)) ++col;
      pivot[col] = true;
    }
    HomBasis hpb = hom_basis(ps.P[i], V);
    // Evaluation at the generator coordinate is an isomorphism onto V_i.
    GFMat ev(C.tower, C.s, int(V.dims[i]) * (C.vdeg(i) / C.s), hpb.dimF);
    for (int t = 0; t < hpb.dimF; ++t) {
      const GFMat& gi = hpb.basis[t].theta[i];
      for (int r = 0; r < int(V.dims[i]); ++r) {
        const auto& co = C.tower->coords(C.vdeg(i), C.s, gi(r, 0));
        for (size_t k = 0; k < co.size(); ++k)
          ev(r * (C.vdeg(i) / C.s) + int(k), t) = co[k];
      }
    }
    for (int c = 0; c < int(V.dims[i]); ++c) {
      if (pivot[c]) continue;
      std::vector<int> target(size_t(V.dims[i]) * (C.vdeg(i) / C.s), 0);
      target[size_t(c) * (C.vdeg(i) / C.s)] = C.tower->from_int(C.s, 1);
      std::vector<int> x;
      require(ev.solve(target, &x), Err::Internal, "projective cover lift failed");
      Morphism h = zero_morphism(ps.P[i], V);
      for (int t = 0; t < hpb.dimF; ++t)
        if (x[t]) h = add_morphisms(h, scale_morphism(C, hpb.basis[t], x[t]));
      columns.push_back(std::move(h));
      roots.push_back(i);
    }
  }
  // Assemble P0 and the cover.
  MinimalPresentation mp;
  mp.P0 = zero_rep(V.ctx);
  for (int r : roots) mp.P0 = direct_sum(mp.P0, ps.P[r]);
  Morphism cover = zero_morphism(mp.P0, V);
  Vec at(size_t(C.Q->n), 0);
  for (size_t t = 0; t < columns.size(); ++t) {
    const Rep& Pi = ps.P[roots[t]];
    for (int v = 0; v < C.Q->n; ++v) {
      cover.theta[v].set_block(0, int(at[v]), columns[t].theta[v]);
      at[v] += Pi.dims[v];
    }
  }
  require(is_morphism(mp.P0, V, cover), Err::Internal, "cover not a morphism");
  for (int v = 0; v < C.Q->n; ++v)
    require(cover.theta[v].rank() == int(V.dims[v]), Err::Internal, "cover not surjective");
  mp.cover = cover;
  mp.P1 = sub_rep(mp.P0, kernel_subspace(mp.P0, V, cover), &mp.f);
  return mp;
}

/// Hom(X, P_k) for all k, organized as a representation of the opposite
/// quiver: scalars act by right multiplication on the projective, arrows by
/// right multiplication with the arrow generator.
struct HomRep {
  CtxPtr op_ctx;
  Rep rep;  // over op_ctx
  // Per vertex: the hom basis into P_k and the basis-coordinate matrix
  // mapping a flat morphism to coordinates; plus the base-field matrix Phi
  // from standard D-coordinates to hom-basis coordinates.
  std::vector<HomBasis> hom;
  std::vector<GFMat> basis_cols;  // flat coords of hom basis, as columns
  std::vector<GFMat> phi;         // standard D-coords -> basis coords (columns)
};

std::vector<int> coords_in_basis(const GFMat& basis_cols, const std::vector<int>& flat) {
  std::vector<int> x;
  require(basis_cols.solve(flat, &x), Err::Internal, "morphism outside hom space");
  return x;
}

/// Extracts the G-matrix whose restriction of scalars (in direct coordinates)
/// is the given base-field matrix.
GFMat extract_gmat(const RepContext& C, int deg_rows, int deg_cols, int gdeg, const GFMat& F,
                   int nrows, int ncols) {
  const TowerPtr& T = C.tower;
  GFMat conv_r = blockdiag_copies(prod_to_direct(T, C.s, deg_rows, gdeg), nrows);
  GFMat conv_c = blockdiag_copies(prod_to_direct(T, C.s, deg_cols, gdeg), ncols);
  GFMat prod = conv_r.inverse() * F * conv_c;
  int gs = gdeg / C.s;
  int grows = nrows * (deg_rows / gdeg), gcols = ncols * (deg_cols / gdeg);
  GFMat out(T, gdeg, grows, gcols);
  for (int R = 0; R < grows; ++R)
    for (int Cc = 0; Cc < gcols; ++Cc) {
      std::vector<int> co(size_t(gs), 0);
      for (int k = 0; k < gs; ++k) co[k] = prod(R * gs + k, Cc * gs);
      int elem = elem_from_coords(T, gdeg, C.s, co);
      GFMat want = mult_matrix(T, gdeg, C.s, elem);
      for (int rr = 0; rr < gs; ++rr)
        for (int cc = 0; cc < gs; ++cc)
          require(prod(R * gs + rr, Cc * gs + cc) == want(rr, cc), Err::Internal,
                  "matrix not G-linear in the fixed bases");
      out(R, Cc) = elem;
    }
  return out;
}

HomRep hom_rep(const Rep& X, const ProjSys& ps, const CtxPtr& op_ctx) {
  const RepContext& C = *X.ctx;
  const TowerPtr& T = C.tower;
  int n = C.Q->n;
  HomRep hr;
  hr.op_ctx = op_ctx;
  hr.hom.resize(size_t(n));
  hr.basis_cols.resize(size_t(n));
  hr.phi.resize(size_t(n));
  Vec ydims(size_t(n), 0);

  std::vector<std::vector<Morphism>> scalar_acts;
  scalar_acts.resize(size_t(n));
  for (int k = 0; k < n; ++k) {
    hr.hom[k] = hom_basis(X, ps.P[k]);
    int dim = hr.hom[k].dimF;
    int per = C.vdeg(k) / C.s;
    require(dim % per == 0, Err::Internal, "hom dimension not divisible");
    ydims[k] = dim / per;
    int flat_len = 0;
    for (int v = 0; v < n; ++v) flat_len += int(ps.P[k].dims[v] * X.dims[v]) * (C.vdeg(v) / C.s);
    hr.basis_cols[k] = GFMat(T, C.s, flat_len ? flat_len : 1, dim);
    for (int t = 0; t < dim; ++t) {
      auto flat = flatten_morphism(C, hr.hom[k].basis[t]);
      for (size_t r = 0; r < flat.size(); ++r) hr.basis_cols[k](int(r), t) = flat[r];
    }
    for (int b : T->basis_over(C.vdeg(k), C.s))
      scalar_acts[k].push_back(ps.right_mult_scalar(k, b));

    // Pick a D-module basis greedily, spanning with the scalar orbit.
    GFMat span(T, C.s, 0, dim);
    std::vector<int> picked;
    for (int t = 0; t < dim && int(picked.size()) < ydims[k]; ++t) {
      GFMat cand(T, C.s, 1, dim);
      cand(0, t) = T->from_int(C.s, 1);
      GFMat test = span.rows() ? span.vstack(cand) : cand;
      if (test.rank() == span.rows()) continue;
      picked.push_back(t);
      for (const auto& act : scalar_acts[k]) {
        Morphism m = compose(X, ps.P[k], ps.P[k], act, hr.hom[k].basis[t]);
        auto co = coords_in_basis(hr.basis_cols[k], flatten_morphism(C, m));
        GFMat row(T, C.s, 1, dim);
        for (int c = 0; c < dim; ++c) row(0, c) = co[c];
        span = span.rows() ? span.vstack(row) : row;
      }
      int rk = span.rref();
      span = span.block(0, 0, rk, dim);
    }
    require(int(picked.size()) == ydims[k] && span.rows() == dim, Err::Internal,
            "module basis extraction failed");
    hr.phi[k] = GFMat(T, C.s, dim, dim);
    int col = 0;
    for (int pi : picked)
      for (const auto& act : scalar_acts[k]) {
        Morphism m = compose(X, ps.P[k], ps.P[k], act, hr.hom[k].basis[pi]);
        auto co = coords_in_basis(hr.basis_cols[k], flatten_morphism(C, m));
        for (int r = 0; r < dim; ++r) hr.phi[k](r, col) = co[r];
        ++col;
      }
  }

  // Arrow maps of the opposite quiver: for a: i -> j here, right
  // multiplication gives Hom(X, P_j) -> Hom(X, P_i).
  std::vector<GFMat> maps;
  for (size_t a = 0; a < op_ctx->Q->arrows.size(); ++a) {
    int i = C.Q->arrows[a].src, j = C.Q->arrows[a].tgt;
    Morphism Ra = ps.right_mult_arrow(int(a));
    int dj = hr.hom[j].dimF, di = hr.hom[i].dimF;
    GFMat A(T, C.s, di ? di : 1, dj ? dj : 1);
    for (int t = 0; t < dj; ++t) {
      Morphism m = compose(X, ps.P[j], ps.P[i], Ra, hr.hom[j].basis[t]);
      auto co = coords_in_basis(hr.basis_cols[i], flatten_morphism(C, m));
      for (int r = 0; r < di; ++r) A(r, t) = co[r];
    }
    GFMat Ahat = (di && dj) ? hr.phi[i].inverse() * A * hr.phi[j] : GFMat(T, C.s, di, dj);
    maps.push_back(extract_gmat(C, C.vdeg(i), C.vdeg(j), op_ctx->gdeg(int(a)), Ahat,
                                int(ydims[i]), int(ydims[j])));
  }
  hr.rep = build_rep(op_ctx, ydims, std::move(maps));
  return hr;
}

/// The morphism Hom(X0, P_k) -> Hom(X1, P_k) given by precomposition with
/// f: X1 -> X0, in the module coordinates of the two hom representations.
Morphism hom_rep_map(const Rep& X0, const Rep& X1, const Morphism& f, const ProjSys& ps,
                     const HomRep& h0, const HomRep& h1) {
  const RepContext& C = *X0.ctx;
  const TowerPtr& T = C.tower;
  Morphism out;
  for (int k = 0; k < C.Q->n; ++k) {
    int d0 = h0.hom[k].dimF, d1 = h1.hom[k].dimF;
    GFMat A(T, C.s, d1 ? d1 : 1, d0 ? d0 : 1);
    for (int t = 0; t < d0; ++t) {
      Morphism m = compose(X1, X0, ps.P[k], h0.hom[k].basis[t], f);
      auto co = coords_in_basis(h1.basis_cols[k], flatten_morphism(C, m));
      for (int r = 0; r < d1; ++r) A(r, t) = co[r];
    }
    GFMat Ahat = (d0 && d1) ? h1.phi[k].inverse() * A * h0.phi[k] : GFMat(T, C.s, d1, d0);
    out.theta.push_back(extract_gmat(C, C.vdeg(k), C.vdeg(k), C.vdeg(k), Ahat,
                                     int(h1.rep.dims[k]), int(h0.rep.dims[k])));
  }
  require(is_morphism(h0.rep, h1.rep, out), Err::Internal, "hom map not a morphism");
  return out;
}

}  // namespace

Rep tau_translate(const Rep& V) {
  if (V.is_zero_rep()) return zero_rep(V.ctx);
  ProjSys ps(V.ctx);
  MinimalPresentation mp = minimal_presentation(V, ps);
  if (mp.P1.is_zero_rep()) return zero_rep(V.ctx);  // projective
  CtxPtr op = opposite_context(V.ctx);
  HomRep h0 = hom_rep(mp.P0, ps, op);
  HomRep h1 = hom_rep(mp.P1, ps, op);
  Morphism hf = hom_rep_map(mp.P0, mp.P1, mp.f, ps, h0, h1);
  Rep tr = cokernel_rep(h0.rep, h1.rep, hf);
  return dualize(tr, V.ctx);
}

Rep tau_translate_nakayama(const Rep& V) {
  if (V.is_zero_rep()) return zero_rep(V.ctx);
  ProjSys ps(V.ctx);
  MinimalPresentation mp = minimal_presentation(V, ps);
  if (mp.P1.is_zero_rep()) return zero_rep(V.ctx);
  CtxPtr op = opposite_context(V.ctx);
  HomRep h0 = hom_rep(mp.P0, ps, op);
  HomRep h1 = hom_rep(mp.P1, ps, op);
  Morphism hf = hom_rep_map(mp.P0, mp.P1, mp.f, ps, h0, h1);
  // Dualize objects and the map: nu(f): nu(P1) -> nu(P0) has the transposed
  // vertex matrices; tau V is its kernel.
  Rep nu0 = dualize(h0.rep, V.ctx);
  Rep nu1 = dualize(h1.rep, V.ctx);
  Morphism nf;
  for (const auto& t : hf.theta) nf.theta.push_back(t.transpose());
  require(is_morphism(nu1, nu0, nf), Err::Internal, "nu(f) not a morphism");
  return kernel_rep(nu1, nu0, nf);
}

// ---------------------------------------------------------------------------
// Approximations

namespace {

/// Is phi: V -> E (left) or E -> V (right) an add(T)-approximation?
bool is_approximation(const Rep& V, const Rep& E, const Morphism& phi,
                      const std::vector<Rep>& addset, bool left) {
  const RepContext& C = *V.ctx;
  for (const Rep& T : addset) {
    if (left) {
      HomBasis he = hom_basis(E, T);
      i64 want = hom_dim(V, T);
      GFMat img(C.tower, C.s, he.dimF ? he.dimF : 1, 0);
      std::vector<std::vector<int>> cols;
      for (const auto& b : he.basis)
        cols.push_back(flatten_morphism(C, compose(V, E, T, b, phi)));
      int flat_len = cols.empty() ? 0 : int(cols[0].size());
      GFMat m(C.tower, C.s, flat_len ? flat_len : 1, int(cols.size()) ? int(cols.size()) : 1);
      for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[c].size(); ++r) m(int(r), int(c)) = cols[c][r];
      if (m.rank() < want) return false;
    } else {
      HomBasis he = hom_basis(T, E);
      i64 want = hom_dim(T, V);
      std::vector<std::vector<int>> cols;
      for (const auto& b : he.basis)
        cols.push_back(flatten_morphism(C, compose(T, E, V, phi, b)));
      int flat_len = cols.empty() ? 0 : int(cols[0].size());
      GFMat m(C.tower, C.s, flat_len ? flat_len : 1, int(cols.size()) ? int(cols.size()) : 1);
      for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[c].size(); ++r) m(int(r), int(c)) = cols[c][r];
      if (m.rank() < want) return false;
    }
  }
  return true;
}

}  // namespace

Approximation minimal_approximation(const Rep& V, const std::vector<Rep>& addset, bool left,
                                    const Budgets& b) {
  (void)b;
  const RepContext& C = *V.ctx;
  // Universal map: one copy of T_a per hom-basis element.
  struct Piece {
    int addset_index;
    Morphism component;  // V -> T_a (left) or T_a -> V (right)
  };
  std::vector<Piece> pieces;
  for (size_t ai = 0; ai < addset.size(); ++ai) {
    HomBasis hb = left ? hom_basis(V, addset[ai]) : hom_basis(addset[ai], V);
    for (auto& m : hb.basis) pieces.push_back({int(ai), std::move(m)});
  }

  auto assemble = [&](const std::vector<Piece>& ps) {
    Rep E = zero_rep(V.ctx);
    for (const auto& p : ps) E = direct_sum(E, addset[p.addset_index]);
    Morphism phi = left ? zero_morphism(V, E) : zero_morphism(E, V);
    Vec at(size_t(C.Q->n), 0);
    for (const auto& p : ps) {
      const Rep& T = addset[p.addset_index];
      for (int v = 0; v < C.Q->n; ++v) {
        if (left)
          phi.theta[v].set_block(int(at[v]), 0, p.component.theta[v]);
        else
          phi.theta[v].set_block(0, int(at[v]), p.component.theta[v]);
        at[v] += T.dims[v];
      }
    }
    return std::make_pair(E, phi);
  };

  auto [E, phi] = assemble(pieces);
  require(left ? is_morphism(V, E, phi) : is_morphism(E, V, phi), Err::Internal,
          "approximation map invalid");
  require(is_approximation(V, E, phi, addset, left), Err::Internal,
          "universal map is not an approximation");

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t drop = 0; drop < pieces.size(); ++drop) {
      std::vector<Piece> trial;
      for (size_t t = 0; t < pieces.size(); ++t)
        if (t != drop) trial.push_back(pieces[t]);
      auto [Et, phit] = assemble(trial);
      if (is_approximation(V, Et, phit, addset, left)) {
        pieces = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  auto [Emin, phimin] = assemble(pieces);
  Approximation ap;
  ap.target = Emin;
  ap.map = phimin;
  for (const auto& p : pieces) ap.summand_of.push_back(p.addset_index);
  return ap;
}

// ---------------------------------------------------------------------------
// Rigid search

std::optional<Rep> search_rigid(const CtxPtr& ctx, const Vec& v, const Budgets& b,
                                i64 rng_seed) {
  const RepContext& C = *ctx;
  require(int(v.size()) == C.Q->n, Err::ShapeMismatch, "dimension vector length");
  for (i64 x : v) require(x >= 0, Err::ValidationError, "negative dimension");

  struct Cell {
    int arrow, row, col;
  };
  std::vector<Cell> cells;
  std::vector<i64> qa;
  double log_space = 0;
  for (size_t a = 0; a < C.Q->arrows.size(); ++a) {
    int rows = C.arrow_rows(int(a), v), cols = C.arrow_cols(int(a), v);
    i64 Qf = ctx->tower->size(C.gdeg(int(a)));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) cells.push_back({int(a), r, c});
    for (int t = 0; t < rows * cols; ++t) log_space += std::log2(double(Qf));
    qa.push_back(Qf);
  }

  auto make = [&](const std::vector<int>& codes) {
    std::vector<GFMat> maps;
    for (size_t a = 0; a < C.Q->arrows.size(); ++a)
      maps.emplace_back(ctx->tower, C.gdeg(int(a)), C.arrow_rows(int(a), v),
                        C.arrow_cols(int(a), v));
    for (size_t t = 0; t < cells.size(); ++t)
      maps[cells[t].arrow](cells[t].row, cells[t].col) = codes[t];
    return build_rep(ctx, v, std::move(maps));
  };
  auto rigid = [&](const Rep& R) { return hom_dim(R, R) == euler_form(C, v, v); };

  if (log_space <= std::log2(double(b.search_space))) {
    std::vector<int> codes(cells.size(), 0);
    while (true) {
      Rep R = make(codes);
      if (rigid(R)) return R;
      size_t t = 0;
      while (t < cells.size()) {
        if (++codes[t] < qa[cells[t].arrow]) break;
        codes[t] = 0;
        ++t;
      }
      if (t == cells.size()) break;
      if (cells.empty()) break;
    }
    return std::nullopt;
  }

  std::mt19937_64 rng{uint64_t(rng_seed)};
  for (i64 it = 0; it < b.search_samples; ++it) {
    std::vector<int> codes(cells.size());
    for (size_t t = 0; t < cells.size(); ++t) codes[t] = int(rng() % uint64_t(qa[cells[t].arrow]));
    Rep R = make(codes);
    if (rigid(R)) return R;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rep files

Rep parse_rep_text(const std::string& text, const std::string& origin, const CtxPtr& ctx_hint) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string quiver_path;
  i64 p = -1;
  int s = -1;
  Vec dims;
  CtxPtr ctx = ctx_hint;
  std::vector<GFMat> maps;
  size_t next_arrow = 0;

  auto need_ctx = [&](int at_line) {
    if (ctx) return;
    require(!quiver_path.empty() && p > 0 && s > 0, Err::ParseError,
            origin + ":" + std::to_string(at_line) + ": quiver/p/s must precede dim");
    // Relative quiver paths resolve against the rep file's directory.
    std::string resolved = quiver_path;
    auto slash = origin.find_last_of('/');
    if (!quiver_path.empty() && quiver_path[0] != '/' && slash != std::string::npos)
      resolved = origin.substr(0, slash + 1) + quiver_path;
    ctx = make_context(read_quiver(resolved), p, s);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "quiver") {
      require(bool(ls >> quiver_path), Err::ParseError,
              origin + ":" + std::to_string(lineno) + ": quiver needs a path");
    } else if (key == "p") {
      require(bool(ls >> p), Err::ParseError, origin + ": bad p");
    } else if (key == "s") {
      require(bool(ls >> s), Err::ParseError, origin + ": bad s");
    } else if (key == "dim") {
      need_ctx(lineno);
      dims.resize(size_t(ctx->Q->n));
      for (int i = 0; i < ctx->Q->n; ++i)
        require(bool(ls >> dims[i]), Err::ParseError,
                origin + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(ctx->Q->n) + " dimensions");
    } else if (key == "map") {
      need_ctx(lineno);
      require(!dims.empty(), Err::ParseError,
              origin + ":" + std::to_string(lineno) + ": map before dim");
      require(next_arrow < ctx->Q->arrows.size(), Err::ValidationError,
              origin + ": more maps than arrows");
      int rows, cols;
      require(bool(ls >> rows >> cols), Err::ParseError, origin + ": map needs rows cols");
      int a = int(next_arrow);
      require(rows == ctx->arrow_rows(a, dims) && cols == ctx->arrow_cols(a, dims),
              Err::ValidationError, origin + ":" + std::to_string(lineno) +
                                        ": arrow matrix shape mismatch");
      GFMat m(ctx->tower, ctx->gdeg(a), rows, cols);
      for (int r = 0; r < rows; ++r) {
        require(bool(std::getline(in, line)), Err::ParseError, origin + ": missing matrix row");
        ++lineno;
        std::istringstream rs(line);
        for (int c = 0; c < cols; ++c) {
          i64 code;
          require(bool(rs >> code), Err::ParseError,
                  origin + ":" + std::to_string(lineno) + ": short matrix row");
          require(code >= 0 && code < ctx->tower->size(ctx->gdeg(a)), Err::ValidationError,
                  origin + ": element code out of field range");
          m(r, c) = int(code);
        }
      }
      maps.push_back(std::move(m));
      ++next_arrow;
    } else {
      fail(Err::ParseError, origin + ":" + std::to_string(lineno) + ": unknown directive '" +
                                key + "'");
    }
  }
  require(ctx != nullptr && !dims.empty(), Err::ParseError, origin + ": incomplete file");
  require(next_arrow == ctx->Q->arrows.size(), Err::ValidationError,
          origin + ": expected one map per arrow");
  if (ctx_hint) {
    require(p < 0 || p == ctx->tower->p(), Err::ValidationError, "p mismatch with context");
    require(s < 0 || s == ctx->s, Err::ValidationError, "s mismatch with context");
  }
  return build_rep(ctx, dims, std::move(maps));
}

Rep read_rep(const std::string& path, const CtxPtr& ctx_hint) {
  std::ifstream f(path);
  require(bool(f), Err::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_rep_text(ss.str(), path, ctx_hint);
}

std::string write_rep_text(const Rep& V, const std::string& quiver_path) {
  std::ostringstream out;
  out << "quiver " << quiver_path << "\n";
  out << "p " << V.ctx->tower->p() << "\n";
  out << "s " << V.ctx->s << "\n";
  out << "dim";
  for (i64 v : V.dims) out << " " << v;
  out << "\n";
  for (const auto& m : V.arrow) {
    out << "map " << m.rows() << " " << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (c) out << " ";
        out << m(r, c);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace qclab
