#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qclab/gf.hpp"
#include "qclab/quiver.hpp"

namespace qclab {

/// Enumeration guards. Failures throw BudgetExceeded (or ExtTooLarge).
struct Budgets {
  i64 end_enum = i64(1) << 16;   // |End(V)| scans
  i64 hom_scan = i64(1) << 20;   // |Hom(V,W)| scans
  i64 grass_work = i64(1) << 24; // product of per-vertex subspace counts
  i64 ext_enum = i64(1) << 16;   // |Ext^1(V,W)| enumerations
  i64 search_space = i64(1) << 20;  // exhaustive rigid search
  i64 search_samples = 200000;      // random rigid search attempts
};

/// Shared context: quiver + field tower + base field GF(p^s).
/// Vertex i carries GF(q^{d_i}) with q = p^s; an arrow carries the gcd field.
struct RepContext {
  QuiverPtr Q;
  TowerPtr tower;
  int s = 1;
  MatrixBundle mats;  // derived matrices of Q, cached

  i64 q() const { return tower->size(s); }
  int vdeg(int i) const { return s * int(Q->d[i]); }
  int gdeg(int arrow_idx) const {
    const Arrow& a = Q->arrows[arrow_idx];
    return s * int(gcd_i64(Q->d[a.src], Q->d[a.tgt]));
  }
  /// Rows/cols of the arrow matrix over the gcd field.
  int arrow_rows(int arrow_idx, const Vec& dims) const {
    const Arrow& a = Q->arrows[arrow_idx];
    return int(dims[a.tgt]) * vdeg(a.tgt) / gdeg(arrow_idx);
  }
  int arrow_cols(int arrow_idx, const Vec& dims) const {
    const Arrow& a = Q->arrows[arrow_idx];
    return int(dims[a.src]) * vdeg(a.src) / gdeg(arrow_idx);
  }
};

using CtxPtr = std::shared_ptr<const RepContext>;

CtxPtr make_context(QuiverPtr q, TowerPtr tower, int s);
/// Builds a tower holding every field this context needs.
CtxPtr make_context(QuiverPtr q, i64 p, int s);

/// Valued representation: one dimension per vertex (over that vertex's
/// field) and one matrix per arrow over the arrow's gcd field.
struct Rep {
  CtxPtr ctx;
  Vec dims;
  std::vector<GFMat> arrow;

  i64 dim_total_over_base() const;  // sum dims_i * d_i
  bool is_zero_rep() const;
  std::string key() const;          // exact-identity key (not iso-invariant)
};

Rep build_rep(const CtxPtr& ctx, Vec dims, std::vector<GFMat> arrow_maps);
Rep zero_rep(const CtxPtr& ctx);
Rep direct_sum(const Rep& a, const Rep& b);

/// Morphism: one matrix per vertex over that vertex's field.
struct Morphism {
  std::vector<GFMat> theta;
};

bool is_morphism(const Rep& V, const Rep& W, const Morphism& th);
Morphism identity_morphism(const Rep& V);
Morphism zero_morphism(const Rep& V, const Rep& W);
Morphism compose(const Rep& U, const Rep& V, const Rep& W, const Morphism& g,
                 const Morphism& f);  // g after f: U -> V -> W
bool is_invertible_morphism(const Morphism& th);
bool is_zero_morphism(const Morphism& th);
/// Base-field linear combination against a hom basis.
Morphism combine_hom_basis(const Rep& V, const Rep& W, const std::vector<Morphism>& basis,
                           const std::vector<int>& combo);

/// Odometer over base-field coefficient vectors; returns false after wrap.
inline bool next_combo(std::vector<int>& combo, i64 q) {
  size_t t = 0;
  while (t < combo.size()) {
    if (++combo[t] < q) return true;
    combo[t] = 0;
    ++t;
  }
  return false;
}

/// Restriction of scalars: the matrix of a map in coordinates over a
/// subfield, with the tower's fixed bases (entry-major layout).
GFMat blow_down(const GFMat& m, int small_deg);
/// Entry-wise embedding of a matrix into a larger field.
GFMat embed_entries(const GFMat& m, int big_deg);

struct HomBasis {
  Vec dims_v, dims_w;
  std::vector<Morphism> basis;  // over the base field
  int dimF = 0;
};

HomBasis hom_basis(const Rep& V, const Rep& W);
i64 hom_dim(const Rep& V, const Rep& W);

/// Euler pairing <v, w> on dimension vectors over the base field.
i64 euler_form(const RepContext& ctx, const Vec& v, const Vec& w);

struct ExtSpace {
  Rep V, W;
  int dimF = 0;
  // Flat cocycle coordinates over the base field; one representative per
  // complement-basis element.
  std::vector<std::vector<int>> rep_cocycles;
  std::vector<int> z_arrow_offset;  // flat offsets per arrow block

  /// Middle term of the class with the given coefficient combination
  /// (length dimF, base-field codes); zero combo gives the split term.
  Rep middle_term(const std::vector<int>& combo, Morphism* incl = nullptr,
                  Morphism* proj = nullptr) const;
};

ExtSpace ext_space(const Rep& V, const Rep& W);
i64 ext_dim(const Rep& V, const Rep& W);

// Canonical representations -------------------------------------------------

Rep simple_rep(const CtxPtr& ctx, int i);
Rep projective_rep(const CtxPtr& ctx, int i);
Rep injective_rep(const CtxPtr& ctx, int i);

/// Per-vertex subspace: rows are basis vectors over the vertex field.
using SubspaceData = std::vector<GFMat>;

Rep sub_rep(const Rep& V, const SubspaceData& sub, Morphism* inclusion = nullptr);
Rep quotient_rep(const Rep& V, const SubspaceData& sub, Morphism* projection = nullptr);
SubspaceData radical_subspace(const Rep& V);
SubspaceData socle_subspace(const Rep& V);
Rep radical_rep(const Rep& V);
Rep socle_rep(const Rep& V);
Rep top_rep(const Rep& V);

SubspaceData kernel_subspace(const Rep& V, const Rep& W, const Morphism& th);
SubspaceData image_subspace(const Rep& V, const Rep& W, const Morphism& th);
Rep kernel_rep(const Rep& V, const Rep& W, const Morphism& th);
Rep cokernel_rep(const Rep& V, const Rep& W, const Morphism& th);

// Grassmannians --------------------------------------------------------------

using CountTable = std::map<Vec, i64>;

CountTable grassmannian_census(const Rep& V, const Budgets& b = {});
/// Subrepresentations with their subspace data, grouped by dimension vector.
std::vector<std::pair<Vec, SubspaceData>> subrep_list(const Rep& V, const Budgets& b = {});

// Classification -------------------------------------------------------------

struct RepClass {
  i64 dimF_end = 0;
  bool is_rigid = false;
  bool is_indecomposable = false;
};

RepClass classify_rep(const Rep& V, const Budgets& b = {});
bool are_isomorphic(const Rep& V, const Rep& W, const Budgets& b = {});
i64 aut_count(const Rep& V, const Budgets& b = {});
std::vector<Rep> decompose_indecomposables(const Rep& V, const Budgets& b = {});
bool is_projective_rep(const Rep& V);
bool is_injective_rep(const Rep& V);

// Auslander-Reiten translation ----------------------------------------------

Rep tau_translate(const Rep& V);
/// Cross-check route through the Nakayama functor; used by tests.
Rep tau_translate_nakayama(const Rep& V);

// Approximations -------------------------------------------------------------

struct Approximation {
  Rep target;           // E (left) or source E (right)
  Morphism map;         // V -> E or E -> V
  std::vector<int> summand_of;  // index into addset per kept copy
};

Approximation minimal_approximation(const Rep& V, const std::vector<Rep>& addset, bool left,
                                    const Budgets& b = {});

// Search ----------------------------------------------------------------------

std::optional<Rep> search_rigid(const CtxPtr& ctx, const Vec& v, const Budgets& b, i64 rng_seed);

// Rep file format -------------------------------------------------------------

Rep read_rep(const std::string& path, const CtxPtr& ctx_hint = nullptr);
Rep parse_rep_text(const std::string& text, const std::string& origin,
                   const CtxPtr& ctx_hint = nullptr);
std::string write_rep_text(const Rep& V, const std::string& quiver_path);

}  // namespace qclab
