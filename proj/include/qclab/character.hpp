#pragma once

#include <string>

#include "qclab/hall.hpp"
#include "qclab/rep.hpp"
#include "qclab/torus.hpp"

namespace qclab {

/// Quantum cluster character of a representation supported on the mutable
/// part, as an element of the principal-coefficients torus. Counting numbers
/// are taken at q = |base field|.
TorusElement qcc(const Rep& V, const PrincipalPair& pair, const Budgets& b = {});

/// The monomial X^(*cls); the class may be given over the mutable part
/// (length n, zero-padded) or over the whole extended quiver (length m).
TorusElement star_left_monomial(const Vec& cls, const PrincipalPair& pair);
/// X^(cls^*) over the extended quiver.
TorusElement star_right_monomial(const Vec& cls, const PrincipalPair& pair);

/// Representation context over the extended quiver (same tower and base).
CtxPtr tilde_context(const PrincipalPair& pair, const CtxPtr& ctx);
/// Zero-pads a mutable-part representation to the extended quiver.
Rep pad_rep(const Rep& V, const CtxPtr& tilde_ctx);
/// Restriction of an extended representation with no frozen support.
Rep restrict_rep(const Rep& Vt, const CtxPtr& ctx);

struct CharCheck {
  std::string kind;
  std::string instance;
  bool pass = false;
  std::string detail;
};

/// Exchange multiplication theorem, evaluated inside the extended-quiver
/// category. A and D are the approximation-route data supplied by the
/// caller; the unique-morphism route (kernel, cokernel, its injective part)
/// is recomputed, cross-checked against them, and used for the frozen-side
/// monomial. The injective class is returned through i_out when requested.
CharCheck verify_exchange_mult(const Rep& V, const Rep& W, const Rep& A, const Rep& D,
                               const PrincipalPair& pair, const Budgets& b = {},
                               Vec* i_out = nullptr);
/// Variant that also derives A and D from the unique morphism into tau V.
CharCheck verify_exchange_mult_auto(const Rep& V, const Rep& W, const PrincipalPair& pair,
                                    const Budgets& b = {});

/// Injective/projective-side multiplication formula at frozen vertex k.
CharCheck verify_proj_mult(const Rep& W, int k, const PrincipalPair& pair,
                           const Budgets& b = {});

/// X_V X_W = q^(Lambda(*v,*w)/2) X_{V + W} when Ext(V, W) = 0, and the full
/// commutation when Ext vanishes both ways.
CharCheck verify_dsum_factor(const Rep& V, const Rep& W, const PrincipalPair& pair,
                             const Budgets& b = {});

/// Commutation with an injective-hull monomial whose socle avoids supp V.
CharCheck verify_init_comm(const Rep& V, int k, const PrincipalPair& pair,
                           const Budgets& b = {});

/// Grassmannian direct-sum count identity for Ext(V, W) = 0.
CharCheck verify_grass_dsum(const Rep& V, const Rep& W, const Budgets& b = {});

/// Commutation of two frozen-side monomials.
CharCheck verify_init_frozen_comm(int i, int j, const PrincipalPair& pair, const CtxPtr& ctx);

}  // namespace qclab
