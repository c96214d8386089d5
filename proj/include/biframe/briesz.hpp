#pragma once

// Families that form a biframe with an orthonormal basis.
//
// For an orthonormal basis E, the class [E] holds every F with (E, F) a
// biframe, equivalently F = {U e_k} for a Hermitian positive definite U.
// F is b-Riesz if it lies in [E] for some orthonormal E. Every Riesz basis
// is b-Riesz: with S = S_F, the orthonormal basis delta_k = S^{-1/2} f_k
// generates F through U = S^{1/2}, and that generating basis is unique.

#include <optional>

#include "biframe/biframes.hpp"
#include "biframe/frames.hpp"
#include "biframe/linalg.hpp"

namespace biframe {

struct ClassMembership {
  bool member;
  /// The unique linear U with U e_k = f_k. Always present; Hermitian
  /// positive definite iff member.
  std::optional<Operator> generator;
  /// Hermitian deviation ||U - U^*||_F of the candidate generator.
  double deviation;
};

struct GeneratingBasis {
  VectorFamily delta;  // orthonormal, f_k = U delta_k
  Operator generator;  // U = S_F^{1/2}
};

/// Throws NotOrthonormal / DimensionMismatch.
ClassMembership class_membership(const VectorFamily& e, const VectorFamily& f, const Tolerances& tol);

/// Pair-frame analogue of class membership: (E, F) is a pair frame.
bool in_pair_frame_class(const VectorFamily& e, const VectorFamily& f, const Tolerances& tol);

/// Throws NotARieszBasis.
GeneratingBasis find_generating_onb(const VectorFamily& f, const Tolerances& tol);

bool is_b_riesz(const VectorFamily& f, const Tolerances& tol);

/// Checks that the two orthonormal bases generating F coincide vector by
/// vector. Throws MembershipNotEstablished unless F lies in both classes.
bool generating_onb_is_unique(const VectorFamily& f, const VectorFamily& e1, const VectorFamily& e2,
                              const Tolerances& tol);

/// Analyzes ({U e_k}, {V e_k}). When VU is Hermitian positive definite the
/// result is a biframe with operator VU.
BiframeReport vu_biframe(const VectorFamily& e, const Operator& u, const Operator& v, const Tolerances& tol);

/// ({U e_k}, {Q U^{-1} e_k}); biframe operator Q, Parseval when Q = I.
FamilyPair briesz_partner(const VectorFamily& e, const Operator& u, const Operator& q, const Tolerances& tol);

/// is_b_riesz(canonical_dual(F)). Throws NotARieszBasis.
bool canonical_dual_is_briesz(const VectorFamily& f, const Tolerances& tol);

/// Vector-by-vector equality within tol.recon (order-sensitive).
bool same_basis(const VectorFamily& a, const VectorFamily& b, const Tolerances& tol);

}  // namespace biframe
