#include "biframe/briesz.hpp"

#include <algorithm>

#include "detail/checks.hpp"
#include "detail/mixed_synthesis.hpp"

namespace biframe {

namespace {

/// U with U e_k = f_k, for an orthonormal basis E.
Operator generator_for(const VectorFamily& e, const VectorFamily& f) {
  return Operator(f.field(), detail::mixed_synthesis(f, e));
}

}  // namespace

ClassMembership class_membership(const VectorFamily& e, const VectorFamily& f, const Tolerances& tol) {
  require_compatible(e, f, "class_membership");
  detail::require_orthonormal(e, tol, "class_membership: E");

  Operator u = generator_for(e, f);
  const double deviation = hermitian_deviation(u);
  const bool hermitian = deviation <= tol.herm * std::max(1.0, u.frobenius_norm());
  const bool member =
      hermitian && classify_definiteness(hermitian_part(u), tol) == Definiteness::PositiveDefinite;
  return {member, std::move(u), deviation};
}

bool in_pair_frame_class(const VectorFamily& e, const VectorFamily& f, const Tolerances& tol) {
  require_compatible(e, f, "in_pair_frame_class");
  detail::require_orthonormal(e, tol, "in_pair_frame_class: E");
  return is_pair_frame(e, f, tol);
}

GeneratingBasis find_generating_onb(const VectorFamily& f, const Tolerances& tol) {
  if (!is_riesz_basis(f, tol)) throw Error(ErrorKind::NotARieszBasis, "find_generating_onb: F");
  // V = S^{1/2} W^* (polar form of the synthesis map), so delta_k = W^* e_k = S^{-1/2} f_k.
  const Operator s = frame_operator(f);
  return {f.transformed(fractional_power(s, -0.5, tol)), fractional_power(s, 0.5, tol)};
}

bool is_b_riesz(const VectorFamily& f, const Tolerances& tol) {
  if (f.size() != static_cast<std::size_t>(f.dim())) return false;
  // Constructive in both fields: a generating orthonormal basis must be found
  // and must pass the membership test.
  if (!is_riesz_basis(f, tol)) return false;
  const GeneratingBasis gb = find_generating_onb(f, tol);
  return is_orthonormal_basis(gb.delta, tol) && class_membership(gb.delta, f, tol).member;
}

bool same_basis(const VectorFamily& a, const VectorFamily& b, const Tolerances& tol) {
  require_compatible(a, b, "same_basis");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((a[k] - b[k]).norm() > tol.recon) return false;
  }
  return true;
}

bool generating_onb_is_unique(const VectorFamily& f, const VectorFamily& e1, const VectorFamily& e2,
                              const Tolerances& tol) {
  for (const VectorFamily* e : {&e1, &e2}) {
    if (!class_membership(*e, f, tol).member) {
      throw Error(ErrorKind::MembershipNotEstablished,
                  "generating_onb_is_unique: F is not in the class of one of the bases");
    }
  }
  return same_basis(e1, e2, tol);
}

BiframeReport vu_biframe(const VectorFamily& e, const Operator& u, const Operator& v, const Tolerances& tol) {
  detail::require_orthonormal(e, tol, "vu_biframe: E");
  detail::require_positive_definite(u, tol, "vu_biframe: U");
  detail::require_positive_definite(v, tol, "vu_biframe: V");
  return analyze_biframe(e.transformed(u), e.transformed(v), tol);
}

FamilyPair briesz_partner(const VectorFamily& e, const Operator& u, const Operator& q, const Tolerances& tol) {
  detail::require_orthonormal(e, tol, "briesz_partner: E");
  detail::require_positive_definite(u, tol, "briesz_partner: U");
  detail::require_positive_definite(q, tol, "briesz_partner: Q");
  return {e.transformed(u), e.transformed(q * invert(u, tol))};
}

bool canonical_dual_is_briesz(const VectorFamily& f, const Tolerances& tol) {
  if (!is_riesz_basis(f, tol)) throw Error(ErrorKind::NotARieszBasis, "canonical_dual_is_briesz: F");
  return is_b_riesz(canonical_dual(f, tol), tol);
}

}  // namespace biframe
