#pragma once

#include <string_view>

#include "biframe/frames.hpp"
#include "biframe/linalg.hpp"

namespace biframe::detail {

/// Singular unless the smallest singular value exceeds tol.inv.
void require_invertible(const Operator& m, const Tolerances& tol, std::string_view ctx);

/// NotHermitian / NotPositiveDefinite.
void require_positive_definite(const Operator& m, const Tolerances& tol, std::string_view ctx);

/// BadCoupling unless ||T W^* - I||_F <= tol.recon.
void require_coupling(const Operator& t, const Operator& w, const Tolerances& tol, std::string_view ctx);

/// NotOrthonormal unless E is an orthonormal basis.
void require_orthonormal(const VectorFamily& e, const Tolerances& tol, std::string_view ctx);

}  // namespace biframe::detail
