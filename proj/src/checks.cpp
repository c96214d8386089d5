#include "detail/checks.hpp"

#include <sstream>

namespace biframe::detail {

void require_invertible(const Operator& m, const Tolerances& tol, std::string_view ctx) {
  const double smin = smallest_singular_value(m);
  if (!(smin > tol.inv)) {
    std::ostringstream os;
    os << ctx << ": smallest singular value " << smin << " <= " << tol.inv;
    throw Error(ErrorKind::Singular, os.str());
  }
}

void require_positive_definite(const Operator& m, const Tolerances& tol, std::string_view ctx) {
  const EigenSystem es = hermitian_eigen(m, tol);
  if (classify_definiteness(es, tol) != Definiteness::PositiveDefinite) {
    std::ostringstream os;
    os << ctx << ": not positive definite (min eigenvalue " << es.min() << ")";
    throw Error(ErrorKind::NotPositiveDefinite, os.str());
  }
}

void require_coupling(const Operator& t, const Operator& w, const Tolerances& tol, std::string_view ctx) {
  const double dev = (t * adjoint(w) - Operator::identity(t.field(), t.dim())).frobenius_norm();
  if (dev > tol.recon) {
    std::ostringstream os;
    os << ctx << ": ||T W* - I||_F = " << dev;
    throw Error(ErrorKind::BadCoupling, os.str());
  }
}

void require_orthonormal(const VectorFamily& e, const Tolerances& tol, std::string_view ctx) {
  if (!is_orthonormal_basis(e, tol)) {
    throw Error(ErrorKind::NotOrthonormal, std::string(ctx) + ": family is not an orthonormal basis");
  }
}

}  // namespace biframe::detail
