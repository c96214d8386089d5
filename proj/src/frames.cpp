#include "biframe/frames.hpp"

#include <cmath>
#include <sstream>

#include "detail/mixed_synthesis.hpp"

namespace biframe {

VectorFamily::VectorFamily(std::vector<Vector> vectors) : field_(Field::Real), vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw Error(ErrorKind::InvalidArgument, "a vector family needs at least one vector");
  field_ = vectors_.front().field();
  const Index n = vectors_.front().size();
  for (std::size_t k = 1; k < vectors_.size(); ++k) {
    require_same_field(field_, vectors_[k].field(), "vector family");
    if (vectors_[k].size() != n) {
      std::ostringstream os;
      os << "vector family: vector " << k << " has length " << vectors_[k].size() << ", expected " << n;
      throw Error(ErrorKind::DimensionMismatch, os.str());
    }
  }
}

VectorFamily VectorFamily::standard_basis(Field field, Index n) {
  std::vector<Vector> e;
  e.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) e.push_back(Vector::unit(field, n, k));
  return VectorFamily(std::move(e));
}

VectorFamily VectorFamily::real(std::initializer_list<std::initializer_list<double>> vectors) {
  std::vector<Vector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(Vector::real(v));
  return VectorFamily(std::move(out));
}

VectorFamily VectorFamily::from_columns(Field field, const ComplexMatrix& m) {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) out.emplace_back(field, m.col(j));
  return VectorFamily(std::move(out));
}

VectorFamily VectorFamily::zeros(Field field, Index n, std::size_t m) {
  return VectorFamily(std::vector<Vector>(m, Vector::zero(field, n)));
}

VectorFamily VectorFamily::transformed(const Operator& u) const {
  std::vector<Vector> out;
  out.reserve(vectors_.size());
  for (const Vector& v : vectors_) out.push_back(u * v);
  return VectorFamily(std::move(out));
}

Operator LinearMap::as_operator() const {
  if (rows() != cols()) {
    std::ostringstream os;
    os << "synthesis map is " << rows() << "x" << cols() << ", not square";
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  return Operator(field, matrix);
}

void require_compatible(const VectorFamily& f, const VectorFamily& g, std::string_view context) {
  require_same_field(f.field(), g.field(), context);
  if (f.size() != g.size() || f.dim() != g.dim()) {
    std::ostringstream os;
    os << context << ": families have shapes (m=" << f.size() << ", n=" << f.dim() << ") and (m=" << g.size()
       << ", n=" << g.dim() << ")";
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

LinearMap synthesis_operator(const VectorFamily& f) {
  ComplexMatrix v(f.dim(), static_cast<Index>(f.size()));
  for (std::size_t k = 0; k < f.size(); ++k) v.col(static_cast<Index>(k)) = f[k].entries();
  return {f.field(), std::move(v)};
}

namespace detail {

ComplexMatrix mixed_synthesis(const VectorFamily& left, const VectorFamily& right) {
  // sum_k left_k right_k^*, accumulated in a fixed order with explicit real
  // arithmetic so that mixed_synthesis(F, G)^* == mixed_synthesis(G, F) holds
  // bit for bit.
  const Index n = left.dim();
  Eigen::MatrixXd re = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < left.size(); ++k) {
    const ComplexColumn& a = left[k].entries();
    const ComplexColumn& b = right[k].entries();
    for (Index j = 0; j < n; ++j) {
      const double br = b(j).real();
      const double bi = b(j).imag();
      for (Index i = 0; i < n; ++i) {
        const double ar = a(i).real();
        const double ai = a(i).imag();
        re(i, j) += ar * br + ai * bi;
        im(i, j) += ai * br - ar * bi;
      }
    }
  }
  ComplexMatrix out(n, n);
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace detail

Operator frame_operator(const VectorFamily& f) {
  return Operator(f.field(), detail::mixed_synthesis(f, f));
}

BoundsCertificate frame_bounds(const VectorFamily& f, const Tolerances& tol) {
  const EigenSystem es = hermitian_eigen(frame_operator(f), tol);
  if (!(es.min() > zero_band(es, tol))) {
    std::ostringstream os;
    os << "smallest eigenvalue of the frame operator is " << es.min();
    throw Error(ErrorKind::NotAFrame, os.str());
  }
  return {es.min(), es.max(), true};
}

BesselCheck is_bessel(const VectorFamily& f, const Tolerances& tol) {
  const EigenSystem es = hermitian_eigen(frame_operator(f), tol);
  return {true, std::max(0.0, es.max())};
}

bool is_frame(const VectorFamily& f, const Tolerances& tol) {
  if (f.size() < static_cast<std::size_t>(f.dim())) return false;
  const EigenSystem es = hermitian_eigen(frame_operator(f), tol);
  return es.min() > zero_band(es, tol);
}

bool is_riesz_basis(const VectorFamily& f, const Tolerances& tol) {
  if (f.size() != static_cast<std::size_t>(f.dim())) return false;
  return smallest_singular_value(synthesis_operator(f).as_operator()) > tol.inv;
}

bool is_orthonormal_basis(const VectorFamily& f, const Tolerances& tol) {
  if (f.size() != static_cast<std::size_t>(f.dim())) return false;
  const ComplexMatrix gram = cross_gram(f, f);
  return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).norm() <= tol.recon;
}

VectorFamily canonical_dual(const VectorFamily& f, const Tolerances& tol) {
  if (!is_frame(f, tol)) throw Error(ErrorKind::NotAFrame, "canonical_dual needs a frame");
  return f.transformed(invert(frame_operator(f), tol));
}

bool are_dual_frames(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol) {
  require_compatible(f, g, "are_dual_frames");
  const ComplexMatrix mixed = detail::mixed_synthesis(g, f);
  return (mixed - ComplexMatrix::Identity(mixed.rows(), mixed.cols())).norm() <= tol.recon;
}

bool are_biorthogonal(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol) {
  require_compatible(f, g, "are_biorthogonal");
  const ComplexMatrix c = cross_gram(f, g);
  return (c - ComplexMatrix::Identity(c.rows(), c.cols())).norm() <= tol.recon;
}

ComplexMatrix cross_gram(const VectorFamily& f, const VectorFamily& g) {
  require_compatible(f, g, "cross_gram");
  const auto m = static_cast<Index>(f.size());
  ComplexMatrix c(m, m);
  for (Index k = 0; k < m; ++k) {
    for (Index j = 0; j < m; ++j) c(k, j) = inner(f[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(j)]);
  }
  return c;
}

}  // namespace biframe
