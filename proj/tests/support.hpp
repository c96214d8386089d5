#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// Oracles use plain loops over std::complex and closed forms, never the
// library's own decompositions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "biframe/biframes.hpp"
#include "biframe/frames.hpp"
#include "biframe/linalg.hpp"

namespace testing_support {

using biframe::ComplexMatrix;
using biframe::Field;
using biframe::Index;
using biframe::Operator;
using biframe::Scalar;
using biframe::Vector;
using biframe::VectorFamily;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  /// Log-uniform in [lo, hi].
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  Index integer(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(engine_); }

  Scalar scalar(Field f) { return f == Field::Real ? Scalar(normal(), 0.0) : Scalar(normal(), normal()); }

  ComplexMatrix gaussian(Field f, Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) m(i, j) = scalar(f);
    }
    return m;
  }

  Vector vector(Field f, Index n) { return Vector(f, gaussian(f, n, 1).col(0)); }

  Vector unit_vector(Field f, Index n) {
    ComplexMatrix x = gaussian(f, n, 1);
    x /= x.norm();
    return Vector(f, x.col(0));
  }

  /// Haar-ish unitary from a QR of a Gaussian matrix.
  ComplexMatrix unitary(Field f, Index n) {
    const ComplexMatrix g = gaussian(f, n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    if (f == Field::Real) q = q.real().cast<Scalar>();
    return q;
  }

  /// X diag(s) Y* with singular values log-uniform in [lo, hi].
  ComplexMatrix with_singular_values(Field f, Index n, double lo, double hi) {
    const ComplexMatrix x = unitary(f, n);
    const ComplexMatrix y = unitary(f, n);
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = log_uniform(lo, hi);
    return x * d * y.adjoint();
  }

  /// Hermitian positive definite with eigenvalues log-uniform in [lo, hi].
  Operator positive_definite(Field f, Index n, double lo = 0.2, double hi = 5.0) {
    const ComplexMatrix x = unitary(f, n);
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = log_uniform(lo, hi);
    ComplexMatrix m = x * d * x.adjoint();
    m = (m + m.adjoint()) / 2.0;
    if (f == Field::Real) m = m.real().cast<Scalar>();
    return Operator(f, m);
  }

  Operator invertible(Field f, Index n, double lo = 0.2, double hi = 5.0) {
    ComplexMatrix m = with_singular_values(f, n, lo, hi);
    if (f == Field::Real) m = m.real().cast<Scalar>();
    return Operator(f, m);
  }

  VectorFamily family(Field f, Index n, std::size_t m) {
    std::vector<Vector> out;
    for (std::size_t k = 0; k < m; ++k) out.push_back(vector(f, n));
    return VectorFamily(std::move(out));
  }

  /// n x m synthesis map X [D 0] Y* with singular values log-uniform in [lo, hi]; m >= n.
  VectorFamily frame(Field f, Index n, Index m, double lo = 0.3, double hi = 3.0) {
    const ComplexMatrix x = unitary(f, n);
    const ComplexMatrix y = unitary(f, m);
    ComplexMatrix d = ComplexMatrix::Zero(n, m);
    for (Index i = 0; i < n; ++i) d(i, i) = log_uniform(lo, hi);
    ComplexMatrix t = x * d * y.adjoint();
    if (f == Field::Real) t = t.real().cast<Scalar>();
    return VectorFamily::from_columns(f, t);
  }

  /// The columns of an invertible map: a Riesz basis with controlled condition.
  VectorFamily riesz_basis(Field f, Index n, double lo = 0.2, double hi = 5.0) {
    return VectorFamily::from_columns(f, invertible(f, n, lo, hi).matrix());
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// sum_k left_k right_k^* by explicit loops.
inline ComplexMatrix brute_mixed(const VectorFamily& left, const VectorFamily& right) {
  const Index n = left.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < left.size(); ++k) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) out(i, j) += left[k][i] * std::conj(right[k][j]);
    }
  }
  return out;
}

/// <a, b> = sum a_i conj(b_i).
inline Scalar brute_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  Scalar s = 0.0;
  for (Index i = 0; i < a.rows(); ++i) s += a(i, 0) * std::conj(b(i, 0));
  return s;
}

/// Eigenvalues (ascending) of the real symmetric [[a, b], [b, d]] by the quadratic formula.
inline std::pair<double, double> sym2_eigen(double a, double b, double d) {
  const double mean = (a + d) / 2.0;
  const double radius = std::sqrt((a - d) * (a - d) / 4.0 + b * b);
  return {mean - radius, mean + radius};
}

/// Min and max of Re<S x, x> over `samples` random unit vectors.
inline std::pair<double, double> sampled_form(const Operator& s, std::size_t samples, Rng& rng) {
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t t = 0; t < samples; ++t) {
    const Vector x = rng.unit_vector(s.field(), s.dim());
    const ComplexMatrix sx = s.matrix() * x.entries();
    const double q = brute_inner(sx, x.entries()).real();
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return {lo, hi};
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testing_support
