#pragma once

// Classical finite frame theory: vector families, synthesis and frame
// operators, frame/Bessel/Riesz/orthonormal predicates, canonical duals.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "biframe/linalg.hpp"

namespace biframe {

/// Ordered family {f_k}, k = 0..m-1, of vectors in an n-dimensional space.
class VectorFamily {
 public:
  explicit VectorFamily(std::vector<Vector> vectors);

  static VectorFamily standard_basis(Field field, Index n);
  /// Real family from literal rows, one row per vector.
  static VectorFamily real(std::initializer_list<std::initializer_list<double>> vectors);
  /// The columns of `m` (n x m).
  static VectorFamily from_columns(Field field, const ComplexMatrix& m);
  /// m zero vectors in dimension n.
  static VectorFamily zeros(Field field, Index n, std::size_t m);

  Field field() const noexcept { return field_; }
  /// Number of vectors (m).
  std::size_t size() const noexcept { return vectors_.size(); }
  /// Ambient dimension (n).
  Index dim() const noexcept { return vectors_.front().size(); }
  const Vector& operator[](std::size_t k) const { return vectors_[k]; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  /// {U f_k}
  VectorFamily transformed(const Operator& u) const;

  friend bool operator==(const VectorFamily& a, const VectorFamily& b) { return a.vectors_ == b.vectors_; }

 private:
  Field field_;
  std::vector<Vector> vectors_;
};

/// Rectangular n x m map; the synthesis operator of a family.
struct LinearMap {
  Field field;
  ComplexMatrix matrix;

  Index rows() const { return matrix.rows(); }
  Index cols() const { return matrix.cols(); }
  /// Throws DimensionMismatch unless square.
  Operator as_operator() const;
};

struct BoundsCertificate {
  double lower;
  double upper;
  bool optimal;
};

struct BesselCheck {
  bool bessel;
  double upper;
};

/// Throws DimensionMismatch/FieldMismatch unless F and G agree in m, n and field.
void require_compatible(const VectorFamily& f, const VectorFamily& g, std::string_view context);

/// Column k is f_k.
LinearMap synthesis_operator(const VectorFamily& f);

/// S_F = sum_k f_k f_k^*
Operator frame_operator(const VectorFamily& f);

/// Optimal frame bounds (extreme eigenvalues of S_F). Throws NotAFrame.
BoundsCertificate frame_bounds(const VectorFamily& f, const Tolerances& tol);

/// Always Bessel in finite dimension; `upper` is the optimal Bessel bound.
BesselCheck is_bessel(const VectorFamily& f, const Tolerances& tol);
bool is_frame(const VectorFamily& f, const Tolerances& tol);
bool is_riesz_basis(const VectorFamily& f, const Tolerances& tol);
bool is_orthonormal_basis(const VectorFamily& f, const Tolerances& tol);

/// {S_F^{-1} f_k}. Throws NotAFrame.
VectorFamily canonical_dual(const VectorFamily& f, const Tolerances& tol);

/// sum_k g_k f_k^* = I within tol.recon.
bool are_dual_frames(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol);

/// <f_k, g_j> = delta_kj within tol.recon.
bool are_biorthogonal(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol);

/// Entry (k, j) is <f_k, g_j>.
ComplexMatrix cross_gram(const VectorFamily& f, const VectorFamily& g);

}  // namespace biframe
