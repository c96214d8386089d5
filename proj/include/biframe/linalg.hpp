#pragma once

// Dense, field-tagged linear algebra over R^n / C^n.
//
// Every Vector and Operator carries a Field tag. Storage is always complex;
// real-field values keep an exactly-zero imaginary part, and all operations
// on real inputs produce real outputs (decompositions dispatch to real
// solvers). Mixing fields in one operation throws ErrorKind::FieldMismatch.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace biframe {

using Scalar = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexColumn = Eigen::VectorXcd;
using Index = Eigen::Index;

enum class Field { Real, Complex };

std::string_view to_string(Field field);

enum class ErrorKind {
  NotHermitian,
  NotPositiveDefinite,
  Singular,
  DimensionMismatch,
  FieldMismatch,
  InvalidArgument,
  NotAFrame,
  NotABiframe,
  NotARieszBasis,
  NotOrthonormal,
  BadCoupling,
  MembershipNotEstablished,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Numerical thresholds. All dimensionless and strictly positive.
///  herm  - relative Hermitian deviation accepted as "self-adjoint"
///  pd    - relative eigenvalue band treated as zero
///  inv   - absolute smallest singular value below which a map is singular
///  recon - residual threshold for identities (duality, unitarity, ...)
struct Tolerances {
  double herm = 1e-10;
  double pd = 1e-9;
  double inv = 1e-12;
  double recon = 1e-8;

  void validate() const;
};

class Vector {
 public:
  Vector(Field field, ComplexColumn entries);

  static Vector real(std::initializer_list<double> entries);
  static Vector real(const std::vector<double>& entries);
  static Vector complex(std::initializer_list<Scalar> entries);
  static Vector zero(Field field, Index n);
  /// k-th standard basis vector (0-based).
  static Vector unit(Field field, Index n, Index k);

  Field field() const noexcept { return field_; }
  Index size() const noexcept { return entries_.size(); }
  const ComplexColumn& entries() const noexcept { return entries_; }
  Scalar operator[](Index i) const { return entries_(i); }
  double norm() const { return entries_.norm(); }

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(Scalar c, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  Field field_;
  ComplexColumn entries_;
};

/// <a, b>, linear in the first argument.
Scalar inner(const Vector& a, const Vector& b);

class Operator {
 public:
  Operator(Field field, ComplexMatrix entries);

  static Operator identity(Field field, Index n);
  static Operator zero(Field field, Index n);
  static Operator diagonal(Field field, const std::vector<double>& diag);
  /// Row-major literal, real field.
  static Operator real(std::initializer_list<std::initializer_list<double>> rows);
  /// Row-major literal, complex field.
  static Operator complex(std::initializer_list<std::initializer_list<Scalar>> rows);
  /// Wraps a real matrix; the result has Field::Real.
  static Operator from_real(const Eigen::MatrixXd& entries);

  Field field() const noexcept { return field_; }
  Index dim() const noexcept { return entries_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return entries_; }
  Scalar operator()(Index i, Index j) const { return entries_(i, j); }
  Vector column(Index j) const;

  double frobenius_norm() const { return entries_.norm(); }
  /// Largest singular value.
  double spectral_norm() const;

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Vector operator*(const Operator& a, const Vector& v);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(double c, const Operator& a);
  friend bool operator==(const Operator& a, const Operator& b);

 private:
  Field field_;
  ComplexMatrix entries_;
};

/// Throws FieldMismatch unless both tags agree.
void require_same_field(Field a, Field b, std::string_view context);

struct EigenSystem {
  Field field;
  std::vector<double> eigenvalues;  // ascending
  std::vector<Vector> eigenvectors;  // orthonormal, paired with eigenvalues

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  /// Columns are the eigenvectors.
  Operator basis() const;
  /// sum_i g(lambda_i) v_i v_i^*
  template <typename Fn>
  Operator spectral_map(Fn&& g) const;
};

enum class Definiteness {
  PositiveDefinite,
  PositiveSemidefinite,
  Indefinite,
  NegativeSemidefinite,
  NegativeDefinite,
};

std::string_view to_string(Definiteness d);

struct PolarFactors {
  Operator unitary;   // W
  Operator positive;  // P = (M^* M)^{1/2}
};

/// Conjugate transpose.
Operator adjoint(const Operator& m);

/// ||M - M^*||_F
double hermitian_deviation(const Operator& m);

/// (M + M^*) / 2. Real-field callers use this to get the symmetric part.
Operator hermitian_part(const Operator& m);

bool is_hermitian(const Operator& m, const Tolerances& tol);

EigenSystem hermitian_eigen(const Operator& m, const Tolerances& tol);

/// Half-width of the band around zero inside which an eigenvalue of `es`
/// counts as zero.
double zero_band(const EigenSystem& es, const Tolerances& tol);

Definiteness classify_definiteness(const Operator& m, const Tolerances& tol);
Definiteness classify_definiteness(const EigenSystem& es, const Tolerances& tol);

/// M^s for Hermitian M. Non-integer or negative s requires M positive
/// definite; non-negative integer powers are accepted for any Hermitian M.
Operator fractional_power(const Operator& m, double s, const Tolerances& tol);

PolarFactors polar_decompose(const Operator& m, const Tolerances& tol);

Operator invert(const Operator& m, const Tolerances& tol);

/// Descending singular values.
std::vector<double> singular_values(const Operator& m);
double smallest_singular_value(const Operator& m);
/// sigma_max / sigma_min (infinity for a singular map).
double condition_number(const Operator& m);

/// True iff ||S2 - V S1 U^*||_F <= recon * ||S2||_F. S1 and S2 must be
/// Hermitian positive definite.
bool factorization_check(const Operator& s1, const Operator& s2, const Operator& u,
                         const Operator& v, const Tolerances& tol);

// -- implementation of templates ---------------------------------------------

template <typename Fn>
Operator EigenSystem::spectral_map(Fn&& g) const {
  const auto n = static_cast<Index>(eigenvalues.size());
  if (field == Field::Real) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      const Eigen::VectorXd v = eigenvectors[i].entries().real();
      acc += g(eigenvalues[i]) * (v * v.transpose());
    }
    return Operator::from_real(acc);
  }
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const ComplexColumn& v = eigenvectors[i].entries();
    acc += g(eigenvalues[i]) * (v * v.adjoint());
  }
  return Operator(Field::Complex, std::move(acc));
}

}  // namespace biframe
