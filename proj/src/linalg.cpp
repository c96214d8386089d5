#include "biframe/linalg.hpp"

#include "detail/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace biframe {

namespace {

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

void require_square_same_field(const Operator& a, const Operator& b, std::string_view ctx) {
  require_same_field(a.field(), b.field(), ctx);
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << ctx << ": dimension " << a.dim() << " vs " << b.dim();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

double relative_scale(const Operator& m) { return std::max(1.0, m.frobenius_norm()); }

void require_hermitian(const Operator& m, const Tolerances& tol, std::string_view ctx) {
  const double dev = hermitian_deviation(m);
  if (dev > tol.herm * relative_scale(m)) {
    std::ostringstream os;
    os << ctx << ": operator is not Hermitian (||M - M*||_F = " << dev << ")";
    throw Error(ErrorKind::NotHermitian, os.str());
  }
}

}  // namespace

std::string_view to_string(Field field) {
  return field == Field::Real ? "real" : "complex";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::NotABiframe: return "NotABiframe";
    case ErrorKind::NotARieszBasis: return "NotARieszBasis";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::BadCoupling: return "BadCoupling";
    case ErrorKind::MembershipNotEstablished: return "MembershipNotEstablished";
  }
  return "Unknown";
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefinite: return "PositiveSemidefinite";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::NegativeSemidefinite: return "NegativeSemidefinite";
    case Definiteness::NegativeDefinite: return "NegativeDefinite";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void Tolerances::validate() const {
  for (double v : {herm, pd, inv, recon}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "tolerances must be finite and strictly positive");
    }
  }
}

void require_same_field(Field a, Field b, std::string_view context) {
  if (a != b) {
    std::ostringstream os;
    os << context << ": cannot mix " << to_string(a) << " and " << to_string(b) << " values";
    throw Error(ErrorKind::FieldMismatch, os.str());
  }
}

// -- Vector -------------------------------------------------------------------

Vector::Vector(Field field, ComplexColumn entries) : field_(field), entries_(std::move(entries)) {
  if (entries_.size() < 1) throw Error(ErrorKind::InvalidArgument, "vector must have at least one entry");
  if (!all_finite(entries_)) throw Error(ErrorKind::InvalidArgument, "vector entries must be finite");
  if (field_ == Field::Real && !entries_.imag().isZero(0.0)) {
    throw Error(ErrorKind::FieldMismatch, "real vector has a nonzero imaginary part");
  }
}

Vector Vector::real(std::initializer_list<double> entries) {
  return real(std::vector<double>(entries));
}

Vector Vector::real(const std::vector<double>& entries) {
  ComplexColumn v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Index>(i)) = entries[i];
  return Vector(Field::Real, std::move(v));
}

Vector Vector::complex(std::initializer_list<Scalar> entries) {
  ComplexColumn v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (Scalar z : entries) v(i++) = z;
  return Vector(Field::Complex, std::move(v));
}

Vector Vector::zero(Field field, Index n) { return Vector(field, ComplexColumn::Zero(n)); }

Vector Vector::unit(Field field, Index n, Index k) {
  ComplexColumn v = ComplexColumn::Zero(n);
  v(k) = 1.0;
  return Vector(field, std::move(v));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_field(a.field_, b.field_, "vector sum");
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum of different lengths");
  return Vector(a.field_, a.entries_ + b.entries_);
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_field(a.field_, b.field_, "vector difference");
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference of different lengths");
  return Vector(a.field_, a.entries_ - b.entries_);
}

Vector operator*(Scalar c, const Vector& v) {
  if (v.field_ == Field::Real && c.imag() != 0.0) {
    throw Error(ErrorKind::FieldMismatch, "complex scalar times real vector");
  }
  if (v.field_ == Field::Real) return Vector(Field::Real, (c.real() * v.entries_.real()).cast<Scalar>());
  return Vector(v.field_, c * v.entries_);
}

bool operator==(const Vector& a, const Vector& b) {
  return a.field_ == b.field_ && a.entries_ == b.entries_;
}

Scalar inner(const Vector& a, const Vector& b) {
  require_same_field(a.field(), b.field(), "inner product");
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "inner product of different lengths");
  // Eigen's dot() conjugates its left argument.
  return b.entries().dot(a.entries());
}

// -- Operator -----------------------------------------------------------------

Operator::Operator(Field field, ComplexMatrix entries) : field_(field), entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    std::ostringstream os;
    os << "operator must be square and nonempty, got " << entries_.rows() << "x" << entries_.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  if (!all_finite(entries_)) throw Error(ErrorKind::InvalidArgument, "operator entries must be finite");
  if (field_ == Field::Real && !entries_.imag().isZero(0.0)) {
    throw Error(ErrorKind::FieldMismatch, "real operator has a nonzero imaginary part");
  }
}

Operator Operator::identity(Field field, Index n) { return Operator(field, ComplexMatrix::Identity(n, n)); }

Operator Operator::zero(Field field, Index n) { return Operator(field, ComplexMatrix::Zero(n, n)); }

Operator Operator::diagonal(Field field, const std::vector<double>& diag) {
  const auto n = static_cast<Index>(diag.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return Operator(field, std::move(m));
}

Operator Operator::real(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  ComplexMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) throw Error(ErrorKind::DimensionMismatch, "ragged operator literal");
    Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return Operator(Field::Real, std::move(m));
}

Operator Operator::complex(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const auto n = static_cast<Index>(rows.size());
  ComplexMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) throw Error(ErrorKind::DimensionMismatch, "ragged operator literal");
    Index j = 0;
    for (Scalar x : row) m(i, j++) = x;
    ++i;
  }
  return Operator(Field::Complex, std::move(m));
}

Operator Operator::from_real(const Eigen::MatrixXd& entries) {
  return Operator(Field::Real, entries.cast<Scalar>());
}

Vector Operator::column(Index j) const { return Vector(field_, entries_.col(j)); }

double Operator::spectral_norm() const { return singular_values(*this).front(); }

Operator operator*(const Operator& a, const Operator& b) {
  require_square_same_field(a, b, "operator product");
  if (a.field_ == Field::Real) {
    const Eigen::MatrixXd prod = a.entries_.real() * b.entries_.real();
    return Operator::from_real(prod);
  }
  return Operator(Field::Complex, a.entries_ * b.entries_);
}

Vector operator*(const Operator& a, const Vector& v) {
  require_same_field(a.field_, v.field(), "operator-vector product");
  if (a.dim() != v.size()) throw Error(ErrorKind::DimensionMismatch, "operator-vector product");
  if (a.field_ == Field::Real) {
    const Eigen::VectorXd prod = a.entries_.real() * v.entries().real();
    return Vector(Field::Real, prod.cast<Scalar>());
  }
  return Vector(Field::Complex, a.entries_ * v.entries());
}

Operator operator+(const Operator& a, const Operator& b) {
  require_square_same_field(a, b, "operator sum");
  return Operator(a.field_, a.entries_ + b.entries_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_square_same_field(a, b, "operator difference");
  return Operator(a.field_, a.entries_ - b.entries_);
}

Operator operator*(double c, const Operator& a) { return Operator(a.field_, c * a.entries_); }

bool operator==(const Operator& a, const Operator& b) {
  return a.field_ == b.field_ && a.entries_.rows() == b.entries_.rows() && a.entries_ == b.entries_;
}

// -- spectral machinery ---------------------------------------------------------

Operator EigenSystem::basis() const {
  const auto n = static_cast<Index>(eigenvectors.size());
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j) m.col(j) = eigenvectors[static_cast<std::size_t>(j)].entries();
  return Operator(field, std::move(m));
}

Operator adjoint(const Operator& m) { return Operator(m.field(), m.matrix().adjoint()); }

double hermitian_deviation(const Operator& m) { return (m.matrix() - m.matrix().adjoint()).norm(); }

Operator hermitian_part(const Operator& m) {
  return Operator(m.field(), 0.5 * (m.matrix() + m.matrix().adjoint()));
}

bool is_hermitian(const Operator& m, const Tolerances& tol) {
  return hermitian_deviation(m) <= tol.herm * relative_scale(m);
}

EigenSystem hermitian_eigen(const Operator& m, const Tolerances& tol) {
  require_hermitian(m, tol, "hermitian_eigen");
  const Index n = m.dim();
  EigenSystem es{m.field(), {}, {}};
  es.eigenvalues.reserve(static_cast<std::size_t>(n));
  es.eigenvectors.reserve(static_cast<std::size_t>(n));
  // Tridiagonalization + implicit QL/QR on the exactly-Hermitian part.
  if (m.field() == Field::Real) {
    const Eigen::MatrixXd sym = 0.5 * (m.matrix().real() + m.matrix().real().transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::InvalidArgument, "eigensolver did not converge");
    for (Index i = 0; i < n; ++i) {
      es.eigenvalues.push_back(solver.eigenvalues()(i));
      es.eigenvectors.emplace_back(Field::Real, solver.eigenvectors().col(i).cast<Scalar>());
    }
  } else {
    const ComplexMatrix herm = 0.5 * (m.matrix() + m.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::InvalidArgument, "eigensolver did not converge");
    for (Index i = 0; i < n; ++i) {
      es.eigenvalues.push_back(solver.eigenvalues()(i));
      es.eigenvectors.emplace_back(Field::Complex, solver.eigenvectors().col(i));
    }
  }
  return es;
}

double zero_band(const EigenSystem& es, const Tolerances& tol) {
  const double scale = std::max({1.0, std::abs(es.min()), std::abs(es.max())});
  return tol.pd * scale;
}

Definiteness classify_definiteness(const EigenSystem& es, const Tolerances& tol) {
  const double band = zero_band(es, tol);
  const double lo = es.min();
  const double hi = es.max();
  if (lo > band) return Definiteness::PositiveDefinite;
  if (lo >= -band) return Definiteness::PositiveSemidefinite;
  if (hi < -band) return Definiteness::NegativeDefinite;
  if (hi <= band) return Definiteness::NegativeSemidefinite;
  return Definiteness::Indefinite;
}

Definiteness classify_definiteness(const Operator& m, const Tolerances& tol) {
  return classify_definiteness(hermitian_eigen(m, tol), tol);
}

Operator fractional_power(const Operator& m, double s, const Tolerances& tol) {
  if (!std::isfinite(s)) throw Error(ErrorKind::InvalidArgument, "exponent must be finite");
  const EigenSystem es = hermitian_eigen(m, tol);
  const bool nonnegative_integer = s >= 0.0 && std::floor(s) == s;
  if (!nonnegative_integer && classify_definiteness(es, tol) != Definiteness::PositiveDefinite) {
    std::ostringstream os;
    os << "fractional_power with exponent " << s << " needs a positive definite operator (min eigenvalue "
       << es.min() << ")";
    throw Error(ErrorKind::NotPositiveDefinite, os.str());
  }
  if (s == 0.0) return Operator::identity(m.field(), m.dim());
  if (s == 1.0) return m;
  return es.spectral_map([s](double lambda) { return std::pow(lambda, s); });
}

std::vector<double> singular_values(const Operator& m) {
  Eigen::VectorXd sv;
  if (m.field() == Field::Real) {
    sv = Eigen::BDCSVD<Eigen::MatrixXd>(m.matrix().real()).singularValues();
  } else {
    sv = Eigen::BDCSVD<ComplexMatrix>(m.matrix()).singularValues();
  }
  return {sv.data(), sv.data() + sv.size()};
}

double smallest_singular_value(const Operator& m) { return singular_values(m).back(); }

double condition_number(const Operator& m) {
  const auto sv = singular_values(m);
  if (sv.back() == 0.0) return std::numeric_limits<double>::infinity();
  return sv.front() / sv.back();
}


PolarFactors polar_decompose(const Operator& m, const Tolerances& tol) {
  detail::require_invertible(m, tol, "polar_decompose");
  // M = U diag(s) V^*  =>  W = U V^*, P = V diag(s) V^*.
  if (m.field() == Field::Real) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.matrix().real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::MatrixXd w = svd.matrixU() * svd.matrixV().transpose();
    Eigen::MatrixXd p = svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().transpose();
    p = 0.5 * (p + p.transpose()).eval();
    return {Operator::from_real(w), Operator::from_real(p)};
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const ComplexMatrix w = svd.matrixU() * svd.matrixV().adjoint();
  ComplexMatrix p =
      svd.matrixV() * svd.singularValues().cast<Scalar>().asDiagonal() * svd.matrixV().adjoint();
  p = 0.5 * (p + p.adjoint()).eval();
  return {Operator(Field::Complex, w), Operator(Field::Complex, p)};
}

Operator invert(const Operator& m, const Tolerances& tol) {
  detail::require_invertible(m, tol, "invert");
  if (m.field() == Field::Real) {
    const Eigen::MatrixXd inv = m.matrix().real().fullPivLu().inverse();
    return Operator::from_real(inv);
  }
  return Operator(Field::Complex, m.matrix().fullPivLu().inverse());
}

bool factorization_check(const Operator& s1, const Operator& s2, const Operator& u, const Operator& v,
                         const Tolerances& tol) {
  for (const Operator* op : {&s2, &u, &v}) require_square_same_field(s1, *op, "factorization_check");
  for (const Operator* s : {&s1, &s2}) {
    if (classify_definiteness(*s, tol) != Definiteness::PositiveDefinite) {
      throw Error(ErrorKind::NotPositiveDefinite, "factorization_check: S1 and S2 must be positive definite");
    }
  }
  const Operator product = v * s1 * adjoint(u);
  return (s2 - product).frobenius_norm() <= tol.recon * s2.frobenius_norm();
}

}  // namespace biframe
