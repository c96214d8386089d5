#include <gtest/gtest.h>

#include <cmath>

#include "biframe/fixtures.hpp"
#include "biframe/linalg.hpp"
#include "support.hpp"

using namespace biframe;
using testing_support::max_abs;
using testing_support::Rng;

namespace {

const Tolerances kTol;
const Scalar kI{0.0, 1.0};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(Adjoint, IdentityIsSelfAdjoint) {
  const Operator id = Operator::identity(Field::Complex, 3);
  EXPECT_EQ(adjoint(id), id);
}

TEST(Adjoint, RealTranspose) {
  EXPECT_EQ(adjoint(Operator::real({{1, 3}, {2, 8}})), Operator::real({{1, 2}, {3, 8}}));
}

TEST(Adjoint, ComplexConjugateTranspose) {
  const Operator m = Operator::complex({{0, kI}, {0, 0}});
  EXPECT_EQ(adjoint(m), Operator::complex({{0, 0}, {-kI, 0}}));
}

TEST(Vector, RealFieldRejectsImaginaryEntries) {
  ComplexColumn c(2);
  c << 1.0, kI;
  EXPECT_EQ(kind_of([&] { Vector(Field::Real, c); }), ErrorKind::FieldMismatch);
}

TEST(Vector, MixedFieldsRejected) {
  EXPECT_EQ(kind_of([] { (void)inner(Vector::real({1, 0}), Vector::complex({1, 0})); }), ErrorKind::FieldMismatch);
}

TEST(Operator, RejectsNonFiniteAndNonSquare) {
  EXPECT_EQ(kind_of([] { Operator(Field::Real, ComplexMatrix::Zero(2, 3)); }), ErrorKind::DimensionMismatch);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = NAN;
  EXPECT_EQ(kind_of([&] { Operator(Field::Real, bad); }), ErrorKind::InvalidArgument);
}

TEST(HermitianEigen, Diagonal) {
  const EigenSystem es = hermitian_eigen(Operator::diagonal(Field::Real, {2, 1}), kTol);
  ASSERT_EQ(es.eigenvalues.size(), 2u);
  EXPECT_EQ(es.eigenvalues[0], 1.0);
  EXPECT_EQ(es.eigenvalues[1], 2.0);
}

TEST(HermitianEigen, TwoByTwoAgainstQuadraticFormula) {
  const EigenSystem es = hermitian_eigen(Operator::real({{3, -1}, {-1, 2}}), kTol);
  EXPECT_NEAR(es.min(), (5.0 - std::sqrt(5.0)) / 2.0, 1e-14);
  EXPECT_NEAR(es.max(), (5.0 + std::sqrt(5.0)) / 2.0, 1e-14);
}

TEST(HermitianEigen, AsymmetricRejected) {
  EXPECT_EQ(kind_of([] { hermitian_eigen(Operator::real({{1, 3}, {2, 8}}), kTol); }), ErrorKind::NotHermitian);
}

TEST(HermitianEigen, InvariantsOnRandomInput) {
  Rng rng(11);
  for (Field f : {Field::Real, Field::Complex}) {
    for (Index n : {2, 5, 17}) {
      const Operator m = rng.positive_definite(f, n);
      const EigenSystem es = hermitian_eigen(m, kTol);
      const Operator rebuilt = es.spectral_map([](double x) { return x; });
      EXPECT_LE((rebuilt - m).frobenius_norm(), 1e-12 * m.frobenius_norm());
      const ComplexMatrix b = es.basis().matrix();
      EXPECT_LE((b.adjoint() * b - ComplexMatrix::Identity(n, n)).norm(), 1e-12);
      EXPECT_TRUE(std::is_sorted(es.eigenvalues.begin(), es.eigenvalues.end()));
    }
  }
}

TEST(ClassifyDefiniteness, Examples) {
  EXPECT_EQ(classify_definiteness(Operator::identity(Field::Real, 3), kTol), Definiteness::PositiveDefinite);
  EXPECT_EQ(classify_definiteness(Operator::real({{1, 4}, {4, -2}}), kTol), Definiteness::Indefinite);
  EXPECT_EQ(classify_definiteness(Operator::real({{1, 2.5}, {2.5, 8}}), kTol), Definiteness::PositiveDefinite);
}

TEST(ClassifyDefiniteness, SymmetricPartOfPairFrameOperator) {
  const Operator sym = hermitian_part(Operator::real({{1, 5}, {3, -2}}));
  EXPECT_EQ(sym, Operator::real({{1, 4}, {4, -2}}));
  const auto [lo, hi] = testing_support::sym2_eigen(1, 4, -2);
  EXPECT_NEAR(lo, (-1.0 - std::sqrt(73.0)) / 2.0, 1e-14);
  EXPECT_NEAR(hi, (-1.0 + std::sqrt(73.0)) / 2.0, 1e-14);
  const EigenSystem es = hermitian_eigen(sym, kTol);
  EXPECT_NEAR(es.min(), lo, 1e-13);
  EXPECT_NEAR(es.max(), hi, 1e-13);
}

TEST(ClassifyDefiniteness, SemidefiniteAndNegativeClasses) {
  EXPECT_EQ(classify_definiteness(Operator::diagonal(Field::Real, {0, 1}), kTol), Definiteness::PositiveSemidefinite);
  EXPECT_EQ(classify_definiteness(Operator::diagonal(Field::Real, {0, -1}), kTol), Definiteness::NegativeSemidefinite);
  EXPECT_EQ(classify_definiteness(Operator::diagonal(Field::Real, {-2, -1}), kTol), Definiteness::NegativeDefinite);
}

TEST(ClassifyDefiniteness, ZeroBandScalesWithNorm) {
  // 1e-6 is far inside the band for a matrix of norm 1e4 but outside it for norm 1.
  EXPECT_EQ(classify_definiteness(Operator::diagonal(Field::Real, {1e-6, 1e4}), kTol),
            Definiteness::PositiveSemidefinite);
  EXPECT_EQ(classify_definiteness(Operator::diagonal(Field::Real, {1e-6, 1}), kTol), Definiteness::PositiveDefinite);
}

TEST(ClassifyDefiniteness, RejectsAsymmetric) {
  EXPECT_EQ(kind_of([] { classify_definiteness(Operator::real({{1, 3}, {2, 8}}), kTol); }), ErrorKind::NotHermitian);
}

TEST(FractionalPower, Examples) {
  EXPECT_EQ(fractional_power(Operator::identity(Field::Real, 3), 0.5, kTol), Operator::identity(Field::Real, 3));
  const Operator root = fractional_power(Operator::diagonal(Field::Real, {4, 9}), 0.5, kTol);
  EXPECT_LE(max_abs(root.matrix() - Operator::diagonal(Field::Real, {2, 3}).matrix()), 1e-15);
  const Operator s = Operator::real({{2, -2}, {-2, 4}});
  const Operator p = fractional_power(s, 0.5, kTol);
  EXPECT_LE((p * p - s).frobenius_norm(), kTol.recon);
  EXPECT_EQ(p.field(), Field::Real);
}

TEST(FractionalPower, ZeroAndOneAreExact) {
  const Operator s = Operator::real({{2, -2}, {-2, 4}});
  EXPECT_EQ(fractional_power(s, 0.0, kTol), Operator::identity(Field::Real, 2));
  EXPECT_EQ(fractional_power(s, 1.0, kTol), s);
}

TEST(FractionalPower, Errors) {
  EXPECT_EQ(kind_of([] { fractional_power(Operator::real({{1, 3}, {2, 8}}), 0.5, kTol); }), ErrorKind::NotHermitian);
  EXPECT_EQ(kind_of([] { fractional_power(Operator::diagonal(Field::Real, {1, 0}), -1.0, kTol); }),
            ErrorKind::NotPositiveDefinite);
  EXPECT_EQ(kind_of([] { fractional_power(Operator::diagonal(Field::Real, {1, -1}), 0.5, kTol); }),
            ErrorKind::NotPositiveDefinite);
  // Integer powers of a merely Hermitian input are fine.
  EXPECT_EQ(fractional_power(Operator::diagonal(Field::Real, {1, -2}), 2.0, kTol),
            Operator::diagonal(Field::Real, {1, 4}));
}

TEST(PolarDecompose, Examples) {
  const PolarFactors id = polar_decompose(Operator::identity(Field::Real, 2), kTol);
  EXPECT_LE(max_abs(id.unitary.matrix() - ComplexMatrix::Identity(2, 2)), 1e-15);
  EXPECT_LE(max_abs(id.positive.matrix() - ComplexMatrix::Identity(2, 2)), 1e-15);

  const PolarFactors d = polar_decompose(Operator::diagonal(Field::Real, {-2, 3}), kTol);
  EXPECT_LE(max_abs(d.unitary.matrix() - Operator::diagonal(Field::Real, {-1, 1}).matrix()), 1e-15);
  EXPECT_LE(max_abs(d.positive.matrix() - Operator::diagonal(Field::Real, {2, 3}).matrix()), 1e-14);

  const Operator m = Operator::real({{-1, 1}, {2, 0}});
  const PolarFactors pf = polar_decompose(m, kTol);
  EXPECT_LE((adjoint(pf.unitary) * pf.unitary - Operator::identity(Field::Real, 2)).frobenius_norm(), kTol.recon);
  EXPECT_LE((pf.positive * pf.positive - adjoint(m) * m).frobenius_norm(), kTol.recon);
  EXPECT_LE((pf.unitary * pf.positive - m).frobenius_norm(), kTol.recon * m.frobenius_norm());
}

TEST(PolarDecompose, SingularRejected) {
  EXPECT_EQ(kind_of([] { polar_decompose(Operator::real({{1, 1}, {1, 1}}), kTol); }), ErrorKind::Singular);
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(Operator::identity(Field::Real, 2), kTol), Operator::identity(Field::Real, 2));
  const Operator inv = invert(Operator::real({{1, 5}, {3, -2}}), kTol);
  const Operator want = (-1.0 / 17.0) * Operator::real({{-2, -5}, {-3, 1}});
  EXPECT_LE(max_abs(inv.matrix() - want.matrix()), 1e-15);
  EXPECT_EQ(kind_of([] { invert(Operator::real({{1, 1}, {1, 1}}), kTol); }), ErrorKind::Singular);
}

TEST(Invert, ResidualScalesWithCondition) {
  Rng rng(5);
  for (Index n : {3, 12, 30}) {
    const Operator m = rng.invertible(Field::Complex, n, 1e-3, 10.0);
    const Operator inv = invert(m, kTol);
    EXPECT_LE((m * inv - Operator::identity(Field::Complex, n)).frobenius_norm(), kTol.recon * condition_number(m));
  }
}

TEST(FactorizationCheck, Examples) {
  const Operator id = Operator::identity(Field::Real, 2);
  const Operator q = Operator::diagonal(Field::Real, {4, 1});
  const Operator half = fractional_power(q, 0.5, kTol);
  EXPECT_TRUE(factorization_check(id, id, id, id, kTol));
  EXPECT_TRUE(factorization_check(id, q, half, half, kTol));
  EXPECT_FALSE(factorization_check(id, id, 2.0 * id, id, kTol));
}

TEST(FactorizationCheck, Errors) {
  const Operator id2 = Operator::identity(Field::Real, 2);
  const Operator id3 = Operator::identity(Field::Real, 3);
  EXPECT_EQ(kind_of([&] { factorization_check(id2, id3, id2, id2, kTol); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { factorization_check(id2, Operator::diagonal(Field::Real, {1, -1}), id2, id2, kTol); }),
            ErrorKind::NotPositiveDefinite);
}

TEST(Tolerances, MustBePositive) {
  Tolerances t;
  t.pd = 0.0;
  EXPECT_EQ(kind_of([&] { t.validate(); }), ErrorKind::InvalidArgument);
  EXPECT_NO_THROW(kTol.validate());
}

// -- properties --------------------------------------------------------------

TEST(LinalgProperty, AdjointIsAnExactInvolution) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = trial % 2 ? Field::Complex : Field::Real;
    const Index n = rng.integer(1, 12);
    ComplexMatrix m = rng.gaussian(f, n, n);
    const Operator op(f, m);
    EXPECT_EQ(adjoint(adjoint(op)), op);
  }
}

TEST(LinalgProperty, PowersAdd) {
  Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = trial % 2 ? Field::Complex : Field::Real;
    const Index n = rng.integer(2, 32);
    const Operator m = rng.positive_definite(f, n);
    const double a = rng.uniform(-1.5, 1.5);
    const double b = rng.uniform(-1.5, 1.5);
    const Operator lhs = fractional_power(m, a, kTol) * fractional_power(m, b, kTol);
    const Operator rhs = fractional_power(m, a + b, kTol);
    EXPECT_LE((lhs - rhs).frobenius_norm(), kTol.recon * std::pow(m.frobenius_norm(), a + b))
        << "trial " << trial << " n=" << n << " a=" << a << " b=" << b;
  }
}

TEST(LinalgProperty, PolarFactorsOfRandomInvertible) {
  Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = trial % 2 ? Field::Complex : Field::Real;
    const Index n = rng.integer(2, 32);
    const Operator m = rng.invertible(f, n);
    const PolarFactors pf = polar_decompose(m, kTol);
    EXPECT_LE((pf.unitary * pf.positive - m).frobenius_norm(), kTol.recon * m.frobenius_norm());
    EXPECT_LE((adjoint(pf.unitary) * pf.unitary - Operator::identity(f, n)).frobenius_norm(), kTol.recon);
    EXPECT_TRUE(is_hermitian(pf.positive, kTol));
    EXPECT_EQ(classify_definiteness(pf.positive, kTol), Definiteness::PositiveDefinite);
  }
}

TEST(LinalgProperty, DefinitenessAgreesWithSampledSigns) {
  Rng rng(404);
  for (const auto& pair : fixtures::small_pairs()) {
    const Operator sym = hermitian_part(biframe_operator(pair.f, pair.g));
    const EigenSystem es = hermitian_eigen(sym, kTol);
    const Definiteness d = classify_definiteness(es, kTol);
    const double band = zero_band(es, kTol);
    bool saw_positive = false, saw_negative = false;
    for (int t = 0; t < 10000; ++t) {
      const Vector x = rng.unit_vector(sym.field(), sym.dim());
      const double q = inner(sym * x, x).real();
      saw_positive |= q > band;
      saw_negative |= q < -band;
      switch (d) {
        case Definiteness::PositiveDefinite: ASSERT_GT(q, 0.0) << pair.name; break;
        case Definiteness::PositiveSemidefinite: ASSERT_GE(q, -band) << pair.name; break;
        case Definiteness::NegativeSemidefinite: ASSERT_LE(q, band) << pair.name; break;
        case Definiteness::NegativeDefinite: ASSERT_LT(q, 0.0) << pair.name; break;
        case Definiteness::Indefinite: break;
      }
    }
    if (d == Definiteness::Indefinite) { EXPECT_TRUE(saw_positive && saw_negative) << pair.name; }
  }
}

}  // namespace
