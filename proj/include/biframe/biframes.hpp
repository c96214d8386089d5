#pragma once

// Biframes: pairs (F, G) with A||f||^2 <= sum_k <f, f_k><g_k, f> <= B||f||^2.
//
// Everything is driven by the biframe operator S_{F,G} f = sum_k <f, f_k> g_k.
// Over C the pair is a biframe iff S_{F,G} is Hermitian positive definite.
// Over R the quadratic form only sees the symmetric part of S_{F,G}, so the
// pair is a biframe iff that symmetric part is positive definite; S_{F,G}
// itself may be asymmetric and the report exposes the deviation.

#include <optional>
#include <string_view>
#include <vector>

#include "biframe/frames.hpp"
#include "biframe/linalg.hpp"

namespace biframe {

enum class Classification { Biframe, PairFrameOnly, Neither };

std::string_view to_string(Classification c);

struct BiframeReport {
  Classification classification;
  Operator op;  // S_{F,G}
  double hermitian_deviation;
  /// Ascending eigenvalues of the Hermitian (complex) / symmetric (real) part.
  std::vector<double> spectrum;
  /// Present iff classification == Biframe; optimal.
  std::optional<BoundsCertificate> bounds;
  /// Unit vector with Re<S w, w> inside the zero band or below it. Present
  /// when the Hermitian part fails to be positive definite.
  std::optional<Vector> witness;
  /// Smallest singular value of S_{F,G}.
  double smallest_singular_value;
  /// Half-width of the zero band used for the decision.
  double band;
};

/// Exponents for the operator-transform construction; p + q = 1, r + t = 1.
class ExponentQuadruple {
 public:
  /// Throws InvalidArgument unless p + q = 1 and r + t = 1 within 1e-12.
  ExponentQuadruple(double p, double q, double r, double t);
  /// q = 1 - p, t = 1 - r.
  static ExponentQuadruple from_pr(double p, double r) { return {p, 1.0 - p, r, 1.0 - r}; }

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double r() const noexcept { return r_; }
  double t() const noexcept { return t_; }

 private:
  double p_, q_, r_, t_;
};

struct Reconstruction {
  /// sum_k <f, S_{G,F}^{-1} f_k> g_k
  Vector via_coefficients;
  /// sum_k <f, f_k> S_{F,G}^{-1} g_k
  Vector via_dual_family;
  double residual_coefficients;
  double residual_dual_family;
};

struct TransformResult {
  VectorFamily f;  // {U f_k}
  VectorFamily g;  // {V g_k}
  Operator u;
  Operator v;
  BiframeReport report;
};

struct FamilyPair {
  VectorFamily f;
  VectorFamily g;
};

/// S_{F,G} = sum_k g_k f_k^*. biframe_operator(F,G)^* == biframe_operator(G,F) exactly.
Operator biframe_operator(const VectorFamily& f, const VectorFamily& g);

BiframeReport analyze_biframe(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol);

/// Throws NotABiframe.
BoundsCertificate optimal_biframe_bounds(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol);

/// True iff [a, b] contains the optimal bounds (with the pd band as slack).
bool verify_bounds(const VectorFamily& f, const VectorFamily& g, double a, double b, const Tolerances& tol);

/// S_{F,G} invertible.
bool is_pair_frame(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol);

/// (F, UF) is a biframe. Throws Singular if U is not invertible.
bool is_u_controlled(const VectorFamily& f, const Operator& u, const Tolerances& tol);
/// (TF, UF) is a biframe.
bool is_tu_controlled(const VectorFamily& f, const Operator& t, const Operator& u, const Tolerances& tol);

Reconstruction reconstruct(const VectorFamily& f, const VectorFamily& g, const Vector& x, const Tolerances& tol);

/// {<x, S_{G,F}^{-1} f_k>}; synthesizing these with G gives back x. Over C
/// this equals {<x, S_{F,G}^{-1} f_k>} since S_{F,G} is self-adjoint.
std::vector<Scalar> biframe_coefficients(const VectorFamily& f, const VectorFamily& g, const Vector& x,
                                         const Tolerances& tol);

/// U = Q^r W S^{-p}, V = Q^t T S^{-q} with S = S_{F,G}; returns ({U f_k}, {V g_k}).
/// The new biframe operator is Q.
TransformResult transform_biframe(const VectorFamily& f, const VectorFamily& g, const Operator& q,
                                  const Operator& w, const Operator& t, const ExponentQuadruple& exps,
                                  const Tolerances& tol);

/// ||V U^* - I||_F <= recon.
bool parseval_transform_check(const Operator& u, const Operator& v, const Tolerances& tol);

/// f_k = Q^r W e_k, g_k = Q^t T e_k; S_{F,G} = Q.
FamilyPair construct_from_onb(const VectorFamily& e, const Operator& q, const Operator& w, const Operator& t,
                              double r, double t_exp, const Tolerances& tol);

/// g_k = (S_F Q)^{-1} f_k + h_k - sum_j <S_F^{-1} f_k, f_j> h_j; S_{F,G} = Q^{-1}.
VectorFamily gdual_partner(const VectorFamily& f, const Operator& q, const VectorFamily& h, const Tolerances& tol);
/// Same with h = 0.
VectorFamily gdual_partner(const VectorFamily& f, const Operator& q, const Tolerances& tol);

/// g_k = (S_F Q)^{-1} f_k for a Riesz basis F; S_{F,G} = Q^{-1}.
VectorFamily riesz_partner(const VectorFamily& f, const Operator& q, const Tolerances& tol);

}  // namespace biframe
