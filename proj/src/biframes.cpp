#include "biframe/biframes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail/checks.hpp"
#include "detail/mixed_synthesis.hpp"

namespace biframe {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Biframe: return "Biframe";
    case Classification::PairFrameOnly: return "PairFrameOnly";
    case Classification::Neither: return "Neither";
  }
  return "Unknown";
}

ExponentQuadruple::ExponentQuadruple(double p, double q, double r, double t) : p_(p), q_(q), r_(r), t_(t) {
  for (double x : {p, q, r, t}) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "exponents must be finite");
  }
  if (std::abs(p + q - 1.0) > 1e-12 || std::abs(r + t - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "exponents need p + q = 1 and r + t = 1, got p + q = " << p + q << ", r + t = " << r + t;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

Operator biframe_operator(const VectorFamily& f, const VectorFamily& g) {
  require_compatible(f, g, "biframe_operator");
  return Operator(f.field(), detail::mixed_synthesis(g, f));
}

BiframeReport analyze_biframe(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol) {
  Operator s = biframe_operator(f, g);
  const double deviation = hermitian_deviation(s);
  const EigenSystem es = hermitian_eigen(hermitian_part(s), tol);
  const double band = zero_band(es, tol);
  const double smin = smallest_singular_value(s);

  // Over R the form <Sf, f> never sees the antisymmetric part.
  const bool self_adjoint_enough =
      f.field() == Field::Real || deviation <= tol.herm * std::max(1.0, s.frobenius_norm());
  const bool form_positive = es.min() > band;

  BiframeReport report{Classification::Neither, std::move(s), deviation, es.eigenvalues, std::nullopt,
                       std::nullopt, smin, band};
  if (self_adjoint_enough && form_positive) {
    report.classification = Classification::Biframe;
    report.bounds = BoundsCertificate{es.min(), es.max(), true};
  } else if (smin > tol.inv) {
    report.classification = Classification::PairFrameOnly;
  }
  if (!form_positive) report.witness = es.eigenvectors.front();
  return report;
}

BoundsCertificate optimal_biframe_bounds(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol) {
  const BiframeReport report = analyze_biframe(f, g, tol);
  if (report.classification != Classification::Biframe) {
    throw Error(ErrorKind::NotABiframe, "pair is classified " + std::string(to_string(report.classification)));
  }
  return *report.bounds;
}

bool verify_bounds(const VectorFamily& f, const VectorFamily& g, double a, double b, const Tolerances& tol) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::InvalidArgument, "stated bounds must be positive");
  const BiframeReport report = analyze_biframe(f, g, tol);
  if (report.classification != Classification::Biframe) {
    throw Error(ErrorKind::NotABiframe, "pair is classified " + std::string(to_string(report.classification)));
  }
  return a <= report.bounds->lower + report.band && report.bounds->upper <= b + report.band;
}

bool is_pair_frame(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol) {
  return smallest_singular_value(biframe_operator(f, g)) > tol.inv;
}

bool is_u_controlled(const VectorFamily& f, const Operator& u, const Tolerances& tol) {
  detail::require_invertible(u, tol, "is_u_controlled: U");
  return analyze_biframe(f, f.transformed(u), tol).classification == Classification::Biframe;
}

bool is_tu_controlled(const VectorFamily& f, const Operator& t, const Operator& u, const Tolerances& tol) {
  detail::require_invertible(t, tol, "is_tu_controlled: T");
  detail::require_invertible(u, tol, "is_tu_controlled: U");
  return analyze_biframe(f.transformed(t), f.transformed(u), tol).classification == Classification::Biframe;
}

namespace {

void require_biframe(const VectorFamily& f, const VectorFamily& g, const Tolerances& tol, std::string_view ctx) {
  const BiframeReport report = analyze_biframe(f, g, tol);
  if (report.classification != Classification::Biframe) {
    std::ostringstream os;
    os << ctx << ": pair is classified " << to_string(report.classification);
    throw Error(ErrorKind::NotABiframe, os.str());
  }
}

double relative_residual(const Vector& approx, const Vector& exact) {
  return (approx - exact).norm() / std::max(1.0, exact.norm());
}

}  // namespace

Reconstruction reconstruct(const VectorFamily& f, const VectorFamily& g, const Vector& x, const Tolerances& tol) {
  require_biframe(f, g, tol, "reconstruct");
  require_same_field(f.field(), x.field(), "reconstruct");
  if (x.size() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "reconstruct: vector length differs from dim");

  const Operator s_fg_inv = invert(biframe_operator(f, g), tol);
  const Operator s_gf_inv = invert(biframe_operator(g, f), tol);

  Vector first = Vector::zero(x.field(), x.size());
  Vector second = Vector::zero(x.field(), x.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    first = first + inner(x, s_gf_inv * f[k]) * g[k];
    second = second + inner(x, f[k]) * (s_fg_inv * g[k]);
  }
  const double r1 = relative_residual(first, x);
  const double r2 = relative_residual(second, x);
  return {std::move(first), std::move(second), r1, r2};
}

std::vector<Scalar> biframe_coefficients(const VectorFamily& f, const VectorFamily& g, const Vector& x,
                                         const Tolerances& tol) {
  require_biframe(f, g, tol, "biframe_coefficients");
  require_same_field(f.field(), x.field(), "biframe_coefficients");
  if (x.size() != f.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "biframe_coefficients: vector length differs from dim");
  }
  const Operator s_gf_inv = invert(biframe_operator(g, f), tol);
  std::vector<Scalar> coeffs;
  coeffs.reserve(f.size());
  for (const Vector& fk : f) coeffs.push_back(inner(x, s_gf_inv * fk));
  return coeffs;
}

TransformResult transform_biframe(const VectorFamily& f, const VectorFamily& g, const Operator& q,
                                  const Operator& w, const Operator& t, const ExponentQuadruple& exps,
                                  const Tolerances& tol) {
  const BiframeReport input = analyze_biframe(f, g, tol);
  if (input.classification != Classification::Biframe) {
    throw Error(ErrorKind::NotABiframe,
                "transform_biframe: input pair is classified " + std::string(to_string(input.classification)));
  }
  detail::require_positive_definite(q, tol, "transform_biframe: Q");
  detail::require_coupling(t, w, tol, "transform_biframe");

  const Operator& s = input.op;
  Operator u = fractional_power(q, exps.r(), tol) * w * fractional_power(s, -exps.p(), tol);
  Operator v = fractional_power(q, exps.t(), tol) * t * fractional_power(s, -exps.q(), tol);
  VectorFamily f2 = f.transformed(u);
  VectorFamily g2 = g.transformed(v);
  BiframeReport report = analyze_biframe(f2, g2, tol);
  return {std::move(f2), std::move(g2), std::move(u), std::move(v), std::move(report)};
}

bool parseval_transform_check(const Operator& u, const Operator& v, const Tolerances& tol) {
  const Operator product = v * adjoint(u);
  return (product - Operator::identity(u.field(), u.dim())).frobenius_norm() <= tol.recon;
}

FamilyPair construct_from_onb(const VectorFamily& e, const Operator& q, const Operator& w, const Operator& t,
                              double r, double t_exp, const Tolerances& tol) {
  detail::require_orthonormal(e, tol, "construct_from_onb: E");
  if (!std::isfinite(r) || !std::isfinite(t_exp) || std::abs(r + t_exp - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "construct_from_onb: exponents need r + t = 1");
  }
  detail::require_positive_definite(q, tol, "construct_from_onb: Q");
  detail::require_coupling(t, w, tol, "construct_from_onb");
  return {e.transformed(fractional_power(q, r, tol) * w), e.transformed(fractional_power(q, t_exp, tol) * t)};
}

VectorFamily gdual_partner(const VectorFamily& f, const Operator& q, const VectorFamily& h, const Tolerances& tol) {
  require_compatible(f, h, "gdual_partner");
  if (!is_frame(f, tol)) throw Error(ErrorKind::NotAFrame, "gdual_partner: F");
  detail::require_positive_definite(q, tol, "gdual_partner: Q");

  const Operator s_f = frame_operator(f);
  const Operator s_f_inv = invert(s_f, tol);
  const Operator s_f_q_inv = invert(s_f * q, tol);

  std::vector<Vector> out;
  out.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Vector dual_k = s_f_inv * f[k];
    Vector gk = s_f_q_inv * f[k] + h[k];
    for (std::size_t j = 0; j < f.size(); ++j) gk = gk - inner(dual_k, f[j]) * h[j];
    out.push_back(std::move(gk));
  }
  return VectorFamily(std::move(out));
}

VectorFamily gdual_partner(const VectorFamily& f, const Operator& q, const Tolerances& tol) {
  return gdual_partner(f, q, VectorFamily::zeros(f.field(), f.dim(), f.size()), tol);
}

VectorFamily riesz_partner(const VectorFamily& f, const Operator& q, const Tolerances& tol) {
  if (!is_riesz_basis(f, tol)) throw Error(ErrorKind::NotARieszBasis, "riesz_partner: F");
  detail::require_positive_definite(q, tol, "riesz_partner: Q");
  return f.transformed(invert(frame_operator(f) * q, tol));
}

}  // namespace biframe
