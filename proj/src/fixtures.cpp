#include "biframe/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "biframe/briesz.hpp"

namespace biframe::fixtures {

namespace {

constexpr Field R = Field::Real;
constexpr Field C = Field::Complex;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return (a - b).cwiseAbs().maxCoeff();
}

double family_diff(const VectorFamily& a, const VectorFamily& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return INFINITY;
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (a[k] - b[k]).norm());
  return worst;
}

double form(const Operator& s, const Vector& x) { return inner(s * x, x).real(); }

/// Collects observations for one row; any failed check fails the row.
class Probe {
 public:
  void check(bool ok, const std::string& note) {
    pass_ = pass_ && ok;
    notes_.push_back(ok ? note : "FAILED " + note);
  }
  void near(double got, double want, double tol, const std::string& what) {
    check(std::abs(got - want) <= tol, what + "=" + num(got));
  }
  void is(Classification got, Classification want, const std::string& what) {
    check(got == want, what + "=" + std::string(to_string(got)));
  }
  void bounds(const BiframeReport& r, double lower, double upper, double tol, const std::string& what) {
    if (!r.bounds) {
      check(false, what + " bounds missing");
      return;
    }
    check(std::abs(r.bounds->lower - lower) <= tol && std::abs(r.bounds->upper - upper) <= tol,
          what + " bounds=(" + num(r.bounds->lower) + ", " + num(r.bounds->upper) + ")");
  }

  Outcome done() const {
    std::string out;
    for (std::size_t i = 0; i < notes_.size(); ++i) out += (i ? "; " : "") + notes_[i];
    return {out, pass_};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> notes_;
};

VectorFamily standard(Index n, Field field = R) { return VectorFamily::standard_basis(field, n); }

Operator diag_of(Index n, const std::function<double(Index)>& c) {
  std::vector<double> d;
  for (Index k = 1; k <= n; ++k) d.push_back(c(k));
  return Operator::diagonal(R, d);
}

}  // namespace

VectorFamily scaled_basis(Field field, Index n, const std::function<double(Index)>& c) {
  std::vector<Vector> out;
  for (Index k = 1; k <= n; ++k) out.push_back(c(k) * Vector::unit(field, n, k - 1));
  return VectorFamily(std::move(out));
}

FamilyPair pair_frame_not_biframe() {
  return {VectorFamily::real({{1.0, 2.0}, {8.0 / 7.0, 4.0}}),
          VectorFamily::real({{-1.0, 175.0 / 21.0}, {7.0 / 4.0, -14.0 / 3.0}})};
}

FamilyPair non_bessel_biframe(Index m) {
  const Index n = 2 * m;
  auto f = [](Index j) { return j % 2 == 1 ? 1.0 / static_cast<double>(j) : static_cast<double>(j); };
  auto g = [](Index j) { return j % 2 == 1 ? static_cast<double>(j + 1) : 1.0 / static_cast<double>(j - 1); };
  return {scaled_basis(R, n, f), scaled_basis(R, n, g)};
}

FamilyPair bessel_pair_not_biframe(Index n) {
  std::vector<Vector> g;
  for (Index k = 1; k <= n; ++k) {
    g.push_back(k % 2 == 0 ? (2.0 / static_cast<double>(k)) * Vector::unit(R, n, k / 2 - 1) : Vector::zero(R, n));
  }
  return {scaled_basis(R, n, [](Index k) { return 1.0 / static_cast<double>(k); }), VectorFamily(std::move(g))};
}

FamilyPair frames_not_biframe(Index n) {
  std::vector<Vector> f{-0.5 * Vector::unit(R, n, 0), 0.5 * Vector::unit(R, n, 0)};
  std::vector<Vector> g{Vector::unit(R, n, 0), Vector::unit(R, n, 0)};
  for (Index k = 1; k < n; ++k) {
    f.push_back(Vector::unit(R, n, k));
    g.push_back(Vector::unit(R, n, k));
  }
  return {VectorFamily(std::move(f)), VectorFamily(std::move(g))};
}

FamilyPair shifted_basis_pair(Index n) {
  std::vector<Vector> g;
  for (Index k = 0; k < n; ++k) g.push_back(Vector::unit(C, n, (k + 1) % n));
  return {standard(n, C), VectorFamily(std::move(g))};
}

FamilyPair permuted_basis_pair(Index n) {
  std::vector<Vector> g;
  for (Index k = 0; k < n; ++k) g.push_back(Vector::unit(R, n, k < 2 ? 1 - k : k));
  return {standard(n), VectorFamily(std::move(g))};
}

FamilyPair real_positive_not_symmetric() { return {standard(2), VectorFamily::real({{1, 2}, {3, 8}})}; }

FamilyPair frame_with_non_frame(Index n) {
  std::vector<Vector> f, g;
  const Vector e1 = Vector::unit(R, n, 0);
  for (Index k = 1; k <= n; ++k) {
    const Vector ek = Vector::unit(R, n, k - 1);
    for (int rep = 0; rep < 3; ++rep) f.push_back(ek);
    g.push_back((static_cast<double>(k + 1) / static_cast<double>(k)) * ek);
    g.push_back(e1);
    g.push_back(-1.0 * e1);
  }
  return {VectorFamily(std::move(f)), VectorFamily(std::move(g))};
}

FamilyPair bessel_with_non_bessel(Index n) {
  auto f = [](Index k) { return k % 2 == 1 ? 1.0 : 1.0 / static_cast<double>(k); };
  auto g = [](Index k) { return k % 2 == 1 ? 1.0 : static_cast<double>(k); };
  return {scaled_basis(R, n, f), scaled_basis(R, n, g)};
}

FamilyPair weighted_parseval(Index n) {
  return {scaled_basis(R, n, [](Index k) { return static_cast<double>(k); }),
          scaled_basis(R, n, [](Index k) { return 1.0 / static_cast<double>(k); })};
}

FamilyPair member_of_standard_class() { return {standard(2), VectorFamily::real({{3, -1}, {-1, 2}})}; }

VectorFamily non_member_partner() { return VectorFamily::real({{0, 1.0 / 5.0}, {-1, 13.0 / 5.0}}); }

FamilyPair one_b_riesz_biframe() { return {VectorFamily::real({{3, -1}, {-1, 2}}), non_member_partner()}; }

FamilyPair two_b_riesz_not_biframe() {
  return {VectorFamily::real({{3, 1}, {1, 1}}), VectorFamily::real({{2, -1}, {-1, 1}})};
}

VectorFamily small_riesz_basis() { return VectorFamily::real({{-1, 2}, {1, 0}}); }

VectorFamily reflected_basis() {
  const double a = -std::sqrt(2.0 / 5.0);
  const double b = std::sqrt(3.0 / 5.0);
  return VectorFamily::real({{a, b}, {b, -a}});
}

VectorFamily primed_overlap_family() { return VectorFamily::real({{0, 1}, {1, 1}}); }

std::vector<NamedPair> small_pairs() {
  std::vector<NamedPair> out;
  auto add = [&out](std::string name, FamilyPair p) { out.push_back({std::move(name), std::move(p.f), std::move(p.g)}); };
  add("pair-frame-not-biframe", pair_frame_not_biframe());
  add("non-bessel-biframe", non_bessel_biframe(1));
  add("bessel-pair-not-biframe", bessel_pair_not_biframe(3));
  add("frames-not-biframe", frames_not_biframe(3));
  add("shifted-riesz-bases", shifted_basis_pair(3));
  add("permuted-orthonormal-bases", permuted_basis_pair(3));
  add("real-positive-not-self-adjoint", real_positive_not_symmetric());
  add("frame-with-non-frame", frame_with_non_frame(3));
  add("bessel-with-non-bessel", bessel_with_non_bessel(3));
  add("weighted-parseval", weighted_parseval(3));
  add("member-of-standard-class", member_of_standard_class());
  add("one-b-riesz-biframe", one_b_riesz_biframe());
  add("standard-with-non-member", {standard(2), non_member_partner()});
  const FamilyPair two = two_b_riesz_not_biframe();
  add("standard-with-first-b-riesz", {standard(2), two.f});
  add("standard-with-second-b-riesz", {standard(2), two.g});
  add("two-b-riesz-not-biframe", two);
  add("primed-overlap-standard", {standard(2), primed_overlap_family()});
  add("primed-overlap-swapped", {VectorFamily::real({{0, 1}, {1, 0}}), primed_overlap_family()});
  add("reflected-basis-with-riesz", {reflected_basis(), small_riesz_basis()});
  add("vu-positive-product", {standard(2).transformed(Operator::diagonal(R, {2, 1})),
                              standard(2).transformed(Operator::diagonal(R, {1, 3}))});
  return out;
}

namespace {

Outcome pair_frame_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair pf = pair_frame_not_biframe();
  const BiframeReport r = analyze_biframe(pf.f, pf.g, tol);
  const ComplexMatrix& s = r.op.matrix();
  const double diff = max_abs_diff(s, Operator::real({{1, 5}, {3, -2}}).matrix());
  p.check(diff <= 1e-14, "max|S - [[1,5],[3,-2]]|=" + num(diff));
  p.near((s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0)).real(), -17.0, 1e-12, "det");
  p.is(r.classification, Classification::PairFrameOnly, "class");
  const double root = std::sqrt(73.0);
  p.near(r.spectrum.front(), (-1.0 - root) / 2.0, 1e-10, "sym_min");
  p.near(r.spectrum.back(), (-1.0 + root) / 2.0, 1e-10, "sym_max");
  p.check(r.witness && form(r.op, *r.witness) <= r.band, "witness form below zero band");
  return p.done();
}

Outcome non_bessel_row(Index n, const Tolerances& tol) {
  Probe p;
  const Index m = std::max<Index>(1, n / 2);
  const FamilyPair fg = non_bessel_biframe(m);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  const double two_m = 2.0 * static_cast<double>(m);
  p.is(r.classification, Classification::Biframe, "class");
  p.bounds(r, two_m / (two_m - 1.0), 2.0, 1e-10, "optimal");
  p.check(verify_bounds(fg.f, fg.g, 1.0, 2.0, tol), "stated (1,2) valid");
  p.near(is_bessel(fg.f, tol).upper, two_m * two_m, 1e-8 * two_m * two_m, "bessel_upper_f");
  p.near(is_bessel(fg.g, tol).upper, two_m * two_m, 1e-8 * two_m * two_m, "bessel_upper_g");
  return p.done();
}

Outcome bessel_pair_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = bessel_pair_not_biframe(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.is(r.classification, Classification::Neither, "class");
  p.near(is_bessel(fg.f, tol).upper, 1.0, 1e-12, "bessel_upper_f");
  p.near(is_bessel(fg.g, tol).upper, 1.0, 1e-12, "bessel_upper_g");
  p.near(form(r.op, Vector::unit(R, n, 0)), 0.0, 0.0, "form(e_1)");
  p.check(r.witness && form(r.op, *r.witness) <= r.band, "witness form below zero band");
  return p.done();
}

Outcome frames_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = frames_not_biframe(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.is(r.classification, Classification::Neither, "class");
  const BoundsCertificate bf = frame_bounds(fg.f, tol);
  const BoundsCertificate bg = frame_bounds(fg.g, tol);
  p.check(std::abs(bf.lower - 0.5) <= 1e-12 && std::abs(bf.upper - 1.0) <= 1e-12,
          "frame_bounds_f=(" + num(bf.lower) + ", " + num(bf.upper) + ")");
  p.check(std::abs(bg.lower - 1.0) <= 1e-12 && std::abs(bg.upper - 2.0) <= 1e-12,
          "frame_bounds_g=(" + num(bg.lower) + ", " + num(bg.upper) + ")");
  p.near(form(r.op, Vector::unit(R, n, 0)), 0.0, 0.0, "form(e_1)");
  return p.done();
}

Outcome shifted_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = shifted_basis_pair(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.is(r.classification, Classification::PairFrameOnly, "class");
  p.check(is_riesz_basis(fg.f, tol) && is_riesz_basis(fg.g, tol), "both Riesz bases");
  p.near(std::abs(inner(r.op * Vector::unit(C, n, 0), Vector::unit(C, n, 0))), 0.0, 0.0, "|form(e_1)|");
  return p.done();
}

Outcome permuted_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = permuted_basis_pair(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.is(r.classification, Classification::PairFrameOnly, "class");
  p.check(is_orthonormal_basis(fg.f, tol) && is_orthonormal_basis(fg.g, tol), "both orthonormal");
  p.near(form(r.op, Vector::unit(R, n, 0)), 0.0, 0.0, "form(e_1)");
  return p.done();
}

Outcome real_positive_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = real_positive_not_symmetric();
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.is(r.classification, Classification::Biframe, "class");
  p.check(adjoint(r.op) == Operator::real({{1, 2}, {3, 8}}), "adjoint=[[1,2],[3,8]]");
  p.check(r.hermitian_deviation > tol.herm, "hermitian_deviation=" + num(r.hermitian_deviation));
  const double root = std::sqrt(74.0);
  p.bounds(r, (9.0 - root) / 2.0, (9.0 + root) / 2.0, 1e-10, "optimal");
  bool rejected = false;
  try {
    hermitian_eigen(r.op, tol);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NotHermitian;
  }
  p.check(rejected, "hermitian_eigen(S) rejects");
  return p.done();
}

Outcome frame_non_frame_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = frame_with_non_frame(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  const double nd = static_cast<double>(n);
  p.is(r.classification, Classification::Biframe, "class");
  p.bounds(r, (nd + 1.0) / nd, 2.0, 1e-10, "optimal");
  p.check(verify_bounds(fg.f, fg.g, 1.0, 2.0, tol), "stated (1,2) valid");
  const BoundsCertificate bf = frame_bounds(fg.f, tol);
  p.check(std::abs(bf.lower - 3.0) <= 1e-12 && std::abs(bf.upper - 3.0) <= 1e-12,
          "frame_bounds_f=(" + num(bf.lower) + ", " + num(bf.upper) + ")");
  p.near(is_bessel(fg.g, tol).upper, 4.0 + 2.0 * nd, 1e-9 * nd, "bessel_upper_g");
  return p.done();
}

Outcome bessel_non_bessel_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = bessel_with_non_bessel(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  const double top = static_cast<double>(n % 2 == 0 ? n : n - 1);
  p.is(r.classification, Classification::Biframe, "class");
  const double dev = max_abs_diff(r.op.matrix(), ComplexMatrix::Identity(n, n));
  p.check(dev <= 1e-12, "max|S - I|=" + num(dev));
  p.near(is_bessel(fg.f, tol).upper, 1.0, 1e-12, "bessel_upper_f");
  if (n >= 2) p.near(is_bessel(fg.g, tol).upper, top * top, 1e-9 * top * top, "bessel_upper_g");
  return p.done();
}

Outcome weighted_parseval_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = weighted_parseval(n);
  const VectorFamily e = standard(n);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  const double nd = static_cast<double>(n);
  p.is(r.classification, Classification::Biframe, "class");
  const double dev = max_abs_diff(r.op.matrix(), ComplexMatrix::Identity(n, n));
  p.check(dev <= 1e-12, "max|S - I|=" + num(dev));
  p.bounds(analyze_biframe(e, fg.f, tol), 1.0, nd, 1e-10 * nd, "(E,F)");
  p.bounds(analyze_biframe(e, fg.g, tol), 1.0 / nd, 1.0, 1e-12, "(E,G)");
  return p.done();
}

Outcome member_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = member_of_standard_class();
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  const double root = std::sqrt(5.0);
  p.is(r.classification, Classification::Biframe, "class");
  p.bounds(r, (5.0 - root) / 2.0, (5.0 + root) / 2.0, 1e-10, "optimal");
  p.check(verify_bounds(fg.f, fg.g, 1.0, 4.0, tol), "stated (1,4) valid");
  p.check(!verify_bounds(fg.f, fg.g, 2.0, 4.0, tol), "(2,4) rejected");
  const ClassMembership cm = class_membership(fg.f, fg.g, tol);
  p.check(cm.member && max_abs_diff(cm.generator->matrix(), Operator::real({{3, -1}, {-1, 2}}).matrix()) == 0.0,
          "member with U=[[3,-1],[-1,2]]");
  return p.done();
}

Outcome one_b_riesz_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = one_b_riesz_biframe();
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  const double root = 2.0 * std::sqrt(2.0);
  p.is(r.classification, Classification::Biframe, "class");
  p.bounds(r, 3.0 - root, 3.0 + root, 1e-10, "optimal");
  p.check(verify_bounds(fg.f, fg.g, 1.0 / 6.0, 7.0, tol), "stated (1/6,7) valid");
  const BiframeReport eg = analyze_biframe(standard(2), fg.g, tol);
  p.check(eg.classification != Classification::Biframe, "(E,G) " + std::string(to_string(eg.classification)));
  p.check(!class_membership(standard(2), fg.g, tol).member, "G outside the standard class");
  p.check(is_b_riesz(fg.f, tol), "F b-Riesz");
  return p.done();
}

Outcome two_b_riesz_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = two_b_riesz_not_biframe();
  const VectorFamily e = standard(2);
  p.check(verify_bounds(e, fg.f, 0.5, 4.0, tol), "(E,F) stated (1/2,4) valid");
  p.check(verify_bounds(e, fg.g, 0.25, 3.0, tol), "(E,G) stated (1/4,3) valid");
  p.check(class_membership(e, fg.f, tol).member && class_membership(e, fg.g, tol).member, "both in standard class");
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.check(r.classification != Classification::Biframe, "(F,G) " + std::string(to_string(r.classification)));
  p.near(form(r.op, Vector::real({1, 5})), 0.0, 1e-12, "form(1,5)");
  return p.done();
}

Outcome vu_row(Index, const Tolerances& tol) {
  Probe p;
  const Operator u = Operator::diagonal(R, {2, 1});
  const Operator v = Operator::diagonal(R, {1, 3});
  const BiframeReport r = vu_biframe(standard(2), u, v, tol);
  p.is(r.classification, Classification::Biframe, "class");
  p.bounds(r, 2.0, 3.0, 1e-12, "optimal");
  p.check(r.op == v * u, "S = VU");
  return p.done();
}

Outcome primed_overlap_row(Index, const Tolerances& tol) {
  Probe p;
  const VectorFamily e = standard(2);
  const VectorFamily delta = VectorFamily::real({{0, 1}, {1, 0}});
  const VectorFamily f = primed_overlap_family();
  p.check(in_pair_frame_class(e, f, tol) && in_pair_frame_class(delta, f, tol), "pair frame with both bases");
  const ClassMembership ce = class_membership(e, f, tol);
  const ClassMembership cd = class_membership(delta, f, tol);
  p.check(ce.generator == Operator::real({{0, 1}, {1, 1}}), "U_e=[[0,1],[1,1]]");
  p.check(cd.generator == Operator::real({{1, 0}, {1, 1}}), "U_delta=[[1,0],[1,1]]");
  p.check(!ce.member && !cd.member, "in neither biframe class");
  p.check(!same_basis(e, delta, tol), "bases differ");
  return p.done();
}

Outcome generating_basis_row(Index, const Tolerances& tol) {
  Probe p;
  const VectorFamily f = small_riesz_basis();
  const GeneratingBasis gb = find_generating_onb(f, tol);
  const double s10 = std::sqrt(10.0);
  const VectorFamily expected = VectorFamily::real({{-1.0 / s10, 3.0 / s10}, {3.0 / s10, 1.0 / s10}});
  p.check(is_orthonormal_basis(gb.delta, tol), "delta orthonormal");
  const double dd = family_diff(gb.delta, expected);
  p.check(dd <= 1e-12, "delta=(-1,3)/sqrt10,(3,1)/sqrt10 err=" + num(dd));
  const double sq = max_abs_diff((gb.generator * gb.generator).matrix(), Operator::real({{2, -2}, {-2, 4}}).matrix());
  p.check(sq <= 1e-12, "U^2=S err=" + num(sq));
  const ClassMembership cm = class_membership(gb.delta, f, tol);
  p.check(cm.member, "member of delta class");
  p.check(is_b_riesz(f, tol), "b-Riesz");
  return p.done();
}

Outcome reflected_basis_row(Index, const Tolerances& tol) {
  Probe p;
  const VectorFamily f = small_riesz_basis();
  const VectorFamily ea = reflected_basis();
  p.check(is_orthonormal_basis(ea, tol), "reflected basis orthonormal");
  const BiframeReport r = analyze_biframe(ea, f, tol);
  p.is(r.classification, Classification::Biframe, "class");
  p.check(r.hermitian_deviation > tol.herm, "hermitian_deviation=" + num(r.hermitian_deviation));
  p.check(!class_membership(ea, f, tol).member, "no symmetric generator");
  const double a = -std::sqrt(2.0 / 5.0);
  const double b = std::sqrt(3.0 / 5.0);
  const BiframeReport rot = analyze_biframe(VectorFamily::real({{a, b}, {-b, a}}), f, tol);
  p.check(rot.classification != Classification::Biframe, "rotated convention " + std::string(to_string(rot.classification)));
  p.check(!same_basis(find_generating_onb(f, tol).delta, ea, tol), "differs from generating basis");
  return p.done();
}

Outcome uniqueness_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = member_of_standard_class();
  const GeneratingBasis gb = find_generating_onb(fg.g, tol);
  p.check(generating_onb_is_unique(fg.g, fg.f, gb.delta, tol), "generating basis unique");
  return p.done();
}

Outcome briesz_partner_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair out = briesz_partner(standard(n), diag_of(n, [](Index k) { return static_cast<double>(k); }),
                                        Operator::identity(R, n), tol);
  const FamilyPair want = weighted_parseval(n);
  const double df = family_diff(out.f, want.f);
  const double dg = family_diff(out.g, want.g);
  p.check(df <= 1e-12 && dg <= 1e-12, "families match {k e_k},{e_k/k} err=" + num(std::max(df, dg)));
  const BiframeReport r = analyze_biframe(out.f, out.g, tol);
  const double dev = max_abs_diff(r.op.matrix(), ComplexMatrix::Identity(n, n));
  p.check(r.classification == Classification::Biframe && dev <= 1e-12, "Parseval err=" + num(dev));
  return p.done();
}

Outcome canonical_dual_row(Index n, const Tolerances& tol) {
  Probe p;
  p.check(canonical_dual_is_briesz(small_riesz_basis(), tol), "dual of {(-1,2),(1,0)} b-Riesz");
  const FamilyPair w = weighted_parseval(n);
  const VectorFamily dual = canonical_dual(w.f, tol);
  const double d = family_diff(dual, w.g);
  p.check(d <= 1e-12, "dual of {k e_k} = {e_k/k} err=" + num(d));
  p.check(canonical_dual_is_briesz(w.f, tol), "dual of {k e_k} b-Riesz");
  return p.done();
}

Outcome transform_row(Index, const Tolerances& tol) {
  Probe p;
  const VectorFamily e = standard(2, C);
  const Operator q = Operator::diagonal(C, {4, 1});
  const Operator id = Operator::identity(C, 2);
  const TransformResult t = transform_biframe(e, e, q, id, id, ExponentQuadruple(1, 0, 1, 0), tol);
  p.is(t.report.classification, Classification::Biframe, "class");
  const double dq = max_abs_diff(t.report.op.matrix(), q.matrix());
  p.check(dq <= 1e-12, "S' = Q err=" + num(dq));
  p.check(!parseval_transform_check(2.0 * id, id, tol), "U=2I, V=I not Parseval");
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Operator rot = Operator::complex({{c, -s}, {s, c}});
  const TransformResult u = transform_biframe(e, e, id, rot, rot, ExponentQuadruple(0.5, 0.5, 0.5, 0.5), tol);
  p.check(parseval_transform_check(u.u, u.v, tol), "rotation pair Parseval");
  return p.done();
}

Outcome from_onb_row(Index, const Tolerances& tol) {
  Probe p;
  const Operator q = Operator::diagonal(R, {2, 1});
  const Operator id = Operator::identity(R, 2);
  const FamilyPair fg = construct_from_onb(standard(2), q, id, id, 1.0, 0.0, tol);
  const BiframeReport r = analyze_biframe(fg.f, fg.g, tol);
  p.is(r.classification, Classification::Biframe, "class");
  const double d = max_abs_diff(r.op.matrix(), q.matrix());
  p.check(d <= 1e-12, "S = Q err=" + num(d));
  return p.done();
}

Outcome gdual_row(Index, const Tolerances& tol) {
  Probe p;
  const VectorFamily f = small_riesz_basis();
  const Operator q = Operator::diagonal(R, {2, 1});
  const VectorFamily g = gdual_partner(f, q, tol);
  const BiframeReport r = analyze_biframe(f, g, tol);
  const double d = max_abs_diff(r.op.matrix(), Operator::diagonal(R, {0.5, 1}).matrix());
  p.check(r.classification == Classification::Biframe && d <= 1e-12, "S = Q^{-1} err=" + num(d));
  const VectorFamily e = standard(2);
  const VectorFamily h = VectorFamily::real({{0.3, -1.2}, {2.5, 0.1}});
  const double dh = family_diff(gdual_partner(e, Operator::identity(R, 2), h, tol), e);
  p.check(dh <= 1e-12, "orthonormal F with arbitrary H gives F err=" + num(dh));
  return p.done();
}

Outcome riesz_partner_row(Index n, const Tolerances& tol) {
  Probe p;
  const FamilyPair w = weighted_parseval(n);
  const VectorFamily g = riesz_partner(w.f, Operator::identity(R, n), tol);
  const double d = family_diff(g, w.g);
  p.check(d <= 1e-12, "partner of {k e_k} = {e_k/k} err=" + num(d));
  return p.done();
}

Outcome controlled_row(Index, const Tolerances& tol) {
  Probe p;
  const VectorFamily f = small_riesz_basis();
  p.check(is_u_controlled(f, invert(frame_operator(f), tol), tol), "(F, S_F^{-1}F) biframe");
  p.check(!is_u_controlled(standard(2, C), Operator::diagonal(C, {1, -1}), tol), "(E, diag(1,-1)E) not biframe");
  return p.done();
}

Outcome factorization_row(Index, const Tolerances& tol) {
  Probe p;
  const Operator id = Operator::identity(R, 2);
  const Operator q = Operator::diagonal(R, {4, 1});
  const Operator half = fractional_power(q, 0.5, tol);
  p.check(factorization_check(id, q, half, half, tol), "Q = Q^{1/2} I Q^{1/2}");
  p.check(!factorization_check(id, id, 2.0 * id, id, tol), "I != I I (2I)^*");
  return p.done();
}

Outcome reconstruction_row(Index, const Tolerances& tol) {
  Probe p;
  const FamilyPair fg = member_of_standard_class();
  const Reconstruction r = reconstruct(fg.f, fg.g, Vector::real({1, 0}), tol);
  p.check(r.residual_coefficients <= 1e-12 && r.residual_dual_family <= 1e-12,
          "residuals=(" + num(r.residual_coefficients) + ", " + num(r.residual_dual_family) + ")");
  const FamilyPair w = weighted_parseval(8);
  const Reconstruction rw = reconstruct(w.f, w.g, Vector::real(std::vector<double>(8, 1.0)), tol);
  p.check(rw.residual_coefficients <= 1e-12 && rw.residual_dual_family <= 1e-12,
          "weighted residuals=(" + num(rw.residual_coefficients) + ", " + num(rw.residual_dual_family) + ")");
  return p.done();
}

std::vector<Fixture> build_corpus() {
  return {
      {"pair-frame-not-biframe", "PairFrameOnly; S=[[1,5],[3,-2]], det -17", false, pair_frame_row},
      {"non-bessel-biframe", "Biframe; bounds (2m/(2m-1), 2) at n=2m; (1,2) valid", true, non_bessel_row},
      {"bessel-pair-not-biframe", "Neither; both Bessel with bound 1", true, bessel_pair_row},
      {"frames-not-biframe", "Neither; frame bounds (1/2,1) and (1,2)", true, frames_row},
      {"shifted-riesz-bases", "PairFrameOnly; both Riesz bases", true, shifted_row},
      {"permuted-orthonormal-bases", "PairFrameOnly; both orthonormal", true, permuted_row},
      {"real-positive-not-self-adjoint", "Biframe over R with asymmetric S", false, real_positive_row},
      {"frame-with-non-frame", "Biframe; bounds ((n+1)/n, 2); G Bessel bound 4+2n", true, frame_non_frame_row},
      {"bessel-with-non-bessel", "Parseval biframe; G Bessel bound grows", true, bessel_non_bessel_row},
      {"weighted-parseval", "Parseval; (E,F) bounds (1,n), (E,G) bounds (1/n,1)", true, weighted_parseval_row},
      {"member-of-standard-class", "Biframe; optimal (5-sqrt5)/2, (5+sqrt5)/2; (1,4) valid", false, member_row},
      {"one-b-riesz-biframe", "Biframe; optimal 3-2sqrt2, 3+2sqrt2; (1/6,7) valid", false, one_b_riesz_row},
      {"two-b-riesz-not-biframe", "each in the standard class; together not a biframe", false, two_b_riesz_row},
      {"vu-positive-product", "Biframe with S=VU; bounds (2,3)", false, vu_row},
      {"primed-class-overlap", "pair frame with two bases; in neither biframe class", false, primed_overlap_row},
      {"small-riesz-generating-basis", "generating basis S^{-1/2}F, member, b-Riesz", false, generating_basis_row},
      {"reflected-basis-real-only", "real biframe only in the reflected convention", false, reflected_basis_row},
      {"generating-basis-unique", "standard basis = recovered basis", false, uniqueness_row},
      {"b-riesz-partner-parseval", "U=diag(k), Q=I gives the weighted Parseval pair", true, briesz_partner_row},
      {"canonical-dual-b-riesz", "canonical duals of Riesz bases are b-Riesz", true, canonical_dual_row},
      {"operator-transform", "S'=Q; Parseval iff VU^*=I", false, transform_row},
      {"construct-from-orthonormal-basis", "S=Q", false, from_onb_row},
      {"g-dual-partner", "S=Q^{-1}; H cancels on an orthonormal basis", false, gdual_row},
      {"riesz-partner", "partner of {k e_k} with Q=I is {e_k/k}", true, riesz_partner_row},
      {"controlled-frames", "U-controlled iff (F,UF) biframe", false, controlled_row},
      {"operator-factorization", "S2 = V S1 U^*", false, factorization_row},
      {"reconstruction", "both formulas reproduce f", false, reconstruction_row},
  };
}

}  // namespace

const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> rows = build_corpus();
  return rows;
}

std::vector<FixtureResult> run_corpus(Index n, const Tolerances& tol) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "truncation dimension must be at least 2");
  std::vector<FixtureResult> out;
  for (const Fixture& fx : corpus()) {
    Outcome o{"", false};
    try {
      o = fx.run(n, tol);
    } catch (const Error& e) {
      o = {std::string("error ") + e.what(), false};
    }
    out.push_back({fx.name, fx.expected, std::move(o.observed), o.pass});
  }
  return out;
}

}  // namespace biframe::fixtures
