// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "biframe/biframes.hpp"
#include "biframe/briesz.hpp"
#include "biframe/fixtures.hpp"
#include "support.hpp"

using namespace biframe;
using testing_support::max_abs;
using testing_support::Rng;

namespace {

using Clock = std::chrono::steady_clock;

const Tolerances kTol;

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

VectorFamily standard(Index n) { return VectorFamily::standard_basis(Field::Real, n); }

void pair_frame(Verdict& v) {
  const auto t0 = Clock::now();
  const VectorFamily f = VectorFamily::real({{1, 2}, {8.0 / 7.0, 4}});
  const VectorFamily g = VectorFamily::real({{-1, 175.0 / 21.0}, {7.0 / 4.0, -14.0 / 3.0}});
  const BiframeReport r = analyze_biframe(f, g, kTol);
  const double elapsed = seconds_since(t0);

  const ComplexMatrix& s = r.op.matrix();
  const double dev = max_abs(s - Operator::real({{1, 5}, {3, -2}}).matrix());
  const double det = (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0)).real();
  // 8/7, 175/21 and 14/3 carry one rounding each; 4 ulps of the largest entry.
  v.require(dev <= 4 * std::ldexp(1.0, -52) * 5.0, "S = [[1,5],[3,-2]] to rounding");
  v.require(std::abs(det + 17.0) <= 1e-12, "det = -17");
  v.require(r.classification == Classification::PairFrameOnly, "PairFrameOnly");
  v.require(elapsed < 1e-3, "runtime < 1 ms");
  v.note << "max|S-target|=" << dev << " det=" << det << " class=" << to_string(r.classification)
         << " time=" << elapsed * 1e3 << "ms";
}

void standard_class(Verdict& v) {
  const FamilyPair p = fixtures::member_of_standard_class();
  const BiframeReport r = analyze_biframe(p.f, p.g, kTol);
  v.require(r.classification == Classification::Biframe, "Biframe");
  if (!r.bounds) return;
  v.require(verify_bounds(p.f, p.g, 1, 4, kTol), "verify_bounds(1,4)");
  const double lo = (5 - std::sqrt(5.0)) / 2, hi = (5 + std::sqrt(5.0)) / 2;
  v.require(std::abs(r.bounds->lower - lo) <= 1e-10 && std::abs(r.bounds->upper - hi) <= 1e-10, "(5 +- sqrt5)/2");
  v.note << "bounds=(" << r.bounds->lower << ", " << r.bounds->upper << ")";
}

void one_b_riesz(Verdict& v) {
  const FamilyPair p = fixtures::one_b_riesz_biframe();
  const BiframeReport r = analyze_biframe(p.f, p.g, kTol);
  v.require(r.classification == Classification::Biframe, "Biframe");
  if (!r.bounds) return;
  v.require(verify_bounds(p.f, p.g, 1.0 / 6.0, 7, kTol), "verify_bounds(1/6,7)");
  const double lo = 3 - 2 * std::sqrt(2.0), hi = 3 + 2 * std::sqrt(2.0);
  v.require(std::abs(r.bounds->lower - lo) <= 1e-10 && std::abs(r.bounds->upper - hi) <= 1e-10, "3 +- 2 sqrt2");
  const BiframeReport companion = analyze_biframe(standard(2), fixtures::non_member_partner(), kTol);
  v.require(companion.classification != Classification::Biframe, "(E, g) not a biframe");
  v.note << "bounds=(" << r.bounds->lower << ", " << r.bounds->upper
         << ") companion=" << to_string(companion.classification);
}

void two_b_riesz(Verdict& v) {
  const FamilyPair p = fixtures::two_b_riesz_not_biframe();
  const VectorFamily e = standard(2);
  const bool ef = verify_bounds(e, p.f, 0.5, 4, kTol);
  const bool eg = verify_bounds(e, p.g, 0.25, 3, kTol);
  const Classification fg = analyze_biframe(p.f, p.g, kTol).classification;
  v.require(ef, "(E,F) with (1/2,4)");
  v.require(eg, "(E,G) with (1/4,3)");
  v.require(fg != Classification::Biframe, "(F,G) not a biframe");
  v.note << "(F,G)=" << to_string(fg);
}

void non_bessel(Verdict& v) {
  for (Index m : {2, 8, 32, 50}) {
    const FamilyPair p = fixtures::non_bessel_biframe(m);
    const BiframeReport r = analyze_biframe(p.f, p.g, kTol);
    if (!r.bounds) {
      v.require(false, "m=" + std::to_string(m) + " Biframe");
      continue;
    }
    const double lo = 2.0 * m / (2.0 * m - 1.0);
    v.require(std::abs(r.bounds->lower - lo) <= 1e-10 && std::abs(r.bounds->upper - 2.0) <= 1e-10,
              "m=" + std::to_string(m) + " bounds");
    v.require(verify_bounds(p.f, p.g, 1, 2, kTol), "m=" + std::to_string(m) + " verify_bounds(1,2)");
    v.note << "m=" << m << ":(" << r.bounds->lower << "," << r.bounds->upper << ") ";
  }
}

void weighted_parseval(Verdict& v) {
  for (Index n : {4, 64}) {
    const FamilyPair p = fixtures::weighted_parseval(n);
    const double dev = max_abs(biframe_operator(p.f, p.g).matrix() - ComplexMatrix::Identity(n, n));
    const VectorFamily e = VectorFamily::standard_basis(Field::Real, n);
    const BoundsCertificate ef = optimal_biframe_bounds(e, p.f, kTol);
    const BoundsCertificate eg = optimal_biframe_bounds(e, p.g, kTol);
    const std::string tag = "n=" + std::to_string(n);
    v.require(dev <= 1e-12, tag + " S = I");
    v.require(std::abs(ef.upper - double(n)) <= 1e-10 * n, tag + " (E,F) upper = n");
    v.require(std::abs(eg.lower - 1.0 / n) <= 1e-12, tag + " (E,G) lower = 1/n");
    v.note << tag << ": |S-I|=" << dev << " upper(E,F)=" << ef.upper << " lower(E,G)=" << eg.lower << " ";
  }
}

Operator random_pd(Rng& rng, Index n) { return rng.positive_definite(Field::Complex, n, 0.1, 10.0); }

void reconstruction(Verdict& v) {
  Rng rng(7);
  const auto t0 = Clock::now();
  double worst = 0.0;
  int count = 0;
  for (Index n : {2, 4, 8, 16, 32, 64}) {
    const VectorFamily e = VectorFamily::from_columns(Field::Complex, rng.unitary(Field::Complex, n));
    for (int trial = 0; trial < 100; ++trial) {
      const FamilyPair p = briesz_partner(e, random_pd(rng, n), random_pd(rng, n), kTol);
      const double cond = condition_number(biframe_operator(p.f, p.g));
      const Vector x = rng.vector(Field::Complex, n);
      const Reconstruction r = reconstruct(p.f, p.g, x, kTol);
      const double ratio = std::max(r.residual_coefficients, r.residual_dual_family) / (1e-8 * cond);
      worst = std::max(worst, ratio);
      ++count;
    }
  }
  const double elapsed = seconds_since(t0);
  v.require(worst <= 1.0, "residual <= 1e-8 cond(S)");
  v.require(elapsed < 10.0, "runtime < 10 s");
  v.note << count << " biframes, worst residual/(1e-8 cond)=" << worst << " time=" << elapsed << "s";
}

void generating_onb(Verdict& v) {
  const Tolerances onb_tol{1e-10, 1e-9, 1e-12, 1e-10};
  auto check = [&](const VectorFamily& f, const std::string& tag) {
    try {
      const GeneratingBasis gb = find_generating_onb(f, kTol);
      const ClassMembership m = class_membership(gb.delta, f, kTol);
      const Operator root = fractional_power(frame_operator(f), 0.5, kTol);
      const bool generator_ok =
          (*m.generator - root).frobenius_norm() <= kTol.recon * std::max(1.0, root.frobenius_norm());
      if (!is_orthonormal_basis(gb.delta, onb_tol) || !m.member || !generator_ok) {
        v.require(false, tag);
        return false;
      }
    } catch (const Error& e) {
      v.require(false, tag + " threw " + e.what());
      return false;
    }
    return true;
  };
  const VectorFamily fixture = fixtures::small_riesz_basis();
  v.require(frame_operator(fixture) == Operator::real({{2, -2}, {-2, 4}}), "S_F = [[2,-2],[-2,4]]");
  check(fixture, "fixture {(-1,2),(1,0)}");
  Rng rng(8);
  int ok = 0, total = 0;
  for (Index n : {2, 4, 8, 16, 32}) {
    for (int trial = 0; trial < 100; ++trial) {
      ok += check(rng.riesz_basis(Field::Complex, n, 0.05, 20.0), "n=" + std::to_string(n));
      ++total;
    }
  }
  v.note << ok << "/" << total << " random complex Riesz bases, fixture included";
}

FamilyPair random_biframe(Rng& rng, Field f, Index n, bool parseval) {
  const VectorFamily fam = rng.frame(f, n, n + rng.integer(0, 3));
  const Operator q = parseval ? Operator::identity(f, n) : rng.positive_definite(f, n);
  return {fam, gdual_partner(fam, q, rng.family(f, n, fam.size()), kTol)};
}

void transform(Verdict& v) {
  Rng rng(9);
  double worst = 0.0;
  int iff_checked = 0, iff_ok = 0, parseval_outputs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = trial % 4 < 2 ? Field::Complex : Field::Real;
    const Index n = rng.integer(2, 12);
    const bool parseval_input = trial % 2 == 0;
    const FamilyPair p = random_biframe(rng, f, n, parseval_input);
    const bool want_identity = trial % 3 == 0;
    const Operator q = want_identity ? Operator::identity(f, n) : rng.positive_definite(f, n);
    const Operator w(f, rng.unitary(f, n));
    const auto exps = ExponentQuadruple::from_pr(rng.uniform(-1, 2), rng.uniform(-1, 2));
    const TransformResult t = transform_biframe(p.f, p.g, q, w, w, exps, kTol);
    const double limit = 1e-8 * condition_number(biframe_operator(p.f, p.g)) * condition_number(q);
    const double dev = (t.report.op - q).frobenius_norm() / q.frobenius_norm();
    worst = std::max(worst, dev / limit);
    v.require(t.report.classification == Classification::Biframe, "trial " + std::to_string(trial) + " Biframe");
    if (parseval_input) {
      const bool parseval = t.report.classification == Classification::Biframe &&
                            (t.report.op - Operator::identity(f, n)).frobenius_norm() <= kTol.recon;
      const bool vu = (t.v * adjoint(t.u) - Operator::identity(f, n)).frobenius_norm() <= 1e-10;
      ++iff_checked;
      iff_ok += parseval == vu;
      parseval_outputs += parseval;
    }
  }
  v.require(worst <= 1.0, "operator = Q within 1e-8 cond(S) cond(Q)");
  v.require(iff_ok == iff_checked, "Parseval <=> |VU* - I| <= 1e-10 on Parseval inputs");
  v.require(parseval_outputs > 0 && parseval_outputs < iff_checked, "both sides of the equivalence exercised");
  v.note << "200 transforms, worst |S'-Q|/limit=" << worst << ", equivalence " << iff_ok << "/" << iff_checked
         << " (" << parseval_outputs << " Parseval)";
}

void oracle(Verdict& v) {
  Rng rng(10);
  double worst_gap = 0.0;
  int pairs = 0;
  for (const auto& pair : fixtures::small_pairs()) {
    const BiframeReport r = analyze_biframe(pair.f, pair.g, kTol);
    const double lower = r.bounds ? r.bounds->lower : r.spectrum.front();
    const double upper = r.bounds ? r.bounds->upper : r.spectrum.back();
    const auto [lo, hi] = testing_support::sampled_form(r.op, 100000, rng);
    v.require(lo >= lower - 1e-6 && hi <= upper + 1e-6, pair.name);
    worst_gap = std::max({worst_gap, lower - lo, hi - upper});
    ++pairs;
  }
  v.note << pairs << " pairs x 1e5 samples, worst excursion beyond certified bounds=" << worst_gap;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void fixtures_command(Verdict& v) {
  const std::string cmd = std::string("'") + BIFRAME_TOOL + "' --format json fixtures";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  v.require(s1 == 0 && s2 == 0, "exit 0");
  v.require(!a.empty() && a == b, "byte-identical JSON");
  v.require(a.find("\"failed\": 0") != std::string::npos, "every row passes");
  v.note << "exit=" << s1 << "," << s2 << " bytes=" << a.size() << (a == b ? " identical" : " differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"pair frame that is not a biframe", pair_frame},
      {"standard-class member, bounds 1 and 4", standard_class},
      {"one b-Riesz biframe, bounds 1/6 and 7", one_b_riesz},
      {"two b-Riesz families, not a biframe", two_b_riesz},
      {"non-Bessel biframe under truncation", non_bessel},
      {"weighted Parseval pair", weighted_parseval},
      {"reconstruction on random biframes", reconstruction},
      {"every complex Riesz basis is b-Riesz", generating_onb},
      {"operator transform", transform},
      {"sampled form within certified bounds", oracle},
      {"fixtures command", fixtures_command},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("threw ") + e.what());
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << v.note.str()
              << '\n';
  }
  return failed == 0 ? 0 : 1;
}
