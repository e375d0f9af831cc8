// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Tolerances are fixed here, not read from anywhere.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/goodpoints.hpp"
#include "nodal/grassmann.hpp"
#include "nodal/identities.hpp"
#include "nodal/pick.hpp"
#include "nodal/reps.hpp"
#include "nodal/sampling.hpp"

using namespace nodal;

namespace {

constexpr double kNodeValueTol = 1e-14;
constexpr double kClosedFormTol = 1e-12;
constexpr int kClosedFormSamples = 200;
constexpr double kOmegaTol = 1e-12;
constexpr int kMinC1Matches = 14;
constexpr std::size_t kGoodPointSamples = 512;
constexpr double kMinPassFraction = 0.99;
constexpr std::size_t kIrreducibleSamples = 256;
constexpr double kMinIrreducibleFraction = 0.99;
constexpr int kNecessityTrials = 100;
constexpr double kNecessityMinEig = -1e-9;
constexpr double kPsiBuildTol = 1e-12;
constexpr int kPsiSamples = 100;
constexpr double kNormGapTol = 1e-8;
constexpr int kCalculusTrials = 500;
constexpr double kCalculusTol = 1e-9;

const double kLam = 1.0 / std::sqrt(2.0);

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d  %-34s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Complex random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2 * M_PI * u(rng));
}

NodeConfig random_cfg(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    try {
      const Complex lam = random_point(rng, 0.9);
      if (std::abs(lam) < 0.1) continue;
      std::vector<Complex> z;
      for (std::size_t i = 0; i < n; ++i) z.push_back(random_point(rng, 0.9));
      return NodeConfig(lam, z);
    } catch (const DomainError&) {
    }
  }
}

void table1(const PaperCertificate& cert) {
  bool exact = cert.table1.size() == 4;
  double worst = 0.0;
  for (const auto& row : cert.table1) {
    exact = exact && row.exact_match;
    worst = std::max({worst, row.b_float_error, row.f_float_error});
  }
  report(1, "node values B, f", exact && worst <= kNodeValueTol,
         std::string("exact ") + (exact ? "yes" : "no") + fmt(", float err %.2e", worst));
}

void table2() {
  std::mt19937_64 rng(2001);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 1009);
  const auto z = paper_points_double();
  double worst = 0.0;
  for (int t = 0; t < kClosedFormSamples; ++t) {
    const Rational x = make_rational(num(rng), den(rng));
    const double xv = x.get_d();
    const ScalarParam p(1.0 / std::sqrt(1 + xv * xv), xv / std::sqrt(1 + xv * xv));
    for (const auto& cf : kernel_closed_forms()) {
      const double want = rational_kernel_in_x(cf.pair, x).get_d();
      const double got = scalar_kernel(kLam, p, z[cf.pair.i - 1], z[cf.pair.j - 1]).real();
      worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
    }
  }
  report(2, "closed forms vs scalar kernel", worst <= kClosedFormTol, fmt("max rel err %.2e", worst));
}

void identities(const PaperCertificate& cert) {
  std::string detail;
  for (const auto& c : cert.identities.checks) detail += c.id + (c.pass ? ":ok " : ":FAIL ");
  report(3, "identity certificates", cert.identities.all_pass() && cert.identities.checks.size() == 4, detail);
}

void omega_zeta() {
  const auto z = paper_points_double();
  bool pass = false;
  std::string detail;
  try {
    const double w = solve_omega(kLam, z[0], z[1]);
    const bool crit = is_critical_point(kLam, w);
    const double zeta = solve_zeta(kLam, z[2], z[3], w);
    const double err = std::max(std::abs(w - (std::sqrt(2.0) - 1)), std::abs(zeta - w));
    pass = crit && err <= kOmegaTol;
    detail = fmt("omega %.17g", w) + (crit ? ", critical branch" : ", not critical") + fmt(", err %.2e", err);
  } catch (const Error& e) {
    detail = e.what();
  }
  report(4, "omega/zeta solve", pass, detail);
}

void c_ell(const PaperCertificate& cert) {
  const bool nonsingular = cert.c_ell_nonsingular();
  const auto& c1 = cert.c_ell.at(0);
  const int matches = 16 - static_cast<int>(c1.mismatches.size());
  const bool known = c1.mismatches == std::vector<std::pair<int, int>>{{3, 2}, {4, 4}};
  report(5, "C_l(1,0) certificates", nonsingular && matches >= kMinC1Matches && known,
         std::string("dets nonzero ") + (nonsingular ? "yes" : "no") + ", C1 matches " + std::to_string(matches) +
             "/16, discrepancies reported " + std::to_string(cert.discrepancies.size()));
}

void goodpoints() {
  SamplingPlan plan;
  plan.scalar_samples = kGoodPointSamples;
  const GoodPointsReport r = check_conditions(kLam, paper_points_double(), plan);
  const bool pass = r.pass_fraction() >= kMinPassFraction && r.excluded_fraction() <= kMaxExcludedFraction;
  report(6, "good-points sampled verdict", pass,
         std::to_string(r.passing) + "/" + std::to_string(r.samples) + " pass, " + std::to_string(r.excluded) +
             " excluded, " + std::to_string(r.failed_4) + " fail (4)");
}

void irreducibility() {
  const auto z = paper_points_double();
  const NodeConfig cfg(kLam, {z[0], z[1], z[2], z[3]});
  const auto dims = parallel_map<std::size_t>(kIrreducibleSamples, [&](std::size_t k) {
    const double theta = M_PI * (double(k) + 0.5) / double(kIrreducibleSamples);
    try {
      return star_algebra_dim(dual_function_reps(cfg, ScalarParam::from_angle(theta)));
    } catch (const Error&) {
      return std::size_t{0};
    }
  });
  std::size_t full = 0;
  for (auto d : dims) full += d == 16;
  const double frac = double(full) / double(kIrreducibleSamples);
  report(7, "irreducibility (dim 16)", frac >= kMinIrreducibleFraction,
         std::to_string(full) + "/" + std::to_string(kIrreducibleSamples) + " parameters");
}

void necessity() {
  std::mt19937_64 rng(8008);
  std::normal_distribution<double> g;
  SamplingPlan plan;
  plan.scalar_samples = 512;
  plan.phase_samples = 2;
  plan.samples_per_level = 16;
  plan.refine_iters = 2;
  int ok = 0;
  double worst = 1e300;
  for (int t = 0; t < kNecessityTrials; ++t) {
    const NodeConfig cfg = random_cfg(rng, 2 + t % 4);
    const Complex c(g(rng), g(rng));
    std::vector<Complex> coeffs(1 + t % 5);
    for (auto& a : coeffs) a = Complex(g(rng), g(rng));
    auto f = [&](Complex z) {
      Complex gz = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) gz = gz * z + *it;
      return c + b_lambda_eval(cfg.lambda(), z) * gz;
    };
    double sup = 0.0;
    for (int k = 0; k < 4096; ++k) sup = std::max(sup, std::abs(f(std::polar(1.0, 2 * M_PI * k / 4096.0))));
    std::vector<Complex> w;
    for (Complex z : cfg.nodes()) w.push_back(f(z) / sup);
    const auto prob = InterpolationProblem::scalar(cfg, w);
    const FeasibilityReport s = scalar_solvable(prob, plan);
    const FeasibilityReport m = matricial_solvable(prob, plan);
    worst = std::min(worst, s.worst_value);
    if (s.verdict == Verdict::feasible_on_samples && m.verdict == Verdict::feasible_on_samples &&
        s.worst_value >= kNecessityMinEig)
      ++ok;
  }
  report(8, "Pick necessity property", ok == kNecessityTrials,
         std::to_string(ok) + "/" + std::to_string(kNecessityTrials) + fmt(" feasible, worst min_eig %.3e", worst));
}

void straddle() {
  const auto prob = InterpolationProblem::scalar(NodeConfig(kLam, {0.05, kLam + 0.05}), {0.0, 0.9});
  const PsdVerdict classical = psd_check(classical_pick_matrix(prob));
  const FeasibilityReport rep = scalar_solvable(prob, SamplingPlan{});
  const auto& p = std::get<ScalarParam>(rep.worst_param);
  const bool infeasible = rep.verdict == Verdict::infeasible;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "constrained %s (min_eig %.4f at alpha=%.4f, beta=%.4f), classical Pick %s (min_eig %.4f)",
                infeasible ? "infeasible" : "feasible", rep.worst_value, p.alpha().real(), p.beta().real(),
                classical.psd ? "PSD" : "not PSD", classical.min_eig);
  report(9, "constraint sensitivity", infeasible && classical.psd, buf);
}

void embedding_consistency() {
  std::mt19937_64 rng(4004);
  double build_gap = 0.0, psi_min = 1e300;
  for (int t = 0; t < kPsiSamples; ++t) {
    const NodeConfig cfg = random_cfg(rng, 2 + t % 4);
    const MatrixParam mp = sample_matrix_param(1 + t % 3, false, derive_seed(4004, t));
    const PsiImage psi = psi_image(cfg, mp);
    const ComplexMatrix gen = psi_from_generators(cfg, mp);
    build_gap = std::max(build_gap, max_abs(psi.assembled.matrix() - gen) / std::max(1.0, max_abs(gen)));
    psi_min = std::min(psi_min, psd_check(psi.assembled, 0.0).min_eig);
  }
  SamplingPlan plan;
  plan.scalar_samples = 256;
  plan.samples_per_level = 16;
  double norm_gap = 0.0;
  for (int t = 0; t < 10; ++t) {
    const NodeConfig cfg = random_cfg(rng, 2 + t % 3);
    std::vector<Complex> w;
    for (std::size_t i = 0; i < cfg.size(); ++i) w.push_back(random_point(rng, 1.0));
    const auto prob = InterpolationProblem::scalar(cfg, w);
    norm_gap = std::max(norm_gap, std::abs(embedding_norm(prob, plan) - quotient_norm(prob, plan)));
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "Psi build gap %.2e, Psi min_eig %.2e, norm gap %.2e", build_gap, psi_min, norm_gap);
  report(10, "embedding consistency", build_gap <= kPsiBuildTol && psi_min > 0.0 && norm_gap < kNormGapTol, buf);
}

void calculus() {
  std::mt19937_64 rng(1111);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int t = 0; t < kCalculusTrials; ++t) {
    const Eigen::Index d = 1 + t % 5;
    ComplexMatrix c(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) c(i, j) = Complex(g(rng), g(rng));
    c *= 0.95 / std::max(1.0, operator_norm(c));
    ComplexVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
    std::vector<Complex> phi(1 + t % 8);
    for (auto& a : phi) a = Complex(g(rng), g(rng));
    worst = std::max(worst, block_triangular_calculus(c, random_point(rng, 0.95), v, phi).discrepancy);
  }
  report(11, "block functional calculus", worst <= kCalculusTol, fmt("max discrepancy %.2e", worst));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const PaperCertificate cert = paper_certificate();
  table1(cert);
  table2();
  identities(cert);
  omega_zeta();
  c_ell(cert);
  goodpoints();
  irreducibility();
  necessity();
  straddle();
  embedding_consistency();
  calculus();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 11 criteria failed (%.1f s)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
