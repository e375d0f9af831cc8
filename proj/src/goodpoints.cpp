#include "nodal/goodpoints.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nodal/errors.hpp"
#include "nodal/reps.hpp"
#include "nodal/sampling.hpp"

namespace nodal {

namespace {

constexpr double kCondition1Tol = 1e-12;
constexpr double kMembershipTol = 1e-12;
constexpr double kOmegaEdge = 1e-12;

double b_real(double lambda, double z) { return z * (z - lambda) / (1.0 - lambda * z); }

double b_prime(double lambda, double z) {
  const double d = 1.0 - lambda * z;
  return (2.0 * z - lambda - lambda * z * z) / (d * d);
}

void validate_inputs(double lambda, const std::array<double, 4>& pts) {
  if (!std::isfinite(lambda)) throw InputError("goodpoints: non-finite lambda");
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("goodpoints: lambda must lie in (0, 1)");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double z = pts[i];
    if (!std::isfinite(z)) throw InputError("goodpoints: non-finite point");
    if (!(std::abs(z) < 1.0)) throw DomainError("goodpoints: point outside (-1, 1)");
    if (std::abs(z) <= kNodeTol || std::abs(z - lambda) <= kNodeTol) {
      throw DomainError("goodpoints: point equals 0 or lambda");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(z - pts[j]) <= kNodeTol) throw DomainError("goodpoints: points must be distinct");
  }
}

double condition1_defect_of(double lambda, const std::array<double, 4>& z) {
  return std::max(std::abs(b_real(lambda, z[0]) - b_real(lambda, z[3])),
                  std::abs(b_real(lambda, z[1]) - b_real(lambda, z[2])));
}

bool near_forbidden(double w, double lambda) {
  return std::abs(w) <= kNodeTol || std::abs(w - lambda) <= kNodeTol;
}

}  // namespace

double solve_omega(double lambda, double z1, double z2) {
  const double m1 = (lambda - z1) / (1.0 - z1 * lambda);
  const double m2 = (lambda - z2) / (1.0 - z2 * lambda);
  const double a = z1 * z2 * lambda;
  const double b = m1 * m2 - z1 * z2;
  const double c = -m1 * m2 * lambda;
  if (a == 0.0) throw DomainError("solve_omega: degenerate quadratic");
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) throw NoAdmissibleOmega("solve_omega: no real root");
  // Stable pair of roots.
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> roots;
  if (q != 0.0) roots = {q / a, c / q};
  else roots = {0.0};
  std::vector<double> ok;
  for (double r : roots)
    if (std::abs(r) < 1.0 - kOmegaEdge) ok.push_back(r);
  if (ok.empty()) throw NoAdmissibleOmega("solve_omega: no root in the open unit interval");
  const double w = *std::min_element(ok.begin(), ok.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  if (near_forbidden(w, lambda)) throw DomainError("solve_omega: root is 0 or lambda");
  return w;
}

bool is_critical_point(double lambda, double w) { return std::abs(b_prime(lambda, w)) < 1e-10; }

double solve_zeta(double lambda, double z3, double z4, double omega) {
  (void)z3;
  (void)z4;
  if (!std::isfinite(omega) || !(std::abs(omega) < 1.0)) throw DomainError("solve_zeta: omega must lie in (-1, 1)");
  if (is_critical_point(lambda, omega)) return omega;
  if (omega == 0.0) return lambda;
  return -b_real(lambda, omega) / omega;
}

FiniteBlaschke three_point_blaschke(double a, double b, double c) {
  return {{Complex(a), Complex(b), Complex(c)}, Complex(1.0)};
}

GoodPointsConfig::GoodPointsConfig(double lambda, std::array<double, 4> points) : lambda_(lambda), points_(points) {
  validate_inputs(lambda, points);
  omega_ = solve_omega(lambda, points[0], points[1]);
  zeta_ = solve_zeta(lambda, points[2], points[3], omega_);
  if (near_forbidden(zeta_, lambda)) throw DomainError("GoodPointsConfig: zeta is 0 or lambda");
  if (!(std::abs(zeta_) < 1.0)) throw DomainError("GoodPointsConfig: zeta outside (-1, 1)");
}

NodeConfig GoodPointsConfig::node_config() const {
  return NodeConfig(Complex(lambda_), {Complex(points_[0]), Complex(points_[1]), Complex(points_[2]), Complex(points_[3])});
}

double GoodPointsConfig::condition1_defect() const { return condition1_defect_of(lambda_, points_); }

double GoodPointsConfig::omega_defect() const {
  return node_membership_defect(three_point_blaschke(points_[0], points_[1], omega_), Complex(lambda_));
}

double GoodPointsConfig::zeta_defect() const {
  return node_membership_defect(three_point_blaschke(points_[2], points_[3], zeta_), Complex(lambda_));
}

std::vector<Complex> c_ell_points(const GoodPointsConfig& cfg, int ell) {
  if (ell < 1 || ell > 4) throw InputError("c_ell: ell must be 1..4");
  std::vector<Complex> w;
  for (double z : cfg.points()) w.emplace_back(z);
  const double replacement = ell <= 2 ? cfg.zeta() : cfg.omega();
  w[GoodPointsConfig::sigma[ell - 1] - 1] = Complex(replacement);
  return w;
}

ComplexMatrix c_ell_matrix(const GoodPointsConfig& cfg, const ScalarParam& p, int ell) {
  const NodeConfig nc = cfg.node_config();
  return cross_kernel_matrix(nc, p, nc.nodes(), c_ell_points(cfg, ell));
}

ComplexMatrix delete_row_col(const ComplexMatrix& m, int ell) {
  const Eigen::Index n = m.rows();
  if (ell < 1 || ell > n || m.cols() != n) throw InputError("delete_row_col: index out of range");
  ComplexMatrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == ell - 1) continue;
    for (Eigen::Index j = 0, c = 0; j < n; ++j) {
      if (j == ell - 1) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

bool GoodPointsReport::sampled_pass() const {
  return samples > 0 && failed_4 == 0 && excluded_fraction() <= kMaxExcludedFraction;
}

namespace {

struct SampleData {
  SampleOutcome outcome;
  double inv12 = 0.0;
  double inv23 = 0.0;
};

SampleData evaluate_sample(const GoodPointsConfig& cfg, const NodeConfig& nc, double theta) {
  const ScalarParam p = ScalarParam::from_angle(theta);
  SampleData d;
  d.outcome.theta = theta;

  const ComplexMatrix k = gram_matrix(nc, p).matrix();
  const double scale3 = std::max(1.0, max_abs(k));
  double best_row = 0.0;
  for (Eigen::Index i = 0; i < k.rows(); ++i) best_row = std::max(best_row, k.row(i).cwiseAbs().minCoeff() / scale3);
  d.outcome.min_row_entry = best_row;
  d.outcome.cond3 = best_row > kEntryZeroTol;

  double worst = std::numeric_limits<double>::infinity();
  for (int ell = 1; ell <= 4; ++ell) {
    const ComplexMatrix c = c_ell_matrix(cfg, p, ell);
    const double scale5 = std::max(1.0, max_abs(c));
    worst = std::min(worst, min_singular_value(c) / scale5);
    worst = std::min(worst, min_singular_value(delete_row_col(c, ell)) / scale5);
  }
  d.outcome.min_singular = worst;
  d.outcome.cond5 = worst > kSingularTol;

  const auto inv = inequivalence_invariant(nc, p);
  d.inv12 = inv[pair_index(4, 1, 2)];
  d.inv23 = inv[pair_index(4, 2, 3)];
  d.outcome.cond4 = true;
  return d;
}

}  // namespace

GoodPointsReport check_conditions(const GoodPointsConfig& cfg, const SamplingPlan& plan) {
  plan.validate();
  GoodPointsReport rep;
  rep.lambda = cfg.lambda();
  rep.points = cfg.points();
  rep.omega = cfg.omega();
  rep.zeta = cfg.zeta();
  rep.zeta_critical = is_critical_point(cfg.lambda(), cfg.omega());
  rep.cond1_defect = cfg.condition1_defect();
  rep.cond1 = rep.cond1_defect < kCondition1Tol;
  rep.omega_defect = cfg.omega_defect();
  rep.zeta_defect = cfg.zeta_defect();
  rep.cond2 = rep.omega_defect < kMembershipTol && rep.zeta_defect < kMembershipTol;
  if (!rep.cond1) return rep;  // fast reject

  const NodeConfig nc = cfg.node_config();
  const std::size_t n = plan.scalar_samples;
  auto data = parallel_map<SampleData>(n, [&](std::size_t k) {
    const double theta = std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    return evaluate_sample(cfg, nc, theta);
  });

  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < n; ++s) {
    const auto& o = data[s].outcome;
    if (!o.cond3) ++rep.excluded_by_3;
    if (!o.cond5) ++rep.excluded_by_5;
    if (!o.cond3 || !o.cond5) {
      ++rep.excluded;
      rep.excluded_thetas.push_back(o.theta);
    } else {
      kept.push_back(s);
    }
  }
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      SampleData& x = data[kept[a]];
      SampleData& y = data[kept[b]];
      if (x.outcome.theta == y.outcome.theta) continue;  // same parameter: nothing to separate
      const bool separated = std::abs(x.inv12 - y.inv12) > kInvariantGap || std::abs(x.inv23 - y.inv23) > kInvariantGap;
      if (!separated) {
        x.outcome.cond4 = false;
        y.outcome.cond4 = false;
      }
    }
  }
  for (std::size_t s : kept) {
    if (data[s].outcome.cond4) ++rep.passing;
    else ++rep.failed_4;
  }
  rep.samples = n;
  rep.outcomes.reserve(n);
  for (const auto& d : data) rep.outcomes.push_back(d.outcome);
  return rep;
}

GoodPointsReport check_conditions(double lambda, std::array<double, 4> points, const SamplingPlan& plan) {
  validate_inputs(lambda, points);
  GoodPointsReport rep;
  rep.lambda = lambda;
  rep.points = points;
  rep.cond1_defect = condition1_defect_of(lambda, points);
  rep.cond1 = rep.cond1_defect < kCondition1Tol;
  try {
    const GoodPointsConfig cfg(lambda, points);
    if (!rep.cond1) {
      rep.omega = cfg.omega();
      rep.zeta = cfg.zeta();
      rep.omega_defect = cfg.omega_defect();
      rep.zeta_defect = cfg.zeta_defect();
      rep.cond2 = rep.omega_defect < kMembershipTol && rep.zeta_defect < kMembershipTol;
      return rep;
    }
    return check_conditions(cfg, plan);
  } catch (const NoAdmissibleOmega& e) {
    rep.setup_error = e.what();
  } catch (const DomainError& e) {
    rep.setup_error = e.what();
  }
  return rep;
}

}  // namespace nodal
