#include <doctest.h>

#include "nodal/errors.hpp"
#include "nodal/goodpoints.hpp"
#include "nodal/kernel_exact.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

// Brute-force critical point of B_lambda on (-1, 1) by bisection on B'.
double critical_point_bisect(double lam) {
  auto db = [&](double z) {
    const double h = 1e-7;
    return oracle::blaschke_real(lam, z + h) - oracle::blaschke_real(lam, z - h);
  };
  double lo = 0.0, hi = lam;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (db(lo) * db(mid) <= 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("goodpoints") {
  TEST_CASE("omega and zeta at the worked example") {
    const double lam = paper_lambda();
    const auto z = paper_points_double();
    const double w = solve_omega(lam, z[0], z[1]);
    CHECK(w == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
    CHECK(is_critical_point(lam, w));
    CHECK(solve_zeta(lam, z[2], z[3], w) == doctest::Approx(w).epsilon(1e-12));
    CHECK(w == doctest::Approx(critical_point_bisect(lam)).epsilon(1e-6));
  }

  TEST_CASE("three-point products through omega satisfy the constraint") {
    const double lam = 0.6;
    const double z1 = 0.3, z2 = -0.5;
    const double w = solve_omega(lam, z1, z2);
    const FiniteBlaschke b = three_point_blaschke(z1, z2, w);
    CHECK(node_membership_defect(b, lam) < 1e-12);
  }

  TEST_CASE("exact Q(sqrt 2) kernel reproduces the floating one") {
    const PaperPoints pp = paper_points();
    const RealKernel<QSqrt2> ek{pp.lambda, QSqrt2(1)};
    CHECK(ek.critical_residual(pp.omega).is_zero());
    const auto zd = paper_points_double();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double want = ek.k(QSqrt2(1), QSqrt2(0), pp.z[i], pp.z[j]).to_double();
        CHECK(oracle::kernel_real(paper_lambda(), 1.0, 0.0, zd[i], zd[j]) == doctest::Approx(want).epsilon(1e-12));
      }
  }

  TEST_CASE("Bareiss determinant matches elimination") {
    QMatrix m{{QSqrt2(2), QSqrt2(0, 1), QSqrt2(1)},
              {QSqrt2(1), QSqrt2(3), QSqrt2(-1, 1)},
              {QSqrt2(0), QSqrt2(1), QSqrt2(5)}};
    oracle::Mat f(3, std::vector<oracle::cd>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f[i][j] = m[i][j].to_double();
    CHECK(bareiss_det(m).to_double() == doctest::Approx(oracle::det(f).real()).epsilon(1e-13));
    QMatrix z{{QSqrt2(0), QSqrt2(1)}, {QSqrt2(0), QSqrt2(2)}};
    CHECK(bareiss_det(z).is_zero());
  }

  TEST_CASE("paper certificate") {
    const PaperCertificate cert = paper_certificate();
    CHECK(cert.tables_pass());
    CHECK(cert.c_ell_nonsingular());
    CHECK(cert.all_exact_pass());
    REQUIRE(cert.c_ell.size() == 4);
    CHECK(cert.c_ell[0].mismatches == std::vector<std::pair<int, int>>{{3, 2}, {4, 4}});
    CHECK(cert.c_ell[2].mismatches.empty());
    for (const auto& c : cert.c_ell) CHECK(c.float_det_gap < 1e-10);
    CHECK(cert.discrepancies.size() == 5);
  }

  TEST_CASE("sampled conditions at the worked example") {
    SamplingPlan plan;
    plan.scalar_samples = 256;
    const GoodPointsReport r = check_conditions(paper_lambda(), paper_points_double(), plan);
    CHECK(r.cond1);
    CHECK(r.cond2);
    CHECK(r.failed_4 == 0);
    CHECK(r.excluded_fraction() <= kMaxExcludedFraction);
    CHECK(r.overall_pass());
  }

  TEST_CASE("condition (1) failure is reported, not thrown") {
    SamplingPlan plan;
    plan.scalar_samples = 32;
    const GoodPointsReport r = check_conditions(0.5, {0.1, 0.2, 0.3, 0.4}, plan);
    CHECK_FALSE(r.cond1);
    CHECK_FALSE(r.overall_pass());
  }

  TEST_CASE("permutations and C_l construction") {
    CHECK(GoodPointsConfig::sigma == std::array<int, 4>{2, 1, 4, 3});
    const GoodPointsConfig cfg(paper_lambda(), paper_points_double());
    const auto pts = c_ell_points(cfg, 1);
    // Column sigma(1) = 2 replaced by zeta.
    CHECK(std::abs(pts[1] - cfg.zeta()) < 1e-15);
    const ComplexMatrix c = c_ell_matrix(cfg, ScalarParam(), 3);
    CHECK(c.rows() == 4);
    CHECK(delete_row_col(c, 3).rows() == 3);
    CHECK_THROWS(c_ell_points(cfg, 5));
  }
}
