#pragma once

// Four real points and a real lambda: conditions (1)-(5) of the good-points
// definition, the auxiliary points omega and zeta, the matrices C_l, and the
// exact certificate for lambda = 1/sqrt(2).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nodal/identities.hpp"
#include "nodal/kernel.hpp"
#include "nodal/pick.hpp"
#include "nodal/qsqrt2.hpp"

namespace nodal {

/// Root in (-1, 1) of (z1 z2 l) w^2 + (m1 m2 - z1 z2) w - m1 m2 l = 0,
/// m_i = (l - z_i)/(1 - z_i l): the w making B_{z1,z2,w} satisfy the
/// constraint. If both roots qualify the smaller one in modulus is taken.
/// NoAdmissibleOmega without a real root of modulus < 1; DomainError if the
/// root is 0 or lambda.
double solve_omega(double lambda, double z1, double z2);

/// B_lambda'(w) = 0 within 1e-10.
bool is_critical_point(double lambda, double w);

/// w itself at a critical point of B_lambda, else the other solution of
/// B_lambda(z) = B_lambda(w), namely -B_lambda(w)/w (lambda when w = 0).
double solve_zeta(double lambda, double z3, double z4, double omega);

/// B_{a,b,c} = product of the three Mobius factors.
FiniteBlaschke three_point_blaschke(double a, double b, double c);

class GoodPointsConfig {
 public:
  /// Validates lambda in (0,1) and the points (real, in (-1,1), distinct,
  /// not 0 or lambda); solves omega and zeta. ω or ζ in {0, lambda} ->
  /// DomainError; NoAdmissibleOmega propagates.
  GoodPointsConfig(double lambda, std::array<double, 4> points);

  double lambda() const noexcept { return lambda_; }
  const std::array<double, 4>& points() const noexcept { return points_; }
  double omega() const noexcept { return omega_; }
  double zeta() const noexcept { return zeta_; }
  NodeConfig node_config() const;

  /// max(|B(z1) - B(z4)|, |B(z2) - B(z3)|).
  double condition1_defect() const;
  double omega_defect() const;  // membership defect of B_{z1,z2,omega}
  double zeta_defect() const;   // membership defect of B_{z3,z4,zeta}

  static constexpr std::array<int, 4> tau{4, 3, 2, 1};    // (14)(23)
  static constexpr std::array<int, 4> sigma{2, 1, 4, 3};  // (12)(34)

 private:
  double lambda_;
  std::array<double, 4> points_;
  double omega_;
  double zeta_;
};

/// Points w_j = z_j, except w_{sigma(l)} = zeta (l = 1, 2) or omega (l = 3, 4).
std::vector<Complex> c_ell_points(const GoodPointsConfig& cfg, int ell);

/// [k(z_i, w_j)] for the points above.
ComplexMatrix c_ell_matrix(const GoodPointsConfig& cfg, const ScalarParam& p, int ell);

/// Matrix with row and column l (1-based) removed.
ComplexMatrix delete_row_col(const ComplexMatrix& m, int ell);

inline constexpr double kEntryZeroTol = 1e-10;
inline constexpr double kSingularTol = 1e-8;
inline constexpr double kInvariantGap = 1e-8;
inline constexpr double kMaxExcludedFraction = 0.01;

struct SampleOutcome {
  double theta;
  bool cond3;  // some row of the kernel matrix has no (near-)zero entry
  bool cond5;  // C_l and their (l,l) minors well away from singular
  bool cond4;  // invariant separated from every other sample
  double min_row_entry;   // best row's min |entry| / scale
  double min_singular;    // smallest sigma_min / scale over the eight matrices
};

struct GoodPointsReport {
  double lambda = 0.0;
  std::array<double, 4> points{};
  std::optional<double> omega;
  std::optional<double> zeta;
  bool zeta_critical = false;
  std::string setup_error;  // why omega/zeta could not be formed

  bool cond1 = false;
  double cond1_defect = 0.0;
  bool cond2 = false;
  double omega_defect = 0.0;
  double zeta_defect = 0.0;

  std::size_t samples = 0;
  std::size_t excluded = 0;  // failed (3) or (5): near-singular
  std::size_t excluded_by_3 = 0;
  std::size_t excluded_by_5 = 0;
  std::size_t failed_4 = 0;  // non-excluded samples with an indistinguishable partner
  std::size_t passing = 0;
  std::vector<double> excluded_thetas;
  std::vector<SampleOutcome> outcomes;

  double pass_fraction() const { return samples ? double(passing) / double(samples) : 0.0; }
  double excluded_fraction() const { return samples ? double(excluded) / double(samples) : 0.0; }
  bool sampled_pass() const;
  bool overall_pass() const { return cond1 && cond2 && sampled_pass(); }
};

/// Samples theta = pi (k + 1/2) / N, k < N = plan.scalar_samples, i.e. real
/// (alpha, beta) = (cos t, sin t) in the open upper half-circle.
GoodPointsReport check_conditions(const GoodPointsConfig& cfg, const SamplingPlan& plan);

/// Same, starting from raw data; setup failures (condition (1) off, no
/// admissible omega) are reported instead of thrown. Input errors still throw.
GoodPointsReport check_conditions(double lambda, std::array<double, 4> points, const SamplingPlan& plan);

// --- exact certificate for lambda = 1/sqrt(2) ---

/// Fraction-free (Bareiss) determinant over Q(sqrt 2).
using QMatrix = std::vector<std::vector<QSqrt2>>;
QSqrt2 bareiss_det(QMatrix m);
QMatrix delete_row_col(const QMatrix& m, int ell);

struct PaperPoints {
  QSqrt2 lambda;
  std::array<QSqrt2, 4> z;
  QSqrt2 omega;  // sqrt(2) - 1
};
PaperPoints paper_points();
double paper_lambda();
std::array<double, 4> paper_points_double();

struct Table1Row {
  int node;
  QSqrt2 b;
  QSqrt2 f;
  Rational b_printed;
  Rational f_printed;
  double b_float_error;
  double f_float_error;
  bool exact_match;
};

/// Kernel at real (alpha, beta) as alpha^2 A + alpha beta B + beta^2 C + D.
struct Table2Row {
  NodePair pair;
  std::array<QSqrt2, 4> computed;
  std::array<Rational, 4> printed;
  bool match;  // equal on alpha^2 + beta^2 = 1
  std::optional<bool> closed_form_match;  // against rational_kernel_in_x
};

struct CEllCertificate {
  int ell;
  QMatrix computed;
  QMatrix printed;
  QSqrt2 det;
  QSqrt2 minor_det;
  std::vector<std::pair<int, int>> mismatches;  // 1-based (row, col)
  double float_det_gap;  // |det(c_ell_matrix) - det| / max(1, |det|)
};

struct DiscrepancyNote {
  std::string where;
  std::string printed;
  std::string computed;
  std::string note;
};

struct PaperCertificate {
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
  IdentityReport identities;
  bool omega_root_exact = false;      // sqrt(2)-1 solves the quadratic
  bool other_root_outside = false;    // sqrt(2)+1 does too, and is rejected
  bool omega_critical_exact = false;  // B'(sqrt(2)-1) = 0
  bool membership_exact = false;      // both three-point products satisfy B(0) = B(lambda)
  double omega_float = 0.0;
  double zeta_float = 0.0;
  std::vector<CEllCertificate> c_ell;
  std::vector<DiscrepancyNote> discrepancies;

  bool tables_pass() const;
  bool c_ell_nonsingular() const;
  bool all_exact_pass() const;
};

PaperCertificate paper_certificate();

struct PaperExampleReport {
  GoodPointsReport sampled;
  PaperCertificate certificate;
  bool pass() const { return certificate.all_exact_pass() && sampled.overall_pass(); }
};

PaperExampleReport verify_paper_example(const SamplingPlan& plan);

/// Tables 1-2, identity checks, C_l determinants and discrepancy notes.
std::string render_markdown(const PaperCertificate& cert);

}  // namespace nodal
