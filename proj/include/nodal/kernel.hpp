#pragma once

// Blaschke factors, B_lambda, f_lambda and the kernel family k^{alpha,beta}
// attached to the constraint f(0) = f(lambda).

#include <vector>

#include "nodal/linalg.hpp"

namespace nodal {

/// Equality tolerance for nodes (against each other, 0 and lambda).
inline constexpr double kNodeTol = 1e-14;
/// |1 - z conj(w)| below this is rejected as ill-conditioned.
inline constexpr double kSzegoTol = 1e-13;

class NodeConfig {
 public:
  /// Validates 0 < |lambda| < 1, |z_i| < 1, nodes distinct and away from
  /// {0, lambda}. Throws InputError / DomainError.
  NodeConfig(Complex lambda, std::vector<Complex> nodes);

  Complex lambda() const noexcept { return lambda_; }
  const std::vector<Complex>& nodes() const noexcept { return nodes_; }
  Complex node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  Complex lambda_;
  std::vector<Complex> nodes_;
};

/// (alpha, beta) with |alpha|^2 + |beta|^2 = 1.
class ScalarParam {
 public:
  ScalarParam() = default;  // (1, 0)
  ScalarParam(Complex alpha, Complex beta);
  /// (cos t, e^{i phase} sin t).
  static ScalarParam from_angle(double theta, double phase = 0.0);

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }

 private:
  Complex alpha_{1.0, 0.0};
  Complex beta_{0.0, 0.0};
};

/// m x m (alpha, beta) with alpha alpha* + beta beta* = I.
class MatrixParam {
 public:
  MatrixParam(ComplexMatrix alpha, ComplexMatrix beta);
  static MatrixParam from_scalar(const ScalarParam& p);

  Eigen::Index m() const noexcept { return alpha_.rows(); }
  const ComplexMatrix& alpha() const noexcept { return alpha_; }
  const ComplexMatrix& beta() const noexcept { return beta_; }
  double coisometry_defect() const;

 private:
  ComplexMatrix alpha_;
  ComplexMatrix beta_;
};

struct FiniteBlaschke {
  std::vector<Complex> zeros;  // with multiplicity, all in the open disk
  Complex unimodular{1.0, 0.0};

  /// Throws DomainError for a zero outside the disk or |unimodular| != 1.
  void validate() const;
};

/// B_lambda(z) = z (z - lambda) / (1 - conj(lambda) z).
FiniteBlaschke b_lambda(Complex lambda);

Complex blaschke_eval(const FiniteBlaschke& b, Complex z);
Complex b_lambda_eval(Complex lambda, Complex z);

/// sqrt(1-|lambda|^2)/|lambda| * (1/(1 - conj(lambda) z) - 1).
Complex f_lambda(Complex lambda, Complex z);
Complex f_lambda(const NodeConfig& cfg, Complex z);

Complex scalar_kernel(Complex lambda, const ScalarParam& p, Complex z, Complex w);
Complex scalar_kernel(const NodeConfig& cfg, const ScalarParam& p, Complex z, Complex w);

ComplexMatrix matrix_kernel(const NodeConfig& cfg, const MatrixParam& p, Complex z, Complex w);

HermitianMatrix gram_matrix(const NodeConfig& cfg, const ScalarParam& p);

/// |B(0) - B(lambda)|; zero iff B satisfies the constraint.
double node_membership_defect(const FiniteBlaschke& b, Complex lambda);

/// [k(z_i, w_j)]. Points equal to 0 or lambda -> DomainError.
ComplexMatrix cross_kernel_matrix(const NodeConfig& cfg, const ScalarParam& p, const std::vector<Complex>& zs,
                                  const std::vector<Complex>& ws);

/// cross_kernel_matrix = P + u v*, with P_ij = B(z_i) conj(B(w_j)) / (1 - z_i conj(w_j)),
/// u_i = alpha + beta f(z_i), v_j = alpha + beta f(w_j).
struct RankOneSplit {
  ComplexMatrix p;
  ComplexVector u;
  ComplexVector v;
};

RankOneSplit cross_kernel_split(const NodeConfig& cfg, const ScalarParam& p, const std::vector<Complex>& zs,
                                const std::vector<Complex>& ws);

}  // namespace nodal
