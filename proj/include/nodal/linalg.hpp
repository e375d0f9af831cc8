#pragma once

// Dense complex linear algebra shared by every other module.

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace nodal {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default relative tolerance used by PSD decisions.
inline constexpr double kPsdTol = 1e-9;
/// Largest 2-norm condition number still treated as invertible.
inline constexpr double kConditionLimit = 1e12;

/// Square matrix with exact Hermitian symmetry.
///
/// Only the lower triangle of the input is read; the upper triangle is
/// rebuilt from it, so entry(i,j) == conj(entry(j,i)) holds bit-for-bit.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// Builds from a matrix that must already be Hermitian within `tol`
  /// (relative to its largest entry); throws InputError otherwise.
  static HermitianMatrix checked(const ComplexMatrix& m, double tol = 1e-10);
  static HermitianMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return data_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return data_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }
  double trace_scale() const;

 private:
  ComplexMatrix data_;
};

struct EigResult {
  RealVector eigenvalues;    // ascending
  ComplexMatrix eigenvectors;  // columns, unitary
};

struct PsdVerdict {
  bool psd;
  double min_eig;
};

/// Throws InputError when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

EigResult herm_eig(const HermitianMatrix& h);
PsdVerdict psd_check(const HermitianMatrix& h, double tol = kPsdTol);

/// Positive square root; eigenvalues in [-tol*scale, 0) are clipped to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix& h, double tol = kPsdTol);

/// (H^{1/2}, H^{-1/2}) from a single eigendecomposition. Requires H
/// positive definite: min_eig > tol * max(1, ||H||), else NotPSD.
std::pair<ComplexMatrix, ComplexMatrix> pd_sqrt_pair(const HermitianMatrix& h, double tol = kPsdTol);

/// Largest singular value, as sqrt(lambda_max(A* A)).
double operator_norm(const ComplexMatrix& a);

/// Smallest singular value.
double min_singular_value(const ComplexMatrix& a);

/// 2-norm condition number (infinity for exactly singular input).
double condition_number(const ComplexMatrix& a);

/// det(P + u v*) via det(P) (1 + v* P^{-1} u). Throws SingularMatrix when
/// cond(P) exceeds kConditionLimit.
Complex det_rank_one_update(const ComplexMatrix& p, const ComplexVector& u, const ComplexVector& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);

}  // namespace nodal
