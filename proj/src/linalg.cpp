#include "nodal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

ComplexMatrix from_lower(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    out(j, j) = Complex(m(j, j).real(), 0.0);
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
      out(i, j) = m(i, j);
      out(j, i) = std::conj(m(i, j));
    }
  }
  return out;
}

}  // namespace

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw InputError(std::string(what) + ": non-finite entry");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw InputError("HermitianMatrix: matrix must be square and non-empty");
  require_finite(m, "HermitianMatrix");
  data_ = from_lower(m);
}

HermitianMatrix HermitianMatrix::checked(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) throw InputError("HermitianMatrix: matrix must be square and non-empty");
  require_finite(m, "HermitianMatrix");
  const double defect = max_abs(m - m.adjoint());
  if (defect > tol * std::max(1.0, max_abs(m))) {
    throw InputError("HermitianMatrix: input is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

double HermitianMatrix::trace_scale() const {
  double s = 0.0;
  for (Eigen::Index i = 0; i < dim(); ++i) s += std::abs(data_(i, i).real());
  return std::max(1.0, s);
}

EigResult herm_eig(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw InputError("herm_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdVerdict psd_check(const HermitianMatrix& h, double tol) {
  if (tol < 0) throw InputError("psd_check: negative tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues()(0);
  return {min_eig >= -tol * h.trace_scale(), min_eig};
}

HermitianMatrix psd_sqrt(const HermitianMatrix& h, double tol) {
  const EigResult e = herm_eig(h);
  const double scale = std::max(1.0, e.eigenvalues.cwiseAbs().maxCoeff());
  const double min_eig = e.eigenvalues(0);
  if (min_eig < -tol * scale) throw NotPSD("psd_sqrt: matrix is not positive semidefinite", min_eig);
  const RealVector roots = e.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return HermitianMatrix(e.eigenvectors * roots.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint());
}

std::pair<ComplexMatrix, ComplexMatrix> pd_sqrt_pair(const HermitianMatrix& h, double tol) {
  const EigResult e = herm_eig(h);
  const double scale = std::max(1.0, e.eigenvalues.cwiseAbs().maxCoeff());
  const double min_eig = e.eigenvalues(0);
  if (!(min_eig > tol * scale)) throw NotPSD("pd_sqrt_pair: matrix is not positive definite", min_eig);
  const RealVector roots = e.eigenvalues.cwiseSqrt();
  const RealVector inv_roots = roots.cwiseInverse();
  const auto& v = e.eigenvectors;
  return {v * roots.cast<Complex>().asDiagonal() * v.adjoint(), v * inv_roots.cast<Complex>().asDiagonal() * v.adjoint()};
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  const ComplexMatrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double min_singular_value(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().minCoeff();
}

double condition_number(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.minCoeff() == 0.0) return std::numeric_limits<double>::infinity();
  return s.maxCoeff() / s.minCoeff();
}

Complex det_rank_one_update(const ComplexMatrix& p, const ComplexVector& u, const ComplexVector& v) {
  if (p.rows() != p.cols()) throw InputError("det_rank_one_update: P must be square");
  if (u.size() != p.rows() || v.size() != p.rows()) throw InputError("det_rank_one_update: vector size mismatch");
  require_finite(p, "det_rank_one_update");
  const double cond = condition_number(p);
  if (!(cond <= kConditionLimit)) throw SingularMatrix("det_rank_one_update: P is numerically singular", cond);
  Eigen::PartialPivLU<ComplexMatrix> lu(p);
  const ComplexVector pinv_u = lu.solve(u);
  return lu.determinant() * (Complex(1.0) + v.dot(pinv_u));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace nodal
