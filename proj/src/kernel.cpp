#include "nodal/kernel.hpp"

#include <cmath>
#include <string>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_point(Complex z, const char* what) {
  if (!finite(z)) throw InputError(std::string(what) + ": non-finite point");
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(what) + ": point outside the open unit disk");
}

Complex szego(Complex z, Complex w) {
  const Complex d = 1.0 - z * std::conj(w);
  if (std::abs(d) < kSzegoTol) throw DomainError("kernel: |1 - z conj(w)| too small");
  return 1.0 / d;
}

}  // namespace

NodeConfig::NodeConfig(Complex lambda, std::vector<Complex> nodes) : lambda_(lambda), nodes_(std::move(nodes)) {
  if (!finite(lambda_)) throw InputError("NodeConfig: non-finite lambda");
  const double r = std::abs(lambda_);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("NodeConfig: need 0 < |lambda| < 1");
  if (nodes_.empty()) throw InputError("NodeConfig: at least one node required");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    require_point(nodes_[i], "NodeConfig");
    if (std::abs(nodes_[i]) <= kNodeTol) throw DomainError("NodeConfig: node " + std::to_string(i + 1) + " equals 0");
    if (std::abs(nodes_[i] - lambda_) <= kNodeTol) {
      throw DomainError("NodeConfig: node " + std::to_string(i + 1) + " equals lambda");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(nodes_[i] - nodes_[j]) <= kNodeTol) {
        throw DomainError("NodeConfig: nodes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                          " coincide");
      }
    }
  }
}

ScalarParam::ScalarParam(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  if (!finite(alpha) || !finite(beta)) throw InputError("ScalarParam: non-finite entry");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
    throw DomainError("ScalarParam: |alpha|^2 + |beta|^2 must equal 1");
  }
}

ScalarParam ScalarParam::from_angle(double theta, double phase) {
  return ScalarParam(Complex(std::cos(theta), 0.0), std::polar(std::sin(theta), phase));
}

MatrixParam::MatrixParam(ComplexMatrix alpha, ComplexMatrix beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.rows() < 1 || alpha_.rows() != alpha_.cols() || beta_.rows() != alpha_.rows() ||
      beta_.cols() != alpha_.cols()) {
    throw InputError("MatrixParam: alpha and beta must be square of equal size");
  }
  require_finite(alpha_, "MatrixParam");
  require_finite(beta_, "MatrixParam");
  if (coisometry_defect() > 1e-11) throw DomainError("MatrixParam: alpha alpha* + beta beta* must equal I");
}

MatrixParam MatrixParam::from_scalar(const ScalarParam& p) {
  return MatrixParam(ComplexMatrix::Constant(1, 1, p.alpha()), ComplexMatrix::Constant(1, 1, p.beta()));
}

double MatrixParam::coisometry_defect() const {
  const auto m = alpha_.rows();
  return max_abs(alpha_ * alpha_.adjoint() + beta_ * beta_.adjoint() - ComplexMatrix::Identity(m, m));
}

void FiniteBlaschke::validate() const {
  for (Complex a : zeros) require_point(a, "FiniteBlaschke");
  if (std::abs(std::abs(unimodular) - 1.0) > 1e-12) throw DomainError("FiniteBlaschke: factor must be unimodular");
}

FiniteBlaschke b_lambda(Complex lambda) { return {{Complex(0.0), lambda}, Complex(1.0)}; }

Complex blaschke_eval(const FiniteBlaschke& b, Complex z) {
  Complex v = b.unimodular;
  for (Complex a : b.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

Complex b_lambda_eval(Complex lambda, Complex z) { return z * (z - lambda) / (1.0 - std::conj(lambda) * z); }

Complex f_lambda(Complex lambda, Complex z) {
  const double r = std::abs(lambda);
  const double s = std::sqrt(1.0 - r * r) / r;
  // 1/(1 - conj(l) z) - 1 = conj(l) z / (1 - conj(l) z), no cancellation near 0.
  const Complex lz = std::conj(lambda) * z;
  return s * lz / (1.0 - lz);
}

Complex f_lambda(const NodeConfig& cfg, Complex z) { return f_lambda(cfg.lambda(), z); }

Complex scalar_kernel(Complex lambda, const ScalarParam& p, Complex z, Complex w) {
  const Complex s = szego(z, w);
  const Complex uz = p.alpha() + p.beta() * f_lambda(lambda, z);
  const Complex uw = p.alpha() + p.beta() * f_lambda(lambda, w);
  return std::conj(uw) * uz + b_lambda_eval(lambda, z) * std::conj(b_lambda_eval(lambda, w)) * s;
}

Complex scalar_kernel(const NodeConfig& cfg, const ScalarParam& p, Complex z, Complex w) {
  return scalar_kernel(cfg.lambda(), p, z, w);
}

ComplexMatrix matrix_kernel(const NodeConfig& cfg, const MatrixParam& p, Complex z, Complex w) {
  const Complex s = szego(z, w);
  const Complex lam = cfg.lambda();
  const ComplexMatrix left = p.alpha().adjoint() + std::conj(f_lambda(lam, w)) * p.beta().adjoint();
  const ComplexMatrix right = p.alpha() + f_lambda(lam, z) * p.beta();
  const Complex c = b_lambda_eval(lam, z) * std::conj(b_lambda_eval(lam, w)) * s;
  ComplexMatrix k = left * right;
  k.diagonal().array() += c;
  return k;
}

HermitianMatrix gram_matrix(const NodeConfig& cfg, const ScalarParam& p) {
  const auto n = static_cast<Eigen::Index>(cfg.size());
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j; i < n; ++i) g(i, j) = scalar_kernel(cfg, p, cfg.node(i), cfg.node(j));
  return HermitianMatrix(g);
}

double node_membership_defect(const FiniteBlaschke& b, Complex lambda) {
  return std::abs(blaschke_eval(b, Complex(0.0)) - blaschke_eval(b, lambda));
}

namespace {

void require_cross_points(const NodeConfig& cfg, const std::vector<Complex>& zs, const std::vector<Complex>& ws) {
  if (zs.size() != ws.size() || zs.empty()) throw InputError("cross_kernel_matrix: point lists must be equal-sized");
  for (const auto* list : {&zs, &ws}) {
    for (Complex z : *list) {
      require_point(z, "cross_kernel_matrix");
      if (std::abs(z) <= kNodeTol || std::abs(z - cfg.lambda()) <= kNodeTol) {
        throw DomainError("cross_kernel_matrix: point equals 0 or lambda");
      }
    }
  }
}

}  // namespace

ComplexMatrix cross_kernel_matrix(const NodeConfig& cfg, const ScalarParam& p, const std::vector<Complex>& zs,
                                  const std::vector<Complex>& ws) {
  require_cross_points(cfg, zs, ws);
  const auto n = static_cast<Eigen::Index>(zs.size());
  ComplexMatrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = scalar_kernel(cfg, p, zs[i], ws[j]);
  return c;
}

RankOneSplit cross_kernel_split(const NodeConfig& cfg, const ScalarParam& p, const std::vector<Complex>& zs,
                                const std::vector<Complex>& ws) {
  require_cross_points(cfg, zs, ws);
  const auto n = static_cast<Eigen::Index>(zs.size());
  const Complex lam = cfg.lambda();
  RankOneSplit out{ComplexMatrix(n, n), ComplexVector(n), ComplexVector(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.u(i) = p.alpha() + p.beta() * f_lambda(lam, zs[i]);
    out.v(i) = p.alpha() + p.beta() * f_lambda(lam, ws[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      out.p(i, j) = b_lambda_eval(lam, zs[i]) * std::conj(b_lambda_eval(lam, ws[j])) * szego(zs[i], ws[j]);
    }
  }
  return out;
}

}  // namespace nodal
