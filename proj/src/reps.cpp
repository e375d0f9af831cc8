#include "nodal/reps.hpp"

#include <algorithm>
#include <cmath>

#include "nodal/errors.hpp"

namespace nodal {

Complex GeneratorPoly::operator()(Complex z) const { return poly_eval(coeffs, z); }

GeneratorPoly generator_h(const NodeConfig& cfg) {
  std::vector<Complex> pts{Complex(0.0), cfg.lambda()};
  std::vector<Complex> vals{Complex(0.0), Complex(0.0)};
  for (Complex z : cfg.nodes()) {
    pts.push_back(z);
    vals.push_back(z);
  }
  const auto d = static_cast<Eigen::Index>(pts.size());
  ComplexMatrix v(d, d);
  ComplexVector rhs(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Complex pw(1.0);
    for (Eigen::Index k = 0; k < d; ++k) {
      v(i, k) = pw;
      pw *= pts[i];
    }
    rhs(i) = vals[i];
  }
  const double cond = condition_number(v);
  if (!(cond <= kConditionLimit)) throw ConditioningError("generator_h: interpolation system is ill-conditioned");
  const ComplexVector a = Eigen::FullPivLU<ComplexMatrix>(v).solve(rhs);
  return {std::vector<Complex>(a.data(), a.data() + a.size())};
}

DualBasis dual_basis(const NodeConfig& cfg, const ScalarParam& p) {
  const HermitianMatrix g = gram_matrix(cfg, p);
  const double cond = condition_number(g.matrix());
  if (!(cond <= kConditionLimit)) throw SingularMatrix("dual_basis: Gram matrix is numerically singular", cond);
  return {g.matrix().inverse()};
}

RepMatrix rho_matrix(const NodeConfig& cfg, const ScalarParam& p, const std::vector<Complex>& node_values) {
  if (node_values.size() != cfg.size()) throw InputError("rho_matrix: one value per node required");
  const auto [root, inv_root] = pd_sqrt_pair(gram_matrix(cfg, p));
  const auto n = static_cast<Eigen::Index>(cfg.size());
  ComplexVector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = node_values[i];
  return {p, inv_root * d.asDiagonal() * root};
}

MinimalPolyReport minimal_poly_check(const NodeConfig& cfg, const RepMatrix& rep) {
  const auto n = static_cast<Eigen::Index>(cfg.size());
  if (rep.matrix.rows() != n || rep.matrix.cols() != n) throw InputError("minimal_poly_check: size mismatch");
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  auto product = [&](Eigen::Index skip) {
    ComplexMatrix acc = id;
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != skip) acc = acc * (rep.matrix - cfg.node(i) * id);
    return operator_norm(acc);
  };
  MinimalPolyReport out{product(-1), {}};
  if (n > 1)
    for (Eigen::Index i = 0; i < n; ++i) out.leave_one_out.push_back(product(i));
  return out;
}

namespace {

// Orthonormal basis (as d x d matrices) of the span of the candidates.
std::vector<ComplexMatrix> span_basis(const std::vector<ComplexMatrix>& cands, Eigen::Index d) {
  std::vector<ComplexVector> cols;
  for (const auto& c : cands) {
    const double nrm = c.norm();
    if (nrm > 0.0) cols.push_back(Eigen::Map<const ComplexVector>(c.data(), d * d) / nrm);
  }
  if (cols.empty()) return {};
  ComplexMatrix stack(d * d, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) stack.col(static_cast<Eigen::Index>(j)) = cols[j];
  Eigen::JacobiSVD<ComplexMatrix> svd(stack, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = 1e-9 * s(0);
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index k = 0; k < s.size() && s(k) > cut; ++k) {
    basis.push_back(Eigen::Map<const ComplexMatrix>(svd.matrixU().col(k).data(), d, d));
  }
  return basis;
}

}  // namespace

std::size_t star_algebra_dim(const std::vector<ComplexMatrix>& generators, std::size_t dim_cap) {
  if (generators.empty()) return 1;
  const Eigen::Index d = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != d || g.cols() != d) throw InputError("star_algebra_dim: generators must share one square size");
  const std::size_t cap = dim_cap == 0 ? static_cast<std::size_t>(d * d) : dim_cap;

  std::vector<ComplexMatrix> seeds{ComplexMatrix::Identity(d, d)};
  for (const auto& g : generators) {
    seeds.push_back(g);
    seeds.push_back(g.adjoint());
  }
  std::vector<ComplexMatrix> basis = span_basis(seeds, d);
  for (int round = 0; round < 10 && basis.size() < cap; ++round) {
    std::vector<ComplexMatrix> cands = basis;
    for (const auto& a : basis) {
      cands.push_back(a.adjoint());
      for (const auto& s : seeds) cands.push_back(a * s);
    }
    std::vector<ComplexMatrix> next = span_basis(cands, d);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  return std::min(basis.size(), cap);
}

std::vector<ComplexMatrix> dual_function_reps(const NodeConfig& cfg, const ScalarParam& p) {
  const auto [root, inv_root] = pd_sqrt_pair(gram_matrix(cfg, p));
  const auto n = static_cast<Eigen::Index>(cfg.size());
  std::vector<ComplexMatrix> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(inv_root.col(i) * root.row(i));
  return out;
}

std::vector<double> inequivalence_invariant(const NodeConfig& cfg, const ScalarParam& p) {
  const std::size_t n = cfg.size();
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = scalar_kernel(cfg, p, cfg.node(i), cfg.node(i)).real();
    if (!(diag[i] > 0.0)) throw DomainError("inequivalence_invariant: non-positive diagonal kernel");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back(std::norm(scalar_kernel(cfg, p, cfg.node(j), cfg.node(i))) / (diag[i] * diag[j]));
  return out;
}

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= n)) throw InputError("pair_index: need 1 <= i < j <= n");
  // Pairs starting at rows 1..i-1 come first.
  const std::size_t before = (i - 1) * n - (i - 1) * i / 2;
  return before + (j - i - 1);
}

Complex poly_eval(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexMatrix poly_eval(const std::vector<Complex>& coeffs, const ComplexMatrix& a) {
  const Eigen::Index d = a.rows();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * a;
    acc.diagonal().array() += *it;
  }
  return acc;
}

BlockCalculus block_triangular_calculus(const ComplexMatrix& c, Complex omega, const ComplexVector& v,
                                        const std::vector<Complex>& phi) {
  const Eigen::Index d = c.rows();
  if (d < 1 || c.cols() != d || v.size() != d) throw InputError("block_triangular_calculus: shape mismatch");
  require_finite(c, "block_triangular_calculus");
  const double radius = Eigen::ComplexEigenSolver<ComplexMatrix>(c, false).eigenvalues().cwiseAbs().maxCoeff();
  if (!(radius < 1.0)) throw DomainError("block_triangular_calculus: spectral radius of C must be < 1");
  if (!(std::abs(omega) < 1.0)) throw DomainError("block_triangular_calculus: |omega| must be < 1");

  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix t = ComplexMatrix::Zero(d + 1, d + 1);
  t.topLeftCorner(d, d) = c;
  t.block(d, 0, 1, d) = v.adjoint() * (c - omega * id);
  t(d, d) = omega;

  const ComplexMatrix phi_c = poly_eval(phi, c);
  const Complex phi_w = poly_eval(phi, omega);
  ComplexMatrix closed = ComplexMatrix::Zero(d + 1, d + 1);
  closed.topLeftCorner(d, d) = phi_c;
  closed.block(d, 0, 1, d) = v.adjoint() * (phi_c - phi_w * id);
  closed(d, d) = phi_w;

  ComplexMatrix direct = poly_eval(phi, t);
  const double gap = max_abs(closed - direct);
  return {std::move(closed), std::move(direct), gap};
}

}  // namespace nodal
