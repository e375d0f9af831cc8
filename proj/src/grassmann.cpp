#include "nodal/grassmann.hpp"

#include "nodal/errors.hpp"

namespace nodal {

PsiImage psi_image(const NodeConfig& cfg, const MatrixParam& mp) {
  const auto n = static_cast<Eigen::Index>(cfg.size());
  const Eigen::Index m = mp.m();
  PsiImage out;
  out.m = m;
  out.blocks.assign(n, std::vector<ComplexMatrix>(n));
  ComplexMatrix full(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      out.blocks[i][j] = matrix_kernel(cfg, mp, cfg.node(i), cfg.node(j)).transpose();
      full.block(i * m, j * m, m, m) = out.blocks[i][j];
    }
  out.assembled = HermitianMatrix(full);
  return out;
}

ComplexMatrix psi_from_generators(const NodeConfig& cfg, const MatrixParam& mp) {
  const auto n = static_cast<Eigen::Index>(cfg.size());
  const Eigen::Index m = mp.m();
  const Complex lam = cfg.lambda();
  const ComplexMatrix at = mp.alpha().transpose();
  const ComplexMatrix bt = mp.beta().transpose();
  const ComplexMatrix ac = mp.alpha().conjugate();
  const ComplexMatrix bc = mp.beta().conjugate();
  ComplexMatrix out(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex zi = cfg.node(i);
      const Complex zj = cfg.node(j);
      const Complex fi = f_lambda(lam, zi);
      const Complex fj = f_lambda(lam, zj);
      ComplexMatrix l = (at + fi * bt) * (ac + std::conj(fj) * bc);
      const Complex s = b_lambda_eval(lam, zi) * std::conj(b_lambda_eval(lam, zj)) / (1.0 - zi * std::conj(zj));
      l.diagonal().array() += s;
      out.block(i * m, j * m, m, m) = l;
    }
  return out;
}

PsiSplit psi_split(const NodeConfig& cfg, const MatrixParam& mp) {
  const auto n = static_cast<Eigen::Index>(cfg.size());
  const Eigen::Index m = mp.m();
  const Complex lam = cfg.lambda();
  PsiSplit out{ComplexMatrix(n * m, m), ComplexMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.l.block(i * m, 0, m, m) = mp.alpha().transpose() + f_lambda(lam, cfg.node(i)) * mp.beta().transpose();
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex zi = cfg.node(i);
      const Complex zj = cfg.node(j);
      out.g(i, j) = b_lambda_eval(lam, zi) * std::conj(b_lambda_eval(lam, zj)) / (1.0 - zi * std::conj(zj));
    }
  }
  out.g = kron(out.g, ComplexMatrix::Identity(m, m));
  return out;
}

GammaImage gamma_image(const NodeConfig& cfg, const MatrixParam& mp, const std::vector<ComplexMatrix>& node_values) {
  const auto n = static_cast<Eigen::Index>(cfg.size());
  if (static_cast<Eigen::Index>(node_values.size()) != n) throw InputError("gamma_image: one value per node required");
  const Eigen::Index r = node_values.front().rows();
  for (const auto& w : node_values)
    if (w.rows() != r || w.cols() != r) throw InputError("gamma_image: node values must be r x r");
  const Eigen::Index m = mp.m();
  const Eigen::Index nm = n * m;

  const auto [root, inv_root] = pd_sqrt_pair(psi_image(cfg, mp).assembled);
  GammaImage out{m, r, ComplexMatrix(r * nm, r * nm)};
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < r; ++b) {
      ComplexVector d(nm);
      for (Eigen::Index i = 0; i < n; ++i) d.segment(i * m, m).setConstant(node_values[i](a, b));
      out.matrix.block(a * nm, b * nm, nm, nm) = inv_root * d.asDiagonal() * root;
    }
  return out;
}

GammaImage gamma_image(const NodeConfig& cfg, const MatrixParam& mp, const std::vector<Complex>& node_values) {
  std::vector<ComplexMatrix> blocks;
  for (Complex v : node_values) blocks.push_back(ComplexMatrix::Constant(1, 1, v));
  return gamma_image(cfg, mp, blocks);
}

Eigen::PermutationMatrix<Eigen::Dynamic> epsilon_permutation(Eigen::Index n, Eigen::Index m, Eigen::Index r) {
  Eigen::PermutationMatrix<Eigen::Dynamic> p(n * m * r);
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index mu = 0; mu < m; ++mu) p.indices()(a * n * m + i * m + mu) = static_cast<int>((i * m + mu) * r + a);
  return p;
}

namespace {

FamilyEvaluator gamma_evaluator(const InterpolationProblem& prob) {
  return [&prob](const FamilyParam& fp) -> std::optional<SampleScore> {
    try {
      const double v = operator_norm(gamma_image(prob.cfg(), as_matrix_param(fp), prob.targets()).matrix);
      return SampleScore{v, v};
    } catch (const NotPSD&) {
      return std::nullopt;
    }
  };
}

}  // namespace

NormReport embedding_norm_report(const InterpolationProblem& prob, const SamplingPlan& plan) {
  const SweepResult r = sweep_family(plan, gamma_evaluator(prob), true);
  return {r.found ? r.best.value : 0.0, r.best_param, r.samples_used, r.excluded};
}

double embedding_norm(const InterpolationProblem& prob, const SamplingPlan& plan) {
  return embedding_norm_report(prob, plan).value;
}

std::vector<EmbedRecord> embed_levels(const InterpolationProblem& prob, const SamplingPlan& plan) {
  plan.validate();
  std::vector<EmbedRecord> out;
  for (Eigen::Index m : plan.matrix_levels) {
    auto recs = parallel_map<EmbedRecord>(plan.samples_per_level, [&](std::size_t s) {
      const std::uint64_t seed = derive_seed(plan.seed, static_cast<std::uint64_t>(m), s);
      const MatrixParam mp = sample_matrix_param(m, plan.real_only, seed);
      const PsdVerdict v = psd_check(psi_image(prob.cfg(), mp).assembled, 0.0);
      double norm = std::numeric_limits<double>::quiet_NaN();
      try {
        norm = operator_norm(gamma_image(prob.cfg(), mp, prob.targets()).matrix);
      } catch (const NotPSD&) {
      }
      return EmbedRecord{m, s, seed, norm, v.min_eig};
    });
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

}  // namespace nodal
