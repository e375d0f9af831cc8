#include "nodal/pick.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nodal/errors.hpp"
#include "nodal/sampling.hpp"

namespace nodal {

InterpolationProblem::InterpolationProblem(NodeConfig cfg, std::vector<ComplexMatrix> targets)
    : cfg_(std::move(cfg)), targets_(std::move(targets)) {
  if (targets_.size() != cfg_.size()) {
    throw InputError("InterpolationProblem: " + std::to_string(targets_.size()) + " targets for " +
                     std::to_string(cfg_.size()) + " nodes");
  }
  const Eigen::Index k = targets_.front().rows();
  if (k < 1) throw InputError("InterpolationProblem: empty target block");
  for (const auto& w : targets_) {
    if (w.rows() != k || w.cols() != k) throw InputError("InterpolationProblem: target blocks must be k x k");
    require_finite(w, "InterpolationProblem");
  }
}

InterpolationProblem InterpolationProblem::scalar(NodeConfig cfg, const std::vector<Complex>& targets) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(targets.size());
  for (Complex w : targets) blocks.push_back(ComplexMatrix::Constant(1, 1, w));
  return InterpolationProblem(std::move(cfg), std::move(blocks));
}

std::vector<Complex> InterpolationProblem::scalar_targets() const {
  if (!is_scalar()) throw InputError("InterpolationProblem: scalar targets requested for a block problem");
  std::vector<Complex> out;
  out.reserve(targets_.size());
  for (const auto& w : targets_) out.push_back(w(0, 0));
  return out;
}

void SamplingPlan::validate() const {
  if (scalar_samples < 1) throw InputError("SamplingPlan: scalar_samples must be at least 1");
  if (phase_samples < 1) throw InputError("SamplingPlan: phase_samples must be at least 1");
  for (auto m : matrix_levels)
    if (m < 1) throw InputError("SamplingPlan: matrix levels must be at least 1");
}

MatrixParam as_matrix_param(const FamilyParam& p) {
  if (const auto* s = std::get_if<ScalarParam>(&p)) return MatrixParam::from_scalar(*s);
  return std::get<MatrixParam>(p);
}

namespace {

struct Candidate {
  std::optional<SampleScore> score;
};

void absorb(SweepResult& acc, const FamilyParam& param, const std::optional<SampleScore>& s) {
  ++acc.samples_used;
  if (!s) {
    ++acc.excluded;
    return;
  }
  if (!acc.found || s->score > acc.best.score) {
    acc.found = true;
    acc.best = *s;
    acc.best_param = param;
  }
}

}  // namespace

SweepResult sweep_family(const SamplingPlan& plan, const FamilyEvaluator& eval, bool use_levels) {
  plan.validate();
  SweepResult acc;
  const std::size_t n = plan.scalar_samples;
  const std::size_t phases = plan.phase_samples;

  const auto grid = parallel_map<Candidate>(n * phases, [&](std::size_t idx) {
    const std::size_t k = idx % n;
    const std::size_t p = idx / n;
    return Candidate{eval(ScalarParam::from_angle(grid_theta(k, n), grid_phase(p, phases)))};
  });
  std::size_t best_idx = 0;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const bool had = acc.found;
    const double before = acc.best.score;
    const std::size_t k = idx % n;
    const std::size_t p = idx / n;
    absorb(acc, ScalarParam::from_angle(grid_theta(k, n), grid_phase(p, phases)), grid[idx].score);
    if (acc.found && (!had || acc.best.score > before)) best_idx = idx;
  }

  if (acc.found && plan.refine_iters > 0) {
    double theta = grid_theta(best_idx % n, n);
    double phase = grid_phase(best_idx / n, phases);
    double h_theta = std::numbers::pi / static_cast<double>(n);
    double h_phase = std::numbers::pi / static_cast<double>(phases);
    constexpr int kHalf = 8;
    for (std::size_t round = 0; round < plan.refine_iters; ++round) {
      for (int t = -kHalf; t <= kHalf; ++t) {
        if (t == 0) continue;
        const double th = theta + h_theta * t / kHalf;
        const ScalarParam sp = ScalarParam::from_angle(th, phase);
        const double before = acc.best.score;
        absorb(acc, sp, eval(sp));
        if (acc.best.score > before) theta = th;
      }
      if (phases > 1) {
        const double th = theta;
        for (int t = -kHalf; t <= kHalf; ++t) {
          if (t == 0) continue;
          const double ph = phase + h_phase * t / kHalf;
          const ScalarParam sp = ScalarParam::from_angle(th, ph);
          const double before = acc.best.score;
          absorb(acc, sp, eval(sp));
          if (acc.best.score > before) phase = ph;
        }
        h_phase /= kHalf;
      }
      h_theta /= kHalf;
    }
  }

  if (use_levels) {
    for (Eigen::Index m : plan.matrix_levels) {
      const auto params = parallel_map<FamilyParam>(plan.samples_per_level, [&](std::size_t s) {
        return FamilyParam(sample_matrix_param(m, plan.real_only, derive_seed(plan.seed, static_cast<std::uint64_t>(m), s)));
      });
      const auto scores = parallel_map<Candidate>(params.size(), [&](std::size_t s) { return Candidate{eval(params[s])}; });
      for (std::size_t s = 0; s < params.size(); ++s) absorb(acc, params[s], scores[s].score);
    }
  }
  return acc;
}

HermitianMatrix scalar_pick_matrix(const InterpolationProblem& prob, const ScalarParam& p) {
  const auto w = prob.scalar_targets();
  const NodeConfig& cfg = prob.cfg();
  const auto n = static_cast<Eigen::Index>(cfg.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j; i < n; ++i)
      m(i, j) = (1.0 - w[i] * std::conj(w[j])) * scalar_kernel(cfg, p, cfg.node(i), cfg.node(j));
  return HermitianMatrix(m);
}

HermitianMatrix classical_pick_matrix(const InterpolationProblem& prob) {
  const auto w = prob.scalar_targets();
  const NodeConfig& cfg = prob.cfg();
  const auto n = static_cast<Eigen::Index>(cfg.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j; i < n; ++i)
      m(i, j) = (1.0 - w[i] * std::conj(w[j])) / (1.0 - cfg.node(i) * std::conj(cfg.node(j)));
  return HermitianMatrix(m);
}

FeasibilityReport scalar_solvable(const InterpolationProblem& prob, const SamplingPlan& plan, double tol) {
  if (tol < 0) throw InputError("scalar_solvable: negative tolerance");
  prob.scalar_targets();  // shape check
  const FamilyEvaluator eval = [&](const FamilyParam& fp) -> std::optional<SampleScore> {
    const HermitianMatrix h = scalar_pick_matrix(prob, std::get<ScalarParam>(fp));
    const PsdVerdict v = psd_check(h, 0.0);
    return SampleScore{-v.min_eig / h.trace_scale(), v.min_eig};
  };
  const SweepResult r = sweep_family(plan, eval, false);
  FeasibilityReport rep;
  rep.kind = ValueKind::min_eig;
  rep.worst_param = r.best_param;
  rep.worst_value = r.best.value;
  rep.samples_used = r.samples_used;
  rep.excluded = r.excluded;
  rep.verdict = r.found && r.best.score > tol ? Verdict::infeasible : Verdict::feasible_on_samples;
  return rep;
}

ComplexMatrix psi_epsilon(const NodeConfig& cfg, const MatrixParam& mp, Eigen::Index r) {
  if (r < 1) throw InputError("psi_epsilon: r must be at least 1");
  const auto n = static_cast<Eigen::Index>(cfg.size());
  const Eigen::Index m = mp.m();
  const Eigen::Index b = m * r;
  const ComplexMatrix id_r = ComplexMatrix::Identity(r, r);
  ComplexMatrix out(n * b, n * b);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const ComplexMatrix kt = matrix_kernel(cfg, mp, cfg.node(j), cfg.node(i)).transpose();
      out.block(j * b, i * b, b, b) = kron(kt, id_r);
    }
  return out;
}

ComplexMatrix phi_epsilon(const InterpolationProblem& prob, Eigen::Index m) {
  if (m < 1) throw InputError("phi_epsilon: m must be at least 1");
  const auto n = static_cast<Eigen::Index>(prob.cfg().size());
  const Eigen::Index r = prob.block_size();
  const Eigen::Index b = m * r;
  const ComplexMatrix id_m = ComplexMatrix::Identity(m, m);
  ComplexMatrix out = ComplexMatrix::Zero(n * b, n * b);
  for (Eigen::Index i = 0; i < n; ++i) out.block(i * b, i * b, b, b) = kron(id_m, prob.targets()[i]);
  return out;
}

TraceOperator trace_condition_operator(const InterpolationProblem& prob, const MatrixParam& mp) {
  const HermitianMatrix psi(psi_epsilon(prob.cfg(), mp, prob.block_size()));
  const auto [root, inv_root] = pd_sqrt_pair(psi);
  ComplexMatrix op = inv_root * phi_epsilon(prob, mp.m()) * root;
  const double norm = operator_norm(op);
  return {std::move(op), norm};
}

namespace {

FamilyEvaluator norm_evaluator(const InterpolationProblem& prob) {
  return [&prob](const FamilyParam& fp) -> std::optional<SampleScore> {
    try {
      const double v = trace_condition_operator(prob, as_matrix_param(fp)).norm;
      return SampleScore{v, v};
    } catch (const NotPSD&) {
      return std::nullopt;
    }
  };
}

}  // namespace

FeasibilityReport matricial_solvable(const InterpolationProblem& prob, const SamplingPlan& plan, double tol) {
  if (tol < 0) throw InputError("matricial_solvable: negative tolerance");
  const SweepResult r = sweep_family(plan, norm_evaluator(prob), true);
  FeasibilityReport rep;
  rep.kind = ValueKind::norm;
  rep.worst_param = r.best_param;
  rep.worst_value = r.best.value;
  rep.samples_used = r.samples_used;
  rep.excluded = r.excluded;
  rep.verdict = r.found && r.best.value > 1.0 + tol ? Verdict::infeasible : Verdict::feasible_on_samples;
  return rep;
}

NormReport quotient_norm_report(const InterpolationProblem& prob, const SamplingPlan& plan) {
  const SweepResult r = sweep_family(plan, norm_evaluator(prob), true);
  return {r.found ? r.best.value : 0.0, r.best_param, r.samples_used, r.excluded};
}

double quotient_norm(const InterpolationProblem& prob, const SamplingPlan& plan) {
  return quotient_norm_report(prob, plan).value;
}

}  // namespace nodal
