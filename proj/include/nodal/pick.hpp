#pragma once

// Solvability of constrained Pick problems and the distance formula,
// evaluated over a finite sample of the kernel-parameter family.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "nodal/kernel.hpp"

namespace nodal {

class InterpolationProblem {
 public:
  /// targets[i] is the k x k value W_i at node i; all blocks share one size.
  InterpolationProblem(NodeConfig cfg, std::vector<ComplexMatrix> targets);
  static InterpolationProblem scalar(NodeConfig cfg, const std::vector<Complex>& targets);

  const NodeConfig& cfg() const noexcept { return cfg_; }
  const std::vector<ComplexMatrix>& targets() const noexcept { return targets_; }
  Eigen::Index block_size() const noexcept { return targets_.front().rows(); }
  bool is_scalar() const noexcept { return block_size() == 1; }
  /// Throws InputError unless block_size() == 1.
  std::vector<Complex> scalar_targets() const;

 private:
  NodeConfig cfg_;
  std::vector<ComplexMatrix> targets_;
};

struct SamplingPlan {
  std::size_t scalar_samples = 4096;
  std::size_t phase_samples = 1;  // 1: real (alpha, beta) only
  std::vector<Eigen::Index> matrix_levels{1, 2, 3};
  std::size_t samples_per_level = 64;
  std::uint64_t seed = 20240607;
  std::size_t refine_iters = 3;
  bool real_only = false;  // Haar samples from the real orthogonal group

  void validate() const;
};

using FamilyParam = std::variant<ScalarParam, MatrixParam>;

enum class Verdict { feasible_on_samples, infeasible };
enum class ValueKind { min_eig, norm };

struct FeasibilityReport {
  Verdict verdict = Verdict::feasible_on_samples;
  FamilyParam worst_param;
  double worst_value = 0.0;
  ValueKind kind = ValueKind::min_eig;
  std::size_t samples_used = 0;
  std::size_t excluded = 0;  // degenerate parameters (NotPSD kernel blocks)
};

struct NormReport {
  double value = 0.0;
  FamilyParam best_param;
  std::size_t samples_used = 0;
  std::size_t excluded = 0;
};

// --- sweep engine, shared with the grassmann module ---

struct SampleScore {
  double score;  // maximized
  double value;  // reported
};

/// nullopt marks a degenerate (excluded) parameter.
using FamilyEvaluator = std::function<std::optional<SampleScore>(const FamilyParam&)>;

struct SweepResult {
  bool found = false;
  FamilyParam best_param;
  SampleScore best{0.0, 0.0};
  std::size_t samples_used = 0;
  std::size_t excluded = 0;
};

/// Scalar theta/phase grid, local refinement around its best point, then
/// (if use_levels) samples_per_level Haar parameters per matrix level.
SweepResult sweep_family(const SamplingPlan& plan, const FamilyEvaluator& eval, bool use_levels);

MatrixParam as_matrix_param(const FamilyParam& p);

// --- scalar problems ---

/// [(1 - w_i conj(w_j)) k(z_i, z_j)].
HermitianMatrix scalar_pick_matrix(const InterpolationProblem& prob, const ScalarParam& p);

/// Unconstrained Szego-Pick matrix [(1 - w_i conj(w_j)) / (1 - z_i conj(z_j))].
HermitianMatrix classical_pick_matrix(const InterpolationProblem& prob);

/// Infeasible iff some sampled parameter fails psd_check(., tol).
FeasibilityReport scalar_solvable(const InterpolationProblem& prob, const SamplingPlan& plan, double tol = kPsdTol);

// --- matricial problems ---

/// [psi]_eps = sum F_{j,i} (x) k(z_j, z_i)^t (x) I_r, ordered (node, m, r)
/// with r fastest.
ComplexMatrix psi_epsilon(const NodeConfig& cfg, const MatrixParam& mp, Eigen::Index r);
/// [phi_W]_eps = sum F_{i,i} (x) I_m (x) W_i.
ComplexMatrix phi_epsilon(const InterpolationProblem& prob, Eigen::Index m);

struct TraceOperator {
  ComplexMatrix matrix;
  double norm;
};

/// [psi]^{-1/2} [phi_W] [psi]^{1/2} and its norm. NotPSD if [psi] is not
/// positive definite.
TraceOperator trace_condition_operator(const InterpolationProblem& prob, const MatrixParam& mp);

/// Infeasible iff some sampled parameter has operator norm > 1 + tol.
FeasibilityReport matricial_solvable(const InterpolationProblem& prob, const SamplingPlan& plan,
                                     double tol = kPsdTol);

/// Sampled supremum of the trace-operator norm: a lower bound on the
/// quotient norm, nondecreasing as the plan grows.
NormReport quotient_norm_report(const InterpolationProblem& prob, const SamplingPlan& plan);
double quotient_norm(const InterpolationProblem& prob, const SamplingPlan& plan);

}  // namespace nodal
