#pragma once

// Finite-level images of the embedding: Psi as a block kernel matrix,
// Gamma(f + I) = Psi^{-1/2} D_f Psi^{1/2} and its amplifications.

#include <cstdint>
#include <vector>

#include "nodal/kernel.hpp"
#include "nodal/pick.hpp"
#include "nodal/sampling.hpp"

namespace nodal {

struct PsiImage {
  Eigen::Index m = 0;
  std::vector<std::vector<ComplexMatrix>> blocks;  // blocks[i][j] = k(z_i, z_j)^t
  HermitianMatrix assembled;                        // nm x nm, node-major
};

/// From matrix_kernel blocks.
PsiImage psi_image(const NodeConfig& cfg, const MatrixParam& mp);

/// The same matrix from l_ij = (a^t + f(z_i) b^t)(conj(a) + conj(f(z_j)) conj(b))
/// + B(z_i) conj(B(z_j)) / (1 - z_i conj(z_j)) I, built without matrix_kernel.
ComplexMatrix psi_from_generators(const NodeConfig& cfg, const MatrixParam& mp);

/// Psi = L L* + G with L (nm x m) stacked a^t + f(z_i) b^t and
/// G = [B(z_i) conj(B(z_j)) / (1 - z_i conj(z_j))] (x) I_m.
struct PsiSplit {
  ComplexMatrix l;
  ComplexMatrix g;
};
PsiSplit psi_split(const NodeConfig& cfg, const MatrixParam& mp);

struct GammaImage {
  Eigen::Index m = 0;
  Eigen::Index r = 0;
  ComplexMatrix matrix;  // rnm x rnm, ordered (target row, node, level)
};

/// Gamma^{(r)}([f_ab + I]) for node values W_i (r x r): block (a, b) is
/// Psi^{-1/2} (diag_i W_i[a,b] (x) I_m) Psi^{1/2}. NotPSD if Psi is not
/// positive definite.
GammaImage gamma_image(const NodeConfig& cfg, const MatrixParam& mp, const std::vector<ComplexMatrix>& node_values);
GammaImage gamma_image(const NodeConfig& cfg, const MatrixParam& mp, const std::vector<Complex>& node_values);

/// Permutation taking (target row, node, level) order to the
/// (node, level, target row) order used by the trace-condition operator:
/// P * x reorders a vector, P A P^t reorders an operator.
Eigen::PermutationMatrix<Eigen::Dynamic> epsilon_permutation(Eigen::Index n, Eigen::Index m, Eigen::Index r);

/// Sampled sup of ||Gamma^{(r)}(F)|| over the same family as quotient_norm.
NormReport embedding_norm_report(const InterpolationProblem& prob, const SamplingPlan& plan);
double embedding_norm(const InterpolationProblem& prob, const SamplingPlan& plan);

struct EmbedRecord {
  Eigen::Index level;
  std::size_t sample;
  std::uint64_t param_seed;
  double norm;
  double psi_min_eig;
};

/// One record per Haar sample of every level in the plan.
std::vector<EmbedRecord> embed_levels(const InterpolationProblem& prob, const SamplingPlan& plan);

}  // namespace nodal
