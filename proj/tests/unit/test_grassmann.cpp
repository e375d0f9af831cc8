#include <doctest.h>

#include <random>

#include "nodal/errors.hpp"
#include "nodal/grassmann.hpp"
#include "nodal/pick.hpp"
#include "nodal/sampling.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

NodeConfig random_cfg(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    try {
      const Complex lam = oracle::random_disk_point(rng, 0.9);
      if (std::abs(lam) < 0.1) continue;
      std::vector<Complex> z;
      for (std::size_t i = 0; i < n; ++i) z.push_back(oracle::random_disk_point(rng, 0.9));
      return NodeConfig(lam, z);
    } catch (const DomainError&) {
    }
  }
}

}  // namespace

TEST_SUITE("grassmann") {
  TEST_CASE("two constructions of Psi agree and Psi is positive definite") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
      const NodeConfig cfg = random_cfg(rng, 2 + t % 3);
      const MatrixParam mp = sample_matrix_param(1 + t % 3, t % 2 == 0, derive_seed(41, t));
      const PsiImage psi = psi_image(cfg, mp);
      const ComplexMatrix gen = psi_from_generators(cfg, mp);
      CHECK(max_abs(psi.assembled.matrix() - gen) <= 1e-12 * std::max(1.0, max_abs(gen)));
      const PsiSplit s = psi_split(cfg, mp);
      CHECK(max_abs(s.l * s.l.adjoint() + s.g - gen) <= 1e-12 * std::max(1.0, max_abs(gen)));
      CHECK(psd_check(psi.assembled, 0.0).min_eig > 0.0);
    }
  }

  TEST_CASE("Psi blocks are transposed matrix kernels") {
    const NodeConfig cfg(0.5, {0.2, Complex(0.1, 0.6)});
    const MatrixParam mp = sample_matrix_param(2, false, 3);
    const PsiImage psi = psi_image(cfg, mp);
    CHECK(max_abs(psi.blocks[0][1] - matrix_kernel(cfg, mp, cfg.node(0), cfg.node(1)).transpose()) < 1e-15);
  }

  TEST_CASE("permuted Gamma equals the trace-condition operator") {
    std::mt19937_64 rng(43);
    std::normal_distribution<double> g;
    for (int t = 0; t < 10; ++t) {
      const NodeConfig cfg = random_cfg(rng, 3);
      const Eigen::Index r = 1 + t % 3, m = 1 + (t / 3) % 3;
      std::vector<ComplexMatrix> w;
      for (int i = 0; i < 3; ++i) {
        ComplexMatrix b(r, r);
        for (Eigen::Index a = 0; a < r; ++a)
          for (Eigen::Index c = 0; c < r; ++c) b(a, c) = 0.3 * Complex(g(rng), g(rng));
        w.push_back(b);
      }
      const InterpolationProblem prob(cfg, w);
      const MatrixParam mp = sample_matrix_param(m, false, derive_seed(43, t));
      const ComplexMatrix gamma = gamma_image(cfg, mp, w).matrix;
      const auto p = epsilon_permutation(3, m, r);
      const ComplexMatrix eps = trace_condition_operator(prob, mp).matrix;
      const ComplexMatrix moved = p * gamma * p.transpose();
      CHECK(max_abs(moved - eps) <= 1e-9 * std::max(1.0, max_abs(eps)));
      CHECK(operator_norm(gamma) == doctest::Approx(operator_norm(eps)).epsilon(1e-10));
    }
  }

  TEST_CASE("Gamma is multiplicative on node values") {
    const NodeConfig cfg(0.4, {0.1, -0.3, Complex(0.2, 0.5)});
    const MatrixParam mp = sample_matrix_param(2, false, 8);
    const std::vector<Complex> a{0.2, Complex(0.1, 0.3), -0.5}, b{0.7, -0.1, Complex(0.0, 0.4)};
    std::vector<Complex> ab;
    for (int i = 0; i < 3; ++i) ab.push_back(a[i] * b[i]);
    const ComplexMatrix ga = gamma_image(cfg, mp, a).matrix, gb = gamma_image(cfg, mp, b).matrix;
    CHECK(max_abs(ga * gb - gamma_image(cfg, mp, ab).matrix) < 1e-10);
  }

  TEST_CASE("embedding norm equals quotient norm on a matched plan") {
    std::mt19937_64 rng(47);
    SamplingPlan plan;
    plan.scalar_samples = 128;
    plan.samples_per_level = 8;
    for (int t = 0; t < 5; ++t) {
      const NodeConfig cfg = random_cfg(rng, 3);
      std::vector<Complex> w;
      for (int i = 0; i < 3; ++i) w.push_back(oracle::random_disk_point(rng, 1.0));
      const auto prob = InterpolationProblem::scalar(cfg, w);
      CHECK(std::abs(embedding_norm(prob, plan) - quotient_norm(prob, plan)) < 1e-8);
    }
  }

  TEST_CASE("embedding records are seeded and positive") {
    const NodeConfig cfg(0.5, {0.2, -0.4});
    const auto prob = InterpolationProblem::scalar(cfg, {0.1, 0.3});
    SamplingPlan plan;
    plan.scalar_samples = 16;
    plan.samples_per_level = 4;
    const auto a = embed_levels(prob, plan), b = embed_levels(prob, plan);
    REQUIRE(a.size() == 12);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].param_seed == b[i].param_seed);
      CHECK(a[i].norm == b[i].norm);
      CHECK(a[i].psi_min_eig > 0.0);
    }
  }
}
