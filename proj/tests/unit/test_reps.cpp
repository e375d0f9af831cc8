#include <doctest.h>

#include <random>

#include "nodal/errors.hpp"
#include "nodal/goodpoints.hpp"
#include "nodal/reps.hpp"
#include "nodal/sampling.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

NodeConfig paper_cfg() {
  const auto z = paper_points_double();
  return NodeConfig(paper_lambda(), {z[0], z[1], z[2], z[3]});
}

}  // namespace

TEST_SUITE("reps") {
  TEST_CASE("generator interpolates the identity at the nodes and respects the constraint") {
    const NodeConfig cfg(Complex(0.3, 0.2), {0.5, Complex(-0.2, 0.4), Complex(0.1, -0.6)});
    const GeneratorPoly h = generator_h(cfg);
    CHECK(h.coeffs.size() == 5);
    CHECK(std::abs(h(0.0)) < 1e-13);
    CHECK(std::abs(h(cfg.lambda())) < 1e-13);
    for (Complex z : cfg.nodes()) CHECK(std::abs(h(z) - z) < 1e-13);
  }

  TEST_CASE("dual basis is biorthogonal to the kernel functions") {
    const NodeConfig cfg = paper_cfg();
    const ScalarParam p = ScalarParam::from_angle(0.8);
    const DualBasis d = dual_basis(cfg, p);
    CHECK(max_abs(d.coeffs * gram_matrix(cfg, p).matrix() - ComplexMatrix::Identity(4, 4)) < 1e-10);
  }

  TEST_CASE("compression of z has the nodes as eigenvalues and minimal polynomial of full degree") {
    const NodeConfig cfg = paper_cfg();
    const RepMatrix r = rho_matrix(cfg, ScalarParam::from_angle(1.1), cfg.nodes());
    const MinimalPolyReport mp = minimal_poly_check(cfg, r);
    CHECK(mp.full_norm < 1e-10);
    for (double v : mp.leave_one_out) CHECK(v > 1e-4);
    // rho is a Gram conjugation of a diagonal: unitarily similar to a normal
    // matrix only when the Gram matrix is diagonal, which it is not.
    CHECK(max_abs(r.matrix * r.matrix.adjoint() - r.matrix.adjoint() * r.matrix) > 1e-3);
  }

  TEST_CASE("dual function reps are rank-one idempotents summing to I") {
    const NodeConfig cfg = paper_cfg();
    const auto reps = dual_function_reps(cfg, ScalarParam::from_angle(0.3));
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(max_abs(reps[i] * reps[i] - reps[i]) < 1e-10);
      sum += reps[i];
    }
    CHECK(max_abs(sum - ComplexMatrix::Identity(4, 4)) < 1e-10);
  }

  TEST_CASE("generated *-algebra dimension") {
    const NodeConfig cfg = paper_cfg();
    CHECK(star_algebra_dim(dual_function_reps(cfg, ScalarParam::from_angle(0.9))) == 16);
    // Diagonal generators span only the diagonal algebra.
    std::vector<ComplexMatrix> diag;
    for (int i = 0; i < 3; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(3, 3);
      e(i, i) = 1.0;
      diag.push_back(e);
    }
    CHECK(star_algebra_dim(diag) == 3);
    // A single normal generator: commutative algebra (dimension <= 3 with identity).
    ComplexMatrix n = ComplexMatrix::Zero(3, 3);
    n(0, 0) = 1.0;
    n(1, 1) = Complex(0, 1);
    n(2, 2) = -1.0;
    CHECK(star_algebra_dim({n}) == 3);
    // Shift generates all of M_3.
    ComplexMatrix s = ComplexMatrix::Zero(3, 3);
    s(1, 0) = s(2, 1) = 1.0;
    CHECK(star_algebra_dim({s}) == 9);
  }

  TEST_CASE("invariant is unitary-invariant and indexed in lexicographic pairs") {
    CHECK(pair_index(4, 1, 2) == 0);
    CHECK(pair_index(4, 1, 4) == 2);
    CHECK(pair_index(4, 2, 3) == 3);
    CHECK(pair_index(4, 3, 4) == 5);
    CHECK_THROWS_AS(pair_index(4, 2, 2), InputError);
    const NodeConfig cfg = paper_cfg();
    const auto inv = inequivalence_invariant(cfg, ScalarParam::from_angle(0.5));
    REQUIRE(inv.size() == 6);
    // Cauchy-Schwarz for a positive kernel.
    for (double v : inv) CHECK((v >= 0.0 && v < 1.0));
  }

  TEST_CASE("block functional calculus against direct evaluation") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    for (int t = 0; t < 100; ++t) {
      const Eigen::Index d = 1 + t % 4;
      ComplexMatrix c(d, d);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) c(i, j) = Complex(g(rng), g(rng));
      c *= 0.9 / std::max(1.0, operator_norm(c));
      const Complex omega = oracle::random_disk_point(rng);
      ComplexVector v(d);
      for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
      std::vector<Complex> phi(1 + t % 7);
      for (auto& a : phi) a = Complex(g(rng), g(rng));
      const BlockCalculus bc = block_triangular_calculus(c, omega, v, phi);
      CHECK(bc.discrepancy < 1e-9);
    }
    CHECK_THROWS_AS(block_triangular_calculus(ComplexMatrix::Identity(2, 2), 0.1, ComplexVector::Ones(2), {1.0}),
                    DomainError);
    CHECK_THROWS_AS(block_triangular_calculus(ComplexMatrix::Zero(2, 2), 1.0, ComplexVector::Ones(2), {1.0}),
                    DomainError);
  }
}
