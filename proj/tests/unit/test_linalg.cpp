#include <doctest.h>

#include <random>

#include "nodal/errors.hpp"
#include "nodal/linalg.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

oracle::Mat to_rows(const ComplexMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<oracle::cd>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("eigenvalues ascending, eigenvectors unitary") {
    std::mt19937_64 rng(1);
    const ComplexMatrix a = random_matrix(rng, 6, 6);
    const HermitianMatrix h(a + a.adjoint());
    const EigResult e = herm_eig(h);
    for (Eigen::Index i = 1; i < 6; ++i) CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
    const ComplexMatrix u = e.eigenvectors;
    CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(6, 6)) < 1e-12);
    CHECK(max_abs(u * e.eigenvalues.cast<Complex>().asDiagonal() * u.adjoint() - h.matrix()) < 1e-12);
  }

  TEST_CASE("checked constructor rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(HermitianMatrix::checked(m), InputError);
  }

  TEST_CASE("psd_check is relative to trace scale") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1e6;
    m(1, 1) = -1e-4;  // -1e-10 relative
    CHECK(psd_check(HermitianMatrix(m)).psd);
    m(1, 1) = -1.0;
    CHECK_FALSE(psd_check(HermitianMatrix(m)).psd);
  }

  TEST_CASE("psd_sqrt squares back; indefinite input raises NotPSD") {
    std::mt19937_64 rng(2);
    const ComplexMatrix a = random_matrix(rng, 5, 5);
    const HermitianMatrix h(a * a.adjoint());
    const HermitianMatrix r = psd_sqrt(h);
    CHECK(max_abs(r.matrix() * r.matrix() - h.matrix()) < 1e-10 * max_abs(h.matrix()));
    const auto [root, inv] = pd_sqrt_pair(h);
    CHECK(max_abs(root * inv - ComplexMatrix::Identity(5, 5)) < 1e-8);
    CHECK_THROWS_AS(psd_sqrt(HermitianMatrix(ComplexMatrix(-ComplexMatrix::Identity(2, 2)))), NotPSD);
  }

  TEST_CASE("operator norm and condition number") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = Complex(0, -2);
    d(2, 2) = 0.5;
    CHECK(operator_norm(d) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(min_singular_value(d) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(condition_number(d) == doctest::Approx(6.0).epsilon(1e-13));
  }

  TEST_CASE("rank-one determinant update matches elimination") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::Index n = 2 + trial % 5;
      const ComplexMatrix p = random_matrix(rng, n, n) + 3.0 * ComplexMatrix::Identity(n, n);
      const ComplexVector u = random_matrix(rng, n, 1);
      const ComplexVector v = random_matrix(rng, n, 1);
      const oracle::cd want = oracle::det(to_rows(p + u * v.adjoint()));
      const Complex got = det_rank_one_update(p, u, v);
      CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
  }

  TEST_CASE("kron block layout") {
    ComplexMatrix a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 1, 1, 0;
    const ComplexMatrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == Complex(1));
    CHECK(k(2, 3) == Complex(4));
    CHECK(k(3, 2) == Complex(4));
    CHECK(k(1, 2) == Complex(2));
    CHECK(k(1, 3) == Complex(0));
  }

  TEST_CASE("non-finite input is rejected") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(require_finite(m, "test"), InputError);
  }
}
