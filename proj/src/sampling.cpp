#include "nodal/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "nodal/errors.hpp"

namespace nodal {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ b);
}

double grid_theta(std::size_t k, std::size_t samples) {
  return std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
}

double grid_phase(std::size_t p, std::size_t phases) {
  return std::numbers::pi * static_cast<double>(p) / static_cast<double>(phases);
}

std::vector<ScalarParam> scalar_grid(std::size_t samples, std::size_t phases) {
  if (samples < 1 || phases < 1) throw InputError("scalar_grid: need at least one sample and one phase");
  std::vector<ScalarParam> grid;
  grid.reserve(samples * phases);
  for (std::size_t p = 0; p < phases; ++p)
    for (std::size_t k = 0; k < samples; ++k)
      grid.push_back(ScalarParam::from_angle(grid_theta(k, samples), grid_phase(p, phases)));
  return grid;
}

MatrixParam sample_matrix_param(Eigen::Index m, bool real_only, std::uint64_t seed) {
  if (m < 1) throw InputError("sample_matrix_param: m must be at least 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Eigen::Index d = 2 * m;
  ComplexMatrix z(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      const double re = gauss(rng);
      z(i, j) = real_only ? Complex(re, 0.0) : Complex(re, gauss(rng)) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  if (real_only) q = q.real().cast<Complex>();
  return MatrixParam(q.topLeftCorner(m, m), q.topRightCorner(m, m));
}

unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 16u);
}

}  // namespace nodal
