#pragma once

// Deterministic sampling of the parameter family and a small ordered
// parallel map for the sweeps.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "nodal/kernel.hpp"

namespace nodal {

/// Mixes a base seed with stream indices (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// theta_k = pi k / samples, k = 0..samples-1; phases phi_p = pi p / phases.
/// Sample (k, p) is at index p * samples + k. Grids with samples = 2^a are
/// nested in grids with samples = 2^b, b >= a.
double grid_theta(std::size_t k, std::size_t samples);
double grid_phase(std::size_t p, std::size_t phases);
std::vector<ScalarParam> scalar_grid(std::size_t samples, std::size_t phases = 1);

/// First m rows of a Haar unitary of size 2m (QR of a Gaussian matrix with
/// the phases of diag(R) removed), split as [alpha beta].
MatrixParam sample_matrix_param(Eigen::Index m, bool real_only, std::uint64_t seed);

/// Number of worker threads used by the sweeps.
unsigned worker_count();

/// out[i] = fn(i) for i in [0, count); evaluation order is unspecified,
/// the result order is not.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  const unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace nodal
