#pragma once

// The kernel family restricted to real lambda, real points and real
// (alpha, beta), written once for any ordered field T (double, QSqrt2).

namespace nodal {

template <class T>
struct RealKernel {
  T lambda;
  T scale;  // sqrt(1 - lambda^2) / lambda

  T b(const T& z) const { return z * (z - lambda) / (T(1) - lambda * z); }
  T f(const T& z) const { return scale * (lambda * z) / (T(1) - lambda * z); }
  T k(const T& alpha, const T& beta, const T& z, const T& w) const {
    return (alpha + beta * f(w)) * (alpha + beta * f(z)) + b(z) * b(w) / (T(1) - z * w);
  }
  /// B'(z) numerator: the derivative vanishes iff lambda z^2 - 2z + lambda = 0.
  T critical_residual(const T& z) const { return lambda * z * z - T(2) * z + lambda; }
};

}  // namespace nodal
