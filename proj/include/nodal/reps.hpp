#pragma once

// Finite-dimensional compressions of the quotient algebra: the generator
// h, the matrices G^{-1/2} D G^{1/2}, irreducibility and the invariants
// separating inequivalent representations.

#include <vector>

#include "nodal/kernel.hpp"

namespace nodal {

/// h(z) = sum a_k z^k, degree n+1, h(0) = h(lambda) = 0, h(z_i) = z_i.
struct GeneratorPoly {
  std::vector<Complex> coeffs;  // a_0 .. a_{n+1}
  Complex operator()(Complex z) const;
};

/// Vandermonde solve on (0, lambda, z_1..z_n) with complete pivoting.
/// ConditioningError if the system's condition number exceeds 1e12.
GeneratorPoly generator_h(const NodeConfig& cfg);

/// Column i holds the coefficients of f_i = sum_j c_{ji} k_{z_j}, so that
/// f_i(z_j) = delta_ij, i.e. G C = I.
struct DualBasis {
  ComplexMatrix coeffs;
};

DualBasis dual_basis(const NodeConfig& cfg, const ScalarParam& p);

struct RepMatrix {
  ScalarParam param;
  ComplexMatrix matrix;
};

/// G^{-1/2} diag(node_values) G^{1/2}. NotPSD if G is not positive definite.
RepMatrix rho_matrix(const NodeConfig& cfg, const ScalarParam& p, const std::vector<Complex>& node_values);

struct MinimalPolyReport {
  double full_norm;                  // || prod_i (T - z_i I) ||
  std::vector<double> leave_one_out;  // same product with factor i omitted
};

MinimalPolyReport minimal_poly_check(const NodeConfig& cfg, const RepMatrix& rep);

/// Dimension of the unital *-algebra generated by the matrices, found by
/// span closure under products and adjoints (rank cliff 1e-9 relative, at
/// most 10 rounds). dim_cap = 0 means d^2.
std::size_t star_algebra_dim(const std::vector<ComplexMatrix>& generators, std::size_t dim_cap = 0);

/// Generators rho(f_i + I), i = 1..n, with f_i the dual functions.
std::vector<ComplexMatrix> dual_function_reps(const NodeConfig& cfg, const ScalarParam& p);

/// |k(z_j,z_i)|^2 / (k(z_i,z_i) k(z_j,z_j)) for pairs i < j in the order
/// (1,2), (1,3), ..., (1,n), (2,3), ...
std::vector<double> inequivalence_invariant(const NodeConfig& cfg, const ScalarParam& p);

/// Position of pair (i, j), 1-based with i < j, in inequivalence_invariant.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

struct BlockCalculus {
  ComplexMatrix closed_form;
  ComplexMatrix direct;
  double discrepancy;  // max |closed_form - direct|
};

/// T = [[C, 0], [v*(C - omega I), omega]]; phi given by ascending
/// coefficients. Returns phi(T) in closed form
/// [[phi(C), 0], [v*(phi(C) - phi(omega) I), phi(omega)]] and by direct
/// evaluation. DomainError unless the spectral radius of C and |omega| are < 1.
BlockCalculus block_triangular_calculus(const ComplexMatrix& c, Complex omega, const ComplexVector& v,
                                        const std::vector<Complex>& phi);

/// Horner evaluation of an ascending-coefficient polynomial at a matrix.
ComplexMatrix poly_eval(const std::vector<Complex>& coeffs, const ComplexMatrix& a);
Complex poly_eval(const std::vector<Complex>& coeffs, Complex z);

}  // namespace nodal
