#pragma once

// Exact polynomial certificates for the lambda = 1/sqrt(2) example: closed
// forms of the kernel in x = beta/alpha and the identities used to rule out
// unitary equivalence of the compression representations.

#include <optional>
#include <string>
#include <vector>

#include "nodal/bivar_poly.hpp"
#include "nodal/qsqrt2.hpp"

namespace nodal {

/// Node-pair index (1-based), e.g. {1, 2} for k(z1, z2).
struct NodePair {
  int i;
  int j;
  friend bool operator==(const NodePair&, const NodePair&) = default;
};

/// k(z_i, z_j) at (alpha, beta) = (1, x)/sqrt(1 + x^2), written as
/// numerator(x) / (scale * (1 + x^2)). Numerators are polynomials in x only.
struct KernelClosedForm {
  NodePair pair;
  BivarPoly numerator;
  Rational scale;
};

/// Pairs with a closed form: (1,1), (2,2), (3,3), (1,2), (2,3).
const std::vector<KernelClosedForm>& kernel_closed_forms();
const KernelClosedForm& kernel_closed_form(NodePair pair);

/// Exact value of the closed form. Unsupported pair -> DomainError.
Rational rational_kernel_in_x(NodePair pair, const Rational& x);

struct IdentityCheck {
  std::string id;  // "a".."d"
  bool pass = false;
  std::string description;
  // Remainder or mismatch on failure; the certifying polynomial on success
  // (the quotient for a/b, the difference (zero) for c/d).
  BivarPoly witness;
  std::optional<Rational> quotient_constant;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// The polynomials entering the checks, exposed for tests.
BivarPoly difference_d1();
BivarPoly difference_d2();
BivarPoly quartic_q1();
BivarPoly quartic_q2();
BivarPoly q2_sum_of_squares();

IdentityReport verify_condition4_identities();

}  // namespace nodal
