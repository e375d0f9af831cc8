#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/qsqrt2.hpp"

namespace nodal {

/// Exponent pair (deg_x, deg_y) of a monomial x^i y^j.
using Monomial = std::pair<int, int>;

/// Polynomial in x, y over Q in canonical form: zero coefficients are
/// never stored. Monomials are ordered lexicographically with x > y.
class BivarPoly {
 public:
  struct Term {
    int deg_x;
    int deg_y;
    Rational coeff;
  };

  BivarPoly() = default;
  BivarPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BivarPoly(long c);             // NOLINT(google-explicit-constructor)

  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly monomial(int deg_x, int deg_y, const Rational& c = 1);
  static BivarPoly from_terms(const std::vector<Term>& terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant coefficient (zero if absent).
  Rational constant_term() const;
  Rational coeff(int deg_x, int deg_y) const;
  int total_degree() const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// Leading monomial under lex order x > y. Requires non-zero.
  std::pair<Monomial, Rational> leading() const;
  /// Terms in ascending lex order.
  std::vector<Term> terms() const;

  Rational eval(const Rational& xv, const Rational& yv) const;
  QSqrt2 eval(const QSqrt2& xv, const QSqrt2& yv) const;
  BivarPoly swap_xy() const;
  BivarPoly pow(unsigned e) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);

  friend BivarPoly operator+(BivarPoly l, const BivarPoly& r) { return l += r; }
  friend BivarPoly operator-(BivarPoly l, const BivarPoly& r) { return l -= r; }
  friend BivarPoly operator*(BivarPoly l, const BivarPoly& r) { return l *= r; }
  friend BivarPoly operator-(const BivarPoly& p) { return BivarPoly() - p; }
  friend bool operator==(const BivarPoly& l, const BivarPoly& r) { return l.terms_ == r.terms_; }
  friend bool operator!=(const BivarPoly& l, const BivarPoly& r) { return !(l == r); }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q);
BivarPoly poly_sub(const BivarPoly& p, const BivarPoly& q);

/// Raised when a division leaves a non-zero remainder.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, BivarPoly remainder) : Error(what), remainder_(std::move(remainder)) {}
  const BivarPoly& remainder() const noexcept { return remainder_; }

 private:
  BivarPoly remainder_;
};

struct DivisionResult {
  BivarPoly quotient;
  BivarPoly remainder;
};

/// Multivariate division by a single polynomial under lex order x > y.
/// Terms of the dividend whose monomial is not a multiple of LM(q) go to
/// the remainder. Throws DomainError for q == 0.
DivisionResult poly_divide(const BivarPoly& p, const BivarPoly& q);

/// Returns r with p == q*r exactly; NotDivisible carries the remainder.
BivarPoly poly_divide_exact(const BivarPoly& p, const BivarPoly& q);

/// Rewrites p modulo the relation xy = s, where s has no mixed monomial
/// (every term is a pure power of x or of y). The result has no mixed
/// monomials. Throws DomainError when s contains a mixed term.
BivarPoly reduce_mixed_terms(const BivarPoly& p, const BivarPoly& xy_replacement);

}  // namespace nodal
