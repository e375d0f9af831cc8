#pragma once

// Exact arithmetic over Q and the quadratic field Q(sqrt 2).

#include <gmpxx.h>

#include <string>

namespace nodal {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// Parses "p" or "p/q"; throws InputError on malformed text.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// a + b*sqrt(2) with rational a, b.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a, Rational b = 0);  // NOLINT(google-explicit-constructor)
  QSqrt2(long a);                        // NOLINT(google-explicit-constructor)

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt2_part() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  /// a - b*sqrt(2).
  QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
  /// Field norm a^2 - 2 b^2 (rational, nonzero iff the element is nonzero).
  Rational norm() const;
  /// Sign of the real number a + b sqrt(2), decided exactly.
  int sign() const;
  double to_double() const;

  QSqrt2 inverse() const;
  QSqrt2 pow(unsigned e) const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
  friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
  friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
  friend QSqrt2 operator/(QSqrt2 l, const QSqrt2& r) { return l /= r; }
  friend QSqrt2 operator-(const QSqrt2& x) { return QSqrt2(-x.a_, -x.b_); }
  friend bool operator==(const QSqrt2& l, const QSqrt2& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator!=(const QSqrt2& l, const QSqrt2& r) { return !(l == r); }

  /// "a + b*sqrt(2)" with a and b as reduced fractions.
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

enum class FieldOp { add, sub, mul, div };

/// Applies one field operation; division by zero throws DomainError.
QSqrt2 qsqrt2_arith(FieldOp op, const QSqrt2& u, const QSqrt2& v);

}  // namespace nodal
