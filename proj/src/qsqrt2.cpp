#include "nodal/qsqrt2.hpp"

#include <cmath>

#include "nodal/errors.hpp"

namespace nodal {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
    throw InputError("parse_rational: malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QSqrt2::QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QSqrt2::QSqrt2(long a) : a_(a), b_(0) {}

Rational QSqrt2::norm() const { return Rational(a_ * a_ - 2 * b_ * b_); }

int QSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const int cmp_sq = sgn(Rational(a_ * a_ - 2 * b_ * b_));
  return cmp_sq > 0 ? sa : (cmp_sq < 0 ? sb : 0);
}

double QSqrt2::to_double() const {
  // Cancellation-free when a and b have opposite signs: use the conjugate.
  if (sgn(a_) * sgn(b_) < 0) {
    const double conj = a_.get_d() - b_.get_d() * std::sqrt(2.0);
    return norm().get_d() / conj;
  }
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

QSqrt2 QSqrt2::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw DomainError("QSqrt2: division by zero");
  return QSqrt2(Rational(a_ / n), Rational(-b_ / n));
}

QSqrt2 QSqrt2::pow(unsigned e) const {
  QSqrt2 result(1);
  QSqrt2 base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

std::string QSqrt2::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? " + " : " - ");
  else if (sgn(b_) < 0) s = "-";
  Rational mag = abs(b_);
  if (mag != 1) s += mag.get_str() + "*";
  return s + "sqrt(2)";
}

QSqrt2 qsqrt2_arith(FieldOp op, const QSqrt2& u, const QSqrt2& v) {
  switch (op) {
    case FieldOp::add: return u + v;
    case FieldOp::sub: return u - v;
    case FieldOp::mul: return u * v;
    case FieldOp::div: return u / v;
  }
  throw DomainError("qsqrt2_arith: unknown operation");
}

}  // namespace nodal
