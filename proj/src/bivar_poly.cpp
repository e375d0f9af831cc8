#include "nodal/bivar_poly.hpp"

#include <algorithm>
#include <sstream>

namespace nodal {

BivarPoly::BivarPoly(const Rational& c) {
  if (sgn(c) != 0) terms_[{0, 0}] = c;
}

BivarPoly::BivarPoly(long c) : BivarPoly(Rational(c)) {}

BivarPoly BivarPoly::x() { return monomial(1, 0); }
BivarPoly BivarPoly::y() { return monomial(0, 1); }

BivarPoly BivarPoly::monomial(int deg_x, int deg_y, const Rational& c) {
  if (deg_x < 0 || deg_y < 0) throw DomainError("BivarPoly: negative exponent");
  BivarPoly p;
  p.add_term({deg_x, deg_y}, c);
  return p;
}

BivarPoly BivarPoly::from_terms(const std::vector<Term>& terms) {
  BivarPoly p;
  for (const auto& t : terms) {
    if (t.deg_x < 0 || t.deg_y < 0) throw DomainError("BivarPoly: negative exponent");
    p.add_term({t.deg_x, t.deg_y}, t.coeff);
  }
  return p;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool BivarPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BivarPoly::constant_term() const { return coeff(0, 0); }

Rational BivarPoly::coeff(int deg_x, int deg_y) const {
  auto it = terms_.find({deg_x, deg_y});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

std::pair<Monomial, Rational> BivarPoly::leading() const {
  if (terms_.empty()) throw DomainError("BivarPoly: zero polynomial has no leading term");
  const auto& last = *terms_.rbegin();
  return {last.first, last.second};
}

std::vector<BivarPoly::Term> BivarPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m.first, m.second, c});
  return out;
}

namespace {

template <class T>
T power(const T& base, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational BivarPoly::eval(const Rational& xv, const Rational& yv) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) sum += c * power<Rational>(xv, m.first) * power<Rational>(yv, m.second);
  return sum;
}

QSqrt2 BivarPoly::eval(const QSqrt2& xv, const QSqrt2& yv) const {
  QSqrt2 sum;
  for (const auto& [m, c] : terms_) sum += QSqrt2(c) * xv.pow(m.first) * yv.pow(m.second);
  return sum;
}

BivarPoly BivarPoly::swap_xy() const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) out.add_term({m.second, m.first}, c);
  return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  BivarPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term({m1.first + m2.first, m1.second + m2.second}, Rational(c1 * c2));
  terms_ = std::move(out.terms_);
  return *this;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || (m.first == 0 && m.second == 0)) os << mag.get_str();
    bool need_star = !unit;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    var("x", m.first);
    var("y", m.second);
  }
  return os.str();
}

BivarPoly poly_mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }
BivarPoly poly_sub(const BivarPoly& p, const BivarPoly& q) { return p - q; }

DivisionResult poly_divide(const BivarPoly& p, const BivarPoly& q) {
  if (q.is_zero()) throw DomainError("poly_divide: division by the zero polynomial");
  const auto [lm_q, lc_q] = q.leading();
  BivarPoly work = p;
  DivisionResult out;
  while (!work.is_zero()) {
    const auto [lm, lc] = work.leading();
    if (lm.first >= lm_q.first && lm.second >= lm_q.second) {
      const BivarPoly t = BivarPoly::monomial(lm.first - lm_q.first, lm.second - lm_q.second, Rational(lc / lc_q));
      out.quotient += t;
      work -= t * q;
    } else {
      const BivarPoly t = BivarPoly::monomial(lm.first, lm.second, lc);
      out.remainder += t;
      work -= t;
    }
  }
  return out;
}

BivarPoly poly_divide_exact(const BivarPoly& p, const BivarPoly& q) {
  DivisionResult r = poly_divide(p, q);
  if (!r.remainder.is_zero()) {
    throw NotDivisible("poly_divide_exact: non-zero remainder " + r.remainder.to_string(), r.remainder);
  }
  return std::move(r.quotient);
}

BivarPoly reduce_mixed_terms(const BivarPoly& p, const BivarPoly& xy_replacement) {
  for (const auto& t : xy_replacement.terms()) {
    if (t.deg_x > 0 && t.deg_y > 0) throw DomainError("reduce_mixed_terms: replacement contains a mixed monomial");
  }
  BivarPoly work = p;
  BivarPoly done;
  // Each rewrite x^a y^b -> x^(a-1) y^(b-1) * s lowers the mixed degree, so
  // the loop terminates.
  while (!work.is_zero()) {
    BivarPoly next;
    for (const auto& t : work.terms()) {
      if (t.deg_x > 0 && t.deg_y > 0) {
        next += BivarPoly::monomial(t.deg_x - 1, t.deg_y - 1, t.coeff) * xy_replacement;
      } else {
        done += BivarPoly::monomial(t.deg_x, t.deg_y, t.coeff);
      }
    }
    work = std::move(next);
  }
  return done;
}

}  // namespace nodal
