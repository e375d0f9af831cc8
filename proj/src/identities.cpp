#include "nodal/identities.hpp"

#include <algorithm>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

BivarPoly poly_x(std::initializer_list<long> coeffs_desc) {
  // Coefficients from highest degree down.
  BivarPoly p;
  int deg = static_cast<int>(coeffs_desc.size()) - 1;
  for (long c : coeffs_desc) p += BivarPoly::monomial(deg--, 0, c);
  return p;
}

BivarPoly in_y(const BivarPoly& p) { return p.swap_xy(); }

BivarPoly from_pairs(std::initializer_list<std::pair<Monomial, long>> terms) {
  BivarPoly p;
  for (const auto& [m, c] : terms) p += BivarPoly::monomial(m.first, m.second, c);
  return p;
}

// D = N_{ab}(x)^2 N_{aa}(y) N_{bb}(y) - (x <-> y): the squared-modulus
// invariant of pair (a,b) at x equals the one at y iff D = 0.
BivarPoly invariant_difference(NodePair cross, NodePair left, NodePair right) {
  const BivarPoly& nab = kernel_closed_form(cross).numerator;
  const BivarPoly& naa = kernel_closed_form(left).numerator;
  const BivarPoly& nbb = kernel_closed_form(right).numerator;
  const BivarPoly lhs = nab.pow(2) * in_y(naa) * in_y(nbb);
  return lhs - lhs.swap_xy();
}

IdentityCheck divisibility_check(const std::string& id, const std::string& description, const BivarPoly& d,
                                 const BivarPoly& divisor) {
  IdentityCheck c;
  c.id = id;
  c.description = description;
  const DivisionResult r = poly_divide(d, divisor);
  if (!r.remainder.is_zero()) {
    c.witness = r.remainder;
    return c;
  }
  c.witness = r.quotient;
  if (r.quotient.is_constant() && !r.quotient.is_zero()) {
    c.pass = true;
    c.quotient_constant = r.quotient.constant_term();
  }
  return c;
}

}  // namespace

const std::vector<KernelClosedForm>& kernel_closed_forms() {
  static const std::vector<KernelClosedForm> forms = {
      {{1, 1}, poly_x({8, 4, 5}), 1},
      {{2, 2}, poly_x({9, 42, 65}), 63},
      {{3, 3}, poly_x({8, 28, 29}), 28},
      {{1, 2}, poly_x({3, 14, 5}), 6},
      {{2, 3}, poly_x({6, 25, 31}), 30},
  };
  return forms;
}

const KernelClosedForm& kernel_closed_form(NodePair pair) {
  const auto& forms = kernel_closed_forms();
  auto it = std::find_if(forms.begin(), forms.end(), [&](const KernelClosedForm& f) { return f.pair == pair; });
  if (it == forms.end()) {
    throw DomainError("rational_kernel_in_x: no closed form for pair (" + std::to_string(pair.i) + "," +
                      std::to_string(pair.j) + ")");
  }
  return *it;
}

Rational rational_kernel_in_x(NodePair pair, const Rational& x) {
  const KernelClosedForm& f = kernel_closed_form(pair);
  return Rational(f.numerator.eval(x, Rational(0)) / (f.scale * (1 + x * x)));
}

bool IdentityReport::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

BivarPoly difference_d1() { return invariant_difference({1, 2}, {1, 1}, {2, 2}); }
BivarPoly difference_d2() { return invariant_difference({2, 3}, {2, 2}, {3, 3}); }

BivarPoly quartic_q1() {
  return from_pairs({{{2, 2}, 12}, {{2, 1}, 31}, {{1, 2}, 31}, {{2, 0}, -5}, {{1, 1}, 28}, {{0, 2}, -5},
                     {{1, 0}, -65}, {{0, 1}, -65}, {{0, 0}, -50}});
}

BivarPoly quartic_q2() {
  return from_pairs({{{2, 2}, 12}, {{2, 1}, 25}, {{1, 2}, 25}, {{2, 0}, 37}, {{0, 2}, 37},
                     {{1, 0}, 25}, {{0, 1}, 25}, {{0, 0}, 62}});
}

BivarPoly q2_sum_of_squares() {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const Rational shift(25, 12);
  const Rational rest(113, 144);
  const BivarPoly sq_y = (y + shift).pow(2) + rest;
  const BivarPoly sq_x = (x + shift).pow(2) + rest;
  const BivarPoly lin_x = x * Rational(5, 2) + 5;
  const BivarPoly lin_y = y * Rational(5, 2) + 5;
  return BivarPoly(6) * x.pow(2) * sq_y + BivarPoly(6) * y.pow(2) * sq_x + lin_x.pow(2) + lin_y.pow(2) + 12;
}

IdentityReport verify_condition4_identities() {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  IdentityReport report;

  report.checks.push_back(divisibility_check(
      "a", "D1 (pairs (1,2),(1,1),(2,2)) = c * (x-y)(xy+x+y+3) Q1", difference_d1(),
      (x - y) * (x * y + x + y + 3) * quartic_q1()));
  report.checks.push_back(divisibility_check(
      "b", "D2 (pairs (2,3),(2,2),(3,3)) = c * (x-y)(xy+x+y-1) Q2", difference_d2(),
      (x - y) * (x * y + x + y - 1) * quartic_q2()));

  IdentityCheck sos;
  sos.id = "c";
  sos.description = "Q2 = 6x^2((y+25/12)^2+113/144) + 6y^2((x+25/12)^2+113/144) + (5x/2+5)^2 + (5y/2+5)^2 + 12";
  sos.witness = quartic_q2() - q2_sum_of_squares();
  sos.pass = sos.witness.is_zero();
  report.checks.push_back(sos);

  IdentityCheck red;
  red.id = "d";
  red.description = "Q1 modulo xy = 1-x-y equals -24((x+1)^2+(y+1)^2)";
  const BivarPoly reduced = reduce_mixed_terms(quartic_q1(), BivarPoly(1) - x - y);
  red.witness = reduced - BivarPoly(-24) * ((x + 1).pow(2) + (y + 1).pow(2));
  red.pass = red.witness.is_zero();
  report.checks.push_back(red);
  return report;
}

}  // namespace nodal
