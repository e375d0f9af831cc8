#include <algorithm>
#include <cmath>
#include <sstream>

#include "nodal/errors.hpp"
#include "nodal/goodpoints.hpp"
#include "nodal/kernel_exact.hpp"

namespace nodal {

QSqrt2 bareiss_det(QMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("bareiss_det: matrix must be square");
  if (n == 0) return QSqrt2(1);
  int sign = 1;
  QSqrt2 prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return QSqrt2();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = QSqrt2();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

QMatrix delete_row_col(const QMatrix& m, int ell) {
  const auto n = static_cast<int>(m.size());
  if (ell < 1 || ell > n) throw InputError("delete_row_col: index out of range");
  QMatrix out;
  for (int i = 0; i < n; ++i) {
    if (i == ell - 1) continue;
    std::vector<QSqrt2> row;
    for (int j = 0; j < n; ++j)
      if (j != ell - 1) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }
QSqrt2 r2(long num, long den) { return QSqrt2(0, q(num, den)); }  // (num/den) sqrt(2)

const RealKernel<QSqrt2>& exact_kernel() {
  static const RealKernel<QSqrt2> k{r2(1, 2), QSqrt2(1)};
  return k;
}

// The printed matrices, entry by entry.
QMatrix printed_c_ell(int ell) {
  const QSqrt2 a(q(17, 7), q(-8, 7));    // (17 - 8 sqrt2)/7
  const QSqrt2 b(q(13, 3), q(-7, 3));    // (13 - 7 sqrt2)/3
  const QSqrt2 c_over_r2(5, q(-5, 2));   // 5(sqrt2 - 1)/sqrt2
  const QSqrt2 c_half(q(-5, 2), q(5, 2));  // 5(sqrt2 - 1)/2
  const QSqrt2 d(q(5, 21), q(10, 21));   // 5(2 sqrt2 + 1)/21
  auto r = [](long n, long m) { return QSqrt2(make_rational(n, m)); };
  switch (ell) {
    case 1:
      return {{r(5, 1), a, r(4, 5), r(19, 15)},
              {r(5, 6), b, r(31, 30), r(41, 45)},
              {r(4, 5), c_over_r2, r(29, 28), r(11, 12)},
              {r(19, 15), d, r(11, 12), r(7, 6)}};
    case 2:
      return {{a, r(5, 6), r(4, 5), r(19, 15)},
              {b, r(65, 63), r(31, 30), r(41, 45)},
              {c_over_r2, r(31, 30), r(29, 28), r(11, 12)},
              {d, r(41, 45), r(11, 12), r(7, 6)}};
    case 3:
      return {{r(5, 1), r(5, 6), r(4, 5), a},
              {r(5, 6), r(65, 63), r(31, 30), b},
              {r(4, 5), r(31, 30), r(29, 28), c_half},
              {r(19, 15), r(41, 45), r(11, 12), d}};
    default:
      return {{r(5, 1), r(5, 6), a, r(19, 15)},
              {r(5, 6), r(65, 63), b, r(41, 45)},
              {r(4, 5), r(31, 30), c_half, r(11, 12)},
              {r(19, 15), r(41, 45), d, r(7, 6)}};
  }
}

struct PrintedTable2 {
  NodePair pair;
  std::array<Rational, 4> coeffs;  // alpha^2, alpha beta, beta^2, constant
};

std::vector<PrintedTable2> printed_table2() {
  return {
      {{1, 1}, {q(1), q(4), q(4), q(4)}},
      {{1, 2}, {q(1, 3), q(7, 3), q(0), q(1, 2)}},
      {{1, 3}, {q(0), q(5, 2), q(0), q(4, 5)}},
      {{1, 4}, {q(5, 3), q(5, 3), q(0), q(-2, 5)}},
      {{2, 2}, {q(1), q(2, 3), q(1, 9), q(2, 63)}},
      {{2, 3}, {q(5, 6), q(5, 6), q(0), q(1, 5)}},
      {{2, 4}, {q(10, 9), q(0), q(0), q(-1, 5)}},
      {{3, 3}, {q(1), q(1), q(1, 4), q(1, 28)}},
      {{3, 4}, {q(7, 6), q(1, 6), q(0), q(-1, 4)}},
      {{4, 4}, {q(1), q(-2, 3), q(1, 9), q(8, 9)}},
  };
}

// (A + D, B, C + D): the quadratic form agreeing with A a^2 + B ab + C b^2 + D
// on the circle a^2 + b^2 = 1.
std::array<QSqrt2, 3> homogenize(const std::array<QSqrt2, 4>& c) { return {c[0] + c[3], c[1], c[2] + c[3]}; }

std::string pretty(const QSqrt2& v) { return v.to_string(); }

}  // namespace

PaperPoints paper_points() { return {r2(1, 2), {r2(2, 3), r2(1, 4), r2(1, 3), r2(-1, 2)}, QSqrt2(-1, 1)}; }

double paper_lambda() { return 1.0 / std::sqrt(2.0); }

std::array<double, 4> paper_points_double() {
  const double s = std::sqrt(2.0);
  return {4.0 / (3.0 * s), 1.0 / (2.0 * s), s / 3.0, -1.0 / s};
}

bool PaperCertificate::tables_pass() const {
  const bool t1 = !table1.empty() && std::all_of(table1.begin(), table1.end(), [](const Table1Row& r) {
    return r.exact_match && r.b_float_error <= 1e-14 && r.f_float_error <= 1e-14;
  });
  const bool t2 = !table2.empty() && std::all_of(table2.begin(), table2.end(), [](const Table2Row& r) {
    return r.match && r.closed_form_match.value_or(true);
  });
  return t1 && t2;
}

bool PaperCertificate::c_ell_nonsingular() const {
  return c_ell.size() == 4 && std::all_of(c_ell.begin(), c_ell.end(), [](const CEllCertificate& c) {
    return !c.det.is_zero() && !c.minor_det.is_zero();
  });
}

bool PaperCertificate::all_exact_pass() const {
  return tables_pass() && identities.all_pass() && omega_root_exact && other_root_outside && omega_critical_exact &&
         membership_exact && c_ell_nonsingular();
}

PaperCertificate paper_certificate() {
  const PaperPoints pp = paper_points();
  const RealKernel<QSqrt2>& k = exact_kernel();
  const double lam = paper_lambda();
  const auto zd = paper_points_double();
  PaperCertificate cert;

  const std::array<Rational, 4> b_printed{q(2, 3), q(-1, 6), q(-1, 6), q(2, 3)};
  const std::array<Rational, 4> f_printed{q(2), q(1, 3), q(1, 2), q(-1, 3)};
  for (int i = 0; i < 4; ++i) {
    Table1Row row{i + 1, k.b(pp.z[i]), k.f(pp.z[i]), b_printed[i], f_printed[i], 0.0, 0.0, false};
    row.exact_match = row.b == QSqrt2(b_printed[i]) && row.f == QSqrt2(f_printed[i]);
    row.b_float_error = std::abs(b_lambda_eval(Complex(lam), Complex(zd[i])) - b_printed[i].get_d());
    row.f_float_error = std::abs(f_lambda(Complex(lam), Complex(zd[i])) - f_printed[i].get_d());
    cert.table1.push_back(row);
  }

  for (const auto& printed : printed_table2()) {
    const QSqrt2& zi = pp.z[printed.pair.i - 1];
    const QSqrt2& zj = pp.z[printed.pair.j - 1];
    const QSqrt2 fi = k.f(zi);
    const QSqrt2 fj = k.f(zj);
    Table2Row row{printed.pair, {QSqrt2(1), fi + fj, fi * fj, k.b(zi) * k.b(zj) / (QSqrt2(1) - zi * zj)},
                  printed.coeffs, false, std::nullopt};
    std::array<QSqrt2, 4> pr{QSqrt2(printed.coeffs[0]), QSqrt2(printed.coeffs[1]), QSqrt2(printed.coeffs[2]),
                             QSqrt2(printed.coeffs[3])};
    row.match = homogenize(row.computed) == homogenize(pr);
    const auto& forms = kernel_closed_forms();
    auto it = std::find_if(forms.begin(), forms.end(), [&](const KernelClosedForm& f) { return f.pair == printed.pair; });
    if (it != forms.end()) {
      const auto h = homogenize(row.computed);
      const Rational& s = it->scale;
      row.closed_form_match = h[2] == QSqrt2(Rational(it->numerator.coeff(2, 0) / s)) &&
                              h[1] == QSqrt2(Rational(it->numerator.coeff(1, 0) / s)) &&
                              h[0] == QSqrt2(Rational(it->numerator.coeff(0, 0) / s));
    }
    cert.table2.push_back(row);
  }

  cert.identities = verify_condition4_identities();

  // omega: (z1 z2 l) w^2 + (m1 m2 - z1 z2) w - m1 m2 l = 0.
  const QSqrt2 one(1);
  const QSqrt2 m1 = (pp.lambda - pp.z[0]) / (one - pp.z[0] * pp.lambda);
  const QSqrt2 m2 = (pp.lambda - pp.z[1]) / (one - pp.z[1] * pp.lambda);
  auto quad = [&](const QSqrt2& w) {
    return pp.z[0] * pp.z[1] * pp.lambda * w * w + (m1 * m2 - pp.z[0] * pp.z[1]) * w - m1 * m2 * pp.lambda;
  };
  const QSqrt2 other(1, 1);
  cert.omega_root_exact = quad(pp.omega).is_zero();
  cert.other_root_outside = quad(other).is_zero() && (other - one).sign() > 0;
  cert.omega_critical_exact = k.critical_residual(pp.omega).is_zero();
  auto mobius = [&](const QSqrt2& a, const QSqrt2& z) { return (z - a) / (one - a * z); };
  auto three = [&](const QSqrt2& a, const QSqrt2& b, const QSqrt2& c, const QSqrt2& z) {
    return mobius(a, z) * mobius(b, z) * mobius(c, z);
  };
  const QSqrt2 zero;
  cert.membership_exact =
      three(pp.z[0], pp.z[1], pp.omega, zero) == three(pp.z[0], pp.z[1], pp.omega, pp.lambda) &&
      three(pp.z[2], pp.z[3], pp.omega, zero) == three(pp.z[2], pp.z[3], pp.omega, pp.lambda);

  const GoodPointsConfig gcfg(lam, zd);
  cert.omega_float = gcfg.omega();
  cert.zeta_float = gcfg.zeta();

  for (int ell = 1; ell <= 4; ++ell) {
    std::array<QSqrt2, 4> w = pp.z;
    w[GoodPointsConfig::sigma[ell - 1] - 1] = pp.omega;  // omega = zeta here
    CEllCertificate c{ell, QMatrix(4, std::vector<QSqrt2>(4)), printed_c_ell(ell), {}, {}, {}, 0.0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) c.computed[i][j] = k.k(one, zero, pp.z[i], w[j]);
    c.det = bareiss_det(c.computed);
    c.minor_det = bareiss_det(delete_row_col(c.computed, ell));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (c.computed[i][j] != c.printed[i][j]) c.mismatches.emplace_back(i + 1, j + 1);
    const Complex fdet = c_ell_matrix(gcfg, ScalarParam(1.0, 0.0), ell).determinant();
    c.float_det_gap = std::abs(fdet - c.det.to_double()) / std::max(1.0, std::abs(c.det.to_double()));
    for (const auto& [i, j] : c.mismatches) {
      std::ostringstream where;
      where << "C" << ell << "(1,0) entry (" << i << "," << j << ")";
      std::string note = "kernel formula evaluated exactly in Q(sqrt 2); printed value differs";
      if (c.computed[i - 1][j - 1] == QSqrt2(q(17, 9))) note += "; (alpha - beta/3)^2 + 8/9 at (1,0) is 17/9";
      if (c.computed[i - 1][j - 1] == QSqrt2(q(-5, 2), q(5, 2))) note += "; 5(sqrt2-1)/2 is the value printed in C3 and C4";
      cert.discrepancies.push_back({where.str(), pretty(c.printed[i - 1][j - 1]), pretty(c.computed[i - 1][j - 1]), note});
    }
    cert.c_ell.push_back(std::move(c));
  }
  return cert;
}

PaperExampleReport verify_paper_example(const SamplingPlan& plan) {
  PaperExampleReport rep;
  rep.certificate = paper_certificate();
  rep.sampled = check_conditions(GoodPointsConfig(paper_lambda(), paper_points_double()), plan);
  return rep;
}

namespace {

std::string table2_cell(const std::array<QSqrt2, 4>& c) {
  std::ostringstream os;
  os << pretty(c[0]) << " a^2 + " << pretty(c[1]) << " ab + " << pretty(c[2]) << " b^2 + " << pretty(c[3]);
  return os.str();
}

}  // namespace

std::string render_markdown(const PaperCertificate& cert) {
  std::ostringstream md;
  md << "## B_lambda and f_lambda at the nodes\n\n";
  md << "| node | B_lambda | f_lambda | printed B | printed f | exact match |\n|---|---|---|---|---|---|\n";
  for (const auto& r : cert.table1) {
    md << "| z" << r.node << " | " << pretty(r.b) << " | " << pretty(r.f) << " | " << r.b_printed.get_str() << " | "
       << r.f_printed.get_str() << " | " << (r.exact_match ? "yes" : "NO") << " |\n";
  }
  md << "\n## Kernel entries k(z_i, z_j) for real (a, b)\n\n";
  md << "| pair | computed | printed | equal on a^2+b^2=1 | closed form in x |\n|---|---|---|---|---|\n";
  for (const auto& r : cert.table2) {
    std::array<QSqrt2, 4> pr{QSqrt2(r.printed[0]), QSqrt2(r.printed[1]), QSqrt2(r.printed[2]), QSqrt2(r.printed[3])};
    md << "| (z" << r.pair.i << ", z" << r.pair.j << ") | " << table2_cell(r.computed) << " | " << table2_cell(pr)
       << " | " << (r.match ? "yes" : "NO") << " | "
       << (r.closed_form_match ? (*r.closed_form_match ? "yes" : "NO") : "-") << " |\n";
  }
  md << "\n## Polynomial identities\n\n| check | pass | statement | quotient |\n|---|---|---|---|\n";
  for (const auto& c : cert.identities.checks) {
    md << "| " << c.id << " | " << (c.pass ? "yes" : "NO") << " | " << c.description << " | "
       << (c.quotient_constant ? c.quotient_constant->get_str() : "-") << " |\n";
  }
  md << "\n## omega and zeta\n\n";
  md << "- sqrt(2)-1 solves the omega quadratic exactly: " << (cert.omega_root_exact ? "yes" : "NO") << "\n";
  md << "- other root sqrt(2)+1 lies outside the disk: " << (cert.other_root_outside ? "yes" : "NO") << "\n";
  md << "- B_lambda'(sqrt(2)-1) = 0 exactly: " << (cert.omega_critical_exact ? "yes" : "NO") << "\n";
  md << "- B_{z1,z2,w}, B_{z3,z4,w} satisfy f(0) = f(lambda) exactly: " << (cert.membership_exact ? "yes" : "NO") << "\n";
  md.precision(17);
  md << "- float solve: omega = " << cert.omega_float << ", zeta = " << cert.zeta_float << "\n";
  md << "\n## C_l(1,0)\n\n| l | det | det of (l,l) minor | entries matching print |\n|---|---|---|---|\n";
  for (const auto& c : cert.c_ell) {
    md << "| " << c.ell << " | " << pretty(c.det) << " | " << pretty(c.minor_det) << " | "
       << 16 - c.mismatches.size() << "/16 |\n";
  }
  md << "\n## Print discrepancies\n\n";
  if (cert.discrepancies.empty()) md << "none\n";
  for (const auto& d : cert.discrepancies) {
    md << "- " << d.where << ": printed " << d.printed << ", computed " << d.computed << " (" << d.note << ")\n";
  }
  return md.str();
}

}  // namespace nodal
