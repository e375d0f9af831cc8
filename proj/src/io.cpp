#include "nodal/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nodal/errors.hpp"

namespace nodal {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + ": non-finite number");
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

ComplexMatrix block_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("targets: block must be a non-empty array of rows");
  const auto k = static_cast<Eigen::Index>(j.size());
  ComplexMatrix w(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    const Json& row = j[a];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) throw InputError("targets: block must be square");
    for (Eigen::Index b = 0; b < k; ++b) w(a, b) = complex_from_json(row[b]);
  }
  return w;
}

// A scalar target is a number or [re, im] of numbers; a block is an array of
// arrays of such.
bool is_scalar_entry(const Json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

}  // namespace

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {number(j, "complex"), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError("complex: expected [re, im]");
  return {number(j[0], "complex"), number(j[1], "complex")};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

NodeConfig node_config_from_json(const Json& j) {
  const Complex lambda = complex_from_json(field(j, "lambda"));
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) throw InputError("nodes: expected an array");
  std::vector<Complex> zs;
  for (const auto& z : nodes) zs.push_back(complex_from_json(z));
  return NodeConfig(lambda, std::move(zs));
}

Json to_json(const NodeConfig& cfg) {
  Json nodes = Json::array();
  for (Complex z : cfg.nodes()) nodes.push_back(complex_to_json(z));
  return {{"lambda", complex_to_json(cfg.lambda())}, {"nodes", nodes}};
}

InterpolationProblem problem_from_json(const Json& j) {
  NodeConfig cfg = node_config_from_json(j);
  const Json& targets = field(j, "targets");
  if (!targets.is_array()) throw InputError("targets: expected an array");
  std::vector<ComplexMatrix> blocks;
  for (const auto& t : targets) {
    if (is_scalar_entry(t)) blocks.push_back(ComplexMatrix::Constant(1, 1, complex_from_json(t)));
    else blocks.push_back(block_from_json(t));
  }
  InterpolationProblem prob(std::move(cfg), std::move(blocks));
  if (j.contains("k")) {
    const Json& k = j["k"];
    if (!k.is_number_integer() || k.get<long>() != prob.block_size()) {
      throw InputError("k does not match the target block size");
    }
  }
  return prob;
}

Json to_json(const InterpolationProblem& prob) {
  Json out = to_json(prob.cfg());
  Json targets = Json::array();
  for (const auto& w : prob.targets()) targets.push_back(prob.is_scalar() ? complex_to_json(w(0, 0)) : matrix_to_json(w));
  out["targets"] = targets;
  out["k"] = prob.block_size();
  return out;
}

GoodPointsInput goodpoints_input_from_json(const Json& j) {
  GoodPointsInput in{};
  in.lambda = number(field(j, "lambda"), "lambda");
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.size() != 4) throw InputError("points: expected exactly 4 reals");
  for (std::size_t i = 0; i < 4; ++i) in.points[i] = number(pts[i], "points");
  return in;
}

Json to_json(const ScalarParam& p) {
  return {{"kind", "scalar"}, {"alpha", complex_to_json(p.alpha())}, {"beta", complex_to_json(p.beta())}};
}

Json to_json(const MatrixParam& p) {
  return {{"kind", "matrix"}, {"m", p.m()}, {"alpha", matrix_to_json(p.alpha())}, {"beta", matrix_to_json(p.beta())}};
}

Json to_json(const FamilyParam& p) {
  return std::visit([](const auto& v) { return to_json(v); }, p);
}

Json to_json(const SamplingPlan& plan) {
  return {{"scalar_samples", plan.scalar_samples},
          {"phase_samples", plan.phase_samples},
          {"matrix_levels", plan.matrix_levels},
          {"samples_per_level", plan.samples_per_level},
          {"seed", plan.seed},
          {"refine_iters", plan.refine_iters},
          {"real_only", plan.real_only}};
}

std::string verdict_name(Verdict v) { return v == Verdict::infeasible ? "infeasible" : "feasible_on_samples"; }

Json to_json(const FeasibilityReport& rep) {
  Json out{{"verdict", verdict_name(rep.verdict)},
           {"worst_param", to_json(rep.worst_param)},
           {"samples_used", rep.samples_used},
           {"excluded", rep.excluded}};
  out[rep.kind == ValueKind::min_eig ? "worst_min_eig" : "worst_norm"] = rep.worst_value;
  return out;
}

Json to_json(const NormReport& rep) {
  return {{"value", rep.value},
          {"best_param", to_json(rep.best_param)},
          {"samples_used", rep.samples_used},
          {"excluded", rep.excluded}};
}

Json to_json(const BivarPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.deg_x, t.deg_y, t.coeff.get_str()}));
  return out;
}

Json to_json(const IdentityReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc{{"id", c.id}, {"pass", c.pass}, {"description", c.description}, {"witness", to_json(c.witness)}};
    if (c.quotient_constant) jc["quotient_constant"] = c.quotient_constant->get_str();
    checks.push_back(jc);
  }
  return {{"all_pass", rep.all_pass()}, {"checks", checks}};
}

Json to_json(const GoodPointsReport& rep, bool include_samples) {
  Json out{{"lambda", rep.lambda},
           {"points", rep.points},
           {"condition1", {{"pass", rep.cond1}, {"defect", rep.cond1_defect}}},
           {"condition2",
            {{"pass", rep.cond2}, {"omega_defect", rep.omega_defect}, {"zeta_defect", rep.zeta_defect}}},
           {"samples", rep.samples},
           {"passing", rep.passing},
           {"pass_fraction", rep.pass_fraction()},
           {"excluded", rep.excluded},
           {"excluded_fraction", rep.excluded_fraction()},
           {"excluded_by_condition3", rep.excluded_by_3},
           {"excluded_by_condition5", rep.excluded_by_5},
           {"failed_condition4", rep.failed_4},
           {"excluded_thetas", rep.excluded_thetas},
           {"sampled_pass", rep.sampled_pass()},
           {"overall_pass", rep.overall_pass()}};
  out["omega"] = rep.omega ? Json(*rep.omega) : Json(nullptr);
  out["zeta"] = rep.zeta ? Json(*rep.zeta) : Json(nullptr);
  out["zeta_critical_branch"] = rep.zeta_critical;
  if (!rep.setup_error.empty()) out["setup_error"] = rep.setup_error;
  if (include_samples) {
    Json samples = Json::array();
    for (const auto& o : rep.outcomes) {
      samples.push_back({{"theta", o.theta},
                         {"condition3", o.cond3},
                         {"condition4", o.cond4},
                         {"condition5", o.cond5},
                         {"min_row_entry", o.min_row_entry},
                         {"min_singular", o.min_singular}});
    }
    out["sample_outcomes"] = samples;
  }
  return out;
}

Json to_json(const QSqrt2& v) {
  return {{"a", v.rational_part().get_str()}, {"b", v.sqrt2_part().get_str()}, {"text", v.to_string()},
          {"value", v.to_double()}};
}

namespace {

Json qmatrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Json to_json(const PaperCertificate& cert) {
  Json t1 = Json::array();
  for (const auto& r : cert.table1) {
    t1.push_back({{"node", r.node},
                  {"B", r.b.to_string()},
                  {"f", r.f.to_string()},
                  {"B_printed", r.b_printed.get_str()},
                  {"f_printed", r.f_printed.get_str()},
                  {"B_float_error", r.b_float_error},
                  {"f_float_error", r.f_float_error},
                  {"exact_match", r.exact_match}});
  }
  Json t2 = Json::array();
  for (const auto& r : cert.table2) {
    Json computed = Json::array();
    Json printed = Json::array();
    for (int i = 0; i < 4; ++i) {
      computed.push_back(r.computed[i].to_string());
      printed.push_back(r.printed[i].get_str());
    }
    Json row{{"pair", {r.pair.i, r.pair.j}}, {"computed", computed}, {"printed", printed}, {"match", r.match}};
    row["closed_form_match"] = r.closed_form_match ? Json(*r.closed_form_match) : Json(nullptr);
    t2.push_back(row);
  }
  Json cells = Json::array();
  for (const auto& c : cert.c_ell) {
    Json mism = Json::array();
    for (const auto& [i, j] : c.mismatches) mism.push_back({i, j});
    cells.push_back({{"ell", c.ell},
                     {"computed", qmatrix_json(c.computed)},
                     {"printed", qmatrix_json(c.printed)},
                     {"det", to_json(c.det)},
                     {"minor_det", to_json(c.minor_det)},
                     {"mismatches", mism},
                     {"float_det_gap", c.float_det_gap}});
  }
  Json notes = Json::array();
  for (const auto& d : cert.discrepancies) {
    notes.push_back({{"where", d.where}, {"printed", d.printed}, {"computed", d.computed}, {"note", d.note}});
  }
  return {{"table1", t1},
          {"table2", t2},
          {"identities", to_json(cert.identities)},
          {"omega",
           {{"root_exact", cert.omega_root_exact},
            {"other_root_outside", cert.other_root_outside},
            {"critical_exact", cert.omega_critical_exact},
            {"membership_exact", cert.membership_exact},
            {"omega_float", cert.omega_float},
            {"zeta_float", cert.zeta_float}}},
          {"c_ell", cells},
          {"discrepancies", notes},
          {"tables_pass", cert.tables_pass()},
          {"c_ell_nonsingular", cert.c_ell_nonsingular()},
          {"all_exact_pass", cert.all_exact_pass()}};
}

Json to_json(const EmbedRecord& rec) {
  return {{"level", rec.level},
          {"sample", rec.sample},
          {"param_seed", rec.param_seed},
          {"norm", std::isfinite(rec.norm) ? Json(rec.norm) : Json(nullptr)},
          {"psi_min_eig", rec.psi_min_eig}};
}

}  // namespace nodal
