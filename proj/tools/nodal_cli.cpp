// nodal: command-line front end for the constrained Pick toolkit.
//
// Exit codes: 0 success / feasible / all checks pass, 1 infeasible or a
// failed check, 2 input error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nodal/errors.hpp"
#include "nodal/goodpoints.hpp"
#include "nodal/grassmann.hpp"
#include "nodal/io.hpp"
#include "nodal/pick.hpp"

namespace {

using nodal::Json;

struct CliConfig {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = nodal::SamplingPlan{}.seed;
  std::size_t samples = 0;  // 0: per-command default
  std::vector<int> levels;
  std::size_t per_level = nodal::SamplingPlan{}.samples_per_level;
  std::size_t phases = 1;
  std::size_t refine = nodal::SamplingPlan{}.refine_iters;
  double tol = nodal::kPsdTol;
  bool real_only = false;
  double alpha = 1.0;
  double beta = 0.0;
  double beta_phase = 0.0;
};

nodal::SamplingPlan make_plan(const CliConfig& c, std::size_t default_samples) {
  nodal::SamplingPlan plan;
  plan.scalar_samples = c.samples ? c.samples : default_samples;
  plan.phase_samples = c.phases;
  if (!c.levels.empty()) plan.matrix_levels.assign(c.levels.begin(), c.levels.end());
  plan.samples_per_level = c.per_level;
  plan.seed = c.seed;
  plan.refine_iters = c.refine;
  plan.real_only = c.real_only;
  plan.validate();
  return plan;
}

std::string num(double v) { return Json(v).dump(); }

// Flattens a JSON value into "path,value" rows.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string to_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : rows) {
    const bool quote = v.find(',') != std::string::npos;
    os << k << "," << (quote ? "\"" + v + "\"" : v) << "\n";
  }
  return os.str();
}

std::string to_md_list(const std::string& title, const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream os;
  os << "# " << title << "\n\n| key | value |\n|---|---|\n";
  for (const auto& [k, v] : rows) os << "| " << k << " | " << v << " |\n";
  return os.str();
}

void emit(const CliConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw nodal::InputError("cannot write output file '" + c.output + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

std::string render(const CliConfig& c, const std::string& title, const Json& j) {
  if (c.format == "csv") return to_csv(j);
  if (c.format == "md") return to_md_list(title, j);
  return j.dump(2);
}

Json read_input(const CliConfig& c) {
  if (c.input.empty()) throw nodal::InputError("--input is required");
  return nodal::read_json_file(c.input);
}

// --- kernel-table ---

int cmd_kernel_table(const CliConfig& c) {
  const nodal::NodeConfig cfg = nodal::node_config_from_json(read_input(c));
  const nodal::ScalarParam p(nodal::Complex(c.alpha), std::polar(c.beta, c.beta_phase));
  const auto g = nodal::gram_matrix(cfg, p);
  Json nodes = Json::array();
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto z = cfg.node(i);
    nodes.push_back({{"node", i + 1},
                     {"z", nodal::complex_to_json(z)},
                     {"B_lambda", nodal::complex_to_json(nodal::b_lambda_eval(cfg.lambda(), z))},
                     {"f_lambda", nodal::complex_to_json(nodal::f_lambda(cfg, z))}});
  }
  Json out{{"config", nodal::to_json(cfg)}, {"param", nodal::to_json(p)}, {"nodes", nodes},
           {"gram", nodal::matrix_to_json(g.matrix())}};
  if (c.format != "md") {
    emit(c, render(c, "kernel table", out));
    return 0;
  }
  std::ostringstream md;
  md << "# Kernel table\n\nlambda = " << num(cfg.lambda().real()) << " + " << num(cfg.lambda().imag())
     << "i, (alpha, beta) = (" << num(p.alpha().real()) << ", " << num(p.beta().real()) << " + "
     << num(p.beta().imag()) << "i)\n\n";
  md << "| node | z | B_lambda | f_lambda |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto z = cfg.node(i);
    const auto b = nodal::b_lambda_eval(cfg.lambda(), z);
    const auto f = nodal::f_lambda(cfg, z);
    md << "| z" << i + 1 << " | " << num(z.real()) << " + " << num(z.imag()) << "i | " << num(b.real()) << " + "
       << num(b.imag()) << "i | " << num(f.real()) << " + " << num(f.imag()) << "i |\n";
  }
  md << "\n| k(z_i, z_j) |";
  for (std::size_t j = 0; j < cfg.size(); ++j) md << " z" << j + 1 << " |";
  md << "\n|---|";
  for (std::size_t j = 0; j < cfg.size(); ++j) md << "---|";
  md << "\n";
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    md << "| z" << i + 1 << " |";
    for (std::size_t j = 0; j < cfg.size(); ++j) {
      const auto v = g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      md << " " << num(v.real()) << " + " << num(v.imag()) << "i |";
    }
    md << "\n";
  }
  emit(c, md.str());
  return 0;
}

// --- pick / distance ---

int cmd_pick(const CliConfig& c) {
  const nodal::InterpolationProblem prob = nodal::problem_from_json(read_input(c));
  const nodal::SamplingPlan plan = make_plan(c, 4096);
  Json out{{"problem", nodal::to_json(prob)}, {"plan", nodal::to_json(plan)}, {"tol", c.tol}};
  nodal::FeasibilityReport rep;
  if (prob.is_scalar()) {
    rep = nodal::scalar_solvable(prob, plan, c.tol);
    out["mode"] = "scalar";
    out["classical_pick_min_eig"] = nodal::psd_check(nodal::classical_pick_matrix(prob), 0.0).min_eig;
  } else {
    rep = nodal::matricial_solvable(prob, plan, c.tol);
    out["mode"] = "matricial";
  }
  out["report"] = nodal::to_json(rep);
  emit(c, render(c, "pick", out));
  return rep.verdict == nodal::Verdict::infeasible ? 1 : 0;
}

int cmd_distance(const CliConfig& c) {
  const nodal::InterpolationProblem prob = nodal::problem_from_json(read_input(c));
  const nodal::SamplingPlan plan = make_plan(c, 4096);
  const nodal::NormReport rep = nodal::quotient_norm_report(prob, plan);
  Json out{{"problem", nodal::to_json(prob)}, {"plan", nodal::to_json(plan)}, {"quotient_norm", nodal::to_json(rep)}};
  emit(c, render(c, "distance", out));
  return 0;
}

// --- goodpoints ---

std::string goodpoints_markdown(const nodal::GoodPointsReport& rep) {
  std::ostringstream md;
  md << "# Good points check\n\nlambda = " << num(rep.lambda) << "\n\n";
  md << "| point | z | B_lambda | f_lambda |\n|---|---|---|---|\n";
  for (int i = 0; i < 4; ++i) {
    const double z = rep.points[i];
    md << "| z" << i + 1 << " | " << num(z) << " | " << num(nodal::b_lambda_eval(rep.lambda, z).real()) << " | "
       << num(nodal::f_lambda(nodal::Complex(rep.lambda), z).real()) << " |\n";
  }
  try {
    const nodal::NodeConfig cfg(rep.lambda, {rep.points[0], rep.points[1], rep.points[2], rep.points[3]});
    const auto g = nodal::gram_matrix(cfg, nodal::ScalarParam(1.0, 0.0));
    md << "\n| k(z_i, z_j) at (1,0) | z1 | z2 | z3 | z4 |\n|---|---|---|---|---|\n";
    for (int i = 0; i < 4; ++i) {
      md << "| z" << i + 1 << " |";
      for (int j = 0; j < 4; ++j) md << " " << num(g(i, j).real()) << " |";
      md << "\n";
    }
  } catch (const nodal::Error&) {
  }
  md << "\n| condition | result |\n|---|---|\n";
  md << "| (1) B(z1)=B(z4), B(z2)=B(z3) | " << (rep.cond1 ? "pass" : "FAIL") << " (defect " << num(rep.cond1_defect)
     << ") |\n";
  md << "| (2) omega, zeta | " << (rep.cond2 ? "pass" : "FAIL");
  if (rep.omega) md << " (omega " << num(*rep.omega) << ", zeta " << num(*rep.zeta) << ")";
  if (!rep.setup_error.empty()) md << " (" << rep.setup_error << ")";
  md << " |\n";
  md << "| (3)-(5) sampled | " << rep.passing << "/" << rep.samples << " pass, " << rep.excluded << " excluded, "
     << rep.failed_4 << " fail (4) |\n";
  md << "| overall | " << (rep.overall_pass() ? "pass" : "FAIL") << " |\n";
  return md.str();
}

int cmd_goodpoints(const CliConfig& c) {
  const nodal::GoodPointsInput in = nodal::goodpoints_input_from_json(read_input(c));
  const nodal::SamplingPlan plan = make_plan(c, 512);
  const nodal::GoodPointsReport rep = nodal::check_conditions(in.lambda, in.points, plan);
  if (c.format == "md") emit(c, goodpoints_markdown(rep));
  else emit(c, render(c, "goodpoints", nodal::to_json(rep)));
  return rep.overall_pass() ? 0 : 1;
}

// --- embed ---

int cmd_embed(const CliConfig& c) {
  const nodal::InterpolationProblem prob = nodal::problem_from_json(read_input(c));
  const nodal::SamplingPlan plan = make_plan(c, 1024);
  Json records = Json::array();
  for (const auto& r : nodal::embed_levels(prob, plan)) records.push_back(nodal::to_json(r));
  const double emb = nodal::embedding_norm(prob, plan);
  const double quo = nodal::quotient_norm(prob, plan);
  Json out{{"plan", nodal::to_json(plan)},
           {"records", records},
           {"embedding_norm", emb},
           {"quotient_norm", quo},
           {"norm_gap", std::abs(emb - quo)}};
  emit(c, render(c, "embed", out));
  return 0;
}

// --- reproduce-paper ---

struct EmbeddingCheck {
  bool psi_positive = true;
  double psi_min_eig = 0.0;
  double generator_gap = 0.0;
  double norm_gap = 0.0;
  double embedding = 0.0;
  double quotient = 0.0;
  bool pass() const { return psi_positive && generator_gap <= 1e-12 && norm_gap < 1e-8; }
};

EmbeddingCheck embedding_check(std::uint64_t seed) {
  const auto zd = nodal::paper_points_double();
  const nodal::NodeConfig cfg(nodal::paper_lambda(), {zd[0], zd[1], zd[2], zd[3]});
  EmbeddingCheck out;
  out.psi_min_eig = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < 100; ++s) {
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(s % 3);
    const auto mp = nodal::sample_matrix_param(m, false, nodal::derive_seed(seed, 0xC4, s));
    const auto psi = nodal::psi_image(cfg, mp);
    const double gap = nodal::max_abs(psi.assembled.matrix() - nodal::psi_from_generators(cfg, mp));
    out.generator_gap = std::max(out.generator_gap, gap / std::max(1.0, nodal::max_abs(psi.assembled.matrix())));
    const double me = nodal::psd_check(psi.assembled, 0.0).min_eig;
    out.psi_min_eig = std::min(out.psi_min_eig, me);
    if (!(me > 0.0)) out.psi_positive = false;
  }
  std::vector<nodal::Complex> targets;
  for (double z : zd) targets.push_back(nodal::b_lambda_eval(nodal::paper_lambda(), z));
  const auto prob = nodal::InterpolationProblem::scalar(cfg, targets);
  nodal::SamplingPlan plan;
  plan.scalar_samples = 256;
  plan.samples_per_level = 16;
  plan.seed = seed;
  out.embedding = nodal::embedding_norm(prob, plan);
  out.quotient = nodal::quotient_norm(prob, plan);
  out.norm_gap = std::abs(out.embedding - out.quotient);
  return out;
}

int cmd_reproduce_paper(const CliConfig& c) {
  const nodal::SamplingPlan plan = make_plan(c, 512);
  const nodal::PaperExampleReport rep = nodal::verify_paper_example(plan);
  const EmbeddingCheck s4 = embedding_check(plan.seed);
  const bool pass = rep.pass() && s4.pass();

  Json j{{"plan", nodal::to_json(plan)},
         {"certificate", nodal::to_json(rep.certificate)},
         {"sampled_conditions", nodal::to_json(rep.sampled)},
         {"embedding_consistency",
          {{"psi_positive", s4.psi_positive},
           {"psi_min_eig", s4.psi_min_eig},
           {"psi_generator_gap", s4.generator_gap},
           {"embedding_norm", s4.embedding},
           {"quotient_norm", s4.quotient},
           {"norm_gap", s4.norm_gap},
           {"pass", s4.pass()}}},
         {"pass", pass}};

  std::ostringstream md;
  md << "# Reproduction report, lambda = 1/sqrt(2)\n\n" << nodal::render_markdown(rep.certificate);
  md << "\n## Sampled conditions (3)-(5)\n\n";
  md << "- samples: " << rep.sampled.samples << ", passing: " << rep.sampled.passing
     << ", excluded: " << rep.sampled.excluded << ", failing (4): " << rep.sampled.failed_4 << "\n";
  md << "- pass fraction: " << num(rep.sampled.pass_fraction()) << "\n";
  md << "\n## Psi positivity and norm consistency\n\n";
  md << "- min eigenvalue of Psi over 100 samples (m = 1..3): " << num(s4.psi_min_eig) << "\n";
  md << "- two constructions of Psi differ by " << num(s4.generator_gap) << "\n";
  md << "- embedding norm " << num(s4.embedding) << ", quotient norm " << num(s4.quotient) << ", gap "
     << num(s4.norm_gap) << "\n";
  md << "\n**overall: " << (pass ? "pass" : "FAIL") << "**\n";

  const std::string primary = c.format == "md" ? md.str() : (c.format == "csv" ? to_csv(j) : j.dump(2));
  emit(c, primary);
  if (!c.output.empty()) {
    std::filesystem::path companion(c.output);
    companion.replace_extension(c.format == "md" ? ".json" : ".md");
    std::ofstream out(companion);
    if (!out) throw nodal::InputError("cannot write companion report '" + companion.string() + "'");
    out << (c.format == "md" ? j.dump(2) + "\n" : md.str());
  }
  return pass ? 0 : 1;
}

void add_common(CLI::App* sub, CliConfig& c, bool sampling, bool param) {
  sub->add_option("--input,-i", c.input, "input JSON file");
  sub->add_option("--output,-o", c.output, "output file (default: stdout)");
  sub->add_option("--format,-f", c.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  if (sampling) {
    sub->add_option("--seed", c.seed, "seed for every random draw")->capture_default_str();
    sub->add_option("--samples", c.samples, "scalar grid size (default 4096; 512 for goodpoints/reproduce-paper)");
    sub->add_option("--levels", c.levels, "matrix levels m, comma separated (default 1,2,3)")->delimiter(',');
    sub->add_option("--per-level", c.per_level, "Haar samples per matrix level")->capture_default_str();
    sub->add_option("--phases", c.phases, "phase samples for complex (alpha, beta)")->capture_default_str();
    sub->add_option("--refine", c.refine, "grid refinement rounds")->capture_default_str();
    sub->add_option("--tol", c.tol, "feasibility tolerance")->capture_default_str();
    sub->add_flag("--real-only", c.real_only, "draw matrix parameters from the real orthogonal group");
  }
  if (param) {
    sub->add_option("--alpha", c.alpha, "alpha (real)")->capture_default_str();
    sub->add_option("--beta", c.beta, "|beta|")->capture_default_str();
    sub->add_option("--beta-phase", c.beta_phase, "arg(beta)")->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained Nevanlinna-Pick toolkit for f(0) = f(lambda)"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* kt = app.add_subcommand("kernel-table", "B_lambda, f_lambda and the Gram matrix at one parameter");
  add_common(kt, cfg, false, true);
  auto* pick = app.add_subcommand("pick", "decide solvability over the sampled family (exit 1 if infeasible)");
  add_common(pick, cfg, true, false);
  auto* dist = app.add_subcommand("distance", "sampled quotient norm");
  add_common(dist, cfg, true, false);
  auto* gp = app.add_subcommand("goodpoints", "check the good-points conditions for {lambda, points}");
  add_common(gp, cfg, true, false);
  auto* emb = app.add_subcommand("embed", "finite-level embedding norms and Psi positivity");
  add_common(emb, cfg, true, false);
  auto* rp = app.add_subcommand("reproduce-paper", "exact and sampled checks for lambda = 1/sqrt(2)");
  add_common(rp, cfg, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*kt) return cmd_kernel_table(cfg);
    if (*pick) return cmd_pick(cfg);
    if (*dist) return cmd_distance(cfg);
    if (*gp) return cmd_goodpoints(cfg);
    if (*emb) return cmd_embed(cfg);
    if (*rp) return cmd_reproduce_paper(cfg);
  } catch (const nodal::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nodal::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nodal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
