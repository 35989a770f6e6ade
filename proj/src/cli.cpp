#include "gvcp/cli.hpp"

#include "gvcp/canonical.hpp"
#include "gvcp/classifier.hpp"
#include "gvcp/json_io.hpp"
#include "gvcp/lifting.hpp"
#include "gvcp/su3.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace gvcp::cli {

namespace {

struct CliConfig {
  std::string input;
  std::string output;
  std::string name;
  std::string vector;
  std::string mode;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  int samples = 256;
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

ExteriorForm load_form(const std::string& path) {
  try {
    return parse_form(read_input(path));
  } catch (const FormError& e) {
    throw FormError(path + ": " + e.what());
  }
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
  file << text;
}

Vector parse_vector(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw FormError("--vector: cannot parse '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw FormError("--vector: cannot parse '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw FormError("--vector: no components given");
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
  const ExteriorForm tau = load_form(cfg.input);
  if (tau.degree() != 3) throw FormError(cfg.input + ": analyze expects a 3-form");
  ClassifyOptions options;
  if (!cfg.mode.empty()) options.gvcp.mode = parse_mode(cfg.mode);
  if (cfg.tol) options.gvcp.cluster_tol = *cfg.tol;
  options.gvcp.samples = cfg.samples;
  options.gvcp.seed = cfg.seed;
  const ClassificationReport report = classify(tau, options);
  emit(cfg, report_to_json(report).dump(2) + "\n", out);
  return report.verdict == Verdict::Anomaly ? kExitAnomaly : kExitOk;
}

int cmd_canonical(const CliConfig& cfg, std::ostream& out) {
  const auto value = canonical(parse_canonical_name(cfg.name));
  // A0 is written in its 2-form encoding.
  const ExteriorForm form = std::holds_alternative<ExteriorForm>(value) ? std::get<ExteriorForm>(value)
                                                                       : endo_to_two_form(std::get<SkewEndo>(value));
  emit(cfg, dump_form(form), out);
  return kExitOk;
}

int cmd_lift(const CliConfig& cfg, std::ostream& out) {
  emit(cfg, dump_form(lift(load_form(cfg.input))), out);
  return kExitOk;
}

int cmd_restrict(const CliConfig& cfg, std::ostream& out) {
  emit(cfg, dump_form(restrict_to_complement(load_form(cfg.input), parse_vector(cfg.vector))), out);
  return kExitOk;
}

int cmd_conjugate(const CliConfig& cfg, std::ostream& out) {
  const ExteriorForm form = load_form(cfg.input);
  emit(cfg, dump_form(conjugate(form, random_orthogonal(cfg.seed, form.dim()))), out);
  return kExitOk;
}

int cmd_su3_check(const CliConfig& cfg, std::ostream& out) {
  const double threshold = cfg.tol.value_or(1e-10);
  const Su3Frame frame = standard_frame();
  double basis_max = 0.0;
  for (int i = 1; i <= 6; ++i) basis_max = std::max(basis_max, check_identities(frame, basis(6, i)).max());
  double random_max = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    random_max = std::max(random_max, check_identities(frame, random_vector(cfg.seed + s, 6)).max());
  }
  const double frame_max = check_frame(frame).max();
  const double overall = std::max({basis_max, random_max, frame_max});
  const bool passed = overall <= threshold;
  json report = {{"samples", cfg.samples},         {"seed", cfg.seed},
                 {"basis_max_residual", basis_max}, {"random_max_residual", random_max},
                 {"frame_residual", frame_max},     {"max_residual", overall},
                 {"threshold", threshold},          {"passed", passed}};
  emit(cfg, report.dump(2) + "\n", out);
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Generalized vector cross products: classification and constructions"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output, "Write the result to this file instead of stdout");
  };
  auto positive = CLI::PositiveNumber;

  auto* analyze = app.add_subcommand("analyze", "Classify a 3-form read from a JSON file");
  analyze->add_option("path", cfg.input, "Form file ('-' for stdin)")->required();
  analyze->add_option("--mode", cfg.mode, "deterministic or sampled (default: deterministic for n <= 8)");
  analyze->add_option("--tol", cfg.tol, "Eigenvalue clustering tolerance")->check(positive);
  analyze->add_option("--samples", cfg.samples, "Unit vectors drawn in sampled mode")->check(positive);
  analyze->add_option("--seed", cfg.seed, "Seed for sampled mode and witness search");
  add_common(analyze);

  auto* canon = app.add_subcommand("canonical", "Print a canonical form");
  canon->add_option("name", cfg.name, "TAU0, SIGMA0, VOL3, A0, OMEGA0, PSI_PLUS or PSI_MINUS")->required();
  add_common(canon);

  auto* lift_cmd = app.add_subcommand("lift", "Lift an SU(3) 3-form on R^6 to a cross product on R^7");
  lift_cmd->add_option("path", cfg.input, "Form file ('-' for stdin)")->required();
  add_common(lift_cmd);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a 3-form to the orthogonal complement of a unit vector");
  restrict_cmd->add_option("path", cfg.input, "Form file ('-' for stdin)")->required();
  restrict_cmd->add_option("--vector", cfg.vector, "Comma-separated unit vector")->required();
  add_common(restrict_cmd);

  auto* conj = app.add_subcommand("conjugate", "Pull a form back along a seeded random orthogonal matrix");
  conj->add_option("path", cfg.input, "Form file ('-' for stdin)")->required();
  conj->add_option("--seed", cfg.seed, "Seed of the orthogonal matrix");
  add_common(conj);

  auto* su3 = app.add_subcommand("su3-check", "Verify the flat SU(3) identities");
  su3->add_option("--samples", cfg.samples, "Number of random vectors")->check(CLI::NonNegativeNumber);
  su3->add_option("--seed", cfg.seed, "Seed of the random vectors");
  su3->add_option("--tol", cfg.tol, "Pass threshold for the max residual (default 1e-10)")->check(positive);
  add_common(su3);

  std::vector<const char*> argv{"gvcp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out);
    if (*canon) return cmd_canonical(cfg, out);
    if (*lift_cmd) return cmd_lift(cfg, out);
    if (*restrict_cmd) return cmd_restrict(cfg, out);
    if (*conj) return cmd_conjugate(cfg, out);
    if (*su3) return cmd_su3_check(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace gvcp::cli
