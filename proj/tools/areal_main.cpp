#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "areal/json_io.hpp"
#include "areal/oracle.hpp"
#include "areal/yang_mills.hpp"

namespace {

using namespace areal;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kUsage = 2;
constexpr int kCertification = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

SpectralTheory load_theory(const std::string& path) {
  SpectralTheory raw = parse_theory(load_json_file(path));
  return build_theory(std::move(raw.entries), raw.policy, raw.density_majorant);
}

Bordism load_bordism(const std::string& path) {
  return parse_bordism(load_json_file(path));
}

cd parse_volume(const std::string& s) {
  double re = 0.0, im = 0.0;
  size_t comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      re = std::stod(s);
    } else {
      re = std::stod(s.substr(0, comma));
      im = std::stod(s.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw Error("cannot parse volume '" + s + "', expected RE or RE,IM");
  }
  return {re, im};
}

Rat parse_rat(const std::string& s) {
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
      size_t dot = s.find('.');
      if (dot == std::string::npos) return Rat(std::stoll(s));
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      long long den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return Rat(std::stoll(digits), den);
    }
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("cannot parse rational '" + s + "', expected p/q");
  }
}

int cmd_validate(const std::string& theory_path) {
  SpectralTheory raw = parse_theory(load_json_file(theory_path));
  json blocks = json::array();
  bool all_pass = true;
  bool increasing = true;
  for (size_t i = 0; i + 1 < raw.entries.size(); ++i)
    increasing = increasing && raw.entries[i].lambda < raw.entries[i + 1].lambda;
  all_pass = increasing;
  for (const SpectralEntry& e : raw.entries) {
    ValidationReport r = validate(e.block, 1e-10);
    json checks = json::array();
    for (const AxiomCheck& c : r.checks)
      checks.push_back({{"name", c.name}, {"residual", c.residual}, {"passed", c.passed}});
    blocks.push_back({{"lambda", e.lambda}, {"pass", r.pass}, {"checks", std::move(checks)}});
    all_pass = all_pass && r.pass;
  }
  emit({{"eigenvalues_increasing", increasing}, {"blocks", std::move(blocks)},
        {"pass", all_pass}});
  return all_pass ? kOk : kValidation;
}

int cmd_eval(const std::string& theory_path, const std::string& bordism_path,
             double eps) {
  SpectralTheory th = load_theory(theory_path);
  Bordism x = load_bordism(bordism_path);
  emit(block_operator_json(eval(th, x, eps)));
  return kOk;
}

int cmd_partition(const std::string& theory_path, int genus,
                  const std::string& volume, double eps) {
  SpectralTheory th = load_theory(theory_path);
  cd s = parse_volume(volume);
  cd z = partition_function(th, genus, s, eps);
  emit({{"genus", genus}, {"volume", complex_json(s)}, {"value", complex_json(z)},
        {"eps", eps}});
  return kOk;
}

int cmd_lorentz(const std::string& theory_path, const std::string& bordism_path,
                double lambda_max) {
  SpectralTheory th = load_theory(theory_path);
  Bordism x = load_bordism(bordism_path);
  emit(lorentz_json(eval_lorentzian(th, x, lambda_max)));
  return kOk;
}

int cmd_limits(const std::string& theory_path, const std::string& bordism_path,
               const std::string& mode) {
  SpectralTheory th = load_theory(theory_path);
  Bordism x = load_bordism(bordism_path);
  if (mode == "short") {
    emit(lorentz_json(short_distance(th, x)));
  } else {
    emit({{"mode", "long"}, {"matrix", matrix_json(long_distance(th, x))}});
  }
  return kOk;
}

int cmd_ym_gen(const std::string& group, const std::string& cmax,
               const std::string& norm) {
  GroupType type;
  if (group == "u1")
    type = GroupType::U1;
  else if (group == "a1")
    type = GroupType::A1;
  else if (group == "a2")
    type = GroupType::A2;
  else
    throw Error("unknown group '" + group + "', expected u1, a1 or a2");
  RootDatum d = build_datum(type, parse_rat(norm));
  SpectralTheory th = ym_theory(d, parse_rat(cmax));
  json j = theory_json(th);
  GrowthCertificate cert = check_growth(th, 0.1);
  j["growth"] = {{"t", cert.t}, {"c", cert.c}};
  emit(j);
  return kOk;
}

int cmd_metric_volume(const std::string& mesh_path) {
  SampledDensity d = parse_mesh(load_json_file(mesh_path));
  std::vector<Label> labels = total_volume(d);
  if (labels.size() == 1) {
    emit(label_json(labels[0]));
  } else {
    json j = json::array();
    for (const Label& l : labels) j.push_back(label_json(l));
    emit(j);
  }
  return kOk;
}

json suite_semigroup(const SpectralTheory& th, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(0.2, 1.5), im(-0.8, 0.8);
  double worst_semi = 0.0, worst_normal = 0.0;
  const int trials = 20;
  for (int i = 0; i < trials; ++i) {
    SemigroupCheck c = check_semigroup(th, {re(rng), im(rng)}, {re(rng), im(rng)});
    worst_semi = std::max(worst_semi, c.semigroup_residual);
    worst_normal = std::max(worst_normal, c.normality_residual);
  }
  double tol = 1e-9;
  return {{"suite", "semigroup"},
          {"trials", trials},
          {"max_semigroup_residual", worst_semi},
          {"max_normality_residual", worst_normal},
          {"tolerance", tol},
          {"pass", worst_semi < tol && worst_normal < tol}};
}

json suite_adjoint(const SpectralTheory& th, std::uint64_t seed) {
  double worst = 0.0;
  const int trials = 12;
  oracle::BordismSpec spec;
  spec.max_in = 2;
  spec.max_out = 2;
  spec.max_genus = 1;
  spec.max_components = 2;
  for (int i = 0; i < trials; ++i) {
    Bordism x = oracle::random_bordism(seed * 1000 + i, spec);
    worst = std::max(worst, check_adjoint(th, x));
  }
  double tol = 1e-8;
  return {{"suite", "adjoint"},
          {"trials", trials},
          {"max_residual", worst},
          {"tolerance", tol},
          {"pass", worst < tol}};
}

json suite_gluing(const SpectralTheory& th, std::uint64_t seed) {
  double lam = oracle::capped_lambda(th, 10);
  oracle::CircleSpace space = oracle::circle_space(th, lam);
  oracle::BordismSpec spec;
  spec.max_in = 2;
  spec.max_out = 2;
  spec.max_genus = 1;
  spec.max_components = 2;
  spec.zero_labels = true;
  double worst = 0.0;
  const int trials = 10;
  for (int i = 0; i < trials; ++i) {
    Bordism x = oracle::random_bordism(seed * 1000 + i, spec);
    Mat want = oracle::embed_blocks(space, eval_at(th, x, lam));
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<Layer> layers =
          oracle::random_decomposition(x, seed * 100 + i * 10 + rep);
      Mat got = oracle::restrict_equal_lambda(
          space, oracle::brute_contract(th, layers, x.n_in, lam), x.n_in, x.n_out);
      worst = std::max(worst, opnorm(got - want));
    }
  }
  double tol = 1e-9;
  return {{"suite", "gluing"},
          {"trials", trials},
          {"lambda_max", lam},
          {"max_residual", worst},
          {"tolerance", tol},
          {"pass", worst < tol}};
}

json suite_growth(const SpectralTheory& th) {
  json rows = json::array();
  bool pass = true;
  for (double t : {0.05, 0.1, 0.5}) {
    GrowthCertificate cert = check_growth(th, t);
    bool interior = th.entries.size() == 1 || cert.attained_lambda < th.top();
    rows.push_back({{"t", t},
                    {"c", cert.c},
                    {"attained_lambda", cert.attained_lambda},
                    {"interior", interior}});
    pass = pass && std::isfinite(cert.c) && interior;
  }
  return {{"suite", "growth"}, {"certificates", std::move(rows)}, {"pass", pass}};
}

int cmd_check(const std::string& theory_path, const std::string& suite,
              std::uint64_t seed) {
  SpectralTheory th = load_theory(theory_path);
  json report;
  if (suite == "semigroup")
    report = suite_semigroup(th, seed);
  else if (suite == "adjoint")
    report = suite_adjoint(th, seed);
  else if (suite == "gluing")
    report = suite_gluing(th, seed);
  else
    report = suite_growth(th);
  report["seed"] = seed;
  emit(report);
  return report["pass"].get<bool>() ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volume-dependent field theory evaluator"};
  app.require_subcommand(1);

  std::string theory_path, bordism_path, mesh_path;
  double eps = 1e-8;
  int genus = 0;
  std::string volume = "1";
  double lambda_max = 40.0;
  std::string mode = "short", group = "a1", cmax = "10", norm = "1/1";
  std::string suite = "semigroup";
  std::uint64_t seed = 0;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a theory file");
  validate_cmd->add_option("theory", theory_path)->required();

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a volume-labeled bordism");
  eval_cmd->add_option("theory", theory_path)->required();
  eval_cmd->add_option("bordism", bordism_path)->required();
  eval_cmd->add_option("--eps", eps, "tail bound target");

  CLI::App* partition_cmd = app.add_subcommand("partition", "closed-surface value");
  partition_cmd->add_option("theory", theory_path)->required();
  partition_cmd->add_option("--genus", genus)->required();
  partition_cmd->add_option("--volume", volume, "RE or RE,IM")->required();
  partition_cmd->add_option("--eps", eps, "tail bound target");

  CLI::App* lorentz_cmd = app.add_subcommand("lorentz", "imaginary-label evaluation");
  lorentz_cmd->add_option("theory", theory_path)->required();
  lorentz_cmd->add_option("bordism", bordism_path)->required();
  lorentz_cmd->add_option("--lambda-max", lambda_max)->required();

  CLI::App* limits_cmd = app.add_subcommand("limits", "topological limits");
  limits_cmd->add_option("theory", theory_path)->required();
  limits_cmd->add_option("bordism", bordism_path)->required();
  limits_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"short", "long"}));

  CLI::App* ym_cmd = app.add_subcommand("ym-gen", "generate a Yang-Mills theory");
  ym_cmd->add_option("--group", group)->required()->check(CLI::IsMember({"u1", "a1", "a2"}));
  ym_cmd->add_option("--cmax", cmax, "Casimir cutoff, integer or p/q")->required();
  ym_cmd->add_option("--norm", norm, "form normalization p/q");

  CLI::App* mv_cmd = app.add_subcommand("metric-volume", "total volume labels of a mesh");
  mv_cmd->add_option("mesh", mesh_path)->required();

  CLI::App* check_cmd = app.add_subcommand("check", "property-test suites");
  check_cmd->add_option("theory", theory_path)->required();
  check_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"semigroup", "adjoint", "gluing", "growth"}));
  check_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(theory_path);
    if (eval_cmd->parsed()) return cmd_eval(theory_path, bordism_path, eps);
    if (partition_cmd->parsed()) return cmd_partition(theory_path, genus, volume, eps);
    if (lorentz_cmd->parsed()) return cmd_lorentz(theory_path, bordism_path, lambda_max);
    if (limits_cmd->parsed()) return cmd_limits(theory_path, bordism_path, mode);
    if (ym_cmd->parsed()) return cmd_ym_gen(group, cmax, norm);
    if (mv_cmd->parsed()) return cmd_metric_volume(mesh_path);
    if (check_cmd->parsed()) return cmd_check(theory_path, suite, seed);
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kCertification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
