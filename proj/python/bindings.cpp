#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "areal/json_io.hpp"
#include "areal/oracle.hpp"
#include "areal/yang_mills.hpp"

namespace py = pybind11;

namespace {

using namespace areal;

SpectralTheory theory_of(const std::string& s) {
  SpectralTheory raw = parse_theory(json::parse(s));
  return build_theory(std::move(raw.entries), raw.policy, raw.density_majorant);
}

Bordism bordism_of(const std::string& s) { return parse_bordism(json::parse(s)); }

Mat mat_of(const std::vector<std::vector<cd>>& rows) {
  if (rows.empty()) throw Error("empty matrix");
  Mat m(static_cast<Eigen::Index>(rows.size()),
        static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error("ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

Rat rat_of(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string py_validate(const std::string& theory) {
  SpectralTheory raw = parse_theory(json::parse(theory));
  json blocks = json::array();
  bool pass = true;
  for (size_t i = 0; i + 1 < raw.entries.size(); ++i)
    pass = pass && raw.entries[i].lambda < raw.entries[i + 1].lambda;
  for (const SpectralEntry& e : raw.entries) {
    ValidationReport r = validate(e.block, 1e-10);
    json checks = json::array();
    for (const AxiomCheck& c : r.checks)
      checks.push_back({{"name", c.name}, {"residual", c.residual}, {"passed", c.passed}});
    blocks.push_back({{"lambda", e.lambda}, {"pass", r.pass}, {"checks", std::move(checks)}});
    pass = pass && r.pass;
  }
  return json{{"blocks", std::move(blocks)}, {"pass", pass}}.dump();
}

std::string py_ym_generate(const std::string& group, const std::string& cmax,
                           const std::string& norm) {
  GroupType type = group == "u1"   ? GroupType::U1
                   : group == "a1" ? GroupType::A1
                   : group == "a2" ? GroupType::A2
                                   : throw Error("unknown group " + group);
  return theory_json(ym_theory(build_datum(type, rat_of(norm)), rat_of(cmax))).dump();
}

std::string py_eval(const std::string& theory, const std::string& bordism, double eps) {
  return block_operator_json(eval(theory_of(theory), bordism_of(bordism), eps)).dump();
}

cd py_partition(const std::string& theory, int genus, cd s, double eps) {
  return partition_function(theory_of(theory), genus, s, eps);
}

std::string py_lorentz(const std::string& theory, const std::string& bordism,
                       double lambda_max) {
  return lorentz_json(eval_lorentzian(theory_of(theory), bordism_of(bordism), lambda_max))
      .dump();
}

std::string py_limits(const std::string& theory, const std::string& bordism,
                      const std::string& mode) {
  SpectralTheory th = theory_of(theory);
  Bordism x = bordism_of(bordism);
  if (mode == "short") return lorentz_json(short_distance(th, x)).dump();
  if (mode == "long")
    return json{{"mode", "long"}, {"matrix", matrix_json(long_distance(th, x))}}.dump();
  throw Error("unknown mode " + mode);
}

std::string py_metric_volume(const std::string& mesh) {
  std::vector<Label> labels = total_volume(parse_mesh(json::parse(mesh)));
  json j = json::array();
  for (const Label& l : labels) j.push_back(label_json(l));
  return j.dump();
}

std::string py_allowability(const std::vector<std::vector<cd>>& g) {
  AllowabilityReport r = allowability(mat_of(g));
  const char* verdict = r.verdict == Allowability::Allowable      ? "allowable"
                        : r.verdict == Allowability::NotAllowable ? "not_allowable"
                                                                  : "undetermined";
  json lambdas = json::array();
  for (cd l : r.lambdas) lambdas.push_back(complex_json(l));
  return json{{"verdict", verdict},
              {"pencil_ok", r.pencil_ok},
              {"used_fallback", r.used_fallback},
              {"lambdas", std::move(lambdas)},
              {"arg_sum", r.arg_sum}}
      .dump();
}

cd py_sqrt_det(const std::vector<std::vector<cd>>& g) { return sqrt_det(mat_of(g)); }

std::string py_classify_decay(double alpha, int degree) {
  switch (classify_rigged({alpha, degree})) {
    case RiggedClass::CheckSpace: return "check_space";
    case RiggedClass::HatOnly: return "hat_only";
    default: return "neither";
  }
}

std::pair<double, double> py_semigroup_residual(const std::string& theory, cd s, cd s2) {
  SemigroupCheck c = check_semigroup(theory_of(theory), s, s2);
  return {c.semigroup_residual, c.normality_residual};
}

double py_adjoint_residual(const std::string& theory, const std::string& bordism) {
  return check_adjoint(theory_of(theory), bordism_of(bordism));
}

double py_unitarity_defect(const std::string& theory, double zeta, double lambda_max) {
  return unitarity_defect(theory_of(theory), zeta, lambda_max);
}

}  // namespace

PYBIND11_MODULE(_areal, m) {
  m.doc() = "volume-dependent field theory evaluation core";
  py::register_exception<CertificationError>(m, "CertificationError");

  m.def("validate_theory", &py_validate, py::arg("theory"));
  m.def("ym_generate", &py_ym_generate, py::arg("group"), py::arg("cmax"),
        py::arg("norm") = "1/1");
  m.def("eval_bordism", &py_eval, py::arg("theory"), py::arg("bordism"),
        py::arg("eps") = 1e-8);
  m.def("partition", &py_partition, py::arg("theory"), py::arg("genus"),
        py::arg("volume"), py::arg("eps") = 1e-8);
  m.def("lorentz_eval", &py_lorentz, py::arg("theory"), py::arg("bordism"),
        py::arg("lambda_max"));
  m.def("limits", &py_limits, py::arg("theory"), py::arg("bordism"), py::arg("mode"));
  m.def("metric_volume", &py_metric_volume, py::arg("mesh"));
  m.def("allowability", &py_allowability, py::arg("g"));
  m.def("sqrt_det", &py_sqrt_det, py::arg("g"));
  m.def("classify_decay", &py_classify_decay, py::arg("alpha"), py::arg("degree"));
  m.def("semigroup_residual", &py_semigroup_residual, py::arg("theory"), py::arg("s"),
        py::arg("s2"));
  m.def("adjoint_residual", &py_adjoint_residual, py::arg("theory"), py::arg("bordism"));
  m.def("unitarity_defect", &py_unitarity_defect, py::arg("theory"), py::arg("zeta"),
        py::arg("lambda_max"));
}
