#include "areal/json_io.hpp"

#include <fstream>

namespace areal {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("malformed JSON: " + what);
}

}  // namespace

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

cd parse_complex(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "complex values are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat parse_matrix(const json& j) {
  require(j.is_array() && !j.empty() && j[0].is_array(), "matrix is rows of complex");
  Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    require(j[r].is_array() && static_cast<Eigen::Index>(j[r].size()) == cols,
            "matrix rows have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
  }
  return m;
}

json algebra_json(const FrobeniusAlgebra& a) {
  json mult = json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      json row = json::array();
      for (int k = 0; k < a.dim; ++k) row.push_back(complex_json(a.m(i, j, k)));
      mult.push_back(std::move(row));
    }
  json trace = json::array();
  for (int i = 0; i < a.dim; ++i) trace.push_back(complex_json(a.trace(i)));
  return {{"dim", a.dim},
          {"mult", std::move(mult)},
          {"trace", std::move(trace)},
          {"conj", matrix_json(a.conj_mat)}};
}

FrobeniusAlgebra parse_algebra(const json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("mult") &&
              j.contains("trace") && j.contains("conj"),
          "algebra needs dim, mult, trace, conj");
  FrobeniusAlgebra a;
  a.dim = j.at("dim").get<int>();
  require(a.dim > 0, "dim must be positive");
  size_t n = static_cast<size_t>(a.dim);
  const json& mult = j.at("mult");
  require(mult.is_array() && mult.size() == n * n, "mult has dim^2 rows");
  a.mult.assign(n * n * n, cd(0.0));
  for (size_t p = 0; p < n * n; ++p) {
    const json& row = mult[p];
    require(row.is_array() && row.size() == n, "mult rows have dim entries");
    for (size_t k = 0; k < n; ++k) a.mult[p * n + k] = parse_complex(row[k]);
  }
  const json& tr = j.at("trace");
  require(tr.is_array() && tr.size() == n, "trace has dim entries");
  a.trace = Vec(a.dim);
  for (size_t i = 0; i < n; ++i) a.trace(static_cast<Eigen::Index>(i)) = parse_complex(tr[i]);
  a.conj_mat = parse_matrix(j.at("conj"));
  require(a.conj_mat.rows() == a.dim && a.conj_mat.cols() == a.dim,
          "conj is dim x dim");
  return a;
}

json theory_json(const SpectralTheory& th) {
  json entries = json::array();
  for (const SpectralEntry& e : th.entries)
    entries.push_back({{"lambda", e.lambda}, {"block", algebra_json(e.block)}});
  json cutoff = {{"policy", th.policy == CutoffPolicy::Complete ? "complete" : "truncated"},
                 {"density", th.density_majorant}};
  return {{"entries", std::move(entries)}, {"cutoff", std::move(cutoff)}};
}

SpectralTheory parse_theory(const json& j) {
  require(j.is_object() && j.contains("entries") && j.at("entries").is_array() &&
              !j.at("entries").empty(),
          "theory needs a nonempty entries array");
  SpectralTheory th;
  for (const json& e : j.at("entries")) {
    require(e.is_object() && e.contains("lambda") && e.contains("block"),
            "entries need lambda and block");
    SpectralEntry entry;
    entry.lambda = e.at("lambda").get<double>();
    entry.block = parse_algebra(e.at("block"));
    th.entries.push_back(std::move(entry));
  }
  if (j.contains("cutoff")) {
    const json& c = j.at("cutoff");
    std::string policy = c.value("policy", "complete");
    require(policy == "complete" || policy == "truncated",
            "cutoff policy is complete or truncated");
    th.policy = policy == "complete" ? CutoffPolicy::Complete : CutoffPolicy::Truncated;
    if (c.contains("density"))
      th.density_majorant = c.at("density").get<std::vector<double>>();
  }
  return th;
}

json label_json(const Label& l) {
  const char* kind = l.kind == LabelKind::Volume      ? "volume"
                     : l.kind == LabelKind::Imaginary ? "imaginary"
                                                      : "zero";
  return {{"kind", kind}, {"value", complex_json(l.value)}};
}

Label parse_label(const json& j) {
  require(j.is_object() && j.contains("kind"), "label needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  Label l;
  if (kind == "volume")
    l.kind = LabelKind::Volume;
  else if (kind == "imaginary")
    l.kind = LabelKind::Imaginary;
  else if (kind == "zero")
    l.kind = LabelKind::Zero;
  else
    throw Error("malformed JSON: unknown label kind " + kind);
  if (j.contains("value")) l.value = parse_complex(j.at("value"));
  check_label(l);
  return l;
}

json bordism_json(const Bordism& x) {
  json comps = json::array();
  for (const Component& c : x.components)
    comps.push_back({{"genus", c.genus},
                     {"in", c.in},
                     {"out", c.out},
                     {"label", label_json(c.label)}});
  return {{"n_in", x.n_in}, {"n_out", x.n_out}, {"components", std::move(comps)}};
}

Bordism parse_bordism(const json& j) {
  require(j.is_object() && j.contains("n_in") && j.contains("n_out") &&
              j.contains("components"),
          "bordism needs n_in, n_out, components");
  Bordism x;
  x.n_in = j.at("n_in").get<int>();
  x.n_out = j.at("n_out").get<int>();
  for (const json& c : j.at("components")) {
    Component comp;
    comp.genus = c.value("genus", 0);
    if (c.contains("in")) comp.in = c.at("in").get<std::vector<int>>();
    if (c.contains("out")) comp.out = c.at("out").get<std::vector<int>>();
    if (c.contains("label")) comp.label = parse_label(c.at("label"));
    x.components.push_back(std::move(comp));
  }
  validate(x);
  return x;
}

json block_operator_json(const BlockOperator& op) {
  json blocks = json::array();
  for (const BlockEntry& b : op.blocks)
    blocks.push_back({{"lambda", b.lambda}, {"matrix", matrix_json(b.matrix)}});
  json tail = op.certified ? json(op.tail_bound) : json(nullptr);
  return {{"n_in", op.n_in},
          {"n_out", op.n_out},
          {"blocks", std::move(blocks)},
          {"tail_bound", std::move(tail)},
          {"bounded", op.bounded},
          {"closed_scalar", complex_json(op.closed_scalar)}};
}

BlockOperator parse_block_operator(const json& j) {
  require(j.is_object() && j.contains("blocks"), "operator needs blocks");
  BlockOperator op;
  op.n_in = j.value("n_in", 0);
  op.n_out = j.value("n_out", 0);
  for (const json& b : j.at("blocks"))
    op.blocks.push_back({b.at("lambda").get<double>(), parse_matrix(b.at("matrix"))});
  if (j.contains("tail_bound") && !j.at("tail_bound").is_null()) {
    op.certified = true;
    op.tail_bound = j.at("tail_bound").get<double>();
  }
  op.bounded = j.value("bounded", false);
  if (j.contains("closed_scalar")) op.closed_scalar = parse_complex(j.at("closed_scalar"));
  return op;
}

json lorentz_json(const LorentzOperator& op) {
  json blocks = json::array();
  for (const BlockEntry& b : op.blocks)
    blocks.push_back({{"lambda", b.lambda}, {"matrix", matrix_json(b.matrix)}});
  json growth = json::array();
  for (const GrowthPoint& g : op.growth)
    growth.push_back({{"lambda", g.lambda}, {"norm", g.norm}});
  return {{"n_in", op.n_in},
          {"n_out", op.n_out},
          {"blocks", std::move(blocks)},
          {"bounded", op.bounded},
          {"domain", "check_space"},
          {"growth", std::move(growth)}};
}

LorentzOperator parse_lorentz(const json& j) {
  require(j.is_object() && j.contains("blocks"), "operator needs blocks");
  LorentzOperator op;
  op.n_in = j.value("n_in", 0);
  op.n_out = j.value("n_out", 0);
  for (const json& b : j.at("blocks"))
    op.blocks.push_back({b.at("lambda").get<double>(), parse_matrix(b.at("matrix"))});
  op.bounded = j.value("bounded", false);
  if (j.contains("growth"))
    for (const json& g : j.at("growth"))
      op.growth.push_back({g.at("lambda").get<double>(), g.at("norm").get<double>()});
  return op;
}

json mesh_json(const SampledDensity& d) {
  json tris = json::array();
  for (const Triangle& t : d.triangles)
    tris.push_back({{"area", t.area}, {"density", complex_json(t.density)}});
  json comps = json::array();
  for (const std::vector<int>& c : d.components) comps.push_back(c);
  return {{"triangles", std::move(tris)}, {"components", std::move(comps)}};
}

SampledDensity parse_mesh(const json& j) {
  require(j.is_object() && j.contains("triangles"), "mesh needs triangles");
  SampledDensity d;
  for (const json& t : j.at("triangles")) {
    require(t.is_object() && t.contains("area") && t.contains("density"),
            "triangles need area and density");
    d.triangles.push_back({t.at("area").get<double>(), parse_complex(t.at("density"))});
  }
  if (j.contains("components"))
    for (const json& c : j.at("components"))
      d.components.push_back(c.get<std::vector<int>>());
  return d;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

}  // namespace areal
