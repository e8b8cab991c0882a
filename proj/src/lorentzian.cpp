#include "areal/lorentzian.hpp"

#include <algorithm>
#include <cmath>

namespace areal {

namespace {

void require_boundary_everywhere(const Bordism& x) {
  for (const Component& c : x.components)
    if (c.in.empty() && c.out.empty())
      throw Error("closed components have no Lorentzian limit: every "
                  "component must touch the boundary");
}

LorentzOperator from_blocks(const SpectralTheory& th, const Bordism& x,
                            BlockOperator&& op) {
  LorentzOperator lz;
  lz.n_in = op.n_in;
  lz.n_out = op.n_out;
  lz.blocks = std::move(op.blocks);
  lz.bounded = std::all_of(x.components.begin(), x.components.end(),
                           [](const Component& c) {
                             return c.genus == 0 && c.in.size() == 1 &&
                                    c.out.size() == 1;
                           });
  for (const BlockEntry& b : lz.blocks) {
    const FrobeniusAlgebra* alg = nullptr;
    for (const SpectralEntry& e : th.entries)
      if (e.lambda == b.lambda) alg = &e.block;
    Mat gin = boundary_gram(*alg, lz.n_in);
    Mat gout = boundary_gram(*alg, lz.n_out);
    lz.growth.push_back({b.lambda, gram_opnorm(b.matrix, gin, gout)});
  }
  return lz;
}

}  // namespace

LorentzOperator eval_lorentzian(const SpectralTheory& th, const Bordism& x,
                                double lambda_max) {
  validate(x);
  require_boundary_everywhere(x);
  for (const Component& c : x.components)
    if (c.label.kind == LabelKind::Volume)
      throw Error("volume labels: use the heat-flow evaluator");
  return from_blocks(th, x, eval_at(th, x, lambda_max));
}

double unitarity_defect(const SpectralTheory& th, double zeta, double lambda_max) {
  LorentzOperator u = eval_lorentzian(th, cylinder(imaginary_label(zeta)), lambda_max);
  double r = 0.0;
  for (const BlockEntry& b : u.blocks) {
    const FrobeniusAlgebra* alg = nullptr;
    for (const SpectralEntry& e : th.entries)
      if (e.lambda == b.lambda) alg = &e.block;
    Mat g = hermitian_gram(*alg);
    Mat adj = gram_adjoint(b.matrix, g, g);
    r = std::max(r, opnorm(adj * b.matrix - Mat::Identity(b.matrix.cols(), b.matrix.cols())));
  }
  return r;
}

LorentzOperator short_distance(const SpectralTheory& th, const Bordism& x) {
  validate(x);
  require_boundary_everywhere(x);
  Bordism z = with_zero_labels(x);
  return from_blocks(th, z, eval_at(th, z, th.top()));
}

Mat long_distance(const SpectralTheory& th, const Bordism& x) {
  validate(x);
  if (std::abs(th.ground()) > 1e-14)
    throw Error("ground eigenvalue is not 0: normalize the spectrum first "
                "(shift by the ground eigenvalue)");
  Bordism z = with_zero_labels(x);
  BlockOperator op = eval_at(th, z, th.ground());
  if (x.n_in == 0 && x.n_out == 0) {
    Mat m(1, 1);
    m(0, 0) = op.scalar();
    return m;
  }
  return op.blocks.front().matrix;
}

double factorization_residual(const SpectralTheory& th, const Bordism& x,
                              const std::vector<cd>& s0, const std::vector<cd>& s1) {
  validate(x);
  require_boundary_everywhere(x);
  if (static_cast<int>(s0.size()) != x.n_in || static_cast<int>(s1.size()) != x.n_out)
    throw Error("one volume per boundary circle required");
  for (cd s : s0)
    if (!(s.real() > 0.0)) throw Error("incoming collar volumes need re > 0");
  for (cd s : s1)
    if (!(s.real() > 0.0)) throw Error("outgoing collar volumes need re > 0");

  Bordism glued = with_zero_labels(x);
  if (x.n_in > 0) {
    std::vector<Label> ls;
    for (cd s : s0) ls.push_back(volume_label(s));
    glued = compose(cylinders(ls), glued);
  }
  if (x.n_out > 0) {
    std::vector<Label> ls;
    for (cd s : s1) ls.push_back(volume_label(s));
    glued = compose(glued, cylinders(ls));
  }
  BlockOperator lhs = eval_at(th, glued, th.top());

  LorentzOperator l0 = short_distance(th, x);
  cd total0 = 0.0, total1 = 0.0;
  for (cd s : s0) total0 += s;
  for (cd s : s1) total1 += s;

  double r = 0.0;
  for (size_t i = 0; i < l0.blocks.size(); ++i) {
    double lambda = l0.blocks[i].lambda;
    Mat rhs = std::exp(-total1 * lambda) * l0.blocks[i].matrix * std::exp(-total0 * lambda);
    r = std::max(r, opnorm(lhs.blocks[i].matrix - rhs));
  }
  return r;
}

}  // namespace areal
