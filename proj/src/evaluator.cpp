#include "areal/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace areal {

Mat eval_component(const FrobeniusAlgebra& a, int genus, int n_in, int n_out) {
  int d = a.dim;
  Mat m2 = mult_matrix(a);

  Mat merge;
  if (n_in == 0) {
    merge = derive_unit(a);  // d x 1
  } else {
    merge = Mat::Identity(d, d);
    for (int i = 1; i < n_in; ++i) merge = m2 * kron(merge, Mat::Identity(d, d));
  }

  Mat h = handle_operator(a);
  Mat hg = Mat::Identity(d, d);
  for (int i = 0; i < genus; ++i) hg = h * hg;

  Mat split;
  if (n_out == 0) {
    split = Mat(1, d);
    for (int i = 0; i < d; ++i) split(0, i) = a.trace(i);
  } else {
    split = Mat::Identity(d, d);
    Mat w2 = comult_matrix(a);
    for (int i = 1; i < n_out; ++i) split = kron(split, Mat::Identity(d, d)) * w2;
  }
  return split * hg * merge;
}

int component_depth(const Component& c) {
  int a = static_cast<int>(c.in.size());
  int b = static_cast<int>(c.out.size());
  return (a == 0 ? 1 : a - 1) + 2 * c.genus + (b == 0 ? 1 : b - 1);
}

namespace {

struct Parts {
  std::vector<const Component*> boundary;
  std::vector<const Component*> closed;
};

Parts split_components(const Bordism& x) {
  Parts p;
  for (const Component& c : x.components) {
    if (c.in.empty() && c.out.empty())
      p.closed.push_back(&c);
    else
      p.boundary.push_back(&c);
  }
  return p;
}

// grouped-order routing for the boundary components
struct Wiring {
  std::vector<int> perm_in;   // global in slot -> grouped position
  std::vector<int> perm_out;  // global out slot -> grouped position
};

Wiring wiring_of(const Parts& parts, const Bordism& x) {
  Wiring w;
  w.perm_in.resize(x.n_in);
  w.perm_out.resize(x.n_out);
  int ioff = 0, ooff = 0;
  for (const Component* c : parts.boundary) {
    for (size_t r = 0; r < c->in.size(); ++r)
      w.perm_in[c->in[r]] = ioff + static_cast<int>(r);
    for (size_t r = 0; r < c->out.size(); ++r)
      w.perm_out[c->out[r]] = ooff + static_cast<int>(r);
    ioff += static_cast<int>(c->in.size());
    ooff += static_cast<int>(c->out.size());
  }
  return w;
}

}  // namespace

BlockOperator eval_at(const SpectralTheory& th, const Bordism& x, double lambda_max) {
  validate(x);
  Parts parts = split_components(x);
  Wiring wiring = wiring_of(parts, x);

  BlockOperator op;
  op.n_in = x.n_in;
  op.n_out = x.n_out;

  for (const Component* c : parts.closed) {
    cd v = 0.0;
    for (const SpectralEntry& e : th.entries) {
      if (e.lambda > lambda_max) break;
      v += std::exp(-c->label.value * e.lambda) *
           eval_component(e.block, c->genus, 0, 0)(0, 0);
    }
    op.closed_scalar *= v;
  }

  if (parts.boundary.empty() && (x.n_in > 0 || x.n_out > 0))
    throw Error("internal: boundary circles without owning components");

  if (x.n_in == 0 && x.n_out == 0) return op;

  for (const SpectralEntry& e : th.entries) {
    if (e.lambda > lambda_max) break;
    int d = e.block.dim;
    Mat t = Mat::Identity(1, 1);
    for (const Component* c : parts.boundary) {
      Mat f = eval_component(e.block, c->genus, static_cast<int>(c->in.size()),
                             static_cast<int>(c->out.size()));
      t = kron(t, std::exp(-c->label.value * e.lambda) * f);
    }
    Mat pin = slot_permutation(d, wiring.perm_in);
    Mat pout = slot_permutation(d, wiring.perm_out);
    op.blocks.push_back({e.lambda, op.closed_scalar * (pout.transpose() * t * pin)});
  }
  return op;
}

namespace {

double tail_at(const SpectralTheory& th, double c, int depth, double t,
               double re_s, double lambda_max, double eps) {
  // recompute the part's tail majorant at a shared (possibly larger) cutoff
  Cutoff cut = truncation_cutoff_raw(th, c, depth, t, re_s, eps);
  if (cut.lambda_max >= lambda_max) return cut.tail_bound;
  // larger cutoff only shrinks the tail; rescan from lambda_max
  double a = re_s - depth * t;
  double cd_pow = std::pow(std::max(c, 1.0), depth);
  if (th.policy == CutoffPolicy::Complete) {
    double s = 0.0;
    for (const SpectralEntry& e : th.entries)
      if (e.lambda > lambda_max) s += cd_pow * std::exp(-a * e.lambda);
    return s;
  }
  double s = 0.0;
  for (int k = 0; k < 100000; ++k) {
    double xv = lambda_max + k;
    double density = 0.0;
    for (size_t i = th.density_majorant.size(); i-- > 0;)
      density = density * xv + th.density_majorant[i];
    double term = std::max(density, 0.0) * std::exp(-a * xv);
    s += term;
    if (term < 1e-320 || term < 1e-18 * s) break;
  }
  return cd_pow * s;
}

}  // namespace

BlockOperator eval(const SpectralTheory& th, const Bordism& x, double eps) {
  validate(x);
  for (const Component& c : x.components)
    if (c.label.kind == LabelKind::Imaginary)
      throw Error("imaginary labels: use the Lorentzian evaluator");

  Parts parts = split_components(x);

  struct PartBudget {
    int depth;
    double re_s;
  };
  std::vector<PartBudget> budgets;
  if (!parts.boundary.empty()) {
    int d = 0;
    double re = 0.0;
    for (const Component* c : parts.boundary) {
      d += component_depth(*c);
      re += c->label.value.real();
    }
    budgets.push_back({d, re});
  }
  for (const Component* c : parts.closed)
    budgets.push_back({component_depth(*c), c->label.value.real()});

  bool certified = !budgets.empty();
  for (const PartBudget& b : budgets) certified = certified && b.re_s > 0.0;

  if (!certified) {
    BlockOperator op = eval_at(th, x, th.top());
    op.certified = false;
    op.bounded = false;
    op.tail_bound = 0.0;
    return op;
  }

  double eps_part = eps / static_cast<double>(budgets.size());
  double lambda_max = th.ground();
  std::vector<GrowthCertificate> certs;
  for (const PartBudget& b : budgets) {
    // scan growth budgets: small t trades a larger certificate constant for
    // more of re(s) left as decay, which usually wins
    GrowthCertificate best_cert;
    Cutoff best_cut{0.0, 0.0};
    bool found = false;
    std::string last_error;
    for (double f : {0.5, 0.125, 1.0 / 32, 1.0 / 128, 1.0 / 512}) {
      double t = f * b.re_s / std::max(b.depth, 1);
      GrowthCertificate cert = check_growth(th, t);
      try {
        Cutoff cut = truncation_cutoff_raw(th, cert.c, b.depth, t, b.re_s, eps_part);
        if (!found || cut.lambda_max < best_cut.lambda_max ||
            (cut.lambda_max == best_cut.lambda_max &&
             cut.tail_bound < best_cut.tail_bound)) {
          best_cert = cert;
          best_cut = cut;
          found = true;
        }
      } catch (const CertificationError& e) {
        last_error = e.what();
      }
    }
    if (!found) throw CertificationError(last_error);
    certs.push_back(best_cert);
    lambda_max = std::max(lambda_max, best_cut.lambda_max);
  }

  BlockOperator op = eval_at(th, x, lambda_max);
  op.certified = true;
  op.bounded = true;

  // combine per-part tails into a bound on the assembled operator
  std::vector<double> mags, tails;
  if (!parts.boundary.empty()) {
    double m = 0.0;
    for (const BlockEntry& b : op.blocks) m = std::max(m, opnorm(b.matrix));
    if (op.closed_scalar != cd(0.0)) m /= std::abs(op.closed_scalar);
    mags.push_back(m);
  }
  for (const Component* c : parts.closed) {
    cd v = 0.0;
    for (const SpectralEntry& e : th.entries) {
      if (e.lambda > lambda_max) break;
      v += std::exp(-c->label.value * e.lambda) *
           eval_component(e.block, c->genus, 0, 0)(0, 0);
    }
    mags.push_back(std::abs(v));
  }
  for (size_t i = 0; i < budgets.size(); ++i)
    tails.push_back(tail_at(th, certs[i].c, budgets[i].depth, certs[i].t,
                            budgets[i].re_s, lambda_max, eps_part));
  double with_tails = 1.0, without = 1.0;
  for (size_t i = 0; i < mags.size(); ++i) {
    with_tails *= mags[i] + tails[i];
    without *= mags[i];
  }
  op.tail_bound = with_tails - without;
  return op;
}

cd partition_function(const SpectralTheory& th, int genus, cd s, double eps) {
  return eval(th, closed_surface(genus, volume_label(s)), eps).scalar();
}

Mat boundary_gram(const FrobeniusAlgebra& a, int n) {
  return kron_pow(hermitian_gram(a), n);
}

BlockOperator chain(const SpectralTheory& th, const BlockOperator& a,
                    const BlockOperator& b) {
  (void)th;
  if (a.n_out != b.n_in) throw Error("operator shapes do not compose");
  BlockOperator res;
  res.n_in = a.n_in;
  res.n_out = b.n_out;
  res.closed_scalar = a.closed_scalar * b.closed_scalar;
  size_t i = 0, j = 0;
  while (i < a.blocks.size() && j < b.blocks.size()) {
    if (a.blocks[i].lambda < b.blocks[j].lambda)
      ++i;
    else if (b.blocks[j].lambda < a.blocks[i].lambda)
      ++j;
    else {
      res.blocks.push_back({a.blocks[i].lambda, b.blocks[j].matrix * a.blocks[i].matrix});
      ++i;
      ++j;
    }
  }
  return res;
}

double block_residual(const BlockOperator& a, const BlockOperator& b) {
  double r = 0.0;
  size_t i = 0, j = 0;
  while (i < a.blocks.size() || j < b.blocks.size()) {
    bool take_a = j >= b.blocks.size() ||
                  (i < a.blocks.size() && a.blocks[i].lambda < b.blocks[j].lambda);
    bool take_b = i >= a.blocks.size() ||
                  (j < b.blocks.size() && b.blocks[j].lambda < a.blocks[i].lambda);
    if (take_a && !take_b) {
      r = std::max(r, opnorm(a.blocks[i].matrix));
      ++i;
    } else if (take_b && !take_a) {
      r = std::max(r, opnorm(b.blocks[j].matrix));
      ++j;
    } else {
      r = std::max(r, opnorm(a.blocks[i].matrix - b.blocks[j].matrix));
      ++i;
      ++j;
    }
  }
  return r;
}

SemigroupCheck check_semigroup(const SpectralTheory& th, cd s, cd s2) {
  double top = th.top();
  BlockOperator v1 = eval_at(th, cylinder(volume_label(s)), top);
  BlockOperator v2 = eval_at(th, cylinder(volume_label(s2)), top);
  BlockOperator v12 = eval_at(th, cylinder(volume_label(s + s2)), top);
  SemigroupCheck out;
  out.semigroup_residual = block_residual(chain(th, v1, v2), v12);
  double norm_res = 0.0;
  for (size_t i = 0; i < th.entries.size(); ++i) {
    Mat g = hermitian_gram(th.entries[i].block);
    const Mat& m = v1.blocks[i].matrix;
    Mat adj = gram_adjoint(m, g, g);
    norm_res = std::max(norm_res, opnorm(adj * m - m * adj));
  }
  out.normality_residual = norm_res;
  return out;
}

double check_adjoint(const SpectralTheory& th, const Bordism& x) {
  BlockOperator a = eval_at(th, x, th.top());
  BlockOperator b = eval_at(th, conjugate_labels(dual(x)), th.top());
  double r = std::abs(b.closed_scalar - std::conj(a.closed_scalar));
  size_t bi = 0;
  for (const BlockEntry& blk : a.blocks) {
    while (bi < b.blocks.size() && b.blocks[bi].lambda < blk.lambda) ++bi;
    if (bi >= b.blocks.size() || b.blocks[bi].lambda != blk.lambda)
      throw Error("internal: mismatched truncations in adjoint check");
    const FrobeniusAlgebra* alg = nullptr;
    for (const SpectralEntry& e : th.entries)
      if (e.lambda == blk.lambda) alg = &e.block;
    Mat gin = boundary_gram(*alg, a.n_in);
    Mat gout = boundary_gram(*alg, a.n_out);
    Mat adj = gram_adjoint(blk.matrix, gin, gout);
    r = std::max(r, opnorm(b.blocks[bi].matrix - adj));
  }
  return r;
}

}  // namespace areal
