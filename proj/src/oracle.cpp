#include "areal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace areal {
namespace oracle {

CircleSpace circle_space(const SpectralTheory& th, double lambda_max) {
  CircleSpace s;
  for (const SpectralEntry& e : th.entries) {
    if (e.lambda > lambda_max) break;
    s.lambdas.push_back(e.lambda);
    s.offsets.push_back(s.total);
    s.dims.push_back(e.block.dim);
    s.total += e.block.dim;
  }
  return s;
}

namespace {

struct BlockData {
  const FrobeniusAlgebra* alg;
  Mat pinv;
  Vec unit;
};

std::vector<BlockData> block_data(const SpectralTheory& th, const CircleSpace& s) {
  std::vector<BlockData> out;
  for (size_t b = 0; b < s.lambdas.size(); ++b) {
    const FrobeniusAlgebra& a = th.entries[b].block;
    int n = a.dim;
    Mat p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cd v = 0.0;
        for (int k = 0; k < n; ++k) v += a.m(i, j, k) * a.trace(k);
        p(i, j) = v;
      }
    Vec u = p.colPivHouseholderQr().solve(a.trace);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cd v = (j == k) ? -1.0 : 0.0;
        for (int i = 0; i < n; ++i) v += u(i) * a.m(i, j, k);
        if (std::abs(v) > 1e-8)
          throw Error("oracle: block has no unit");
      }
    out.push_back({&a, p.inverse(), u});
  }
  return out;
}

// full one-circle elementary operators
Mat full_mult(const CircleSpace& s, const std::vector<BlockData>& bd) {
  Mat m = Mat::Zero(s.total, static_cast<Eigen::Index>(s.total) * s.total);
  for (size_t b = 0; b < s.dims.size(); ++b) {
    const FrobeniusAlgebra& a = *bd[b].alg;
    int o = s.offsets[b];
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < a.dim; ++k)
          m(o + k, static_cast<Eigen::Index>(o + i) * s.total + (o + j)) = a.m(i, j, k);
  }
  return m;
}

Mat full_comult(const CircleSpace& s, const std::vector<BlockData>& bd) {
  Mat w = Mat::Zero(static_cast<Eigen::Index>(s.total) * s.total, s.total);
  for (size_t b = 0; b < s.dims.size(); ++b) {
    const FrobeniusAlgebra& a = *bd[b].alg;
    int o = s.offsets[b];
    for (int k = 0; k < a.dim; ++k)
      for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
          cd v = 0.0;
          for (int p = 0; p < a.dim; ++p) v += a.m(k, p, i) * bd[b].pinv(p, j);
          w(static_cast<Eigen::Index>(o + i) * s.total + (o + j), o + k) = v;
        }
  }
  return w;
}

Mat full_unit(const CircleSpace& s, const std::vector<BlockData>& bd) {
  Mat u = Mat::Zero(s.total, 1);
  for (size_t b = 0; b < s.dims.size(); ++b)
    for (int i = 0; i < s.dims[b]; ++i) u(s.offsets[b] + i, 0) = bd[b].unit(i);
  return u;
}

Mat full_trace(const CircleSpace& s, const std::vector<BlockData>& bd) {
  Mat t = Mat::Zero(1, s.total);
  for (size_t b = 0; b < s.dims.size(); ++b)
    for (int i = 0; i < s.dims[b]; ++i) t(0, s.offsets[b] + i) = bd[b].alg->trace(i);
  return t;
}

Mat full_cylinder(const CircleSpace& s, cd label) {
  Mat c = Mat::Zero(s.total, s.total);
  for (size_t b = 0; b < s.dims.size(); ++b)
    for (int i = 0; i < s.dims[b]; ++i)
      c(s.offsets[b] + i, s.offsets[b] + i) = std::exp(-label * s.lambdas[b]);
  return c;
}

// Applies t (D^{a_out} x D^{a_in}) to row slots pos..pos+a_in-1 of r, a
// matrix with width row slots of size d each.
Mat apply_rows(const Mat& r, int width, int pos, const Mat& t, int a_in, int a_out,
               Eigen::Index d) {
  Eigen::Index pre = ipow(d, pos);
  Eigen::Index mid_in = ipow(d, a_in);
  Eigen::Index mid_out = ipow(d, a_out);
  Eigen::Index suf = ipow(d, width - pos - a_in);
  Mat out = Mat::Zero(pre * mid_out * suf, r.cols());
  for (Eigen::Index p = 0; p < pre; ++p)
    for (Eigen::Index mo = 0; mo < mid_out; ++mo)
      for (Eigen::Index mi = 0; mi < mid_in; ++mi) {
        cd coeff = t(mo, mi);
        if (coeff == cd(0.0)) continue;
        for (Eigen::Index sfx = 0; sfx < suf; ++sfx)
          out.row((p * mid_out + mo) * suf + sfx) +=
              coeff * r.row((p * mid_in + mi) * suf + sfx);
      }
  return out;
}

Mat permute_rows(const Mat& r, int width, const std::vector<int>& perm, Eigen::Index d) {
  Mat out = Mat::Zero(r.rows(), r.cols());
  for (Eigen::Index src = 0; src < r.rows(); ++src) {
    std::vector<int> in = unflatten(src, d, width);
    std::vector<int> moved(width);
    for (int i = 0; i < width; ++i) moved[perm[i]] = in[i];
    out.row(flatten(moved, d)) = r.row(src);
  }
  return out;
}

}  // namespace

Mat brute_contract(const SpectralTheory& th, const std::vector<Layer>& layers,
                   int n_in, double lambda_max) {
  CircleSpace s = circle_space(th, lambda_max);
  std::vector<BlockData> bd = block_data(th, s);
  Eigen::Index d = s.total;

  Mat m2 = full_mult(s, bd);
  Mat w2 = full_comult(s, bd);
  Mat u = full_unit(s, bd);
  Mat t = full_trace(s, bd);

  Mat r = Mat::Identity(ipow(d, n_in), ipow(d, n_in));
  int width = n_in;
  for (const Layer& l : layers) {
    if (l.width_in != width) throw Error("oracle: layer widths do not chain");
    switch (l.kind) {
      case PieceKind::Pants:
        r = apply_rows(r, width, l.position, m2, 2, 1, d);
        break;
      case PieceKind::Copants:
        r = apply_rows(r, width, l.position, w2, 1, 2, d);
        break;
      case PieceKind::Disk:
        r = apply_rows(r, width, l.position, t, 1, 0, d);
        break;
      case PieceKind::Codisk:
        r = apply_rows(r, width, l.position, u, 0, 1, d);
        break;
      case PieceKind::Cylinder:
        r = apply_rows(r, width, l.position, full_cylinder(s, l.label.value), 1, 1, d);
        break;
      case PieceKind::Permutation:
        r = permute_rows(r, width, l.perm, d);
        break;
    }
    width = l.width_out;
  }
  return r;
}

Mat embed_blocks(const CircleSpace& s, const BlockOperator& op) {
  Eigen::Index d = s.total;
  Mat full = Mat::Zero(ipow(d, op.n_out), ipow(d, op.n_in));
  if (op.n_in == 0 && op.n_out == 0) {
    full(0, 0) = op.scalar();
    return full;
  }
  for (const BlockEntry& blk : op.blocks) {
    size_t b = 0;
    while (b < s.lambdas.size() && s.lambdas[b] != blk.lambda) ++b;
    if (b == s.lambdas.size()) continue;
    int dim = s.dims[b], off = s.offsets[b];
    Eigen::Index rows = ipow(dim, op.n_out), cols = ipow(dim, op.n_in);
    for (Eigen::Index i = 0; i < rows; ++i) {
      std::vector<int> mi = unflatten(i, dim, op.n_out);
      for (int& v : mi) v += off;
      Eigen::Index gi = flatten(mi, d);
      for (Eigen::Index j = 0; j < cols; ++j) {
        std::vector<int> mj = unflatten(j, dim, op.n_in);
        for (int& v : mj) v += off;
        full(gi, flatten(mj, d)) = blk.matrix(i, j);
      }
    }
  }
  return full;
}

Mat restrict_equal_lambda(const CircleSpace& s, const Mat& full, int n_in,
                          int n_out) {
  std::vector<int> block_of(s.total);
  for (size_t b = 0; b < s.dims.size(); ++b)
    for (int i = 0; i < s.dims[b]; ++i) block_of[s.offsets[b] + i] = static_cast<int>(b);
  auto sector = [&](Eigen::Index flat, int n) {
    std::vector<int> idx = unflatten(flat, s.total, n);
    int b = block_of[idx[0]];
    for (int v : idx)
      if (block_of[v] != b) return -1;
    return b;
  };
  Mat out = Mat::Zero(full.rows(), full.cols());
  for (Eigen::Index i = 0; i < full.rows(); ++i) {
    int bo = n_out == 0 ? -2 : sector(i, n_out);
    if (bo == -1) continue;
    for (Eigen::Index j = 0; j < full.cols(); ++j) {
      int bi = n_in == 0 ? -2 : sector(j, n_in);
      if (bi == -1) continue;
      if (bi != -2 && bo != -2 && bi != bo) continue;
      out(i, j) = full(i, j);
    }
  }
  return out;
}

std::vector<Layer> random_decomposition(const Bordism& x, std::uint64_t seed) {
  validate(x);
  std::mt19937_64 rng(seed);
  int k = static_cast<int>(x.components.size());
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Layer> layers;
  auto push = [&](PieceKind kind, int pos, int w_in, int w_out, Label label) {
    Layer l;
    l.kind = kind;
    l.position = pos;
    l.width_in = w_in;
    l.width_out = w_out;
    l.label = label;
    layers.push_back(std::move(l));
  };

  std::vector<int> in_offset(k + 1, 0);
  for (int i = 0; i < k; ++i)
    in_offset[i + 1] =
        in_offset[i] + static_cast<int>(x.components[order[i]].in.size());
  std::vector<int> perm_in(x.n_in);
  for (int i = 0; i < k; ++i) {
    const Component& c = x.components[order[i]];
    for (size_t r = 0; r < c.in.size(); ++r)
      perm_in[c.in[r]] = in_offset[i] + static_cast<int>(r);
  }
  bool id_in = true;
  for (int q = 0; q < x.n_in; ++q) id_in = id_in && perm_in[q] == q;
  if (!id_in) {
    Layer l;
    l.kind = PieceKind::Permutation;
    l.width_in = l.width_out = x.n_in;
    l.perm = perm_in;
    layers.push_back(std::move(l));
  }

  int width = x.n_in;
  std::vector<int> out_offset(k + 1, 0);
  for (int i = 0; i < k; ++i)
    out_offset[i + 1] =
        out_offset[i] + static_cast<int>(x.components[order[i]].out.size());

  for (int ci = 0; ci < k; ++ci) {
    const Component& comp = x.components[order[ci]];
    int off = out_offset[ci];
    int a = static_cast<int>(comp.in.size());
    int b = static_cast<int>(comp.out.size());

    std::vector<int> piece;  // piece id per local circle
    if (a == 0) {
      push(PieceKind::Codisk, off, width, width + 1, zero_label());
      width += 1;
      piece = {0};
    } else {
      piece.resize(a);
      for (int i = 0; i < a; ++i) piece[i] = i;
    }

    int merges = a == 0 ? 0 : a - 1;
    int handles = comp.genus;
    int splits = b == 0 ? 0 : b - 1;
    bool cyl = true;
    while (merges + handles + splits > 0 || cyl) {
      int total = merges + handles + splits + (cyl ? 1 : 0);
      int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(total));
      int l = static_cast<int>(piece.size());
      if (pick < merges) {
        std::vector<int> cands;
        for (int q = 0; q + 1 < l; ++q)
          if (piece[q] != piece[q + 1]) cands.push_back(q);
        int q = cands[rng() % cands.size()];
        push(PieceKind::Pants, off + q, width, width - 1, zero_label());
        width -= 1;
        int dead = piece[q + 1], kept = piece[q];
        piece.erase(piece.begin() + q + 1);
        for (int& p : piece)
          if (p == dead) p = kept;
        --merges;
      } else if (pick < merges + handles) {
        int q = static_cast<int>(rng() % static_cast<std::uint64_t>(l));
        push(PieceKind::Copants, off + q, width, width + 1, zero_label());
        push(PieceKind::Pants, off + q, width + 1, width, zero_label());
        --handles;
      } else if (pick < merges + handles + splits) {
        int q = static_cast<int>(rng() % static_cast<std::uint64_t>(l));
        push(PieceKind::Copants, off + q, width, width + 1, zero_label());
        width += 1;
        int id = piece[q];
        piece.insert(piece.begin() + q, id);
        --splits;
      } else {
        int q = static_cast<int>(rng() % static_cast<std::uint64_t>(l));
        push(PieceKind::Cylinder, off + q, width, width, comp.label);
        cyl = false;
      }
    }
    if (b == 0) {
      push(PieceKind::Disk, off, width, width - 1, zero_label());
      width -= 1;
    }
  }

  std::vector<int> perm_out(x.n_out);
  for (int i = 0; i < k; ++i) {
    const Component& c = x.components[order[i]];
    for (size_t r = 0; r < c.out.size(); ++r)
      perm_out[out_offset[i] + static_cast<int>(r)] = c.out[r];
  }
  bool id_out = true;
  for (int q = 0; q < x.n_out; ++q) id_out = id_out && perm_out[q] == q;
  if (!id_out) {
    Layer l;
    l.kind = PieceKind::Permutation;
    l.width_in = l.width_out = x.n_out;
    l.perm = perm_out;
    layers.push_back(std::move(l));
  }
  return layers;
}

Bordism random_bordism(std::uint64_t seed, const BordismSpec& spec) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::uniform_real_distribution<double> re(0.3, 1.5), im(-0.5, 0.5);

  for (;;) {
    Bordism x;
    x.n_in = pick(0, spec.max_in);
    x.n_out = pick(0, spec.max_out);
    int k = pick(1, spec.max_components);
    std::vector<Component> comps(k);
    for (int q = 0; q < x.n_in; ++q) comps[pick(0, k - 1)].in.push_back(q);
    for (int q = 0; q < x.n_out; ++q) comps[pick(0, k - 1)].out.push_back(q);
    for (Component& c : comps) {
      if (c.in.empty() && c.out.empty()) {
        if (!spec.allow_closed) continue;
        if (spec.imaginary_labels) continue;  // no Lorentzian limit there
      }
      c.genus = pick(0, spec.max_genus);
      if (spec.zero_labels && rng() % 4 == 0)
        c.label = zero_label();
      else if (spec.imaginary_labels)
        c.label = imaginary_label(im(rng) * 4.0);
      else
        c.label = volume_label({re(rng), im(rng)});
      x.components.push_back(std::move(c));
    }
    if (x.components.empty()) continue;
    int ins = 0, outs = 0;
    for (const Component& c : x.components) {
      ins += static_cast<int>(c.in.size());
      outs += static_cast<int>(c.out.size());
    }
    if (ins != x.n_in || outs != x.n_out) continue;  // a slot fell in a dropped component
    validate(x);
    return x;
  }
}

double capped_lambda(const SpectralTheory& th, int max_dim) {
  int total = th.entries.front().block.dim;
  double lam = th.ground();
  for (size_t i = 1; i < th.entries.size(); ++i) {
    total += th.entries[i].block.dim;
    if (total > max_dim) break;
    lam = th.entries[i].lambda;
  }
  return lam;
}

cd closed_form_genus(const SpectralTheory& th, int genus, cd s) {
  CircleSpace space = circle_space(th, th.top());
  std::vector<BlockData> bd = block_data(th, space);
  cd total = 0.0;
  for (size_t b = 0; b < space.lambdas.size(); ++b) {
    const FrobeniusAlgebra& a = *bd[b].alg;
    int n = a.dim;
    // h = m . w from the rederived coproduct
    Mat h = Mat::Zero(n, n);
    for (int kk = 0; kk < n; ++kk)
      for (int ll = 0; ll < n; ++ll) {
        cd v = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p)
              v += a.m(kk, p, i) * bd[b].pinv(p, j) * a.m(i, j, ll);
        h(ll, kk) = v;
      }
    Vec v = bd[b].unit;
    for (int g = 0; g < genus; ++g) v = h * v;
    cd scalar = 0.0;
    for (int i = 0; i < n; ++i) scalar += a.trace(i) * v(i);
    total += std::exp(-s * space.lambdas[b]) * scalar;
  }
  return total;
}

}  // namespace oracle
}  // namespace areal
