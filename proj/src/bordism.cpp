#include "areal/bordism.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace areal {

namespace {

LabelKind classify_value(cd v) {
  if (v == cd(0.0)) return LabelKind::Zero;
  if (v.real() > 0.0) return LabelKind::Volume;
  if (v.real() == 0.0) return LabelKind::Imaginary;
  throw Error("label value has negative real part");
}

}  // namespace

Label volume_label(cd s) { return {classify_value(s), s}; }
Label zero_label() { return {LabelKind::Zero, 0.0}; }
Label imaginary_label(double zeta) { return volume_label(cd(0.0, zeta)); }

void check_label(const Label& l) {
  if (classify_value(l.value) != l.kind)
    throw Error("label kind does not match its value");
}

Label add(const Label& a, const Label& b) { return volume_label(a.value + b.value); }

void validate(const Bordism& x) {
  if (x.n_in < 0 || x.n_out < 0) throw Error("negative boundary count");
  std::vector<int> in_seen(x.n_in, 0), out_seen(x.n_out, 0);
  for (const Component& c : x.components) {
    if (c.genus < 0) throw Error("negative genus");
    check_label(c.label);
    if (!std::is_sorted(c.in.begin(), c.in.end()) ||
        !std::is_sorted(c.out.begin(), c.out.end()))
      throw Error("slot lists must be sorted ascending");
    for (int s : c.in) {
      if (s < 0 || s >= x.n_in) throw Error("in slot out of range");
      if (in_seen[s]++) throw Error("in slot claimed twice");
    }
    for (int s : c.out) {
      if (s < 0 || s >= x.n_out) throw Error("out slot out of range");
      if (out_seen[s]++) throw Error("out slot claimed twice");
    }
  }
  for (int v : in_seen)
    if (!v) throw Error("unclaimed in slot");
  for (int v : out_seen)
    if (!v) throw Error("unclaimed out slot");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Bordism compose(const Bordism& x, const Bordism& y) {
  validate(x);
  validate(y);
  if (x.n_out != y.n_in)
    throw Error("cannot glue: " + std::to_string(x.n_out) + " outgoing vs " +
                std::to_string(y.n_in) + " incoming circles");
  int nx = static_cast<int>(x.components.size());
  int ny = static_cast<int>(y.components.size());

  std::vector<int> out_owner(x.n_out, -1), in_owner(y.n_in, -1);
  for (int i = 0; i < nx; ++i)
    for (int s : x.components[i].out) out_owner[s] = i;
  for (int j = 0; j < ny; ++j)
    for (int s : y.components[j].in) in_owner[s] = nx + j;

  UnionFind uf(nx + ny);
  for (int s = 0; s < x.n_out; ++s) uf.unite(out_owner[s], in_owner[s]);

  // classes keyed by smallest member, in that order
  std::vector<int> roots;
  std::vector<int> class_of(nx + ny, -1);
  for (int i = 0; i < nx + ny; ++i) {
    int r = uf.find(i);
    if (class_of[r] < 0) {
      class_of[r] = static_cast<int>(roots.size());
      roots.push_back(r);
    }
  }

  Bordism res;
  res.n_in = x.n_in;
  res.n_out = y.n_out;
  res.components.assign(roots.size(), Component{});
  std::vector<int> chi(roots.size(), 0);
  for (int i = 0; i < nx + ny; ++i) {
    const Component& c = i < nx ? x.components[i] : y.components[i - nx];
    Component& dst = res.components[class_of[uf.find(i)]];
    chi[class_of[uf.find(i)]] +=
        2 - 2 * c.genus - static_cast<int>(c.in.size() + c.out.size());
    dst.label = add(dst.label, c.label);
    if (i < nx)
      dst.in.insert(dst.in.end(), c.in.begin(), c.in.end());
    else
      dst.out.insert(dst.out.end(), c.out.begin(), c.out.end());
  }
  for (size_t k = 0; k < res.components.size(); ++k) {
    Component& c = res.components[k];
    std::sort(c.in.begin(), c.in.end());
    std::sort(c.out.begin(), c.out.end());
    int b = static_cast<int>(c.in.size() + c.out.size());
    int twice_g = 2 - chi[k] - b;
    if (twice_g < 0 || twice_g % 2 != 0)
      throw Error("internal: inconsistent Euler characteristic in gluing");
    c.genus = twice_g / 2;
  }
  return res;
}

Bordism disjoint_union(const Bordism& x, const Bordism& y) {
  Bordism res = x;
  res.n_in += y.n_in;
  res.n_out += y.n_out;
  for (Component c : y.components) {
    for (int& s : c.in) s += x.n_in;
    for (int& s : c.out) s += x.n_out;
    res.components.push_back(std::move(c));
  }
  return res;
}

Bordism dual(const Bordism& x) {
  Bordism res;
  res.n_in = x.n_out;
  res.n_out = x.n_in;
  for (const Component& c : x.components)
    res.components.push_back({c.genus, c.out, c.in, c.label});
  return res;
}

Bordism conjugate_labels(const Bordism& x) {
  Bordism res = x;
  for (Component& c : res.components) c.label = volume_label(std::conj(c.label.value));
  return res;
}

Bordism with_zero_labels(const Bordism& x) {
  Bordism res = x;
  for (Component& c : res.components) c.label = zero_label();
  return res;
}

namespace {

auto component_key(const Component& c) {
  return std::make_tuple(c.in, c.out, c.genus, static_cast<int>(c.label.kind),
                         c.label.value.real(), c.label.value.imag());
}

}  // namespace

Bordism normal_form(const Bordism& x) {
  Bordism res = x;
  for (Component& c : res.components) {
    std::sort(c.in.begin(), c.in.end());
    std::sort(c.out.begin(), c.out.end());
  }
  std::sort(res.components.begin(), res.components.end(),
            [](const Component& a, const Component& b) {
              return component_key(a) < component_key(b);
            });
  return res;
}

bool equal(const Bordism& x, const Bordism& y) {
  Bordism a = normal_form(x), b = normal_form(y);
  if (a.n_in != b.n_in || a.n_out != b.n_out) return false;
  if (a.components.size() != b.components.size()) return false;
  for (size_t i = 0; i < a.components.size(); ++i)
    if (component_key(a.components[i]) != component_key(b.components[i]))
      return false;
  return true;
}

std::vector<Layer> decompose(const Bordism& x) {
  validate(x);
  int k = static_cast<int>(x.components.size());

  std::vector<int> in_offset(k + 1, 0), out_offset(k + 1, 0);
  for (int c = 0; c < k; ++c) {
    in_offset[c + 1] = in_offset[c] + static_cast<int>(x.components[c].in.size());
    out_offset[c + 1] = out_offset[c] + static_cast<int>(x.components[c].out.size());
  }

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

  // route global in slots to component-grouped order
  std::vector<int> perm_in(x.n_in);
  for (int c = 0; c < k; ++c)
    for (size_t r = 0; r < x.components[c].in.size(); ++r)
      perm_in[x.components[c].in[r]] = in_offset[c] + static_cast<int>(r);
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
  for (int c = 0; c < k; ++c) {
    const Component& comp = x.components[c];
    int off = out_offset[c];  // processed components hold the left block
    int a = static_cast<int>(comp.in.size());
    int b = static_cast<int>(comp.out.size());
    if (a == 0) {
      push(PieceKind::Codisk, off, width, width + 1, zero_label());
      width += 1;
    } else {
      for (int i = 0; i < a - 1; ++i) {
        push(PieceKind::Pants, off, width, width - 1, zero_label());
        width -= 1;
      }
    }
    for (int h = 0; h < comp.genus; ++h) {
      push(PieceKind::Copants, off, width, width + 1, zero_label());
      width += 1;
      push(PieceKind::Pants, off, width, width - 1, zero_label());
      width -= 1;
    }
    push(PieceKind::Cylinder, off, width, width, comp.label);
    if (b == 0) {
      push(PieceKind::Disk, off, width, width - 1, zero_label());
      width -= 1;
    } else {
      for (int i = 0; i < b - 1; ++i) {
        push(PieceKind::Copants, off + i, width, width + 1, zero_label());
        width += 1;
      }
    }
  }

  std::vector<int> perm_out(x.n_out);
  for (int c = 0; c < k; ++c)
    for (size_t r = 0; r < x.components[c].out.size(); ++r)
      perm_out[out_offset[c] + static_cast<int>(r)] = x.components[c].out[r];
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

Bordism layer_bordism(const Layer& l) {
  Bordism res;
  res.n_in = l.width_in;
  res.n_out = l.width_out;
  auto wire = [&](int from, int to) {
    res.components.push_back({0, {from}, {to}, zero_label()});
  };
  int p = l.position;
  switch (l.kind) {
    case PieceKind::Pants:
      res.components.push_back({0, {p, p + 1}, {p}, zero_label()});
      for (int q = 0; q < p; ++q) wire(q, q);
      for (int q = p + 2; q < l.width_in; ++q) wire(q, q - 1);
      break;
    case PieceKind::Copants:
      res.components.push_back({0, {p}, {p, p + 1}, zero_label()});
      for (int q = 0; q < p; ++q) wire(q, q);
      for (int q = p + 1; q < l.width_in; ++q) wire(q, q + 1);
      break;
    case PieceKind::Disk:
      res.components.push_back({0, {p}, {}, zero_label()});
      for (int q = 0; q < p; ++q) wire(q, q);
      for (int q = p + 1; q < l.width_in; ++q) wire(q, q - 1);
      break;
    case PieceKind::Codisk:
      res.components.push_back({0, {}, {p}, zero_label()});
      for (int q = 0; q < p; ++q) wire(q, q);
      for (int q = p; q < l.width_in; ++q) wire(q, q + 1);
      break;
    case PieceKind::Cylinder:
      res.components.push_back({0, {p}, {p}, l.label});
      for (int q = 0; q < l.width_in; ++q)
        if (q != p) wire(q, q);
      break;
    case PieceKind::Permutation:
      for (int q = 0; q < l.width_in; ++q) wire(q, l.perm[q]);
      break;
  }
  std::sort(res.components.begin(), res.components.end(),
            [](const Component& a, const Component& b) {
              return component_key(a) < component_key(b);
            });
  return res;
}

Bordism recompose(const std::vector<Layer>& layers, int n_in) {
  Bordism acc = cylinders(std::vector<Label>(n_in, zero_label()));
  for (const Layer& l : layers) acc = compose(acc, layer_bordism(l));
  return acc;
}

Bordism cylinder(const Label& l) { return cylinders({l}); }

Bordism cylinders(const std::vector<Label>& ls) {
  Bordism res;
  res.n_in = res.n_out = static_cast<int>(ls.size());
  for (int i = 0; i < res.n_in; ++i)
    res.components.push_back({0, {i}, {i}, ls[i]});
  return res;
}

Bordism pants_bordism() {
  Bordism res;
  res.n_in = 2;
  res.n_out = 1;
  res.components.push_back({0, {0, 1}, {0}, zero_label()});
  return res;
}

Bordism copants_bordism() {
  Bordism res;
  res.n_in = 1;
  res.n_out = 2;
  res.components.push_back({0, {0}, {0, 1}, zero_label()});
  return res;
}

Bordism disk_bordism(const Label& l) {
  Bordism res;
  res.n_in = 1;
  res.n_out = 0;
  res.components.push_back({0, {0}, {}, l});
  return res;
}

Bordism codisk_bordism(const Label& l) {
  Bordism res;
  res.n_in = 0;
  res.n_out = 1;
  res.components.push_back({0, {}, {0}, l});
  return res;
}

Bordism closed_surface(int genus, const Label& l) {
  Bordism res;
  res.components.push_back({genus, {}, {}, l});
  return res;
}

}  // namespace areal
