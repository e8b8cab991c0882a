#include "areal/yang_mills.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace areal {

RootDatum build_datum(GroupType type, Rat kappa) {
  if (kappa <= Rat(0)) throw Error("normalization must be positive");
  RootDatum d;
  d.type = type;
  d.kappa = kappa;
  switch (type) {
    case GroupType::U1:
      d.rank = 1;
      d.gram = {{kappa}};
      d.pos_roots = {};
      d.delta = {Rat(0)};
      break;
    case GroupType::A1:
      d.rank = 1;
      // base form <omega, omega> = 1/4, i.e. <alpha, alpha> = 1
      d.gram = {{kappa / 4}};
      d.pos_roots = {{Rat(2)}};
      d.delta = {Rat(1)};
      break;
    case GroupType::A2:
      d.rank = 2;
      // base form: standard <alpha, alpha> = 2
      d.gram = {{kappa * Rat(2, 3), kappa * Rat(1, 3)},
                {kappa * Rat(1, 3), kappa * Rat(2, 3)}};
      d.pos_roots = {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}, {Rat(1), Rat(1)}};
      d.delta = {Rat(1), Rat(1)};
      break;
  }
  return d;
}

Rat inner(const RootDatum& d, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat v(0);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) v += a[i] * d.gram[i][j] * b[j];
  return v;
}

bool is_dominant(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.size()) != d.rank) return false;
  if (d.type == GroupType::U1) return true;
  return std::all_of(mu.begin(), mu.end(), [](long long v) { return v >= 0; });
}

namespace {

std::vector<Rat> to_rat(const Weight& mu) {
  std::vector<Rat> v;
  v.reserve(mu.size());
  for (long long x : mu) v.emplace_back(x);
  return v;
}

std::vector<Rat> plus_delta(const RootDatum& d, const Weight& mu) {
  std::vector<Rat> v = to_rat(mu);
  for (int i = 0; i < d.rank; ++i) v[i] += d.delta[i];
  return v;
}

}  // namespace

Rat casimir(const RootDatum& d, const Weight& mu) {
  if (!is_dominant(d, mu)) throw Error("weight is not dominant");
  std::vector<Rat> md = plus_delta(d, mu);
  return inner(d, md, md) - inner(d, d.delta, d.delta);
}

long long weyl_dim(const RootDatum& d, const Weight& mu) {
  if (!is_dominant(d, mu)) throw Error("weight is not dominant");
  Rat num(1), den(1);
  std::vector<Rat> md = plus_delta(d, mu);
  for (const auto& alpha : d.pos_roots) {
    num *= inner(d, alpha, md);
    den *= inner(d, alpha, d.delta);
  }
  Rat dim = num / den;
  if (dim.denominator() != 1 || dim.numerator() <= 0)
    throw Error("internal: non-integral Weyl dimension");
  return dim.numerator();
}

std::vector<Weight> enumerate_dominant(const RootDatum& d, Rat c_max) {
  if (c_max < Rat(0)) throw Error("cutoff must be nonnegative");
  std::vector<Weight> out;
  switch (d.type) {
    case GroupType::U1:
      for (long long n = 0; casimir(d, {n}) <= c_max; ++n) {
        out.push_back({n});
        if (n > 0) out.push_back({-n});
      }
      break;
    case GroupType::A1:
      for (long long m = 0; casimir(d, {m}) <= c_max; ++m) out.push_back({m});
      break;
    case GroupType::A2:
      // the Casimir is increasing in each coordinate on the dominant cone
      for (long long a = 0; casimir(d, {a, 0}) <= c_max; ++a)
        for (long long b = 0; casimir(d, {a, b}) <= c_max; ++b)
          out.push_back({a, b});
      break;
  }
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    Rat cx = casimir(d, x), cy = casimir(d, y);
    if (cx != cy) return cx < cy;
    return x < y;
  });
  return out;
}

SpectralTheory ym_theory(const RootDatum& d, Rat c_max) {
  std::vector<Weight> weights = enumerate_dominant(d, c_max);
  if (weights.empty()) throw Error("empty character model");
  std::map<Rat, std::vector<double>> levels;
  for (const Weight& mu : weights)
    levels[casimir(d, mu)].push_back(static_cast<double>(weyl_dim(d, mu)));
  std::vector<SpectralEntry> entries;
  for (const auto& [c, dims] : levels)
    entries.push_back({boost::rational_cast<double>(c), character_block(dims)});
  // eigenvalue counts per unit Casimir interval: gaps are kappa*(2n+1) for
  // the torus and kappa*(2m+3)/4 for A1, so a constant covers both; the A2
  // count grows like sqrt(c), covered by the linear term
  double kappa = boost::rational_cast<double>(d.kappa);
  std::vector<double> density;
  if (d.type == GroupType::A2)
    density = {2.0 + 3.0 / kappa, 1.0 / kappa};
  else
    density = {1.0 + 2.0 / kappa};
  return build_theory(std::move(entries), CutoffPolicy::Truncated, density);
}

DimensionBound verify_dc_bound(const RootDatum& d, double t, Rat c_max) {
  std::vector<Weight> weights = enumerate_dominant(d, c_max);
  DimensionBound bound;
  bound.t = t;
  double best = 0.0, best_outer = 0.0;
  double cutoff = boost::rational_cast<double>(c_max);
  for (const Weight& mu : weights) {
    double c = boost::rational_cast<double>(casimir(d, mu));
    double v = static_cast<double>(weyl_dim(d, mu)) * std::exp(-t * c);
    if (v > best) {
      best = v;
      bound.argmax = mu;
      bound.casimir_at_max = c;
    }
    if (c > 0.9 * cutoff) best_outer = std::max(best_outer, v);
  }
  bound.c = best * (1.0 + 1e-9);
  bound.interior = bound.casimir_at_max < 0.9 * cutoff && best_outer < best;
  if (!bound.interior)
    throw CertificationError(
        "growth certificate maximizer sits at the cutoff boundary; increase "
        "the Casimir cutoff");
  return bound;
}

cd closed_partition(const RootDatum& d, Rat c_max, int genus, cd s) {
  cd total = 0.0;
  for (const Weight& mu : enumerate_dominant(d, c_max)) {
    double dim = static_cast<double>(weyl_dim(d, mu));
    double c = boost::rational_cast<double>(casimir(d, mu));
    total += std::pow(dim, 2.0 - 2.0 * genus) * std::exp(-s * c);
  }
  return total;
}

}  // namespace areal
