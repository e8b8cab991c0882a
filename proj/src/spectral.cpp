#include "areal/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace areal {

SpectralTheory build_theory(std::vector<SpectralEntry> entries,
                            CutoffPolicy policy,
                            std::vector<double> density_majorant, double tol) {
  if (entries.empty()) throw Error("a theory needs at least one eigenvalue");
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (!(entries[i].lambda < entries[i + 1].lambda))
      throw Error("eigenvalues must be strictly increasing (duplicate blocks "
                  "must be merged into one)");
  for (size_t i = 0; i < entries.size(); ++i) {
    ValidationReport rep = validate(entries[i].block, tol);
    if (!rep.pass)
      throw Error("block at eigenvalue " + std::to_string(entries[i].lambda) +
                  " failed validation");
  }
  if (density_majorant.empty()) throw Error("empty density majorant");
  SpectralTheory th;
  th.entries = std::move(entries);
  th.policy = policy;
  th.density_majorant = std::move(density_majorant);
  return th;
}

double elementary_block_norm(const FrobeniusAlgebra& a) {
  Mat g = hermitian_gram(a);
  Mat gg = kron(g, g);
  // |w| = |m| and |u| = |theta| by compatibility of the two pairings, so the
  // scan only needs the multiplication and the trace.
  double nm = gram_opnorm(mult_matrix(a), gg, g);
  Mat th(1, a.dim);
  for (int i = 0; i < a.dim; ++i) th(0, i) = a.trace(i);
  double nt = gram_opnorm(th, g, Mat::Identity(1, 1));
  return std::max(nm, nt);
}

GrowthCertificate check_growth(const SpectralTheory& th, double t) {
  GrowthCertificate cert;
  cert.t = t;
  double best = 0.0;
  for (const SpectralEntry& e : th.entries) {
    double v = elementary_block_norm(e.block) * std::exp(-t * e.lambda);
    if (v > best) {
      best = v;
      cert.attained_lambda = e.lambda;
    }
  }
  cert.c = best * (1.0 + 1e-9);  // strict bound over the stored spectrum
  return cert;
}

namespace {

double density_at(const SpectralTheory& th, double x) {
  double v = 0.0;
  for (size_t i = th.density_majorant.size(); i-- > 0;)
    v = v * x + th.density_majorant[i];
  return std::max(v, 0.0);
}

// Majorant on sum over all eigenvalues > lambda0 of C^d e^{-a lambda}.
double tail_sum(const SpectralTheory& th, double cd_pow, double a, double lambda0) {
  double total = 0.0;
  for (int k = 0; k < 100000; ++k) {
    double x = lambda0 + k;
    double term = density_at(th, x) * std::exp(-a * x);
    total += term;
    if (term < 1e-320 || term < 1e-18 * total) break;
  }
  return cd_pow * total;
}

}  // namespace

Cutoff truncation_cutoff_raw(const SpectralTheory& th, double c, int depth,
                             double t, double re_s_min, double eps) {
  double a = re_s_min - depth * t;
  if (!(a > 0.0))
    throw CertificationError(
        "cannot certify a tail: need re(s) > depth * t, got re(s) = " +
        std::to_string(re_s_min) + ", depth * t = " + std::to_string(depth * t));
  double cd_pow = std::pow(std::max(c, 1.0), depth);

  if (th.policy == CutoffPolicy::Complete) {
    // the stored list is everything: cut where the exact remaining sum of
    // per-eigenvalue majorants drops below eps
    size_t n = th.entries.size();
    std::vector<double> suffix(n + 1, 0.0);
    for (size_t i = n; i-- > 0;)
      suffix[i] = suffix[i + 1] + cd_pow * std::exp(-a * th.entries[i].lambda);
    for (size_t i = 0; i < n; ++i)
      if (suffix[i + 1] < eps) return {th.entries[i].lambda, suffix[i + 1]};
    return {th.top(), 0.0};
  }

  for (const SpectralEntry& e : th.entries) {
    double bound = tail_sum(th, cd_pow, a, e.lambda);
    if (bound < eps) return {e.lambda, bound};
  }
  throw CertificationError(
      "cannot certify a tail below eps = " + std::to_string(eps) +
      " within the stored spectrum (top eigenvalue " + std::to_string(th.top()) +
      "); extend the spectrum");
}

Cutoff truncation_cutoff(const SpectralTheory& th, const GrowthCertificate& cert,
                         int depth, double re_s_min, double eps) {
  if (depth < 1) throw Error("depth must be a positive integer");
  return truncation_cutoff_raw(th, cert.c, depth, cert.t, re_s_min, eps);
}

RiggedClass classify_rigged(const DecayDescriptor& d) {
  if (d.alpha > 0.0) return RiggedClass::CheckSpace;
  if (d.alpha == 0.0) return RiggedClass::HatOnly;
  return RiggedClass::Neither;
}

void shift_spectrum(SpectralTheory& th, double shift) {
  for (SpectralEntry& e : th.entries) e.lambda -= shift;
}

}  // namespace areal
