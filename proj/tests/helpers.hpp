#ifndef AREAL_TESTS_HELPERS_HPP
#define AREAL_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "areal/oracle.hpp"
#include "areal/spectral.hpp"
#include "areal/yang_mills.hpp"

namespace areal {
namespace testutil {

// group algebra of Z/2, basis {e, g}; theta picks coefficients
inline FrobeniusAlgebra z2_algebra(cd theta_e = 1.0, cd theta_g = 0.0) {
  FrobeniusAlgebra a;
  a.dim = 2;
  a.mult.assign(8, 0.0);
  a.m(0, 0, 0) = 1.0;
  a.m(0, 1, 1) = 1.0;
  a.m(1, 0, 1) = 1.0;
  a.m(1, 1, 0) = 1.0;
  a.trace = Vec::Zero(2);
  a.trace(0) = theta_e;
  a.trace(1) = theta_g;
  a.conj_mat = Mat::Identity(2, 2);
  return a;
}

// group algebra of Z/3 with the inversion involution
inline FrobeniusAlgebra z3_algebra() {
  FrobeniusAlgebra a;
  a.dim = 3;
  a.mult.assign(27, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.m(i, j, (i + j) % 3) = 1.0;
  a.trace = Vec::Zero(3);
  a.trace(0) = 1.0;
  a.conj_mat = Mat::Zero(3, 3);
  a.conj_mat(0, 0) = 1.0;
  a.conj_mat(1, 2) = 1.0;
  a.conj_mat(2, 1) = 1.0;
  return a;
}

// one dimensional algebra e*e = mu e; trace and involution chosen so the
// Gram value is r > 0
inline FrobeniusAlgebra one_dim(cd mu, double r) {
  FrobeniusAlgebra a;
  a.dim = 1;
  a.mult = {mu};
  a.trace = Vec::Constant(1, r * mu / std::norm(mu));
  a.conj_mat = Mat::Constant(1, 1, std::conj(mu) / mu);
  return a;
}

inline SpectralTheory a1_theory(Rat cmax, CutoffPolicy policy) {
  SpectralTheory t = ym_theory(build_datum(GroupType::A1), cmax);
  if (policy == CutoffPolicy::Complete)
    t = build_theory(t.entries, CutoffPolicy::Complete, t.density_majorant);
  return t;
}

// small theory with non-identity Gram, complex structure constants and a
// multi summand block; heavier coverage than the character theories
inline SpectralTheory mixed_theory() {
  std::vector<SpectralEntry> entries;
  entries.push_back({0.0, z2_algebra(2.0, 1.0)});
  entries.push_back({0.7, one_dim(cd(0.4, 0.3), 1.0)});
  entries.push_back({1.6, character_block({1.0, 2.0})});
  return build_theory(entries, CutoffPolicy::Complete);
}

inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// scan seeds for a random bordism with the given arity
inline Bordism random_with_arity(std::uint64_t& seed, int n_in,
                                 const oracle::BordismSpec& spec = {}) {
  for (;;) {
    Bordism x = oracle::random_bordism(seed++, spec);
    if (x.n_in == n_in) return x;
  }
}

}  // namespace testutil
}  // namespace areal

#endif
