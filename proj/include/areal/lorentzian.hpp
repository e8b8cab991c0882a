#ifndef AREAL_LORENTZIAN_HPP
#define AREAL_LORENTZIAN_HPP

#include <vector>

#include "areal/evaluator.hpp"

namespace areal {

struct GrowthPoint {
  double lambda = 0.0;
  double norm = 0.0;  // Gram operator norm of the block
};

// Block family of an operator that is generally unbounded on the boundary
// Hilbert sum; it acts on the rapid-decay (check) domain, with a per-block
// growth report certifying sub-exponential growth.
struct LorentzOperator {
  int n_in = 0;
  int n_out = 0;
  std::vector<BlockEntry> blocks;
  bool bounded = false;  // true when every component is a plain cylinder
  std::vector<GrowthPoint> growth;
};

// Imaginary-time evaluation: every component must touch the boundary and
// carry an Imaginary or Zero label; blocks are e^{-i zeta lambda} F_lambda.
LorentzOperator eval_lorentzian(const SpectralTheory& th, const Bordism& x,
                                double lambda_max);

// max over blocks <= lambda_max of |U* U - I| for the cylinder of phase zeta,
// adjoints taken in the Gram inner product.
double unitarity_defect(const SpectralTheory& th, double zeta, double lambda_max);

// Short-distance operator: the label-zero evaluation F_lambda over the whole
// stored spectrum (labels on x are ignored). Same boundary requirement as
// eval_lorentzian.
LorentzOperator short_distance(const SpectralTheory& th, const Bordism& x);

// Long-distance operator: the ground block of the short-distance operator,
// with closed components contributing their ground scalar. Requires the
// ground eigenvalue to be 0 (shift the spectrum first).
Mat long_distance(const SpectralTheory& th, const Bordism& x);

// Heat-flow factorization: residual of
//   eval(s1-collar . X|_0 . s0-collar)  vs  e^{-s1 H} . L0(X) . e^{-s0 H}
// with one volume per boundary circle (re > 0); empty sides are skipped.
double factorization_residual(const SpectralTheory& th, const Bordism& x,
                              const std::vector<cd>& s0, const std::vector<cd>& s1);

}  // namespace areal

#endif
