#ifndef AREAL_SPECTRAL_HPP
#define AREAL_SPECTRAL_HPP

#include <vector>

#include "areal/frobenius.hpp"

namespace areal {

enum class CutoffPolicy {
  Complete,   // the entry list is the whole spectrum
  Truncated,  // the entry list is an initial segment; the density majorant
              // bounds what lies beyond
};

struct SpectralEntry {
  double lambda = 0.0;
  FrobeniusAlgebra block;
};

// Discrete spectral datum: eigenvalues strictly increasing, one validated
// algebra block per eigenvalue, finite multiplicities.
struct SpectralTheory {
  std::vector<SpectralEntry> entries;
  CutoffPolicy policy = CutoffPolicy::Complete;
  // count of eigenvalues in [x, x+1) assumed <= density[0] + density[1]*x + ...
  std::vector<double> density_majorant = {2.0, 1.0};

  double ground() const { return entries.front().lambda; }
  double top() const { return entries.back().lambda; }
};

// Validates ordering and every block; throws on failure.
SpectralTheory build_theory(std::vector<SpectralEntry> entries,
                            CutoffPolicy policy = CutoffPolicy::Complete,
                            std::vector<double> density_majorant = {2.0, 1.0},
                            double tol = 1e-10);

// Sub-exponential growth certificate: every elementary block norm (mult,
// trace, and by pairing compatibility comult and unit) is < C e^{t lambda}
// over the stored spectrum.
struct GrowthCertificate {
  double t = 0.0;
  double c = 0.0;
  double attained_lambda = 0.0;  // where the scan maximum sits
};

GrowthCertificate check_growth(const SpectralTheory& th, double t);

struct Cutoff {
  double lambda_max = 0.0;
  double tail_bound = 0.0;
};

// Smallest stored eigenvalue cutoff whose tail majorant
//   sum_{lambda > lambda_max} C^depth e^{(depth*t - re_s_min) lambda} * density
// is below eps. Requires re_s_min > depth * t; throws CertificationError when
// the bound cannot be met within the stored spectrum of a truncated theory.
Cutoff truncation_cutoff(const SpectralTheory& th, const GrowthCertificate& cert,
                         int depth, double re_s_min, double eps);

// Same computation with depth 0 allowed; used internally by the evaluator.
Cutoff truncation_cutoff_raw(const SpectralTheory& th, double c, int depth,
                             double t, double re_s_min, double eps);

enum class RiggedClass { CheckSpace, HatOnly, Neither };

// Coefficient family v_lambda = q(lambda) e^{-alpha lambda} with deg q =
// degree.
struct DecayDescriptor {
  double alpha = 0.0;
  int degree = 0;
};

// Membership of the family in the rigged pair: exponential decay lands in the
// small (check) space, polynomial growth only in the big (hat) space,
// exponential growth in neither.
RiggedClass classify_rigged(const DecayDescriptor& d);

// Shift every eigenvalue by -shift (pass the ground eigenvalue to normalize
// the ground state to 0).
void shift_spectrum(SpectralTheory& th, double shift);

// Largest per-block elementary norm max(|m|, |theta|, |w|, |u|) in the Gram
// operator norm.
double elementary_block_norm(const FrobeniusAlgebra& a);

}  // namespace areal

#endif
