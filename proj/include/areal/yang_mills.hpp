#ifndef AREAL_YANG_MILLS_HPP
#define AREAL_YANG_MILLS_HPP

#include <vector>

#include <boost/rational.hpp>

#include "areal/spectral.hpp"

namespace areal {

using Rat = boost::rational<long long>;

enum class GroupType { U1, A1, A2 };

// Exact root datum in fundamental-weight coordinates. The inner product is
// kappa times a base form; the base form is normalized so that at kappa = 1
// the A1 Casimir of m*omega is m(m+2)/4 = j(j+1), U1 is n^2, and A2 carries
// the standard long-root-squared-2 form. kappa = 2 on A1 recovers the
// <alpha, alpha> = 2 convention.
struct RootDatum {
  GroupType type = GroupType::U1;
  int rank = 1;
  Rat kappa = 1;
  std::vector<std::vector<Rat>> gram;       // kappa already applied
  std::vector<std::vector<Rat>> pos_roots;  // coordinates of R+
  std::vector<Rat> delta;                   // half sum of R+
};

using Weight = std::vector<long long>;

RootDatum build_datum(GroupType type, Rat kappa = Rat(1));

Rat inner(const RootDatum& d, const std::vector<Rat>& a, const std::vector<Rat>& b);

// Weyl-chamber condition; vacuous for the torus, coordinates >= 0 otherwise.
bool is_dominant(const RootDatum& d, const Weight& mu);

// Quadratic Casimir <mu + delta, mu + delta> - <delta, delta>, exact.
Rat casimir(const RootDatum& d, const Weight& mu);

// Weyl dimension prod <alpha, mu+delta> / prod <alpha, delta>; exact, always
// an integer for dominant mu.
long long weyl_dim(const RootDatum& d, const Weight& mu);

// All dominant weights with casimir <= c_max, sorted by (casimir,
// coordinates); finite by positivity of the form.
std::vector<Weight> enumerate_dominant(const RootDatum& d, Rat c_max);

// Character theory up to the Casimir cutoff: one block per distinct Casimir
// value (equal eigenvalues merged into one multi-summand block), each
// summand m = 1/dim, theta = dim, C = I.
SpectralTheory ym_theory(const RootDatum& d, Rat c_max);

struct DimensionBound {
  double t = 0.0;
  double c = 0.0;             // dim(mu) < c * e^{t casimir(mu)} over the scan
  Weight argmax;              // where the scan maximum sits
  double casimir_at_max = 0.0;
  bool interior = false;      // maximizer well inside the cutoff
};

// Scans dim(mu) e^{-t c(mu)} over the enumeration; the maximizer must sit in
// the interior of the sublevel set for the certificate to be meaningful.
DimensionBound verify_dc_bound(const RootDatum& d, double t, Rat c_max);

// Closed genus-g partition sum over characters, sum dim^{2-2g} e^{-s c};
// shares only the datum with the evaluator (no Frobenius or bordism code).
cd closed_partition(const RootDatum& d, Rat c_max, int genus, cd s);

}  // namespace areal

#endif
