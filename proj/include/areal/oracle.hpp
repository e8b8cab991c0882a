#ifndef AREAL_ORACLE_HPP
#define AREAL_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "areal/evaluator.hpp"

namespace areal {
namespace oracle {

// Direct sum of the algebra blocks up to lambda_max, the state space of one
// boundary circle.
struct CircleSpace {
  std::vector<double> lambdas;
  std::vector<int> dims;
  std::vector<int> offsets;
  int total = 0;
};

CircleSpace circle_space(const SpectralTheory& th, double lambda_max);

// Contracts the layer matrices strictly left to right over full tensor
// powers of the circle space, no per-eigenvalue factoring and no algebraic
// simplification. Unit and coproduct are rederived here from the pairing.
Mat brute_contract(const SpectralTheory& th, const std::vector<Layer>& layers,
                   int n_in, double lambda_max);

// A valid randomized decomposition of x: random component order, random
// merge pattern, random handle and cylinder placement, random split
// positions. Recomposes to x exactly.
std::vector<Layer> random_decomposition(const Bordism& x, std::uint64_t seed);

// The eigenvalue-diagonal operator embedded as a full matrix on tensor
// powers of the circle space (off-diagonal blocks zero); for comparing the
// evaluator against brute_contract, which also checks that the contraction
// exhibits the diagonal structure.
Mat embed_blocks(const CircleSpace& space, const BlockOperator& op);

// Projection of a full contraction onto the sector the block representation
// stores: every boundary circle in the same eigenvalue block. Disconnected
// bordisms have honest cross-eigenvalue entries outside it; connected ones
// vanish there, which tests assert separately.
Mat restrict_equal_lambda(const CircleSpace& space, const Mat& full, int n_in,
                          int n_out);

// Per-eigenvalue scalar trace(h^g(unit)) summed with weight e^{-s lambda},
// computed with local loops and no bordism machinery.
cd closed_form_genus(const SpectralTheory& th, int genus, cd s);

struct BordismSpec {
  int max_in = 3;
  int max_out = 3;
  int max_genus = 2;
  int max_components = 3;
  bool allow_closed = true;
  bool zero_labels = false;  // sprinkle zero labels among the volume ones
  bool imaginary_labels = false;
};

// Seeded random valid bordism: random slot partition into components, random
// genus, labels with re in [0.3, 1.5] and im in [-0.5, 0.5].
Bordism random_bordism(std::uint64_t seed, const BordismSpec& spec = {});

// Largest stored eigenvalue whose circle space stays within max_dim states.
double capped_lambda(const SpectralTheory& th, int max_dim);

}  // namespace oracle
}  // namespace areal

#endif
