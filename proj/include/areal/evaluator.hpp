#ifndef AREAL_EVALUATOR_HPP
#define AREAL_EVALUATOR_HPP

#include <vector>

#include "areal/bordism.hpp"
#include "areal/spectral.hpp"

namespace areal {

struct BlockEntry {
  double lambda = 0.0;
  Mat matrix;  // dim^{n_out} x dim^{n_in} on the eigenvalue's block
};

// Eigenvalue-diagonal operator between boundary Hilbert sums. Blocks couple
// equal eigenvalues only; scalars of closed components are folded into the
// blocks and recorded separately.
struct BlockOperator {
  int n_in = 0;
  int n_out = 0;
  std::vector<BlockEntry> blocks;
  cd closed_scalar = 1.0;
  bool certified = false;  // tail_bound is meaningful
  double tail_bound = 0.0;
  bool bounded = false;  // trace-class certificate asserted

  cd scalar() const { return closed_scalar; }
};

// F = W_{n_out} . h^genus . M_{n_in} from the pair-of-pants generators.
Mat eval_component(const FrobeniusAlgebra& a, int genus, int n_in, int n_out);

// Number of elementary pieces (pants/copants/disk/codisk, handles twice) in
// the canonical pipeline of a component; the depth entering tail bounds.
int component_depth(const Component& c);

// Blocks over every stored eigenvalue <= lambda_max, no certification.
// Accepts any labels; the per-component weight is e^{-label * lambda}.
BlockOperator eval_at(const SpectralTheory& th, const Bordism& x, double lambda_max);

// Volume-mode evaluation with a certified truncation: all labels Volume or
// Zero; with any Zero label present the trace-class certificate is not
// asserted and the whole stored spectrum is used.
BlockOperator eval(const SpectralTheory& th, const Bordism& x, double eps);

// Scalar of the closed genus-g surface with volume s (through eval).
cd partition_function(const SpectralTheory& th, int genus, cd s, double eps);

struct SemigroupCheck {
  double semigroup_residual = 0.0;
  double normality_residual = 0.0;
};

// max over blocks of |V(s)V(s') - V(s+s')|, plus the normality defect of
// V(s) against its Gram adjoint.
SemigroupCheck check_semigroup(const SpectralTheory& th, cd s, cd s2);

// max over blocks of |eval(dual(X), conj labels) - Gram adjoint of eval(X)|,
// both sides over the whole stored spectrum.
double check_adjoint(const SpectralTheory& th, const Bordism& x);

// B after A (A.n_out must equal B.n_in); blocks multiply on the shared
// eigenvalues.
BlockOperator chain(const SpectralTheory& th, const BlockOperator& a,
                    const BlockOperator& b);

double block_residual(const BlockOperator& a, const BlockOperator& b);

// Gram matrix of the n-fold boundary tensor power at one eigenvalue.
Mat boundary_gram(const FrobeniusAlgebra& a, int n);

}  // namespace areal

#endif
