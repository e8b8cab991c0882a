#ifndef AREAL_FROBENIUS_HPP
#define AREAL_FROBENIUS_HPP

#include <string>
#include <vector>

#include "areal/linalg.hpp"

namespace areal {

// Finite dimensional commutative Frobenius algebra with a compatible
// antilinear involution c(x) = conj_mat * conj(x). The unit and coproduct are
// derived, never stored.
struct FrobeniusAlgebra {
  int dim = 0;
  std::vector<cd> mult;  // mult[(i*dim + j)*dim + k]: e_i e_j = sum_k mult[ijk] e_k
  Vec trace;             // theta
  Mat conj_mat;          // C

  cd m(int i, int j, int k) const { return mult[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  cd& m(int i, int j, int k) { return mult[(static_cast<size_t>(i) * dim + j) * dim + k]; }
};

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
  bool passed = false;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  double tol = 0.0;
  bool pass = false;
};

// Pairing P[i][j] = theta(e_i e_j).
Mat pairing(const FrobeniusAlgebra& a);

// Gram matrix of the sesquilinear form <x, y> = theta(c(x) y).
Mat hermitian_gram(const FrobeniusAlgebra& a);

// Checks associativity, commutativity, pairing nondegeneracy, the involution
// law conj(C) C = I, c being an algebra map, Gram hermiticity and Gram
// positivity. Residuals are relative to the largest tensor magnitude; the
// pairing and Gram checks record 0/1 verdicts at the pivot threshold
// 1e-12 * trace.
ValidationReport validate(const FrobeniusAlgebra& a, double tol = 1e-10);

// Unit coefficients, from the least-squares solution of m(u, e_j) = e_j.
// Throws if the system has no solution within tolerance.
Vec derive_unit(const FrobeniusAlgebra& a, double tol = 1e-10);

// Coproduct tensor W[k][i][j] (same flat layout as mult): w(e_k) =
// sum_{ij} W[kij] e_i (x) e_j, built from the inverse pairing.
std::vector<cd> derive_coproduct(const FrobeniusAlgebra& a);

// Handle operator h = m . w as a dim x dim matrix.
Mat handle_operator(const FrobeniusAlgebra& a);

// Multiplication as a matrix dim x dim^2 (pair slot flattened, left slot most
// significant).
Mat mult_matrix(const FrobeniusAlgebra& a);

// Coproduct as a matrix dim^2 x dim.
Mat comult_matrix(const FrobeniusAlgebra& a);

double max_tensor_magnitude(const FrobeniusAlgebra& a);

// Direct sum of one dimensional blocks (m = 1/d_i, theta = d_i, C = I); the
// building block for character theories.
FrobeniusAlgebra character_block(const std::vector<double>& dims);

}  // namespace areal

#endif
