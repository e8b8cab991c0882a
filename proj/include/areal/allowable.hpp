#ifndef AREAL_ALLOWABLE_HPP
#define AREAL_ALLOWABLE_HPP

#include <vector>

#include "areal/bordism.hpp"

namespace areal {

enum class Allowability { Allowable, NotAllowable, Undetermined };

struct AllowabilityReport {
  Allowability verdict = Allowability::Undetermined;
  bool pencil_ok = false;     // real congruence diagonalization succeeded
  bool used_fallback = false; // exterior-algebra definition check ran
  std::vector<cd> lambdas;    // diagonal values when the pencil succeeded
  double arg_sum = 0.0;       // sum |arg lambda_i| when available
};

// Decides whether the complex symmetric metric g (n <= 4) admits a real basis
// with g = sum lambda_i e^i (x) e^i, lambda_i off the closed negative reals
// and sum |arg lambda_i| < pi. Primary path: congruence diagonalization of
// the real-imaginary pencil; fallback for n <= 2: positive definiteness of
// the real part of the squared-norm form on the full exterior algebra.
AllowabilityReport allowability(const Mat& g);

// prod lambda_i^{1/2} with principal branches; positive real part on
// allowable metrics. Real metrics with exactly one nonpositive eigenvalue
// extend by continuity from the upper half-plane (value in i * R>=0).
cd sqrt_det(const Mat& g);

// The metric (omega / vol_h)^{2/n} h whose volume density is omega (given as
// a coefficient against the standard density); requires re(omega / vol_h) > 0.
Mat density_right_inverse(cd omega, const Mat& h);

struct Triangle {
  double area = 0.0;
  cd density = 0.0;
};

// Piecewise constant volume density on a triangulated surface; components
// list triangle indices (one list per connected component, default one
// component holding everything).
struct SampledDensity {
  std::vector<Triangle> triangles;
  std::vector<std::vector<int>> components;
};

// Per-component labels sum area * density; Volume when the real parts are
// positive, Imaginary when they all vanish, mixed signs rejected.
std::vector<Label> total_volume(const SampledDensity& d);

}  // namespace areal

#endif
