#ifndef AREAL_LINALG_HPP
#define AREAL_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace areal {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a tail or growth bound cannot be certified at the requested
// accuracy; the CLI maps it to its own exit code.
struct CertificationError : Error {
  using Error::Error;
};

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Eigen::Index ipow(Eigen::Index base, int e) {
  Eigen::Index r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Flat index of a multi-index over n slots of size dim, slot 0 most
// significant.
inline Eigen::Index flatten(const std::vector<int>& idx, Eigen::Index dim) {
  Eigen::Index f = 0;
  for (int v : idx) f = f * dim + v;
  return f;
}

inline std::vector<int> unflatten(Eigen::Index f, Eigen::Index dim, int n) {
  std::vector<int> idx(n);
  for (int k = n - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(f % dim);
    f /= dim;
  }
  return idx;
}

// Permutation matrix on (C^dim)^{tensor n} moving slot i to slot perm[i].
inline Mat slot_permutation(Eigen::Index dim, const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  Eigen::Index total = ipow(dim, n);
  Mat p = Mat::Zero(total, total);
  for (Eigen::Index src = 0; src < total; ++src) {
    std::vector<int> in = unflatten(src, dim, n);
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[perm[i]] = in[i];
    p(flatten(out, dim), src) = 1.0;
  }
  return p;
}

inline double opnorm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

// Cholesky factor L with G = L L^H; G must be Hermitian positive definite.
inline Mat gram_chol(const Mat& g) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success)
    throw Error("Gram matrix is not positive definite");
  return llt.matrixL();
}

// Operator norm of m : (V_in, G_in) -> (V_out, G_out) between Gram inner
// products, computed in orthonormalized coordinates.
inline double gram_opnorm(const Mat& m, const Mat& gram_in, const Mat& gram_out) {
  Mat lin = gram_chol(gram_in);
  Mat lout = gram_chol(gram_out);
  // orthonormal coords: x~ = L^H x, so m~ = Lout^H m Lin^{-H}
  Mat tmp = lout.adjoint() * m;
  Mat mt = lin.adjoint()
               .triangularView<Eigen::Upper>()
               .solve<Eigen::OnTheRight>(tmp);
  return opnorm(mt);
}

// Adjoint of m : in -> out with respect to Gram inner products.
inline Mat gram_adjoint(const Mat& m, const Mat& gram_in, const Mat& gram_out) {
  return gram_in.inverse() * m.adjoint() * gram_out;
}

inline Mat kron_pow(const Mat& a, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, a);
  return out;
}

}  // namespace areal

#endif
