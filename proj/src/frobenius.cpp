#include "areal/frobenius.hpp"

#include <algorithm>
#include <cmath>

namespace areal {

double max_tensor_magnitude(const FrobeniusAlgebra& a) {
  double s = 0.0;
  for (const cd& v : a.mult) s = std::max(s, std::abs(v));
  for (int i = 0; i < a.dim; ++i) s = std::max(s, std::abs(a.trace(i)));
  s = std::max(s, a.conj_mat.cwiseAbs().maxCoeff());
  return std::max(s, 1e-300);
}

Mat pairing(const FrobeniusAlgebra& a) {
  Mat p = Mat::Zero(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      cd v = 0.0;
      for (int k = 0; k < a.dim; ++k) v += a.m(i, j, k) * a.trace(k);
      p(i, j) = v;
    }
  return p;
}

Mat hermitian_gram(const FrobeniusAlgebra& a) {
  // <e_i, e_j> = theta(c(e_i) e_j), c(e_i) = column i of C
  return a.conj_mat.transpose() * pairing(a);
}

namespace {

double assoc_residual(const FrobeniusAlgebra& a) {
  double r = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        for (int l = 0; l < a.dim; ++l) {
          cd lhs = 0.0, rhs = 0.0;
          for (int p = 0; p < a.dim; ++p) {
            lhs += a.m(i, j, p) * a.m(p, k, l);
            rhs += a.m(j, k, p) * a.m(i, p, l);
          }
          r = std::max(r, std::abs(lhs - rhs));
        }
  return r;
}

double comm_residual(const FrobeniusAlgebra& a) {
  double r = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        r = std::max(r, std::abs(a.m(i, j, k) - a.m(j, i, k)));
  return r;
}

double algebra_map_residual(const FrobeniusAlgebra& a) {
  // c(e_i e_j) = c(e_i) c(e_j)
  const Mat& c = a.conj_mat;
  double r = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int l = 0; l < a.dim; ++l) {
        cd lhs = 0.0;
        for (int k = 0; k < a.dim; ++k) lhs += std::conj(a.m(i, j, k)) * c(l, k);
        cd rhs = 0.0;
        for (int p = 0; p < a.dim; ++p)
          for (int q = 0; q < a.dim; ++q) rhs += c(p, i) * c(q, j) * a.m(p, q, l);
        r = std::max(r, std::abs(lhs - rhs));
      }
  return r;
}

}  // namespace

ValidationReport validate(const FrobeniusAlgebra& a, double tol) {
  ValidationReport rep;
  rep.tol = tol;
  double scale = max_tensor_magnitude(a);
  auto push = [&](const std::string& name, double residual, bool passed) {
    rep.checks.push_back({name, residual, passed});
  };

  double ra = assoc_residual(a) / (scale * scale);
  push("associativity", ra, ra <= tol);
  double rc = comm_residual(a) / scale;
  push("commutativity", rc, rc <= tol);

  Mat p = pairing(a);
  Eigen::JacobiSVD<Mat> svd(p);
  double smin = svd.singularValues()(a.dim - 1);
  double smax = svd.singularValues()(0);
  bool nondeg = smax > 0.0 && smin / smax > 1e-12;
  push("pairing_nondegenerate", nondeg ? 0.0 : 1.0, nondeg);

  Mat invol = a.conj_mat.conjugate() * a.conj_mat - Mat::Identity(a.dim, a.dim);
  double ri = invol.cwiseAbs().maxCoeff();
  push("involution", ri, ri <= tol);

  double rm = algebra_map_residual(a) / (scale * scale);
  push("conjugation_algebra_map", rm, rm <= tol);

  Mat g = hermitian_gram(a);
  double rh = (g - g.adjoint()).cwiseAbs().maxCoeff() / scale;
  push("gram_hermitian", rh, rh <= tol);

  bool gpos = false;
  if (rh <= tol) {
    Mat gh = (g + g.adjoint()) / 2.0;
    Eigen::LDLT<Mat> ldlt(gh);
    double thresh = 1e-12 * std::abs(gh.trace());
    gpos = ldlt.info() == Eigen::Success && ldlt.isPositive() &&
           ldlt.vectorD().real().minCoeff() > thresh;
  }
  push("gram_positive", gpos ? 0.0 : 1.0, gpos);

  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const AxiomCheck& c) { return c.passed; });
  return rep;
}

Vec derive_unit(const FrobeniusAlgebra& a, double tol) {
  // n^2 equations sum_i u_i m(i,j,k) = delta_jk in n unknowns
  int n = a.dim;
  Mat sys(n * n, n);
  Vec rhs(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) sys(j * n + k, i) = a.m(i, j, k);
      rhs(j * n + k) = (j == k) ? 1.0 : 0.0;
    }
  Vec u = sys.colPivHouseholderQr().solve(rhs);
  double res = (sys * u - rhs).cwiseAbs().maxCoeff();
  if (!(res <= tol * std::max(1.0, max_tensor_magnitude(a))))
    throw Error("algebra has no unit: residual " + std::to_string(res));
  return u;
}

std::vector<cd> derive_coproduct(const FrobeniusAlgebra& a) {
  int n = a.dim;
  Mat pinv = pairing(a).inverse();
  std::vector<cd> w(static_cast<size_t>(n) * n * n, cd(0.0));
  // w(e_k) = sum_{p,j} Pinv[p][j] (e_k e_p) (x) e_j
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cd v = 0.0;
        for (int p = 0; p < n; ++p) v += a.m(k, p, i) * pinv(p, j);
        w[(static_cast<size_t>(k) * n + i) * n + j] = v;
      }
  return w;
}

Mat mult_matrix(const FrobeniusAlgebra& a) {
  int n = a.dim;
  Mat m2(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m2(k, i * n + j) = a.m(i, j, k);
  return m2;
}

Mat comult_matrix(const FrobeniusAlgebra& a) {
  int n = a.dim;
  std::vector<cd> w = derive_coproduct(a);
  Mat w2(n * n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        w2(i * n + j, k) = w[(static_cast<size_t>(k) * n + i) * n + j];
  return w2;
}

Mat handle_operator(const FrobeniusAlgebra& a) {
  return mult_matrix(a) * comult_matrix(a);
}

FrobeniusAlgebra character_block(const std::vector<double>& dims) {
  FrobeniusAlgebra a;
  a.dim = static_cast<int>(dims.size());
  a.mult.assign(static_cast<size_t>(a.dim) * a.dim * a.dim, cd(0.0));
  a.trace = Vec::Zero(a.dim);
  a.conj_mat = Mat::Identity(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    a.m(i, i, i) = 1.0 / dims[i];
    a.trace(i) = dims[i];
  }
  return a;
}

}  // namespace areal
