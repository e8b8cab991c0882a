#include "areal/allowable.hpp"

#include <algorithm>
#include <cmath>

namespace areal {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_metric(const Mat& g) {
  if (g.rows() != g.cols() || g.rows() < 1 || g.rows() > 4)
    throw Error("metric must be square of dimension 1..4");
  double scale = std::max(g.cwiseAbs().maxCoeff(), 1e-300);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw Error("metric must be complex symmetric");
  if (!(std::abs(g.determinant()) > 1e-13 * std::pow(scale, g.rows())))
    throw Error("metric is degenerate");
}

// Try to diagonalize the pencil (Re g, Im g) by one real congruence.
bool pencil_diagonalize(const Mat& g, std::vector<cd>& lambdas) {
  int n = static_cast<int>(g.rows());
  RMat a = g.real(), b = g.imag();
  double scale = std::max({a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(), 1e-300});

  // pick an invertible member of the pencil
  RMat w, bp;
  double best = -1.0;
  for (int k = 0; k < 32; ++k) {
    double phi = kPi * k / 32.0;
    RMat cand = std::cos(phi) * a + std::sin(phi) * b;
    double d = std::abs(cand.determinant()) / std::pow(scale, n);
    if (d > best) {
      best = d;
      w = cand;
      bp = -std::sin(phi) * a + std::cos(phi) * b;
    }
  }
  if (best < 1e-10) return false;

  Eigen::EigenSolver<RMat> es(w.inverse() * bp);
  if (es.info() != Eigen::Success) return false;
  for (int i = 0; i < n; ++i)
    if (std::abs(es.eigenvalues()(i).imag()) >
        1e-9 * (1.0 + std::abs(es.eigenvalues()(i))))
      return false;  // no real diagonalizing basis on this path

  RMat s = es.eigenvectors().real();
  for (int i = 0; i < n; ++i) {
    double nrm = s.col(i).norm();
    if (nrm < 1e-12) return false;
    s.col(i) /= nrm;
  }

  // repair eigenvector clusters of nearly equal eigenvalues
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return es.eigenvalues()(x).real() < es.eigenvalues()(y).real();
  });
  RMat s2(n, n);
  int col = 0;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && std::abs(es.eigenvalues()(order[j]).real() -
                             es.eigenvalues()(order[i]).real()) <
                        1e-8 * (1.0 + std::abs(es.eigenvalues()(order[i]).real())))
      ++j;
    if (j - i == 1) {
      s2.col(col++) = s.col(order[i]);
    } else {
      RMat basis(n, j - i);
      for (int k = i; k < j; ++k) basis.col(k - i) = s.col(order[k]);
      RMat k = basis.transpose() * w * basis;
      Eigen::SelfAdjointEigenSolver<RMat> ses((k + k.transpose()) / 2.0);
      RMat rebased = basis * ses.eigenvectors();
      for (int c = 0; c < j - i; ++c) s2.col(col++) = rebased.col(c);
    }
    i = j;
  }
  s = s2;

  Mat diag = s.cast<cd>().transpose() * g * s.cast<cd>();
  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off = std::max(off, std::abs(diag(i, j)));
  if (off > 1e-8 * scale) return false;

  lambdas.clear();
  for (int i = 0; i < n; ++i) lambdas.push_back(diag(i, i));
  return true;
}

bool on_negative_axis(cd z) {
  return z.imag() == 0.0 ? z.real() <= 0.0
                         : (z.real() < 0.0 && std::abs(z.imag()) < 1e-13 * std::abs(z.real()));
}

// Re of the squared-norm form on the full exterior algebra, n <= 2 only; the
// volume form carries the principal branch of sqrt(det g).
bool exterior_form_positive(const Mat& g) {
  int n = static_cast<int>(g.rows());
  cd det = g.determinant();
  if (on_negative_axis(det)) return false;
  cd v = std::sqrt(det);
  Mat q;
  if (n == 1) {
    q = Mat::Zero(2, 2);
    q(0, 0) = v;
    q(1, 1) = 1.0 / v;
  } else {
    Mat ginv = g.inverse();
    q = Mat::Zero(4, 4);
    q(0, 0) = v;
    q.block(1, 1, 2, 2) = v * ginv;
    q(3, 3) = 1.0 / v;
  }
  Eigen::SelfAdjointEigenSolver<RMat> es((q.real() + q.real().transpose()) / 2.0);
  return es.eigenvalues().minCoeff() > 0.0;
}

}  // namespace

AllowabilityReport allowability(const Mat& g) {
  check_metric(g);
  AllowabilityReport rep;
  std::vector<cd> lambdas;
  if (pencil_diagonalize(g, lambdas)) {
    rep.pencil_ok = true;
    rep.lambdas = lambdas;
    double arg_sum = 0.0;
    bool excluded = false;
    for (cd l : lambdas) {
      if (on_negative_axis(l)) excluded = true;
      arg_sum += std::abs(std::arg(l));
    }
    rep.arg_sum = arg_sum;
    rep.verdict = (!excluded && arg_sum < kPi) ? Allowability::Allowable
                                               : Allowability::NotAllowable;
    return rep;
  }
  if (g.rows() <= 2) {
    rep.used_fallback = true;
    rep.verdict = exterior_form_positive(g) ? Allowability::Allowable
                                            : Allowability::NotAllowable;
    return rep;
  }
  rep.verdict = Allowability::Undetermined;
  return rep;
}

cd sqrt_det(const Mat& g) {
  check_metric(g);
  double scale = g.cwiseAbs().maxCoeff();
  if (g.imag().cwiseAbs().maxCoeff() <= 1e-14 * scale) {
    Eigen::SelfAdjointEigenSolver<RMat> es(g.real());
    int negatives = 0;
    double prod = 1.0;
    for (int i = 0; i < g.rows(); ++i) {
      prod *= std::abs(es.eigenvalues()(i));
      if (es.eigenvalues()(i) < 0.0) ++negatives;
    }
    if (negatives == 0) return std::sqrt(prod);
    if (negatives == 1) return cd(0.0, std::sqrt(prod));  // upper half-plane limit
    throw Error("real metric with more than one negative eigenvalue has no "
                "square-root density");
  }
  AllowabilityReport rep = allowability(g);
  if (rep.verdict == Allowability::Undetermined)
    throw Error("allowability undetermined: no diagonalizing basis found");
  if (rep.verdict == Allowability::NotAllowable)
    throw Error("metric is not allowable and not Lorentzian");
  // on the allowable set the principal square root equals the product of
  // principal roots of the diagonal values
  return std::sqrt(g.determinant());
}

Mat density_right_inverse(cd omega, const Mat& h) {
  check_metric(h);
  if (h.imag().cwiseAbs().maxCoeff() > 1e-14 * h.cwiseAbs().maxCoeff())
    throw Error("reference metric must be real");
  Eigen::SelfAdjointEigenSolver<RMat> es(h.real());
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw Error("reference metric must be positive definite");
  cd c = omega / sqrt_det(h);
  if (!(c.real() > 0.0))
    throw Error("density must have re > 0 against the reference volume");
  double n = static_cast<double>(h.rows());
  return std::pow(c, 2.0 / n) * h;
}

std::vector<Label> total_volume(const SampledDensity& d) {
  std::vector<std::vector<int>> comps = d.components;
  if (comps.empty()) {
    comps.emplace_back();
    for (size_t i = 0; i < d.triangles.size(); ++i)
      comps[0].push_back(static_cast<int>(i));
  }
  std::vector<char> seen(d.triangles.size(), 0);
  for (const auto& comp : comps)
    for (int i : comp) {
      if (i < 0 || i >= static_cast<int>(d.triangles.size()))
        throw Error("triangle index out of range");
      if (seen[i]++) throw Error("triangle assigned to two components");
    }
  for (char s : seen)
    if (!s) throw Error("triangle not assigned to a component");

  std::vector<Label> labels;
  for (const auto& comp : comps) {
    bool any_positive = false, any_zero = false;
    cd total = 0.0;
    for (int i : comp) {
      const Triangle& t = d.triangles[i];
      if (t.area <= 0.0) throw Error("triangle areas must be positive");
      if (t.density.real() > 0.0)
        any_positive = true;
      else if (t.density.real() == 0.0)
        any_zero = true;
      else
        throw Error("triangle density has negative real part");
      total += t.area * t.density;
    }
    if (any_positive && any_zero)
      throw Error("mixed volume and imaginary densities in one component");
    labels.push_back(volume_label(total));
  }
  return labels;
}

}  // namespace areal
