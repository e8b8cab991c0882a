#include "areal/lorentzian.hpp"

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

using namespace areal;
using testutil::a1_theory;
using testutil::max_abs;
using testutil::mixed_theory;
using testutil::z2_algebra;

TEST_CASE("phase zero is the identity") {
  SpectralTheory th = mixed_theory();
  LorentzOperator u = eval_lorentzian(th, cylinder(zero_label()), th.top());
  REQUIRE(u.blocks.size() == th.entries.size());
  for (size_t i = 0; i < u.blocks.size(); ++i) {
    int d = th.entries[i].block.dim;
    CHECK(max_abs(u.blocks[i].matrix - Mat::Identity(d, d)) == 0.0);
    CHECK(u.growth[i].norm == doctest::Approx(1.0));
  }
  CHECK(u.bounded);
  CHECK(unitarity_defect(th, 0.0, th.top()) < 1e-14);
}

TEST_CASE("phase cylinders are unitary in the gram inner product") {
  for (const SpectralTheory& th :
       {a1_theory(Rat(40), CutoffPolicy::Truncated), mixed_theory()}) {
    for (double zeta : {0.3, -1.7, 12.0})
      CHECK(unitarity_defect(th, zeta, th.top()) < 1e-12);
  }
}

TEST_CASE("phases compose as a one parameter group") {
  SpectralTheory th = mixed_theory();
  double z1 = 0.7, z2 = -0.4;
  LorentzOperator a = eval_lorentzian(th, cylinder(imaginary_label(z1)), th.top());
  LorentzOperator b = eval_lorentzian(th, cylinder(imaginary_label(z2)), th.top());
  LorentzOperator ab =
      eval_lorentzian(th, cylinder(imaginary_label(z1 + z2)), th.top());
  REQUIRE(a.blocks.size() == ab.blocks.size());
  for (size_t i = 0; i < ab.blocks.size(); ++i)
    CHECK(max_abs(b.blocks[i].matrix * a.blocks[i].matrix -
                  ab.blocks[i].matrix) < 1e-14);
}

TEST_CASE("volume labels and closed components are rejected") {
  SpectralTheory th = a1_theory(Rat(6), CutoffPolicy::Complete);
  CHECK_THROWS_WITH_AS(
      eval_lorentzian(th, cylinder(volume_label(1.0)), th.top()),
      doctest::Contains("heat-flow"), Error);
  Bordism closed = closed_surface(1, imaginary_label(2.0));
  CHECK_THROWS_WITH_AS(eval_lorentzian(th, closed, th.top()),
                       doctest::Contains("Lorentzian limit"), Error);
  CHECK_THROWS_AS(short_distance(th, closed), Error);
}

TEST_CASE("pants phases carry the multiplication growth report") {
  SpectralTheory th = a1_theory(Rat(6), CutoffPolicy::Complete);
  LorentzOperator u =
      eval_lorentzian(th, compose(cylinders({imaginary_label(0.9),
                                             imaginary_label(0.0)}),
                                  pants_bordism()),
                      th.top());
  CHECK(!u.bounded);
  // block norm of the multiplication at a one dimensional character summand
  // of dimension d is 1/d; the phase does not change it
  for (size_t i = 0; i < u.blocks.size(); ++i) {
    double lam = u.blocks[i].lambda;
    if (lam == 0.75) CHECK(u.growth[i].norm == doctest::Approx(0.5));
    if (lam == 0.0) CHECK(u.growth[i].norm == doctest::Approx(1.0));
  }
}

TEST_CASE("short_distance strips labels") {
  SpectralTheory th = mixed_theory();
  LorentzOperator s = short_distance(th, cylinder(imaginary_label(3.0)));
  for (size_t i = 0; i < s.blocks.size(); ++i) {
    int d = th.entries[i].block.dim;
    CHECK(max_abs(s.blocks[i].matrix - Mat::Identity(d, d)) == 0.0);
  }
  LorentzOperator disk = short_distance(th, disk_bordism());
  CHECK(disk.n_in == 1);
  CHECK(disk.n_out == 0);
  // theta row of the ground block
  CHECK(disk.blocks[0].matrix(0, 0) == cd(2.0));
  CHECK(disk.blocks[0].matrix(0, 1) == cd(1.0));
}

TEST_CASE("long_distance is the ground block") {
  SpectralTheory th = mixed_theory();
  SUBCASE("cylinder projects to the ground identity") {
    Mat p = long_distance(th, cylinder(imaginary_label(1.0)));
    CHECK(max_abs(p - Mat::Identity(2, 2)) == 0.0);
  }
  SUBCASE("pants restrict to the ground multiplication") {
    Mat p = long_distance(th, pants_bordism());
    CHECK(max_abs(p - mult_matrix(z2_algebra(2.0, 1.0))) == 0.0);
  }
  SUBCASE("closed surfaces give the ground scalar") {
    SpectralTheory a1 = a1_theory(Rat(6), CutoffPolicy::Complete);
    for (int g = 0; g <= 2; ++g) {
      Mat p = long_distance(a1, closed_surface(g, imaginary_label(1.0)));
      REQUIRE(p.rows() == 1);
      CHECK(std::abs(p(0, 0) - 1.0) < 1e-14);
    }
  }
  SUBCASE("requires a normalized ground eigenvalue") {
    SpectralTheory shifted = mixed_theory();
    shift_spectrum(shifted, -0.5);
    CHECK_THROWS_WITH_AS(long_distance(shifted, cylinder(zero_label())),
                         doctest::Contains("normalize"), Error);
  }
}

TEST_CASE("heat flow contracts to the ground projection") {
  // |V(cyl, s) - P0| = e^{-re(s) * gap} exactly on a character theory
  SpectralTheory a1 = a1_theory(Rat(12), CutoffPolicy::Complete);
  double gap = a1.entries[1].lambda;
  CHECK(gap == doctest::Approx(0.75));
  for (double s : {1.0, 2.0, 4.0}) {
    BlockOperator v = eval_at(a1, cylinder(volume_label(s)), a1.top());
    double dist = 0.0;
    for (const BlockEntry& b : v.blocks) {
      Mat target = Mat::Zero(b.matrix.rows(), b.matrix.cols());
      if (b.lambda == 0.0) target.setIdentity();
      dist = std::max(dist, opnorm(b.matrix - target));
    }
    CHECK(dist == doctest::Approx(std::exp(-s * gap)));
    CHECK(dist <= std::exp(-s * gap) + 1e-15);
  }
}

TEST_CASE("factorization through the short_distance operator") {
  SpectralTheory th = a1_theory(Rat(6), CutoffPolicy::Complete);
  SUBCASE("elementary pieces") {
    std::vector<std::pair<Bordism, std::pair<int, int>>> cases = {
        {pants_bordism(), {2, 1}},
        {copants_bordism(), {1, 2}},
        {disk_bordism(), {1, 0}},
        {codisk_bordism(), {0, 1}},
    };
    cd v0(0.5, 0.1), v1(0.8, -0.3);
    for (const auto& [x, arity] : cases) {
      std::vector<cd> s0(arity.first, v0), s1(arity.second, v1);
      CHECK(factorization_residual(th, x, s0, s1) < 1e-12);
    }
  }
  SUBCASE("imaginary core labels are stripped before gluing") {
    Bordism x = cylinder(imaginary_label(2.0));
    CHECK(factorization_residual(th, x, {cd(0.4, 0.0)}, {cd(0.3, 0.2)}) < 1e-13);
  }
  SUBCASE("collar volumes must have positive real part") {
    CHECK_THROWS_AS(
        factorization_residual(th, cylinder(zero_label()), {cd(0.0, 1.0)}, {cd(1.0, 0.0)}),
        Error);
    CHECK_THROWS_AS(
        factorization_residual(th, cylinder(zero_label()), {cd(1.0, 0.0)}, {}),
        Error);
  }
}
