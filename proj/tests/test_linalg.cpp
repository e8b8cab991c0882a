#include "areal/linalg.hpp"

#include <random>

#include "doctest.h"

using namespace areal;

TEST_CASE("kron lays out blocks row-major") {
  Mat a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  Mat k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == cd(1.0));
  CHECK(k(0, 3) == cd(2.0));
  CHECK(k(1, 0) == cd(1.0));
  CHECK(k(3, 2) == cd(4.0));
  CHECK(k(0, 0) == cd(0.0));
}

TEST_CASE("flatten and unflatten invert with slot 0 most significant") {
  CHECK(flatten({1, 0, 2}, 3) == 11);
  CHECK(unflatten(11, 3, 3) == std::vector<int>{1, 0, 2});
  for (Eigen::Index f = 0; f < 81; ++f)
    CHECK(flatten(unflatten(f, 3, 4), 3) == f);
}

TEST_CASE("slot_permutation routes slot i to perm[i]") {
  Vec a(2), b(2), c(2);
  a << 1.0, 2.0;
  b << 3.0, 5.0;
  c << 7.0, 11.0;
  Vec abc = kron(kron(a, b), c);
  Mat p = slot_permutation(2, {2, 0, 1});
  Vec expect = kron(kron(b, c), a);
  CHECK((p * abc - expect).cwiseAbs().maxCoeff() == 0.0);

  SUBCASE("composition matches permutation composition") {
    Mat q = slot_permutation(2, {1, 0, 2});
    // applying p then q routes i -> q[p[i]]
    std::vector<int> comp = {2, 1, 0};
    CHECK((q * p - slot_permutation(2, comp)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("opnorm") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = cd(0.0, -4.0);
  CHECK(opnorm(d) == doctest::Approx(4.0));
  CHECK(opnorm(Mat::Zero(3, 2)) == 0.0);
}

TEST_CASE("gram_chol rejects indefinite matrices") {
  Mat g(2, 2);
  g << 1.0, 2.0, 2.0, 1.0;
  CHECK_THROWS_AS(gram_chol(g), Error);
}

TEST_CASE("gram_opnorm rescales by the gram factors") {
  Mat m = Mat::Constant(1, 1, cd(6.0, 0.0));
  Mat gin = Mat::Constant(1, 1, 4.0);
  Mat gout = Mat::Constant(1, 1, 1.0);
  CHECK(gram_opnorm(m, gin, gout) == doctest::Approx(3.0));
  CHECK(gram_opnorm(m, gout, gin) == doctest::Approx(12.0));
}

TEST_CASE("gram_adjoint satisfies the inner product identity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rmat = [&](int r, int c) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = cd(u(rng), u(rng));
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Mat a3 = rmat(3, 3), a2 = rmat(2, 2);
    Mat gin = a3.adjoint() * a3 + Mat::Identity(3, 3);
    Mat gout = a2.adjoint() * a2 + Mat::Identity(2, 2);
    Mat m = rmat(2, 3);
    Mat adj = gram_adjoint(m, gin, gout);
    Vec x = rmat(3, 1), y = rmat(2, 1);
    cd lhs = (y.adjoint() * gout * (m * x))(0, 0);
    cd rhs = ((adj * y).adjoint() * gin * x)(0, 0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("kron_pow") {
  Mat a(2, 2);
  a << 1.0, 0.0, 0.0, 2.0;
  CHECK(kron_pow(a, 0).rows() == 1);
  CHECK(kron_pow(a, 3).rows() == 8);
  CHECK(kron_pow(a, 3)(7, 7) == cd(8.0));
  CHECK(ipow(3, 4) == 81);
}
