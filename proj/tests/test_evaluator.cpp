#include "areal/evaluator.hpp"

#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "helpers.hpp"

using namespace areal;
using oracle::BordismSpec;
using oracle::random_bordism;
using testutil::a1_theory;
using testutil::max_abs;
using testutil::mixed_theory;
using testutil::random_with_arity;
using testutil::z2_algebra;

namespace {

bool has_closed(const Bordism& x) {
  for (const Component& c : x.components)
    if (c.in.empty() && c.out.empty()) return true;
  return false;
}

SpectralTheory u1_theory(Rat cmax) {
  SpectralTheory t = ym_theory(build_datum(GroupType::U1), cmax);
  return build_theory(t.entries, CutoffPolicy::Complete, t.density_majorant);
}

}  // namespace

TEST_CASE("eval_component on elementary pieces") {
  FrobeniusAlgebra a = z2_algebra();
  CHECK(max_abs(eval_component(a, 0, 2, 1) - mult_matrix(a)) == 0.0);
  CHECK(max_abs(eval_component(a, 0, 1, 2) - comult_matrix(a)) == 0.0);
  CHECK(max_abs(eval_component(a, 1, 1, 1) - 2.0 * Mat::Identity(2, 2)) < 1e-12);
  CHECK(max_abs(eval_component(a, 0, 1, 1) - Mat::Identity(2, 2)) == 0.0);

  FrobeniusAlgebra c = character_block({1.0, 2.0});
  for (int g = 0; g <= 2; ++g) {
    cd scalar = eval_component(c, g, 0, 0)(0, 0);
    double expect = 1.0 + std::pow(2.0, 2.0 - 2.0 * g);
    CHECK(std::abs(scalar - expect) < 1e-12);
  }
  // three to one merge is iterated multiplication
  Mat m3 = eval_component(a, 0, 3, 1);
  CHECK(m3.rows() == 2);
  CHECK(m3.cols() == 8);
  CHECK(std::abs(m3(0, 0) - 1.0) < 1e-12);  // e e e -> e
  CHECK(std::abs(m3(1, 1) - 1.0) < 1e-12);  // e e g -> g
  CHECK(std::abs(m3(0, 3) - 1.0) < 1e-12);  // e g g -> e
  CHECK(std::abs(m3(1, 7) - 1.0) < 1e-12);  // g g g -> g
}

TEST_CASE("component_depth counts elementary pieces") {
  auto comp = [](int g, int a, int b) {
    Component c;
    c.genus = g;
    for (int i = 0; i < a; ++i) c.in.push_back(i);
    for (int i = 0; i < b; ++i) c.out.push_back(i);
    return c;
  };
  CHECK(component_depth(comp(0, 1, 1)) == 0);  // cylinder
  CHECK(component_depth(comp(0, 2, 1)) == 1);  // pants
  CHECK(component_depth(comp(0, 1, 0)) == 1);  // disk
  CHECK(component_depth(comp(1, 1, 1)) == 2);
  CHECK(component_depth(comp(1, 0, 0)) == 4);  // closed torus
  CHECK(component_depth(comp(2, 3, 2)) == 7);
}

TEST_CASE("eval_at of a cylinder is the heat semigroup") {
  SpectralTheory th = mixed_theory();
  cd s(0.8, -0.3);
  BlockOperator op = eval_at(th, cylinder(volume_label(s)), th.top());
  REQUIRE(op.blocks.size() == th.entries.size());
  for (size_t i = 0; i < op.blocks.size(); ++i) {
    int d = th.entries[i].block.dim;
    Mat expect = std::exp(-s * th.entries[i].lambda) * Mat::Identity(d, d);
    CHECK(max_abs(op.blocks[i].matrix - expect) < 1e-14);
  }
  CHECK(op.closed_scalar == cd(1.0));
}

TEST_CASE("trivial theory evaluates every closed surface to one") {
  SpectralTheory th = build_theory({{0.0, character_block({1.0})}});
  for (int g = 0; g <= 3; ++g)
    for (cd s : {cd(1.0, 0.0), cd(0.2, 5.0), cd(3.0, -1.0)}) {
      cd z = partition_function(th, g, s, 1e-10);
      CHECK(std::abs(z - 1.0) < 1e-14);
    }
}

TEST_CASE("frozen partition values") {
  SpectralTheory a1 = a1_theory(Rat(40), CutoffPolicy::Complete);
  SUBCASE("torus") {
    cd z = partition_function(a1, 1, 1.0, 1e-12);
    CHECK(std::abs(z - cd(1.6338630861248765)) < 1e-13);
  }
  SUBCASE("sphere") {
    cd z = partition_function(a1, 0, 1.0, 1e-12);
    CHECK(std::abs(z - cd(4.5517515889374893)) < 1e-13);
  }
  SUBCASE("genus two at complex volume") {
    cd z = partition_function(a1, 2, cd(0.5, 0.5), 1e-12);
    CHECK(std::abs(z - cd(1.1770568809629661, -0.1064165225865573)) < 1e-13);
  }
  SUBCASE("torus at complex volume") {
    cd z = partition_function(a1, 1, cd(0.7, 0.3), 1e-12);
    CHECK(std::abs(z - cd(1.8058945603844245, -0.3521467822503332)) < 1e-13);
  }
  SUBCASE("torus for the circle group") {
    cd z = partition_function(u1_theory(Rat(40)), 1, 1.0, 1e-12);
    CHECK(std::abs(z - cd(1.7726372048266522)) < 1e-13);
  }
}

TEST_CASE("partition agrees with the independent closed form") {
  SpectralTheory a1 = a1_theory(Rat(40), CutoffPolicy::Complete);
  for (int g = 0; g <= 2; ++g)
    for (cd s : {cd(1.0, 0.0), cd(0.7, 0.3)}) {
      cd z = partition_function(a1, g, s, 1e-12);
      cd ref = oracle::closed_form_genus(a1, g, s);
      CHECK(std::abs(z - ref) < 1e-13 * std::abs(ref));
    }
}

TEST_CASE("certified truncation bounds the dropped tail") {
  SpectralTheory th = a1_theory(Rat(40), CutoffPolicy::Truncated);
  SpectralTheory longer = a1_theory(Rat(120), CutoffPolicy::Complete);
  for (double eps : {1e-4, 1e-6}) {
    BlockOperator op = eval(th, closed_surface(1, volume_label(1.0)), eps);
    CHECK(op.certified);
    CHECK(op.bounded);
    CHECK(op.tail_bound < eps);
    cd truth = oracle::closed_form_genus(longer, 1, 1.0);
    CHECK(std::abs(op.scalar() - truth) <= op.tail_bound + 1e-13);
  }
}

TEST_CASE("eval refuses imaginary labels and degrades on zero labels") {
  SpectralTheory th = a1_theory(Rat(6), CutoffPolicy::Complete);
  CHECK_THROWS_AS(eval(th, cylinder(imaginary_label(1.0)), 1e-8), Error);
  BlockOperator op = eval(th, cylinder(zero_label()), 1e-8);
  CHECK(!op.certified);
  CHECK(!op.bounded);
  CHECK(op.blocks.size() == th.entries.size());
}

TEST_CASE("uncertifiable truncated theories throw") {
  SpectralTheory small = a1_theory(Rat(2), CutoffPolicy::Truncated);
  CHECK_THROWS_AS(eval(small, cylinder(volume_label(1.0)), 1e-9),
                  CertificationError);
}

TEST_CASE("functoriality under gluing") {
  SpectralTheory th = mixed_theory();
  SUBCASE("pants into cylinder") {
    cd s(0.6, 0.2);
    Bordism x = pants_bordism();
    Bordism y = cylinder(volume_label(s));
    BlockOperator lhs = eval_at(th, compose(x, y), th.top());
    BlockOperator rhs = chain(th, eval_at(th, x, th.top()), eval_at(th, y, th.top()));
    CHECK(block_residual(lhs, rhs) < 1e-13);
  }
  SUBCASE("random pairs without newly closed components") {
    std::uint64_t seed = 900;
    BordismSpec spec;
    spec.allow_closed = false;
    int done = 0;
    while (done < 12) {
      Bordism x = random_bordism(seed++, spec);
      Bordism y = random_with_arity(seed, x.n_out, spec);
      Bordism glued = compose(x, y);
      if (has_closed(glued)) continue;  // closed scalars sum over eigenvalues
      BlockOperator lhs = eval_at(th, glued, th.top());
      BlockOperator rhs =
          chain(th, eval_at(th, x, th.top()), eval_at(th, y, th.top()));
      CHECK(block_residual(lhs, rhs) < 1e-11);
      ++done;
    }
  }
}

TEST_CASE("semigroup and normality") {
  for (const SpectralTheory& th :
       {a1_theory(Rat(6), CutoffPolicy::Complete), mixed_theory()}) {
    SemigroupCheck c = check_semigroup(th, cd(0.5, 0.2), cd(0.9, -0.4));
    CHECK(c.semigroup_residual < 1e-12);
    CHECK(c.normality_residual < 1e-12);
  }
}

TEST_CASE("adjoint law on random surfaces") {
  SpectralTheory th = mixed_theory();
  std::uint64_t seed = 1500;
  BordismSpec spec;
  spec.max_in = 2;
  spec.max_out = 2;
  for (int trial = 0; trial < 20; ++trial) {
    Bordism x = random_bordism(seed++, spec);
    CHECK(check_adjoint(th, x) < 1e-10);
  }
}

TEST_CASE("evaluator matches the brute force contraction") {
  SpectralTheory th = mixed_theory();
  oracle::CircleSpace space = oracle::circle_space(th, th.top());
  CHECK(space.total == 5);

  SUBCASE("arbitrary surfaces on the equal eigenvalue sector") {
    std::uint64_t seed = 2000;
    for (int trial = 0; trial < 25; ++trial) {
      Bordism x = random_bordism(seed++);
      std::vector<Layer> layers = oracle::random_decomposition(x, seed * 31);
      Mat brute = oracle::brute_contract(th, layers, x.n_in, th.top());
      Mat masked = oracle::restrict_equal_lambda(space, brute, x.n_in, x.n_out);
      Mat blocks = oracle::embed_blocks(space, eval_at(th, x, th.top()));
      CHECK(max_abs(masked - blocks) < 1e-10);
    }
  }

  SUBCASE("connected surfaces are eigenvalue diagonal in full") {
    std::uint64_t seed = 3000;
    BordismSpec spec;
    spec.max_components = 1;
    spec.allow_closed = false;
    for (int trial = 0; trial < 15; ++trial) {
      Bordism x = random_bordism(seed++, spec);
      std::vector<Layer> layers = oracle::random_decomposition(x, seed * 17);
      Mat brute = oracle::brute_contract(th, layers, x.n_in, th.top());
      Mat blocks = oracle::embed_blocks(space, eval_at(th, x, th.top()));
      CHECK(max_abs(brute - blocks) < 1e-10);
    }
  }
}

TEST_CASE("chain and block_residual bookkeeping") {
  SpectralTheory th = mixed_theory();
  BlockOperator a = eval_at(th, pants_bordism(), th.top());
  BlockOperator b = eval_at(th, cylinder(volume_label(1.0)), th.top());
  CHECK_THROWS_AS(chain(th, a, eval_at(th, pants_bordism(), th.top())), Error);
  BlockOperator c = chain(th, a, b);
  CHECK(c.n_in == 2);
  CHECK(c.n_out == 1);
  CHECK(block_residual(a, a) == 0.0);
  CHECK(block_residual(c, a) > 0.0);
}

TEST_CASE("closed components scale every block") {
  SpectralTheory th = a1_theory(Rat(6), CutoffPolicy::Complete);
  cd s(1.0, 0.0), s2(0.5, 0.0);
  Bordism x = disjoint_union(closed_surface(1, volume_label(s)),
                             cylinder(volume_label(s2)));
  BlockOperator op = eval(th, x, 1e-10);
  CHECK(op.certified);
  cd z = oracle::closed_form_genus(th, 1, s);
  CHECK(std::abs(op.closed_scalar - z) < 1e-12);
  REQUIRE(!op.blocks.empty());
  CHECK(std::abs(op.blocks[0].matrix(0, 0) -
                 z * std::exp(-s2 * th.ground())) < 1e-12);
}

TEST_CASE("boundary_gram is the tensor power of the block gram") {
  FrobeniusAlgebra a = z2_algebra(2.0, 1.0);
  Mat g = hermitian_gram(a);
  Mat g2 = boundary_gram(a, 2);
  CHECK(g2.rows() == 4);
  CHECK(max_abs(g2 - kron(g, g)) == 0.0);
  CHECK(boundary_gram(a, 0).rows() == 1);
}
