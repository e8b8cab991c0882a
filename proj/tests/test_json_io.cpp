#include "areal/json_io.hpp"

#include <cstdint>

#include "doctest.h"
#include "helpers.hpp"

using namespace areal;
using testutil::max_abs;
using testutil::mixed_theory;

TEST_CASE("complex values are two element arrays") {
  json j = complex_json(cd(1.5, -2.0));
  CHECK(j.is_array());
  CHECK(j.size() == 2);
  CHECK(parse_complex(j) == cd(1.5, -2.0));
  CHECK_THROWS_AS(parse_complex(json(3.0)), Error);
  CHECK_THROWS_AS(parse_complex(json::array({1.0})), Error);
  CHECK_THROWS_AS(parse_complex(json::array({1.0, 2.0, 3.0})), Error);
}

TEST_CASE("matrix round trip") {
  Mat m(2, 3);
  m << cd(1, 2), cd(3, 4), cd(5, 6), cd(7, 8), cd(9, 10), cd(11, 12);
  Mat back = parse_matrix(matrix_json(m));
  CHECK(max_abs(back - m) == 0.0);
  CHECK_THROWS_AS(parse_matrix(json::array({})), Error);
  // ragged rows
  json bad = json::array();
  bad.push_back(json::array({complex_json(1.0)}));
  bad.push_back(json::array({complex_json(1.0), complex_json(2.0)}));
  CHECK_THROWS_AS(parse_matrix(bad), Error);
}

TEST_CASE("algebra round trip preserves every tensor entry") {
  FrobeniusAlgebra a = testutil::z2_algebra(2.0, 1.0);
  json j = algebra_json(a);
  CHECK(j["dim"] == 2);
  CHECK(j["mult"].size() == 4);  // dim^2 rows
  CHECK(j["mult"][0].size() == 2);
  FrobeniusAlgebra back = parse_algebra(j);
  CHECK(back.dim == a.dim);
  CHECK(back.mult == a.mult);
  CHECK(max_abs(back.trace - a.trace) == 0.0);
  CHECK(max_abs(back.conj_mat - a.conj_mat) == 0.0);
}

TEST_CASE("theory round trip keeps policy and density") {
  SpectralTheory th = mixed_theory();
  th.policy = CutoffPolicy::Truncated;
  th.density_majorant = {3.0, 0.5};
  json j = theory_json(th);
  CHECK(j["cutoff"]["policy"] == "truncated");
  SpectralTheory back = build_theory(parse_theory(j).entries, CutoffPolicy::Truncated,
                                     parse_theory(j).density_majorant);
  REQUIRE(back.entries.size() == th.entries.size());
  for (size_t i = 0; i < back.entries.size(); ++i) {
    CHECK(back.entries[i].lambda == th.entries[i].lambda);
    CHECK(back.entries[i].block.mult == th.entries[i].block.mult);
  }
  CHECK(back.density_majorant == th.density_majorant);

  json complete = theory_json(mixed_theory());
  CHECK(complete["cutoff"]["policy"] == "complete");
  CHECK(parse_theory(complete).policy == CutoffPolicy::Complete);
}

TEST_CASE("label round trip enforces kind consistency") {
  for (const Label& l : {volume_label(cd(1.0, -0.5)), zero_label(),
                         imaginary_label(2.5)}) {
    Label back = parse_label(label_json(l));
    CHECK(back.kind == l.kind);
    CHECK(back.value == l.value);
  }
  json j = label_json(volume_label(cd(1.0, 0.0)));
  j["value"] = complex_json(cd(0.0, 3.0));
  CHECK_THROWS_AS(parse_label(j), Error);
  j["kind"] = "nonsense";
  CHECK_THROWS_AS(parse_label(j), Error);
}

TEST_CASE("bordism round trip validates") {
  std::uint64_t seed = 77;
  for (int trial = 0; trial < 10; ++trial) {
    Bordism x = oracle::random_bordism(seed++);
    Bordism back = parse_bordism(bordism_json(x));
    CHECK(equal(back, x));
  }
  json j = bordism_json(pants_bordism());
  j["components"][0]["in"] = json::array({0});  // drops slot 1
  CHECK_THROWS_AS(parse_bordism(j), Error);
}

TEST_CASE("block operator serialization") {
  SpectralTheory th = mixed_theory();
  BlockOperator op = eval(th, cylinder(volume_label(cd(1.0, 0.25))), 1e-10);
  json j = block_operator_json(op);
  CHECK(j["tail_bound"].is_number());
  BlockOperator back = parse_block_operator(j);
  CHECK(back.n_in == 1);
  CHECK(back.n_out == 1);
  REQUIRE(back.blocks.size() == op.blocks.size());
  for (size_t i = 0; i < op.blocks.size(); ++i)
    CHECK(max_abs(back.blocks[i].matrix - op.blocks[i].matrix) == 0.0);
  CHECK(back.certified);
  CHECK(back.closed_scalar == op.closed_scalar);

  BlockOperator loose = eval(th, cylinder(zero_label()), 1e-10);
  json j2 = block_operator_json(loose);
  CHECK(j2["tail_bound"].is_null());
  CHECK(!parse_block_operator(j2).certified);
}

TEST_CASE("lorentz operator serialization") {
  SpectralTheory th = mixed_theory();
  LorentzOperator u = eval_lorentzian(th, cylinder(imaginary_label(1.5)), th.top());
  json j = lorentz_json(u);
  CHECK(j["domain"] == "check_space");
  LorentzOperator back = parse_lorentz(j);
  CHECK(back.bounded == u.bounded);
  REQUIRE(back.growth.size() == u.growth.size());
  for (size_t i = 0; i < u.growth.size(); ++i) {
    CHECK(back.growth[i].lambda == u.growth[i].lambda);
    CHECK(back.growth[i].norm == u.growth[i].norm);
  }
}

TEST_CASE("mesh serialization") {
  SampledDensity d;
  d.triangles = {{0.5, cd(1.0, 1.0)}, {2.0, cd(0.25, 0.0)}};
  d.components = {{0}, {1}};
  SampledDensity back = parse_mesh(mesh_json(d));
  REQUIRE(back.triangles.size() == 2);
  CHECK(back.triangles[0].area == 0.5);
  CHECK(back.triangles[0].density == cd(1.0, 1.0));
  CHECK(back.components == d.components);
}

TEST_CASE("malformed documents fail with parse errors") {
  CHECK_THROWS_AS(parse_theory(json::object()), Error);
  CHECK_THROWS_AS(parse_bordism(json::array()), Error);
  CHECK_THROWS_AS(parse_algebra(json{{"dim", 2}}), Error);
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), Error);
}
