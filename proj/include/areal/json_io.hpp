#ifndef AREAL_JSON_IO_HPP
#define AREAL_JSON_IO_HPP

#include <json.hpp>

#include "areal/allowable.hpp"
#include "areal/lorentzian.hpp"

namespace areal {

using json = nlohmann::json;

// Complex numbers are always two-element [re, im] arrays.
json complex_json(cd z);
cd parse_complex(const json& j);

json matrix_json(const Mat& m);
Mat parse_matrix(const json& j);

// {"dim": n, "mult": dim^2 rows (pair index i*dim+j) of dim complex
// coefficients over k, "trace": [...], "conj": [[...]]}
json algebra_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra parse_algebra(const json& j);

// {"entries": [{"lambda": x, "block": ...}], "cutoff": {"policy":
// "complete"|"truncated", "density": [...]}}; parse is structural, callers
// validate via build_theory.
json theory_json(const SpectralTheory& th);
SpectralTheory parse_theory(const json& j);

// {"kind": "volume"|"imaginary"|"zero", "value": [re, im]}
json label_json(const Label& l);
Label parse_label(const json& j);

json bordism_json(const Bordism& x);
Bordism parse_bordism(const json& j);

// {"n_in", "n_out", "blocks": [{"lambda", "matrix"}], "tail_bound": t or
// null, "bounded", "closed_scalar"}
json block_operator_json(const BlockOperator& op);
BlockOperator parse_block_operator(const json& j);

// Same block layout plus "domain": "check_space" and the growth report.
json lorentz_json(const LorentzOperator& op);
LorentzOperator parse_lorentz(const json& j);

// {"triangles": [{"area": a, "density": [re, im]}], "components": [[...]]}
json mesh_json(const SampledDensity& d);
SampledDensity parse_mesh(const json& j);

json load_json_file(const std::string& path);

}  // namespace areal

#endif
