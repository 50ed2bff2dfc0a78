#pragma once

// JSON schemas for the file and stdout interfaces:
//   StructureConstants  {"C": [[[..]]]}  (or a constructor {"class", "alpha", "beta"})
//   FTensor             {"F": [[[..]]]}
//   ClassParams         {"class": "F8", "alpha": x, "beta": y}
//   ClassReport         {"verdict": [...], "alpha", "beta", "residual", "lee", "para_sasakian", ...}
//   ExpResult           {"A", "t", "u", "branch", "expA", "oracle_residual"}
// Doubles are written in shortest round-trip form.

#include "paralie/paralie.hpp"

#include <json.hpp>

#include <stdexcept>

namespace paralie::io {

using json = nlohmann::json;

/// Malformed or schema-violating JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const Vec3& v);
json to_json(const Mat3& m);
json to_json(const Tensor3& t);
json to_json(const ClassParams& p);
json to_json(const StructureConstants& c);
json to_json(const FTensor& f);
json to_json(const LeeForms& lee);
json to_json(const ClassReport& r);
json to_json(const ExpResult& r);

Mat3 mat3_from_json(const json& j);
Tensor3 tensor3_from_json(const json& j);
ClassParams class_params_from_json(const json& j);
FTensor ftensor_from_json(const json& j);

/// Accepts {"C": ...} or a constructor object {"class": ..., "alpha", "beta"}.
/// Throws ParseError on schema problems and NotALieAlgebra when the
/// constants are not antisymmetric.
StructureConstants structure_constants_from_json(const json& j);

/// json::parse wrapped to throw ParseError.
json parse(std::string_view text);

}  // namespace paralie::io
