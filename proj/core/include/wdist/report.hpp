#pragma once

#include <json.hpp>

#include <string>

#include "wdist/complexdist.hpp"
#include "wdist/nearest.hpp"
#include "wdist/ratmatrix.hpp"

namespace wdist {

using Json = nlohmann::ordered_json;

struct MatrixInput {
  Matrix matrix;
  std::string label;
};

// Matrix document: {"n": 2, "entries": [["1", "-3/7"], ["0.25", "2"]],
// "label": "optional"}. Entries are rational strings, finite-decimal strings
// (converted exactly), or plain JSON integers; "n" may be omitted when the
// rows are square. Errors: PARSE_ERROR.
MatrixInput read_matrix_json(const std::string& text);
std::string write_matrix_json(const Matrix& m, const std::string& label = "");

// Canonical fingerprint of the exact input: SHA-256 over the row-major
// rational entries.
std::string matrix_digest(const Matrix& m);

// Report documents. All exact data (rationals, cleared integer coefficients)
// are decimal strings; refined values are scientific decimals with `digits`
// significant digits (round half to even). Identical input and flags yield
// byte-identical documents; the caller owns any timing field.
Json equation_json(const DistanceEquation& eq);
Json equation_json(const ComplexDistanceEquation& eq);
Json zero_json(const ZeroRecord& z, unsigned digits);
Json zero_json(const ComplexZeroRecord& z, unsigned digits);
Json report_json(const DistanceReport& rep);
Json report_json(const ComplexReport& rep);
Json verify_json(const VerifyReport& rep);

// Decimal matrices at fixed precision.
Json matrix_json(const RealMat& m, unsigned digits);
Json matrix_json(const CplxMat& m, unsigned digits);

}  // namespace wdist
