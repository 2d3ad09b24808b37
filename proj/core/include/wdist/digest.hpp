#pragma once

#include <string>
#include <vector>

#include "wdist/rat.hpp"

namespace wdist {

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

// Canonical fingerprint of a rational coefficient list (low degree -> high):
// multiply through by the lcm of denominators, join the resulting integers
// (decimal) with '|', append "#den=<lcm>", hash. The common content is kept.
struct ClearedCoeffs {
  std::vector<Int> ints;  // low -> high
  Int den;                // lcm of denominators
};
ClearedCoeffs clear_denominators(const std::vector<Rat>& coeffs);
std::string coeff_digest(const std::vector<Rat>& coeffs);

}  // namespace wdist
