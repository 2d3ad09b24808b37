#include "wdist/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace wdist {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

ClearedCoeffs clear_denominators(const std::vector<Rat>& coeffs) {
  ClearedCoeffs out;
  out.den = 1;
  for (const auto& c : coeffs) out.den = lcm_int(out.den, den(c));
  out.ints.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Rat scaled = c * Rat(out.den);
    ensure(den(scaled) == 1, "clear_denominators: non-integer after scaling");
    out.ints.push_back(num(scaled));
  }
  return out;
}

std::string coeff_digest(const std::vector<Rat>& coeffs) {
  ClearedCoeffs cc = clear_denominators(coeffs);
  std::string joined;
  for (size_t i = 0; i < cc.ints.size(); ++i) {
    if (i) joined += '|';
    joined += cc.ints[i].get_str();
  }
  joined += "#den=" + cc.den.get_str();
  return sha256_hex(joined);
}

}  // namespace wdist
