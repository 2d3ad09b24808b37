#pragma once

#include <vector>

#include "wdist/unipoly.hpp"

namespace wdist {

// Polynomial in an outer variable L ("lambda") whose coefficients are
// univariate polynomials in an inner variable z. Dense in L, low -> high,
// with a nonzero leading coefficient.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const UniPoly& c0) { c_ = {c0}; normalize(); }
  static BiPoly from_low(std::vector<UniPoly> coeffs);
  static BiPoly lambda_monomial(size_t k, const UniPoly& coeff);

  bool is_zero() const { return c_.empty(); }
  long degree_lambda() const { return static_cast<long>(c_.size()) - 1; }
  long degree_z() const;
  UniPoly coeff(size_t k) const { return k < c_.size() ? c_[k] : UniPoly(); }
  const std::vector<UniPoly>& coeffs_low() const { return c_; }
  UniPoly lead() const { return c_.empty() ? UniPoly() : c_.back(); }

  bool operator==(const BiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  std::string str(const std::string& lvar = "L", const std::string& zvar = "z") const;

 private:
  void normalize();
  std::vector<UniPoly> c_;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const UniPoly& s, const BiPoly& a);
BiPoly operator*(const Rat& s, const BiPoly& a);

// Partial derivatives.
BiPoly d_lambda(const BiPoly& p);
BiPoly d_z(const BiPoly& p);

// Specializations.
UniPoly eval_lambda(const BiPoly& p, const Rat& lambda);  // polynomial in z
UniPoly eval_z(const BiPoly& p, const Rat& z);            // polynomial in L

// Divides out the gcd of all coefficients (content in z) and normalizes the
// sign of the leading coefficient's leading coefficient to +.
BiPoly primitive_z(const BiPoly& p);

// Exact division in L where the quotient is known to exist with polynomial
// coefficients; INTERNAL error if any step fails.
BiPoly exact_div_lambda(const BiPoly& a, const BiPoly& b);

// gcd in L over Q(z), returned primitive over Q[z] (primitive PRS with
// fraction-free pseudo-remainders).
BiPoly gcd_lambda(const BiPoly& a, const BiPoly& b);

}  // namespace wdist
