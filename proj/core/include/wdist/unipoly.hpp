#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wdist/rat.hpp"

namespace wdist {

// Dense univariate polynomial over Q. Stored low degree -> high degree with a
// nonzero leading coefficient (the zero polynomial has no coefficients).
// Display and serialization use the reverse (highest degree first) order.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rat& c0) { c_ = {c0}; normalize(); }
  static UniPoly from_low(std::vector<Rat> coeffs);
  static UniPoly from_high(std::vector<Rat> coeffs);
  static UniPoly from_int_low(const std::vector<Int>& coeffs);
  static UniPoly monomial(size_t k, const Rat& coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // Coefficient of x^k (0 beyond the degree).
  Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs_low() const { return c_; }
  std::vector<Rat> coeffs_high() const { return {c_.rbegin(), c_.rend()}; }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
  // Multiplicity of the root x=0; polynomial must be nonzero.
  size_t trailing_order() const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rat& s, const UniPoly& a);

Rat eval(const UniPoly& p, const Rat& x);
UniPoly derivative(const UniPoly& p);

// p(s*x) and p(x+s).
UniPoly scale_arg(const UniPoly& p, const Rat& s);
UniPoly shift_arg(const UniPoly& p, const Rat& s);

// Euclidean division; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Division that must be exact (INTERNAL error otherwise).
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

UniPoly monic(const UniPoly& p);
// Integer coefficients with content 1 and positive leading coefficient.
UniPoly primitive_int(const UniPoly& p);

// Monic gcd over Q. Uses a modular (CRT) method on the primitive integer
// images with exact division verification; a degree-0 image modulo a single
// good prime certifies coprimality outright.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Yun's square-free decomposition: monic factors with their multiplicities,
// product(factor_i^mult_i) == monic(p). Constant factors are omitted.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

// Resultant via the Sylvester matrix (fraction-free determinant).
Rat resultant(const UniPoly& a, const UniPoly& b);
// (-1)^(N(N-1)/2) * Res(p, p') / lead(p).
Rat discriminant(const UniPoly& p);

// Power sums s_0..s_count of the roots of a monic polynomial, from its
// coefficients alone (classical Newton recursion; no root extraction).
std::vector<Rat> power_sums(const UniPoly& monic_p, size_t count);

// Newton interpolation through (xs[i], ys[i]); xs must be pairwise distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace wdist
