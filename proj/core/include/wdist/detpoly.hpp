#pragma once

#include <vector>

#include "wdist/intdet.hpp"

namespace wdist {

// Gaussian integer (Z[i]) with exact ring arithmetic; Bareiss elimination
// over Z[i] needs exact division only.
struct GaussInt {
  Int re, im;
  GaussInt() : re(0), im(0) {}
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
// Quotient a/b that must be exact (INTERNAL error otherwise).
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

using GaussMat = std::vector<std::vector<GaussInt>>;
GaussInt det_gauss(GaussMat m);

// Hankel matrix [s_{i+j}]_{i,j=0..dim-1}; needs s_0..s_{2dim-2}.
RatMat hankel_from_sums(const std::vector<Rat>& s, size_t dim);
IntMat hankel_from_sums(const std::vector<Int>& s, size_t dim);

}  // namespace wdist
