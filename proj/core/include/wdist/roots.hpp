#pragma once

#include <vector>

#include "wdist/real.hpp"
#include "wdist/unipoly.hpp"

namespace wdist {

// A real root of a polynomial: either an exact rational (lo == hi) or an open
// isolating interval containing exactly one root of the square-free factor.
struct IsolatedRoot {
  Rat lo, hi;
  bool exact = false;
  int multiplicity = 1;
  UniPoly factor;  // square-free factor (integer-primitive) owning this root

  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

// All real roots in ascending order with exact multiplicities (square-free
// decomposition + Descartes bisection on [0,1] after power-of-two scaling).
// Intervals of distinct roots are disjoint.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p);

// Shrinks the enclosure to width <= 10^-digits without ever widening it, and
// detects exact rational roots on the way (simplest rational in the current
// interval). Signs are certified: floating evaluation with a running error
// bound, escalated and finally exact when indeterminate.
IsolatedRoot refine(const IsolatedRoot& r, unsigned digits);

// Certified sign of p at a rational point.
int sign_at(const UniPoly& p, const Rat& x);

// Number of sign changes in (seq_0, ..., seq_k) after trailing zeros are
// dropped; an interior zero makes the count ill-defined and raises
// JACOBI_HYPOTHESIS_VIOLATED (callers perturb their sample point).
size_t variation_count(const std::vector<Rat>& seq);

// Distinct complex-conjugate root pairs of p, from the sign variations of the
// Hankel minors of its power sums.
size_t count_complex_pairs(const UniPoly& p);

}  // namespace wdist
