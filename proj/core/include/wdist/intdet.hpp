#pragma once

#include <vector>

#include "wdist/rat.hpp"

namespace wdist {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

// Fraction-free Gaussian elimination (Bareiss). Row swaps tracked by sign.
Int det_int(IntMat m);

// Clears each row by the lcm of its denominators, then divides back.
Rat det_rat(const RatMat& m);

// Leading principal minors det(m[0..k-1][0..k-1]) for k=1..n in one Bareiss
// sweep (the pivots ARE the minors). If a zero pivot forces a row swap the
// affected minors are recomputed individually.
std::vector<Int> leading_principal_minors(const IntMat& m);
std::vector<Rat> leading_principal_minors(const RatMat& m);

}  // namespace wdist
