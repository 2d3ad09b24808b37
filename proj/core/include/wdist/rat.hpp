#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wdist/errors.hpp"

namespace wdist {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int num(const Rat& x) { return Int(x.get_num()); }
inline Int den(const Rat& x) { return Int(x.get_den()); }

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// Parses an exact rational from "p/q", an integer string, or a finite decimal
// ("-3.25e-2" styles included). Throws PARSE_ERROR on anything else.
Rat parse_rat(const std::string& text);

// Canonical display: "p" when q==1, else "p/q".
std::string rat_str(const Rat& x);

// The rational with the smallest denominator inside [lo, hi] (Stern-Brocot walk).
// Requires lo <= hi.
Rat simplest_in_interval(const Rat& lo, const Rat& hi);

// floor(log10(|x|)) via string length; x must be nonzero.
long decimal_magnitude(const Rat& x);

// Number of decimal digits of |n| (0 -> 1).
size_t decimal_length(const Int& n);

}  // namespace wdist
