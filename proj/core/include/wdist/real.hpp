#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "wdist/rat.hpp"

namespace wdist {

// Arbitrary-precision binary float (MPFR backend, variable precision,
// expression templates off so values behave like plain numbers).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the thread's default working precision, with guard digits on top of
// the user-requested decimal count. Call at thread entry before any Real is
// created on that thread.
void set_thread_precision(unsigned decimal_digits);
unsigned current_precision_digits();

Real to_real(const Rat& q);
Real to_real(const Int& n);

// Exact power of ten as Real (for tolerances): 10^e.
Real pow10(long e);

// Fixed significant-digit decimal in scientific form ("-1.234500e-03"),
// correctly rounded to nearest with ties to even.
std::string sci_str(const Real& x, unsigned digits);

// Plain decimal with `digits` digits after the point, same rounding.
std::string fixed_str(const Real& x, unsigned digits);

struct Cplx {
  Real re, im;
  Cplx() : re(0), im(0) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(const Real& r) : re(r), im(0) {}
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Cplx conj(const Cplx& a);
Real abs(const Cplx& a);
Real norm_sq(const Cplx& a);

}  // namespace wdist
