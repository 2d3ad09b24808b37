#include "wdist/real.hpp"

#include <mpfr.h>

#include <cstdlib>

#include "wdist/errors.hpp"

namespace wdist {

namespace {
thread_local unsigned g_digits = 40;
}

void set_thread_precision(unsigned decimal_digits) {
  if (decimal_digits < 10) decimal_digits = 10;
  g_digits = decimal_digits;
  Real::default_precision(decimal_digits + 10);
}

unsigned current_precision_digits() { return g_digits; }

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Int& n) {
  Real r;
  mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real ten(10);
  Real r(1);
  long a = e < 0 ? -e : e;
  Real base = ten;
  while (a) {
    if (a & 1) r *= base;
    base *= base;
    a >>= 1;
  }
  if (e < 0) return Real(1) / r;
  return r;
}

namespace {

std::string mpfr_format(const char* fmt, unsigned digits, const Real& x) {
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, static_cast<int>(digits), MPFR_RNDN, x.backend().data());
  ensure(out != nullptr, "mpfr_asprintf failed");
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace

std::string sci_str(const Real& x, unsigned digits) {
  if (digits == 0) digits = 1;
  // %.*R*e prints one digit before the point and `digits-1` after.
  return mpfr_format("%.*R*e", digits - 1, x);
}

std::string fixed_str(const Real& x, unsigned digits) { return mpfr_format("%.*R*f", digits, x); }

Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
Cplx operator*(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cplx operator/(const Cplx& a, const Cplx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
Real abs(const Cplx& a) {
  using boost::multiprecision::hypot;
  return hypot(a.re, a.im);
}
Real norm_sq(const Cplx& a) { return a.re * a.re + a.im * a.im; }

}  // namespace wdist
