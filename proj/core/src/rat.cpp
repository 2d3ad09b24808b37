#include "wdist/rat.hpp"

#include <algorithm>
#include <cctype>

namespace wdist {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (sgn(base) == 0) raise(Errc::INTERNAL, "pow_rat: zero to negative power");
    return Rat(1) / pow_rat(base, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) raise(Errc::PARSE_ERROR, "empty number");

  int sign = 1;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  std::string body = s.substr(pos);
  if (body.empty()) raise(Errc::PARSE_ERROR, "sign without digits: '" + text + "'");

  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) raise(Errc::PARSE_ERROR, "bad fraction: '" + text + "'");
    if (sgn(Int(q)) == 0) raise(Errc::PARSE_ERROR, "zero denominator: '" + text + "'");
    Rat r{Int(p), Int(q)};
    r.canonicalize();
    return sign < 0 ? Rat(-r) : r;
  }

  // Decimal / scientific form: digits[.digits][(e|E)[+-]digits]
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = body.substr(epos + 1);
    body = body.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es = es.substr(1);
    }
    if (!all_digits(es) || es.size() > 6) raise(Errc::PARSE_ERROR, "bad exponent: '" + text + "'");
    exp10 = std::stol(es);
    if (eneg) exp10 = -exp10;
  }
  std::string intpart = body, fracpart;
  auto dot = body.find('.');
  if (dot != std::string::npos) {
    intpart = body.substr(0, dot);
    fracpart = body.substr(dot + 1);
  }
  if (intpart.empty() && fracpart.empty()) raise(Errc::PARSE_ERROR, "no digits: '" + text + "'");
  if (!intpart.empty() && !all_digits(intpart)) raise(Errc::PARSE_ERROR, "bad number: '" + text + "'");
  if (!fracpart.empty() && !all_digits(fracpart)) raise(Errc::PARSE_ERROR, "bad number: '" + text + "'");

  Int digits(intpart.empty() ? std::string("0") : intpart);
  for (char c : fracpart) {
    digits *= 10;
    digits += c - '0';
  }
  long shift = exp10 - static_cast<long>(fracpart.size());
  Rat r(digits);
  if (shift > 0)
    r *= Rat(pow_int(Int(10), static_cast<unsigned long>(shift)));
  else if (shift < 0)
    r /= Rat(pow_int(Int(10), static_cast<unsigned long>(-shift)));
  r.canonicalize();
  return sign < 0 ? Rat(-r) : r;
}

std::string rat_str(const Rat& x) {
  if (den(x) == 1) return num(x).get_str();
  return num(x).get_str() + "/" + den(x).get_str();
}

Rat simplest_in_interval(const Rat& lo, const Rat& hi) {
  if (lo > hi) raise(Errc::INTERNAL, "simplest_in_interval: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  if (sgn(hi) < 0) return -simplest_in_interval(-hi, -lo);
  // Now 0 < lo <= hi. Continued-fraction style descent.
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), num(lo).get_mpz_t(), den(lo).get_mpz_t());
  if (Rat(fl) == lo) return lo;              // lo integral: nothing simpler fits
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);  // smallest integer inside
  // Recurse on fractional parts: x in [lo,hi] <=> x = fl + 1/y, y in [1/(hi-fl), 1/(lo-fl)].
  Rat lo2 = Rat(1) / (hi - Rat(fl));
  Rat hi2 = Rat(1) / (lo - Rat(fl));
  Rat y = simplest_in_interval(lo2, hi2);
  return Rat(fl) + Rat(1) / y;
}

long decimal_magnitude(const Rat& x) {
  ensure(sgn(x) != 0, "decimal_magnitude of zero");
  Int n = abs(num(x)), d = den(x);
  long ln = static_cast<long>(n.get_str().size());
  long ld = static_cast<long>(d.get_str().size());
  long m = ln - ld;  // |x| in [10^(m-1), 10^(m+1))
  Rat ax = abs(x);
  // Adjust so that 10^m <= |x| < 10^(m+1).
  auto p10 = [](long e) {
    return e >= 0 ? Rat(pow_int(Int(10), static_cast<unsigned long>(e)))
                  : Rat(1) / Rat(pow_int(Int(10), static_cast<unsigned long>(-e)));
  };
  while (ax < p10(m)) --m;
  while (ax >= p10(m + 1)) ++m;
  return m;
}

size_t decimal_length(const Int& n) {
  Int a = abs(n);
  return a.get_str().size();
}

}  // namespace wdist
