#include "wdist/gallery.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

#include "wdist/errors.hpp"
#include "wdist/roots.hpp"

namespace wdist {
namespace {

struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned digits) : saved(current_precision_digits()) {
    set_thread_precision(digits);
  }
  ~PrecisionScope() { set_thread_precision(saved); }
};

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

size_t parse_order(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    raise(Errc::INVALID_PARAMS, "matrix order must be a positive integer, got '" + text + "'");
  long n = 0;
  std::istringstream is(text);
  is >> n;
  if (n <= 0) raise(Errc::INVALID_PARAMS, "matrix order must be positive");
  return static_cast<size_t>(n);
}

unsigned parse_digit_count(const std::string& text) {
  size_t n = parse_order(text);
  if (n > 1000) raise(Errc::INVALID_PARAMS, "digit count out of range");
  return static_cast<unsigned>(n);
}

// floor(x * 10^digits + 1/2) for positive x: round half away from zero.
Int round_decimals_up(const Real& x, unsigned digits) {
  Real y = x * to_real(pow_int(Int(10), digits)) + Real(1) / Real(2);
  Int z;
  mpfr_get_z(z.get_mpz_t(), y.backend().data(), MPFR_RNDD);
  return z;
}

Rat circle_defect(const Rat& s, const Rat& c) { return s * s + c * c - 1; }

Real printed(const std::string& decimal) { return to_real(parse_rat(decimal)); }

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::FRANK: return "frank";
    case Family::KAHAN: return "kahan";
    case Family::GRCAR: return "grcar";
    case Family::EPSILON_FAMILY: return "epsilon";
    case Family::EXPLICIT: return "explicit";
  }
  return "explicit";
}

GallerySpec parse_gallery(const std::string& text) {
  const std::vector<std::string> parts = split_colon(text);
  if (parts.size() < 2) raise(Errc::INVALID_PARAMS, "expected family:order, got '" + text + "'");
  const std::string& fam = parts[0];
  const size_t n = parse_order(parts[1]);

  GallerySpec spec;
  spec.n = n;
  spec.label = text;
  if (fam == "frank" || fam == "grcar") {
    spec.family = fam == "frank" ? Family::FRANK : Family::GRCAR;
    if (parts.size() != 2)
      raise(Errc::INVALID_PARAMS, fam + " takes no parameters beyond the order");
    return spec;
  }
  if (fam == "kahan") {
    spec.family = Family::KAHAN;
    if (parts.size() >= 3 && parts[2] == "auto") {
      if (parts.size() > 4) raise(Errc::INVALID_PARAMS, "kahan:N:auto takes at most one digit count");
      unsigned digits = parts.size() == 4 ? parse_digit_count(parts[3]) : 20;
      GallerySpec out = kahan_auto_spec(n, digits);
      out.label = text;
      return out;
    }
    if (parts.size() != 4 && !(parts.size() == 5 && parts[4] == "approx"))
      raise(Errc::INVALID_PARAMS, "kahan needs kahan:N:s:c[:approx] or kahan:N:auto[:digits]");
    spec.s = parse_rat(parts[2]);
    spec.c = parse_rat(parts[3]);
    spec.approximate = parts.size() == 5;
    const Rat defect = circle_defect(spec.s, spec.c);
    if (defect != 0 && !spec.approximate)
      raise(Errc::INVALID_PARAMS,
            "kahan parameters are off the unit circle (s^2+c^2-1 = " + rat_str(defect) +
                "); declare ':approx' to accept them");
    if (spec.approximate) spec.approx_error = defect;
    return spec;
  }
  if (fam == "epsilon") {
    spec.family = Family::EPSILON_FAMILY;
    if (parts.size() != 3) raise(Errc::INVALID_PARAMS, "epsilon needs epsilon:4:eps");
    if (n != 4) raise(Errc::INVALID_PARAMS, "the epsilon family is defined for order 4 only");
    spec.epsilon = parse_rat(parts[2]);
    return spec;
  }
  raise(Errc::INVALID_PARAMS, "unknown family '" + fam + "'");
}

GallerySpec kahan_auto_spec(size_t n, unsigned digits) {
  if (n < 2) raise(Errc::INVALID_PARAMS, "the auto series needs order >= 2");
  if (digits == 0) raise(Errc::INVALID_PARAMS, "the auto series needs at least one digit");
  PrecisionScope scope(2 * digits + 30);
  const Int den = pow_int(Int(10), digits);
  // s = 10^(-1/(n-1)), c = sqrt(1 - s^2), both rounded to `digits` decimals.
  const Real s_exact = pow(Real(10), Real(-1) / Real(static_cast<long>(n - 1)));
  GallerySpec spec;
  spec.family = Family::KAHAN;
  spec.n = n;
  spec.auto_series = true;
  spec.auto_digits = digits;
  spec.approximate = true;
  spec.s = Rat(round_decimals_up(s_exact, digits), den);
  spec.c = Rat(round_decimals_up(sqrt(Real(1) - to_real(spec.s * spec.s)), digits), den);
  spec.approx_error = circle_defect(spec.s, spec.c);
  std::ostringstream label;
  label << "kahan:" << n << ":auto:" << digits;
  spec.label = label.str();
  return spec;
}

Matrix generate(const GallerySpec& spec) {
  const size_t n = spec.n;
  if (n == 0) raise(Errc::INVALID_PARAMS, "matrix order must be positive");
  switch (spec.family) {
    case Family::FRANK: {
      // Row 1 is n..1; entry (i,j) is n+1-max(i,j) on and right of the
      // subdiagonal, zero below it (1-based).
      Matrix a(n);
      for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= n; ++j)
          if (j + 1 >= i) a.at(i - 1, j - 1) = Rat(static_cast<long>(n + 1 - std::max(i, j)));
      return a;
    }
    case Family::KAHAN: {
      const Rat defect = circle_defect(spec.s, spec.c);
      if (defect != 0 && !spec.approximate)
        raise(Errc::INVALID_PARAMS, "kahan parameters are off the unit circle");
      Matrix a(n);
      Rat diag(1);
      for (size_t i = 0; i < n; ++i) {
        a.at(i, i) = diag;
        for (size_t j = i + 1; j < n; ++j) a.at(i, j) = -spec.c * diag;
        diag *= spec.s;
      }
      return a;
    }
    case Family::GRCAR: {
      // -1 on the subdiagonal, +1 on the diagonal and three superdiagonals.
      Matrix a(n);
      for (size_t i = 0; i < n; ++i) {
        if (i > 0) a.at(i, i - 1) = Rat(-1);
        for (size_t j = i; j < std::min(n, i + 4); ++j) a.at(i, j) = Rat(1);
      }
      return a;
    }
    case Family::EPSILON_FAMILY: {
      if (n != 4) raise(Errc::INVALID_PARAMS, "the epsilon family is defined for order 4 only");
      Matrix a(4);
      a.at(0, 1) = 1;
      a.at(0, 2) = 1;
      a.at(1, 0) = -1;
      a.at(1, 3) = 1;
      a.at(2, 0) = spec.epsilon;
      a.at(2, 3) = 1;
      a.at(3, 2) = -1;
      return a;
    }
    case Family::EXPLICIT:
      raise(Errc::INVALID_PARAMS, "explicit specs carry no generator");
  }
  raise(Errc::INVALID_PARAMS, "unknown family");
}

Real epsilon_family_eps_c(unsigned digits) {
  PrecisionScope scope(digits + 10);
  // Least positive zero of the crossover polynomial between the rank-2
  // perturbation norm and the double-zero candidate.
  const UniPoly p = UniPoly::from_int_low(
      {Int(65536), Int(-32768), Int(-16384), Int(-9216), Int(64), Int(-1024), Int(-368), Int(-80),
       Int(1)});
  for (const auto& root : isolate_real_roots(p)) {
    if (root.hi <= 0) continue;
    const IsolatedRoot r = refine(root, digits + 5);
    if (r.hi <= 0) continue;
    return to_real((r.lo + r.hi) / 2);
  }
  raise(Errc::INTERNAL, "crossover polynomial lost its positive zero");
}

Real epsilon_family_eps_2(unsigned digits) {
  PrecisionScope scope(digits + 10);
  const Real r5 = sqrt(Real(5));
  return 2 * sqrt(Real(2)) * (r5 + 3) * sqrt(r5 + 2) + 7 * r5 + 15;
}

Real epsilon_family_distance(const Rat& eps, unsigned digits) {
  if (eps < 0) raise(Errc::INVALID_PARAMS, "the epsilon family is studied for eps >= 0");
  PrecisionScope scope(digits + 10);
  const Real e = to_real(eps);
  if (e <= epsilon_family_eps_c(digits)) return sqrt(Real(2)) * e * (8 - e) / (e * e + 16);
  if (e <= epsilon_family_eps_2(digits)) return sqrt(e) * abs(sqrt(e) - sqrt(Real(8))) / (e + 2);
  return (sqrt(Real(5)) - 1) / 2;
}

Real epsilon_family_rank1_distance(const Rat& eps, unsigned digits) {
  if (eps < 0) raise(Errc::INVALID_PARAMS, "the epsilon family is studied for eps >= 0");
  PrecisionScope scope(digits + 10);
  const Real e = to_real(eps);
  // The double-zero candidate exists (real coincident pair) for eps >= 3-sqrt(5)
  // and wins the walk until eps_2; elsewhere the golden-ratio zero is first.
  const Real eps1 = 3 - sqrt(Real(5));
  if (e >= eps1 && e <= epsilon_family_eps_2(digits))
    return sqrt(e) * abs(sqrt(e) - sqrt(Real(8))) / (e + 2);
  return (sqrt(Real(5)) - 1) / 2;
}

ReferenceValues reference_values(const GallerySpec& spec) {
  PrecisionScope scope(40);
  ReferenceValues ref;
  switch (spec.family) {
    case Family::FRANK: {
      switch (spec.n) {
        case 3:
          ref.has_d = true;
          ref.d = printed("0.191004");
          ref.has_real_zero_count = true;
          ref.real_zero_count = 6;
          ref.has_z1 = true;
          ref.z1 = printed("0.036482");
          ref.has_equation_ints = true;
          ref.equation_ints = {Int("23839360000"),      Int("-476315200000"),
                               Int("3522206312000"),    Int("-11668368222400"),
                               Int("16297635326400"),   Int("-6895772352000"),
                               Int("230443315200")};
          return ref;
        case 5:
          ref.has_d = true;
          ref.d = printed("4.499950e-3");
          ref.has_real_zero_count = true;
          ref.real_zero_count = 12;
          return ref;
        case 10:
          ref.has_d = true;
          ref.d = printed("3.925527e-8");
          ref.has_real_zero_count = true;
          ref.real_zero_count = 30;
          return ref;
        case 12:
          ref.has_d = true;
          ref.d = printed("1.849890e-10");
          ref.has_real_zero_count = true;
          ref.real_zero_count = 34;
          return ref;
        case 20:
          ref.has_d = true;
          ref.d = printed("3.757912e-21");
          ref.has_real_zero_count = true;
          ref.real_zero_count = 62;
          return ref;
        case 30:
          ref.has_d = true;
          ref.d = printed("1.638008e-36");
          ref.has_real_zero_count = true;
          ref.real_zero_count = 102;
          return ref;
        default:
          raise(Errc::NOT_PUBLISHED, "no published values for this frank order");
      }
    }
    case Family::KAHAN: {
      if (spec.auto_series && spec.auto_digits == 20) {
        switch (spec.n) {
          case 6:
            ref.has_d = true;
            ref.d = printed("4.704940e-4");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 10;
            return ref;
          case 10:
            ref.has_d = true;
            ref.d = printed("1.538157e-5");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 18;
            return ref;
          case 15:
            ref.has_d = true;
            ref.d = printed("4.484974e-7");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 28;
            return ref;
          case 20:
            ref.has_d = true;
            ref.d = printed("1.904858e-8");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 38;
            return ref;
          default:
            raise(Errc::NOT_PUBLISHED, "no published values for this auto-series order");
        }
      }
      if (spec.s == Rat(3, 5) && spec.c == Rat(4, 5)) {
        switch (spec.n) {
          case 5:
            ref.has_d = true;
            ref.d = printed("1.370032e-3");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 8;
            return ref;
          case 10:
            ref.has_d = true;
            ref.d = printed("5.470834e-6");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 48;
            return ref;
          case 15:
            ref.has_d = true;
            ref.d = printed("2.246949e-8");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 138;
            return ref;
          case 20:
            ref.has_d = true;
            ref.d = printed("9.245309e-11");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 288;
            return ref;
          case 25:
            ref.has_d = true;
            ref.d = printed("3.984992e-10");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 258;
            return ref;
          case 30:
            ref.has_d = true;
            ref.d = printed("1.240748e-11");
            ref.has_real_zero_count = true;
            ref.real_zero_count = 464;
            return ref;
          default:
            raise(Errc::NOT_PUBLISHED, "no published values for this kahan order");
        }
      }
      raise(Errc::NOT_PUBLISHED, "no published values for these kahan parameters");
    }
    case Family::GRCAR: {
      if (spec.n != 6) raise(Errc::NOT_PUBLISHED, "no published values for this grcar order");
      ref.has_z1 = true;
      ref.z1 = printed("0.116565");
      ref.has_z1_tilde = true;
      ref.z1_tilde = printed("0.04630491415327188209539627157");
      ref.has_d_complex = true;
      ref.d_complex = printed("0.2151857666140395125353");
      return ref;
    }
    case Family::EPSILON_FAMILY: {
      const Real e = to_real(spec.epsilon);
      ref.has_d = true;
      ref.d = epsilon_family_distance(spec.epsilon, 40);
      ref.epsilon_branch = e <= epsilon_family_eps_c(40) ? 1
                           : e <= epsilon_family_eps_2(40) ? 2
                                                           : 3;
      if (ref.epsilon_branch == 1)
        ref.note = "distance attained by a rank-two perturbation; the rank-one search "
                   "yields a larger candidate";
      return ref;
    }
    case Family::EXPLICIT:
      raise(Errc::NOT_PUBLISHED, "explicit specs carry no published values");
  }
  raise(Errc::NOT_PUBLISHED, "unknown family");
}

}  // namespace wdist
