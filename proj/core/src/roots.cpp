#include "wdist/roots.hpp"

#include <algorithm>

#include "wdist/errors.hpp"
#include "wdist/intdet.hpp"

namespace wdist {

namespace {

using ICoeffs = std::vector<Int>;  // low -> high, nonzero lead

void trim(ICoeffs& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

ICoeffs int_coeffs(const UniPoly& p) {
  UniPoly q = primitive_int(p);
  ICoeffs out;
  out.reserve(q.coeffs_low().size());
  for (const auto& r : q.coeffs_low()) out.push_back(num(r));
  return out;
}

// Exact sign of p(a/b) via homogeneous Horner (b > 0).
int sign_at_int(const ICoeffs& c, const Int& a, const Int& b) {
  if (c.empty()) return 0;
  Int v = c.back();
  Int bk(1);
  for (size_t j = c.size() - 1; j-- > 0;) {
    bk *= b;
    v = v * a + c[j] * bk;
  }
  return sgn(v);
}

// p(x+1) in place (Pascal update).
void taylor_shift1(ICoeffs& c) {
  if (c.size() < 2) return;
  const size_t d = c.size() - 1;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = d - 1; j + 1 > i; --j) c[j] += c[j + 1];
}

size_t var_count_signs(const ICoeffs& c) {
  size_t v = 0;
  int last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Upper bound (Descartes) on the roots of p in the open interval (0,1).
size_t descartes01(const ICoeffs& p) {
  ICoeffs q(p.rbegin(), p.rend());
  trim(q);
  taylor_shift1(q);
  return var_count_signs(q);
}

void strip_2content(ICoeffs& c) {
  mp_bitcnt_t k = ~static_cast<mp_bitcnt_t>(0);
  for (const auto& x : c) {
    if (sgn(x) == 0) continue;
    k = std::min(k, mpz_scan1(x.get_mpz_t(), 0));
    if (k == 0) return;
  }
  for (auto& x : c)
    if (sgn(x) != 0) mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), k);
}

struct Vca {
  std::vector<std::pair<Rat, Rat>> intervals;  // open, within (0,1)
  std::vector<Rat> exact;                      // within (0,1)
  size_t depth_guard = 0;

  // p: integer poly whose roots in (0,1) map to (lo, lo+w) of the caller.
  void rec(ICoeffs p, const Rat& lo, const Rat& w) {
    ensure(++depth_guard < 2000000, "root isolation did not terminate");
    // Roots at 0 belong to the caller's split point; drop them.
    size_t shift = 0;
    while (shift < p.size() && sgn(p[shift]) == 0) ++shift;
    if (shift) p.erase(p.begin(), p.begin() + static_cast<long>(shift));
    if (p.size() < 2) return;
    size_t v = descartes01(p);
    if (v == 0) return;
    if (v == 1) {
      intervals.emplace_back(lo, lo + w);
      return;
    }
    // Split at the midpoint. Left: 2^d p(x/2); right: left shifted by 1.
    const size_t d = p.size() - 1;
    ICoeffs left(p.size());
    for (size_t j = 0; j <= d; ++j) {
      left[j] = p[j];
      mpz_mul_2exp(left[j].get_mpz_t(), left[j].get_mpz_t(), d - j);
    }
    strip_2content(left);
    ICoeffs right = left;
    taylor_shift1(right);
    Rat half = w / 2;
    Rat mid = lo + half;
    if (sgn(right[0]) == 0) {
      exact.push_back(mid);
      // The split-point root sits at x = 1 of the left piece; divide it out
      // so no child interval ends exactly on a root (the right piece drops
      // its copy at x = 0 on entry). Synthetic division by (x - 1) is exact.
      ICoeffs g(left.size() - 1);
      Int carry(0);
      for (size_t j = left.size(); j-- > 1;) {
        carry += left[j];
        g[j - 1] = carry;
      }
      ensure(carry + left[0] == 0, "split-point deflation is not exact");
      left = std::move(g);
    }
    rec(std::move(left), lo, half);
    rec(std::move(right), mid, half);
  }
};

// All real roots of the square-free primitive integer polynomial q.
void isolate_squarefree(const ICoeffs& q, std::vector<Rat>& exacts,
                        std::vector<std::pair<Rat, Rat>>& intervals) {
  ICoeffs c = q;
  trim(c);
  if (c.size() < 2) return;
  size_t zsh = 0;
  while (zsh < c.size() && sgn(c[zsh]) == 0) ++zsh;
  if (zsh) {
    exacts.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(zsh));
  }
  if (c.size() < 2) return;
  if (c.size() == 2) {  // linear: exact rational root
    exacts.push_back(Rat(-c[0]) / Rat(c[1]));
    return;
  }
  // Power-of-two Cauchy bound: 2^k > max|c_i| / |c_lead|.
  size_t dbits = mpz_sizeinbase(c.back().get_mpz_t(), 2);
  size_t maxbits = 1;
  for (const auto& x : c)
    if (sgn(x) != 0) maxbits = std::max(maxbits, mpz_sizeinbase(x.get_mpz_t(), 2));
  unsigned long k = maxbits >= dbits ? (maxbits - dbits + 2) : 2;
  Rat bound = Rat(pow_int(Int(2), k));

  for (int side = 0; side < 2; ++side) {
    // side 0: positive roots of c; side 1: positive roots of c(-x).
    ICoeffs s(c.size());
    for (size_t j = 0; j < c.size(); ++j) {
      s[j] = c[j];
      if (side == 1 && j % 2 == 1) s[j] = -s[j];
      // scale argument by 2^k
      mpz_mul_2exp(s[j].get_mpz_t(), s[j].get_mpz_t(), k * j);
    }
    strip_2content(s);
    Vca vca;
    vca.rec(std::move(s), Rat(0), Rat(1));
    for (const auto& e : vca.exact) {
      Rat r = e * bound;
      exacts.push_back(side == 0 ? r : Rat(-r));
    }
    for (const auto& [a, b] : vca.intervals) {
      Rat ra = a * bound, rb = b * bound;
      if (side == 0)
        intervals.emplace_back(ra, rb);
      else
        intervals.emplace_back(-rb, -ra);
    }
  }
}

// Floating sign evaluation with a running magnitude bound; certified result
// or 0 for "indeterminate at this precision".
int mpfr_sign(const ICoeffs& c, const Rat& x, unsigned digits) {
  unsigned saved = current_precision_digits();
  set_thread_precision(digits);
  Real xr = to_real(x);
  // Error from rounding x: bounded through the magnitude Horner below as long
  // as x itself is representable to ~10^-digits relative accuracy (always).
  Real v(0), m(0);
  Real ax = boost::multiprecision::abs(xr);
  for (size_t j = c.size(); j-- > 0;) {
    Real cj = to_real(c[j]);
    v = v * xr + cj;
    m = m * ax + boost::multiprecision::abs(cj);
  }
  Real tol = m * Real(4 * static_cast<long>(c.size() + 2)) * pow10(-static_cast<long>(digits));
  int out = 0;
  if (boost::multiprecision::abs(v) > tol) out = v > 0 ? 1 : -1;
  set_thread_precision(saved);
  return out;
}

// Certified sign: floating first with escalating precision, exact as the
// last resort.
int cert_sign(const ICoeffs& c, const Rat& x) {
  if (c.empty()) return 0;
  size_t coeff_digits = 0;
  for (const auto& q : c) coeff_digits = std::max(coeff_digits, decimal_length(q));
  unsigned digits = static_cast<unsigned>(40 + coeff_digits / 8);
  for (int tries = 0; tries < 5; ++tries) {
    int s = mpfr_sign(c, x, digits);
    if (s != 0) return s;
    digits *= 3;
    if (digits > 20000) break;
  }
  return sign_at_int(c, num(x), den(x));
}

struct FactorCtx {
  ICoeffs coeffs;
};

// One certified bisection step; detects an exact midpoint hit.
void bisect_once(IsolatedRoot& r, const ICoeffs& fc, int& sign_hi) {
  if (r.exact) return;
  if (sign_hi == 0) sign_hi = cert_sign(fc, r.hi);
  ensure(sign_hi != 0, "bisection endpoint is a root");
  Rat mid = r.mid();
  int sm = cert_sign(fc, mid);
  if (sm == 0) {
    r.lo = r.hi = mid;
    r.exact = true;
    return;
  }
  if (sm == sign_hi)
    r.hi = mid;
  else
    r.lo = mid;
}

}  // namespace

int sign_at(const UniPoly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  ICoeffs c = int_coeffs(p);
  int s = sign_at_int(c, num(x), den(x));
  // primitive_int may flip the overall sign to make the lead positive.
  if (sgn(p.lead()) < 0) s = -s;
  return s;
}

namespace {
// Bisection-ready coefficients for an open enclosure: an endpoint may be a
// DIFFERENT exact root of the same square-free factor (binary-rational roots
// sit on subdivision points), so endpoint roots are divided out first; the
// interior root is untouched and certified signs stay meaningful.
ICoeffs bisect_coeffs(const IsolatedRoot& r) {
  UniPoly f = r.factor;
  for (const Rat& e : {r.lo, r.hi})
    if (sign_at(f, e) == 0)
      f = exact_div(f, UniPoly::from_low({Rat(-num(e)), Rat(den(e))}));
  return int_coeffs(f);
}
}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) raise(Errc::IDENTICALLY_ZERO, "cannot isolate roots of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    UniPoly fi = primitive_int(factor);
    ICoeffs fc = int_coeffs(fi);
    std::vector<Rat> exacts;
    std::vector<std::pair<Rat, Rat>> intervals;
    isolate_squarefree(fc, exacts, intervals);
    for (const auto& e : exacts) {
      IsolatedRoot r;
      r.lo = r.hi = e;
      r.exact = true;
      r.multiplicity = mult;
      r.factor = fi;
      out.push_back(std::move(r));
    }
    for (const auto& [a, b] : intervals) {
      IsolatedRoot r;
      r.lo = a;
      r.hi = b;
      r.exact = false;
      r.multiplicity = mult;
      r.factor = fi;
      out.push_back(std::move(r));
    }
  }
  // Disjoint intervals across factors: shrink overlapping pairs until the
  // ascending order is unambiguous.
  auto lt = [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; };
  std::sort(out.begin(), out.end(), lt);
  for (int guard = 0; guard < 100000; ++guard) {
    bool changed = false;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      IsolatedRoot &a = out[i], &b = out[i + 1];
      if (a.hi <= b.lo) continue;
      if (a.exact && b.exact) {
        ensure(a.lo != b.lo, "duplicate exact root across factors");
        continue;  // points are ordered by the sort
      }
      IsolatedRoot& wide = (!a.exact && (b.exact || a.width() >= b.width())) ? a : b;
      ICoeffs fc = int_coeffs(wide.factor);
      int sh = 0;
      bisect_once(wide, fc, sh);
      changed = true;
    }
    if (!changed) break;
    std::sort(out.begin(), out.end(), lt);
    ensure(guard < 99999, "interval separation did not terminate");
  }
  return out;
}

IsolatedRoot refine(const IsolatedRoot& root, unsigned digits) {
  IsolatedRoot r = root;
  if (r.exact) return r;
  ensure(!r.factor.is_zero(), "refine: root carries no factor");
  ICoeffs fc = int_coeffs(r.factor);
  Rat target = Rat(1) / Rat(pow_int(Int(10), digits));
  int sign_hi = 0;
  int step = 0;
  while (!r.exact && r.width() > target) {
    if (step % 8 == 3) {
      Rat cand = simplest_in_interval(r.lo, r.hi);
      // Only worth an exact test while the denominator is small and the
      // interval pins it down (width < 1/den^2).
      if (den(cand) < 1000000 && r.width() * Rat(den(cand)) * Rat(den(cand)) < 1) {
        if (sign_at_int(fc, num(cand), den(cand)) == 0) {
          r.lo = r.hi = cand;
          r.exact = true;
          break;
        }
      }
    }
    bisect_once(r, fc, sign_hi);
    ++step;
    ensure(step < 2000000, "refinement did not terminate");
  }
  return r;
}

size_t variation_count(const std::vector<Rat>& seq) {
  size_t end = seq.size();
  while (end > 0 && sgn(seq[end - 1]) == 0) --end;
  size_t v = 0;
  int last = 0;
  for (size_t i = 0; i < end; ++i) {
    int s = sgn(seq[i]);
    if (s == 0)
      raise(Errc::JACOBI_HYPOTHESIS_VIOLATED,
            "zero inside the minor sequence; perturb the sample point");
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

size_t count_complex_pairs(const UniPoly& p) {
  if (p.degree() < 1) raise(Errc::DEGREE_TOO_LOW, "need degree >= 1");
  const size_t n = static_cast<size_t>(p.degree());
  std::vector<Rat> sums = power_sums(monic(p), 2 * n - 2);
  RatMat h(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h[i][j] = sums[i + j];
  std::vector<Rat> minors = leading_principal_minors(h);
  std::vector<Rat> seq;
  seq.emplace_back(1);
  for (const auto& m : minors) seq.push_back(m);
  return variation_count(seq);
}

}  // namespace wdist
