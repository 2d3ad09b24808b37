#include "wdist/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "wdist/errors.hpp"
#include "wdist/intdet.hpp"

namespace wdist {

void UniPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UniPoly UniPoly::from_low(std::vector<Rat> coeffs) {
  UniPoly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

UniPoly UniPoly::from_high(std::vector<Rat> coeffs) {
  std::reverse(coeffs.begin(), coeffs.end());
  return from_low(std::move(coeffs));
}

UniPoly UniPoly::from_int_low(const std::vector<Int>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(x);
  return from_low(std::move(c));
}

UniPoly UniPoly::monomial(size_t k, const Rat& coeff) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = coeff;
  return from_low(std::move(c));
}

size_t UniPoly::trailing_order() const {
  ensure(!is_zero(), "trailing_order of zero polynomial");
  size_t k = 0;
  while (sgn(c_[k]) == 0) ++k;
  return k;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    Rat a = coeff(static_cast<size_t>(k));
    if (sgn(a) == 0) continue;
    if (!first) os << (sgn(a) > 0 ? " + " : " - ");
    else if (sgn(a) < 0)
      os << "-";
    first = false;
    Rat m = abs(a);
    bool unit = (m == 1);
    if (!unit || k == 0) os << rat_str(m);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_low().size(), b.coeffs_low().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly::from_low(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_low().size(), b.coeffs_low().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly::from_low(std::move(c));
}

UniPoly operator-(const UniPoly& a) { return Rat(-1) * a; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  const auto& ca = a.coeffs_low();
  const auto& cb = b.coeffs_low();
  std::vector<Rat> c(ca.size() + cb.size() - 1, Rat(0));
  for (size_t i = 0; i < ca.size(); ++i) {
    if (sgn(ca[i]) == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  }
  return UniPoly::from_low(std::move(c));
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
  std::vector<Rat> c = a.coeffs_low();
  for (auto& x : c) x *= s;
  return UniPoly::from_low(std::move(c));
}

Rat eval(const UniPoly& p, const Rat& x) {
  Rat acc(0);
  const auto& c = p.coeffs_low();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() < 1) return UniPoly();
  std::vector<Rat> c(static_cast<size_t>(p.degree()), Rat(0));
  for (size_t k = 1; k < p.coeffs_low().size(); ++k) c[k - 1] = Rat(static_cast<long>(k)) * p.coeff(k);
  return UniPoly::from_low(std::move(c));
}

UniPoly scale_arg(const UniPoly& p, const Rat& s) {
  std::vector<Rat> c = p.coeffs_low();
  Rat f(1);
  for (auto& x : c) {
    x *= f;
    f *= s;
  }
  return UniPoly::from_low(std::move(c));
}

UniPoly shift_arg(const UniPoly& p, const Rat& s) {
  // Horner-style: p(x+s) built from the top coefficient down.
  UniPoly acc;
  UniPoly lin = UniPoly::from_low({s, Rat(1)});
  const auto& c = p.coeffs_low();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + UniPoly(*it);
  return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  ensure(!b.is_zero(), "divmod by zero polynomial");
  std::vector<Rat> r = a.coeffs_low();
  long db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rat> q(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
  Rat invlead = Rat(1) / b.lead();
  for (long k = a.degree() - db; k >= 0; --k) {
    Rat f = r[static_cast<size_t>(k + db)] * invlead;
    q[static_cast<size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (long j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * b.coeff(static_cast<size_t>(j));
  }
  r.resize(static_cast<size_t>(db) > r.size() ? r.size() : static_cast<size_t>(db));
  return {UniPoly::from_low(std::move(q)), UniPoly::from_low(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  ensure(r.is_zero(), "exact_div: nonzero remainder");
  return q;
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return (Rat(1) / p.lead()) * p;
}

UniPoly primitive_int(const UniPoly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const auto& x : p.coeffs_low()) l = lcm_int(l, den(x));
  Int g(0);
  std::vector<Int> ints;
  ints.reserve(p.coeffs_low().size());
  for (const auto& x : p.coeffs_low()) {
    ints.push_back(num(x * Rat(l)));
    g = gcd_int(g, ints.back());
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rat> c;
  c.reserve(ints.size());
  for (auto& x : ints) c.emplace_back(Rat(x) / Rat(g));
  return UniPoly::from_low(std::move(c));
}

// ---------------------------------------------------------------------------
// gcd: modular images with CRT lifting and exact-division verification.

namespace {

using u64 = unsigned long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::vector<u64> reduce_mod(const std::vector<Int>& c, u64 p) {
  std::vector<u64> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    u64 r = mpz_fdiv_ui(c[i].get_mpz_t(), p);
    out[i] = r;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic gcd in F_p[x] by plain Euclid.
std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    u64 il = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      u64 f = mulmod(a.back(), il, p);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        u64 t = mulmod(f, b[j], p);
        a[off + j] = (a[off + j] + p - t) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 il = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, il, p);
  }
  return a;
}

std::vector<Int> to_int_coeffs(const UniPoly& p) {
  UniPoly pi = primitive_int(p);
  std::vector<Int> out;
  out.reserve(pi.coeffs_low().size());
  for (const auto& x : pi.coeffs_low()) out.push_back(num(x));
  return out;
}

bool divides_int(const std::vector<Int>& d, const std::vector<Int>& a) {
  // Exact division test in Z[x] for primitive d with d.back() possibly != 1:
  // works over Q then checks integrality is not required -- plain rational
  // division sufficing for a divisibility test.
  UniPoly dp = UniPoly::from_int_low(d);
  UniPoly ap = UniPoly::from_int_low(a);
  auto [q, r] = divmod(ap, dp);
  (void)q;
  return r.is_zero();
}

// Primitive PRS fallback (always correct, occasionally slow).
UniPoly gcd_prs(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = b;
    b = r.is_zero() ? UniPoly() : primitive_int(r);
  }
  return monic(a);
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return UniPoly(Rat(1));

  std::vector<Int> ia = to_int_coeffs(a), ib = to_int_coeffs(b);
  Int leads = ia.back() * ib.back();

  // g = gcd of the leading coefficients bounds the lead of the true gcd.
  Int lg = gcd_int(ia.back(), ib.back());

  u64 seed = 0x7fffffffffffffe7ULL;  // start near 2^63 and walk down primes
  Int pz(seed);
  size_t best_deg = static_cast<size_t>(-1);
  std::vector<Int> acc;  // symmetric-lift CRT accumulator, low->high
  Int mod(1);

  for (int tries = 0; tries < 25; ++tries) {
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    if (!pz.fits_ulong_p()) {
      pz = seed / 2;
      continue;
    }
    u64 p = pz.get_ui();
    if (mpz_fdiv_ui(leads.get_mpz_t(), p) == 0) continue;  // bad prime

    auto ga = reduce_mod(ia, p);
    auto gb = reduce_mod(ib, p);
    auto g = gcd_mod(ga, gb, p);
    if (g.size() <= 1) return UniPoly(Rat(1));  // coprime, certified

    size_t dg = g.size() - 1;
    if (dg > best_deg) continue;  // unlucky prime
    // Normalize the image to lead lg (mod p) so integer coefficients are stable.
    u64 scale = mpz_fdiv_ui(lg.get_mpz_t(), p);
    for (auto& x : g) x = mulmod(x, scale, p);

    if (dg < best_deg) {
      best_deg = dg;
      acc.assign(g.size(), Int(0));
      mod = 1;
    }
    // CRT combine acc (mod) with g (p), symmetric representative.
    Int newmod = mod * Int(p);
    for (size_t i = 0; i < acc.size(); ++i) {
      // x = acc[i] + mod * t, with t = (g[i] - acc[i]) / mod  (mod p)
      u64 ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      u64 diff = (g[i] + p - ai) % p;
      u64 mi = mpz_fdiv_ui(mod.get_mpz_t(), p);
      u64 t = mulmod(diff, invmod(mi, p), p);
      Int x = acc[i] + mod * Int(t);
      // symmetric lift
      if (x * 2 > newmod) x -= newmod;
      acc[i] = x;
    }
    mod = newmod;

    // Candidate: primitive part of acc; verify by exact division.
    std::vector<Int> cand = acc;
    Int cont(0);
    for (const auto& x : cand) cont = gcd_int(cont, x);
    if (sgn(cont) == 0) continue;
    if (sgn(cand.back()) < 0) cont = -cont;
    for (auto& x : cand) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
    if (divides_int(cand, ia) && divides_int(cand, ib)) return monic(UniPoly::from_int_low(cand));
  }
  return gcd_prs(UniPoly::from_int_low(ia), UniPoly::from_int_low(ib));
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  ensure(!p.is_zero(), "squarefree_decomposition of zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  UniPoly f = monic(p);
  UniPoly fp = derivative(f);
  UniPoly g = gcd(f, fp);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UniPoly b = exact_div(f, g);
  UniPoly c = exact_div(fp, g);
  UniPoly d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(monic(a), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly out(Rat(1));
  for (const auto& [f, m] : squarefree_decomposition(p)) out = out * f;
  return out;
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
  ensure(!a.is_zero() && !b.is_zero(), "resultant with zero polynomial");
  long m = a.degree(), n = b.degree();
  if (m == 0) return pow_rat(a.lead(), n);
  if (n == 0) return pow_rat(b.lead(), m);
  const size_t dim = static_cast<size_t>(m + n);
  RatMat s(dim, std::vector<Rat>(dim, Rat(0)));
  auto ah = a.coeffs_high();
  auto bh = b.coeffs_high();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = ah[static_cast<size_t>(j)];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = bh[static_cast<size_t>(j)];
  return det_rat(s);
}

Rat discriminant(const UniPoly& p) {
  long n = p.degree();
  if (n < 1) raise(Errc::DEGREE_TOO_LOW, "discriminant needs degree >= 1");
  if (n == 1) return Rat(1);
  Rat res = resultant(p, derivative(p));
  Rat d = res / p.lead();
  long k = (n * (n - 1)) / 2;
  return (k % 2 == 0) ? d : Rat(-d);
}

std::vector<Rat> power_sums(const UniPoly& monic_p, size_t count) {
  ensure(!monic_p.is_zero() && monic_p.lead() == 1, "power_sums expects a monic polynomial");
  const size_t n = static_cast<size_t>(monic_p.degree());
  // a[j] = coefficient of x^(n-j), a[0] = 1.
  std::vector<Rat> a(n + 1);
  auto high = monic_p.coeffs_high();
  for (size_t j = 0; j <= n; ++j) a[j] = high[j];
  std::vector<Rat> s(count + 1, Rat(0));
  s[0] = Rat(static_cast<long>(n));
  for (size_t k = 1; k <= count; ++k) {
    Rat acc(0);
    size_t lim = std::min(k, n);
    for (size_t j = 1; j <= lim; ++j) {
      if (j == k)
        acc += Rat(static_cast<long>(k)) * a[j];
      else
        acc += a[j] * s[k - j];
    }
    s[k] = -acc;
  }
  return s;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  ensure(xs.size() == ys.size() && !xs.empty(), "interpolate: size mismatch");
  const size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rat> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      Rat dx = xs[i] - xs[i - level];
      ensure(sgn(dx) != 0, "interpolate: duplicate node");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == level) break;
    }
  UniPoly acc(dd[n - 1]);
  for (size_t i = n - 1; i >= 1; --i) {
    UniPoly lin = UniPoly::from_low({-xs[i - 1], Rat(1)});
    acc = acc * lin + UniPoly(dd[i - 1]);
  }
  return acc;
}

}  // namespace wdist
