#include "wdist/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "wdist/errors.hpp"

namespace wdist {

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_low(std::vector<UniPoly> coeffs) {
  BiPoly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

BiPoly BiPoly::lambda_monomial(size_t k, const UniPoly& coeff) {
  std::vector<UniPoly> c(k + 1);
  c[k] = coeff;
  return from_low(std::move(c));
}

long BiPoly::degree_z() const {
  long d = -1;
  for (const auto& u : c_) d = std::max(d, u.degree());
  return d;
}

std::string BiPoly::str(const std::string& lvar, const std::string& zvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree_lambda(); k >= 0; --k) {
    const UniPoly u = coeff(static_cast<size_t>(k));
    if (u.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << u.str(zvar) << ")";
    if (k > 0) {
      os << "*" << lvar;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<UniPoly> c(std::max(a.coeffs_low().size(), b.coeffs_low().size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return BiPoly::from_low(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<UniPoly> c(std::max(a.coeffs_low().size(), b.coeffs_low().size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return BiPoly::from_low(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<UniPoly> c(a.coeffs_low().size() + b.coeffs_low().size() - 1);
  for (size_t i = 0; i < a.coeffs_low().size(); ++i) {
    if (a.coeffs_low()[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_low().size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_low()[i] * b.coeffs_low()[j];
  }
  return BiPoly::from_low(std::move(c));
}

BiPoly operator*(const UniPoly& s, const BiPoly& a) {
  std::vector<UniPoly> c = a.coeffs_low();
  for (auto& u : c) u = s * u;
  return BiPoly::from_low(std::move(c));
}

BiPoly operator*(const Rat& s, const BiPoly& a) {
  std::vector<UniPoly> c = a.coeffs_low();
  for (auto& u : c) u = s * u;
  return BiPoly::from_low(std::move(c));
}

BiPoly d_lambda(const BiPoly& p) {
  if (p.degree_lambda() < 1) return BiPoly();
  std::vector<UniPoly> c(static_cast<size_t>(p.degree_lambda()));
  for (size_t k = 1; k < p.coeffs_low().size(); ++k)
    c[k - 1] = Rat(static_cast<long>(k)) * p.coeffs_low()[k];
  return BiPoly::from_low(std::move(c));
}

BiPoly d_z(const BiPoly& p) {
  std::vector<UniPoly> c;
  c.reserve(p.coeffs_low().size());
  for (const auto& u : p.coeffs_low()) c.push_back(derivative(u));
  return BiPoly::from_low(std::move(c));
}

UniPoly eval_lambda(const BiPoly& p, const Rat& lambda) {
  UniPoly acc;
  const auto& c = p.coeffs_low();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = lambda * acc + *it;
  return acc;
}

UniPoly eval_z(const BiPoly& p, const Rat& z) {
  std::vector<Rat> c;
  c.reserve(p.coeffs_low().size());
  for (const auto& u : p.coeffs_low()) c.push_back(eval(u, z));
  return UniPoly::from_low(std::move(c));
}

BiPoly primitive_z(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly g;
  for (const auto& u : p.coeffs_low()) g = gcd(g, u);
  std::vector<UniPoly> c;
  c.reserve(p.coeffs_low().size());
  for (const auto& u : p.coeffs_low()) c.push_back(exact_div(u, g));
  BiPoly out = BiPoly::from_low(std::move(c));
  // Clear denominators / content across all integer coefficients.
  Int l(1);
  for (const auto& u : out.coeffs_low())
    for (const auto& r : u.coeffs_low()) l = lcm_int(l, den(r));
  Int cont(0);
  for (const auto& u : out.coeffs_low())
    for (const auto& r : u.coeffs_low()) cont = gcd_int(cont, num(r * Rat(l)));
  if (sgn(cont) == 0) cont = 1;
  // Sign: leading coefficient (in L) gets a positive leading z-coefficient.
  if (sgn(out.lead().lead()) < 0) cont = -cont;
  Rat scale = Rat(l) / Rat(cont);
  std::vector<UniPoly> cc;
  for (const auto& u : out.coeffs_low()) cc.push_back(scale * u);
  return BiPoly::from_low(std::move(cc));
}

BiPoly exact_div_lambda(const BiPoly& a, const BiPoly& b) {
  ensure(!b.is_zero(), "exact_div_lambda by zero");
  long db = b.degree_lambda();
  long dq = a.degree_lambda() - db;
  ensure(dq >= 0 || a.is_zero(), "exact_div_lambda: degree mismatch");
  if (a.is_zero()) return BiPoly();
  std::vector<UniPoly> r = a.coeffs_low();
  std::vector<UniPoly> q(static_cast<size_t>(dq) + 1);
  for (long k = dq; k >= 0; --k) {
    UniPoly top = r[static_cast<size_t>(k + db)];
    if (top.is_zero()) {
      q[static_cast<size_t>(k)] = UniPoly();
      continue;
    }
    UniPoly f = exact_div(top, b.lead());
    q[static_cast<size_t>(k)] = f;
    for (long j = 0; j <= db; ++j)
      r[static_cast<size_t>(k + j)] = r[static_cast<size_t>(k + j)] - f * b.coeff(static_cast<size_t>(j));
  }
  for (const auto& u : r) ensure(u.is_zero(), "exact_div_lambda: nonzero remainder");
  return BiPoly::from_low(std::move(q));
}

namespace {

// Fraction-free pseudo-remainder of a by b in the outer variable:
// prem = (lead(b)^(da-db+1) * a) mod b, all arithmetic in Q[z][L].
BiPoly pseudo_rem(const BiPoly& a, const BiPoly& b) {
  long db = b.degree_lambda();
  BiPoly r = a;
  UniPoly lb = b.lead();
  while (!r.is_zero() && r.degree_lambda() >= db) {
    long k = r.degree_lambda() - db;
    UniPoly lr = r.lead();
    // r <- lb * r - lr * L^k * b  (drops the top term exactly)
    std::vector<UniPoly> nc(r.coeffs_low().size());
    for (size_t i = 0; i < nc.size(); ++i) {
      UniPoly t = lb * r.coeff(i);
      long j = static_cast<long>(i) - k;
      if (j >= 0 && j <= db) t = t - lr * b.coeff(static_cast<size_t>(j));
      nc[i] = t;
    }
    BiPoly nr = BiPoly::from_low(std::move(nc));
    ensure(nr.degree_lambda() < r.degree_lambda(), "pseudo_rem: no degree drop");
    r = nr;
  }
  return r;
}

}  // namespace

BiPoly gcd_lambda(const BiPoly& a, const BiPoly& b) {
  BiPoly x = a, y = b;
  if (x.is_zero()) return primitive_z(y);
  if (y.is_zero()) return primitive_z(x);
  x = primitive_z(x);
  y = primitive_z(y);
  if (x.degree_lambda() < y.degree_lambda()) std::swap(x, y);
  while (!y.is_zero()) {
    BiPoly r = pseudo_rem(x, y);
    x = y;
    y = r.is_zero() ? BiPoly() : primitive_z(r);
  }
  if (x.degree_lambda() == 0) return BiPoly(UniPoly(Rat(1)));
  return primitive_z(x);
}

}  // namespace wdist
