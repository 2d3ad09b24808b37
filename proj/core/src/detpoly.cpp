#include "wdist/detpoly.hpp"

#include "wdist/errors.hpp"

namespace wdist {

GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  ensure(!b.is_zero(), "GaussInt division by zero");
  // a/b = a * conj(b) / |b|^2; exactness is asserted componentwise.
  Int n = b.re * b.re + b.im * b.im;
  GaussInt t = a * GaussInt(b.re, -b.im);
  GaussInt q;
  Int r;
  mpz_tdiv_qr(q.re.get_mpz_t(), r.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  ensure(sgn(r) == 0, "GaussInt division not exact (re)");
  mpz_tdiv_qr(q.im.get_mpz_t(), r.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  ensure(sgn(r) == 0, "GaussInt division not exact (im)");
  return q;
}

GaussInt det_gauss(GaussMat m) {
  const size_t n = m.size();
  if (n == 0) return GaussInt(Int(1), Int(0));
  for (const auto& row : m) ensure(row.size() == n, "det_gauss: not square");
  int sign = 1;
  GaussInt prev(Int(1), Int(0));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return GaussInt(Int(0), Int(0));
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = GaussInt();
    }
    prev = m[k][k];
  }
  GaussInt d = m[n - 1][n - 1];
  if (sign < 0) d = GaussInt(Int(0), Int(0)) - d;
  return d;
}

RatMat hankel_from_sums(const std::vector<Rat>& s, size_t dim) {
  ensure(s.size() >= 2 * dim - 1, "hankel_from_sums: not enough sums");
  RatMat m(dim, std::vector<Rat>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) m[i][j] = s[i + j];
  return m;
}

IntMat hankel_from_sums(const std::vector<Int>& s, size_t dim) {
  ensure(s.size() >= 2 * dim - 1, "hankel_from_sums: not enough sums");
  IntMat m(dim, std::vector<Int>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) m[i][j] = s[i + j];
  return m;
}

}  // namespace wdist
