#include "wdist/intdet.hpp"

#include "wdist/errors.hpp"

namespace wdist {

namespace {

// Bareiss elimination. Returns 0 if the determinant is exactly zero (pivot
// column exhausted), otherwise the row-swap sign; on nonzero return the last
// pivot m[n-1][n-1] is the determinant of the original matrix.
int bareiss_sweep(IntMat& m) {
  const size_t n = m.size();
  int sign = 1;
  Int prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t piv = k + 1;
      while (piv < n && sgn(m[piv][k]) == 0) ++piv;
      if (piv == n) return 0;  // singular
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

Int minor_det(const IntMat& m, size_t k) {
  IntMat sub(k, std::vector<Int>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
  return det_int(std::move(sub));
}

}  // namespace

Int det_int(IntMat m) {
  const size_t n = m.size();
  if (n == 0) return Int(1);
  for (const auto& row : m) ensure(row.size() == n, "det_int: not square");
  int sign = bareiss_sweep(m);
  if (sign == 0) return Int(0);
  Int d = m[n - 1][n - 1];
  return sign < 0 ? Int(-d) : d;
}

Rat det_rat(const RatMat& m) {
  const size_t n = m.size();
  if (n == 0) return Rat(1);
  IntMat im(n, std::vector<Int>(n));
  Rat scale(1);
  for (size_t i = 0; i < n; ++i) {
    ensure(m[i].size() == n, "det_rat: not square");
    Int l(1);
    for (size_t j = 0; j < n; ++j) l = lcm_int(l, den(m[i][j]));
    for (size_t j = 0; j < n; ++j) {
      Rat v = m[i][j] * Rat(l);
      im[i][j] = num(v);
    }
    scale /= Rat(l);
  }
  return scale * Rat(det_int(std::move(im)));
}

std::vector<Int> leading_principal_minors(const IntMat& m) {
  const size_t n = m.size();
  std::vector<Int> out(n);
  IntMat w = m;
  // Try the one-pass route: valid while no row swap is needed.
  Int prev(1);
  bool clean = true;
  for (size_t k = 0; k < n && clean; ++k) {
    if (k + 1 < n && sgn(w[k][k]) == 0) {
      clean = false;
      break;
    }
    out[k] = w[k][k];
    if (k + 1 == n) break;
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = w[k][k] * w[i][j] - w[i][k] * w[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w[i][j] = t;
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  if (clean) return out;
  for (size_t k = 1; k <= n; ++k) out[k - 1] = minor_det(m, k);
  return out;
}

std::vector<Rat> leading_principal_minors(const RatMat& m) {
  const size_t n = m.size();
  IntMat im(n, std::vector<Int>(n));
  std::vector<Rat> rowscale(n);
  for (size_t i = 0; i < n; ++i) {
    Int l(1);
    for (size_t j = 0; j < n; ++j) l = lcm_int(l, den(m[i][j]));
    for (size_t j = 0; j < n; ++j) im[i][j] = num(m[i][j] * Rat(l));
    rowscale[i] = Rat(l);
  }
  std::vector<Int> mi = leading_principal_minors(im);
  std::vector<Rat> out(n);
  Rat acc(1);
  for (size_t k = 0; k < n; ++k) {
    acc *= rowscale[k];
    out[k] = Rat(mi[k]) / acc;
  }
  return out;
}

}  // namespace wdist
