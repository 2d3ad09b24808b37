#include "wdist/ratmatrix.hpp"

#include "wdist/errors.hpp"

namespace wdist {

Matrix::Matrix(RatMat rows) : a_(std::move(rows)) {
  for (const auto& r : a_) ensure(r.size() == a_.size(), "Matrix: not square");
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  ensure(x.n() == y.n(), "matrix size mismatch");
  Matrix r(x.n());
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = 0; j < x.n(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  ensure(x.n() == y.n(), "matrix size mismatch");
  Matrix r(x.n());
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = 0; j < x.n(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  ensure(x.n() == y.n(), "matrix size mismatch");
  const size_t n = x.n();
  Matrix r(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (sgn(x.at(i, k)) == 0) continue;
      for (size_t j = 0; j < n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

Matrix operator*(const Rat& s, const Matrix& x) {
  Matrix r(x.n());
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = 0; j < x.n(); ++j) r.at(i, j) = s * x.at(i, j);
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.n());
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = 0; j < x.n(); ++j) r.at(i, j) = x.at(j, i);
  return r;
}

Rat trace(const Matrix& x) {
  Rat t(0);
  for (size_t i = 0; i < x.n(); ++i) t += x.at(i, i);
  return t;
}

Rat frobenius_sq(const Matrix& x) {
  Rat t(0);
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = 0; j < x.n(); ++j) t += x.at(i, j) * x.at(i, j);
  return t;
}

Rat det(const Matrix& x) { return det_rat(x.rows()); }

bool is_symmetric(const Matrix& x) {
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = i + 1; j < x.n(); ++j)
      if (x.at(i, j) != x.at(j, i)) return false;
  return true;
}

bool is_orthogonal(const Matrix& x) {
  Matrix p = transpose(x) * x;
  for (size_t i = 0; i < x.n(); ++i)
    for (size_t j = 0; j < x.n(); ++j)
      if (p.at(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
  return true;
}

bool is_skew_plus_scalar(const Matrix& x, Rat* c_out) {
  if (x.n() == 0) return false;
  Rat c = trace(x) / Rat(static_cast<long>(x.n()));
  for (size_t i = 0; i < x.n(); ++i) {
    if (x.at(i, i) != c) return false;
    for (size_t j = i + 1; j < x.n(); ++j)
      if (x.at(i, j) != -x.at(j, i)) return false;
  }
  if (c_out) *c_out = c;
  return true;
}

UniPoly charpoly(const Matrix& x) {
  const size_t n = x.n();
  ensure(n > 0, "charpoly of empty matrix");
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Matrix am(n);  // X * M_{k-1}; M_0 = 0
  for (size_t k = 1; k <= n; ++k) {
    Matrix m = am;
    for (size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    am = x * m;
    c[n - k] = -trace(am) / Rat(static_cast<long>(k));
  }
  return UniPoly::from_low(std::move(c));
}

UniPoly charpoly_int(const IntMat& x) {
  const size_t n = x.size();
  ensure(n > 0, "charpoly_int of empty matrix");
  for (const auto& r : x) ensure(r.size() == n, "charpoly_int: not square");
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMat am(n, std::vector<Int>(n, Int(0)));  // X * M_{k-1}; M_0 = 0
  for (size_t k = 1; k <= n; ++k) {
    IntMat m = am;
    for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    // am = x * m
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Int acc(0);
        for (size_t l = 0; l < n; ++l)
          if (sgn(x[i][l]) != 0) acc += x[i][l] * m[l][j];
        am[i][j] = acc;
      }
    Int t(0);
    for (size_t i = 0; i < n; ++i) t += am[i][i];
    t = -t;
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = q;
  }
  return UniPoly::from_int_low(c);
}

ClearedMatrix clear_matrix(const Matrix& x) {
  ClearedMatrix out;
  out.den = 1;
  const size_t n = x.n();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.den = lcm_int(out.den, den(x.at(i, j)));
  out.num.assign(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.num[i][j] = num(x.at(i, j) * Rat(out.den));
  return out;
}

}  // namespace wdist
