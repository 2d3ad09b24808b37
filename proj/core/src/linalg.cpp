#include "wdist/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "wdist/errors.hpp"

namespace wdist {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

RealMat to_real_mat(const Matrix& m) {
  RealMat out(m.n(), std::vector<Real>(m.n()));
  for (size_t i = 0; i < m.n(); ++i)
    for (size_t j = 0; j < m.n(); ++j) out[i][j] = to_real(m.at(i, j));
  return out;
}

namespace {

template <typename Eig>
void sort_ascending(Eig& e) {
  const size_t n = e.values.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return e.values[a] < e.values[b]; });
  auto vals = e.values;
  auto vecs = e.vectors;
  for (size_t k = 0; k < n; ++k) {
    e.values[k] = vals[idx[k]];
    e.vectors[k] = vecs[idx[k]];
  }
}

}  // namespace

SymEigen jacobi_symmetric(RealMat a) {
  const size_t n = a.size();
  for (const auto& r : a) ensure(r.size() == n, "jacobi_symmetric: not square");
  RealMat v(n, std::vector<Real>(n, Real(0)));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1;

  Real scale(0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) scale = std::max(scale, abs(a[i][j]));
  if (scale == 0) scale = 1;
  Real tol = scale * pow10(-static_cast<long>(current_precision_digits()) - 5);

  for (int sweep = 0; sweep < 200; ++sweep) {
    Real off(0);
    for (size_t p = 0; p + 1 < n; ++p)
      for (size_t q = p + 1; q < n; ++q) off = std::max(off, abs(a[p][q]));
    if (off <= tol) break;
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (abs(a[p][q]) <= tol / Real(n * n)) continue;
        // 2x2 symmetric Schur rotation annihilating a[p][q].
        Real theta = (a[q][q] - a[p][p]) / (Real(2) * a[p][q]);
        Real t;
        if (theta >= 0)
          t = Real(1) / (theta + sqrt(Real(1) + theta * theta));
        else
          t = Real(-1) / (-theta + sqrt(Real(1) + theta * theta));
        Real c = Real(1) / sqrt(Real(1) + t * t);
        Real s = t * c;
        for (size_t k = 0; k < n; ++k) {
          Real akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          Real apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          Real vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  SymEigen out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<Real>(n));
  for (size_t k = 0; k < n; ++k) {
    out.values[k] = a[k][k];
    for (size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i][k];
  }
  sort_ascending(out);
  return out;
}

HermEigen jacobi_hermitian(CplxMat a) {
  const size_t n = a.size();
  for (const auto& r : a) ensure(r.size() == n, "jacobi_hermitian: not square");
  CplxMat v(n, std::vector<Cplx>(n));
  for (size_t i = 0; i < n; ++i) v[i][i] = Cplx(Real(1), Real(0));

  Real scale(0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) scale = std::max(scale, abs(a[i][j]));
  if (scale == 0) scale = 1;
  Real tol = scale * pow10(-static_cast<long>(current_precision_digits()) - 5);

  for (int sweep = 0; sweep < 200; ++sweep) {
    Real off(0);
    for (size_t p = 0; p + 1 < n; ++p)
      for (size_t q = p + 1; q < n; ++q) off = std::max(off, abs(a[p][q]));
    if (off <= tol) break;
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        Real m = abs(a[p][q]);
        if (m <= tol / Real(n * n)) continue;
        // Factor out the phase of a[p][q], then rotate like the real case:
        // with a[p][q] = m * e, |e|=1, the unitary [[c, -s*e],[s*conj(e), c]]
        // (applied as columns p,q) annihilates the off-diagonal pair.
        Cplx e = a[p][q] / Cplx(m, Real(0));
        Real theta = (a[q][q].re - a[p][p].re) / (Real(2) * m);
        Real t;
        if (theta >= 0)
          t = Real(1) / (theta + sqrt(Real(1) + theta * theta));
        else
          t = Real(-1) / (-theta + sqrt(Real(1) + theta * theta));
        Real c = Real(1) / sqrt(Real(1) + t * t);
        Real s = t * c;
        Cplx cs(c, Real(0));
        Cplx se = Cplx(s, Real(0)) * e;        // s*e
        Cplx sec = conj(se);                   // s*conj(e)
        // Columns: col_p' = c*col_p - conj(se)*col_q ; col_q' = se*col_p + c*col_q
        for (size_t k = 0; k < n; ++k) {
          Cplx akp = a[k][p], akq = a[k][q];
          a[k][p] = cs * akp - sec * akq;
          a[k][q] = se * akp + cs * akq;
        }
        // Rows (conjugate transpose action).
        for (size_t k = 0; k < n; ++k) {
          Cplx apk = a[p][k], aqk = a[q][k];
          a[p][k] = cs * apk - se * aqk;
          a[q][k] = sec * apk + cs * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          Cplx vkp = v[k][p], vkq = v[k][q];
          v[k][p] = cs * vkp - sec * vkq;
          v[k][q] = se * vkp + cs * vkq;
        }
      }
    }
  }

  HermEigen out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<Cplx>(n));
  for (size_t k = 0; k < n; ++k) {
    out.values[k] = a[k][k].re;
    for (size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i][k];
  }
  sort_ascending(out);
  return out;
}

std::vector<Cplx> roots_dk(const std::vector<Cplx>& coeffs) {
  std::vector<Cplx> c = coeffs;
  while (!c.empty() && abs(c.back()) == 0) c.pop_back();
  ensure(c.size() >= 2, "roots_dk: degree must be >= 1");
  const size_t n = c.size() - 1;
  // Monic normalization.
  for (size_t i = 0; i < n; ++i) c[i] = c[i] / c[n];
  c[n] = Cplx(Real(1), Real(0));

  // Cauchy-style radius.
  Real radius(0);
  for (size_t i = 0; i < n; ++i) radius = std::max(radius, abs(c[i]));
  radius += 1;

  std::vector<Cplx> w(n);
  // Deterministic spread: powers of (0.4 + 0.9i) scaled into the root bound.
  Cplx seed(Real(2) / Real(5), Real(9) / Real(10));
  Cplx cur(Real(13) / Real(25), Real(7) / Real(25));
  for (size_t i = 0; i < n; ++i) {
    w[i] = cur * Cplx(radius, Real(0));
    cur = cur * seed;
  }

  auto peval = [&](const Cplx& x) {
    Cplx acc;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };

  Real tol = pow10(-static_cast<long>(current_precision_digits()) - 5) * (radius + 1);
  const int maxiter = 900;
  for (int iter = 0; iter < maxiter; ++iter) {
    Real worst(0);
    for (size_t i = 0; i < n; ++i) {
      Cplx numr = peval(w[i]);
      Cplx denr(Real(1), Real(0));
      for (size_t j = 0; j < n; ++j)
        if (j != i) denr = denr * (w[i] - w[j]);
      if (abs(denr) == 0) {
        // Coincident iterates: nudge deterministically.
        w[i] = w[i] + Cplx(tol + Real(1) / Real(1000), tol);
        worst = radius;
        continue;
      }
      Cplx delta = numr / denr;
      w[i] = w[i] - delta;
      worst = std::max(worst, abs(delta));
    }
    if (worst <= tol) break;
  }
  return w;
}

std::vector<Cplx> roots_dk(const UniPoly& p) {
  std::vector<Cplx> c;
  c.reserve(p.coeffs_low().size());
  for (const auto& q : p.coeffs_low()) c.emplace_back(to_real(q), Real(0));
  return roots_dk(c);
}

Real eval_real(const UniPoly& p, const Real& x) {
  Real acc(0);
  const auto& c = p.coeffs_low();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

Cplx eval_cplx(const UniPoly& p, const Cplx& x) {
  Cplx acc;
  const auto& c = p.coeffs_low();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Cplx(to_real(*it), Real(0));
  return acc;
}

}  // namespace wdist
