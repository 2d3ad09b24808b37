#include "wdist/specpoly.hpp"

#include <algorithm>
#include <functional>

#include "wdist/detpoly.hpp"
#include "wdist/errors.hpp"

namespace wdist {

namespace {

// det[(m*I - N)(m*I - N)^T - y*I] for an integer matrix N, as a polynomial in
// (m, y): monic of degree 2n in m, degree n in y, integer coefficients.
// Per integer node m=u the y-polynomial is (-1)^n * charpoly((uI-N)(uI-N)^T),
// so one Faddeev-LeVerrier pass per node replaces a y-grid of determinants.
BiPoly build_gram_det(const IntMat& nmat) {
  const size_t n = nmat.size();
  const long lo = -static_cast<long>(n);
  std::vector<Rat> unodes;
  std::vector<UniPoly> per_u;  // polynomial in y at each u
  for (long u = lo; u <= static_cast<long>(n); ++u) {
    IntMat b(n, std::vector<Int>(n));  // uI - N
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        b[i][j] = -nmat[i][j];
        if (i == j) b[i][j] += u;
      }
    IntMat c(n, std::vector<Int>(n));  // B * B^T
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Int acc(0);
        for (size_t k = 0; k < n; ++k) acc += b[i][k] * b[j][k];
        c[i][j] = acc;
      }
    UniPoly f = charpoly_int(c);
    if (n % 2 == 1) f = Rat(-1) * f;
    per_u.push_back(f);
    unodes.emplace_back(u);
  }
  // Transpose the interpolation: coefficient of y^k across the u-nodes.
  std::vector<UniPoly> in_m(n + 1);
  size_t deg_m = 0;
  for (size_t k = 0; k <= n; ++k) {
    std::vector<Rat> ys;
    ys.reserve(per_u.size());
    for (const auto& f : per_u) ys.push_back(f.coeff(k));
    in_m[k] = interpolate(unodes, ys);
    deg_m = std::max(deg_m, static_cast<size_t>(std::max(0L, in_m[k].degree())));
  }
  ensure(deg_m == 2 * n, "gram determinant: wrong degree in m");
  std::vector<UniPoly> lam(2 * n + 1);
  for (size_t j = 0; j <= 2 * n; ++j) {
    std::vector<Rat> zc(n + 1);
    for (size_t k = 0; k <= n; ++k) zc[k] = in_m[k].coeff(j);
    lam[j] = UniPoly::from_low(std::move(zc));
    for (const auto& q : lam[j].coeffs_low())
      ensure(den(q) == 1, "gram determinant: non-integer coefficient");
  }
  BiPoly psi = BiPoly::from_low(std::move(lam));
  ensure(psi.lead() == UniPoly(Rat(1)), "gram determinant: not monic");
  return psi;
}

// Rescale: with A = N/d, Phi(L,z) = d^(-2n) * Psi(d L, d^2 z).
BiPoly unscale_phi(const BiPoly& psi, const Int& d, size_t n) {
  if (d == 1) return psi;
  std::vector<UniPoly> out(psi.coeffs_low().size());
  for (size_t j = 0; j < out.size(); ++j) {
    const UniPoly& u = psi.coeff(j);
    std::vector<Rat> c(u.coeffs_low().size());
    for (size_t k = 0; k < c.size(); ++k) {
      long e = static_cast<long>(j) + 2 * static_cast<long>(k) - 2 * static_cast<long>(n);
      c[k] = u.coeff(k) * pow_rat(Rat(d), e);
    }
    out[j] = UniPoly::from_low(std::move(c));
  }
  return BiPoly::from_low(std::move(out));
}

}  // namespace

PhiPoly build_phi(const Matrix& a) {
  const size_t n = a.n();
  ensure(n >= 1, "build_phi: empty matrix");
  ClearedMatrix cm = clear_matrix(a);
  BiPoly psi = build_gram_det(cm.num);
  PhiPoly out;
  out.n = n;
  out.phi = unscale_phi(psi, cm.den, n);
  // Structural checks: Phi(L,0) = f_A(L)^2 and [L^(2n-1)] = -2 tr(A).
  UniPoly fa = charpoly(a);
  ensure(eval_z(out.phi, Rat(0)) == fa * fa, "Phi(.,0) != charpoly^2");
  ensure(out.phi.coeff(2 * n - 1) == UniPoly(Rat(-2) * trace(a)),
         "Phi: wrong subleading coefficient");
  return out;
}

namespace {

// Value e(z) + o(z)*w where w^2 = z.
struct PairPoly {
  UniPoly e, o;
};

PairPoly pp_mul(const PairPoly& x, const PairPoly& y) {
  PairPoly r;
  UniPoly zpoly = UniPoly::monomial(1);
  r.e = x.e * y.e + zpoly * (x.o * y.o);
  r.o = x.e * y.o + x.o * y.e;
  return r;
}

}  // namespace

std::vector<UniPoly> newton_sums(const Matrix& a, size_t count) {
  const size_t n = a.n();
  ensure(n >= 1, "newton_sums: empty matrix");
  const size_t m = 2 * n;
  std::vector<std::vector<PairPoly>> w(m, std::vector<PairPoly>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      w[i][j].e = UniPoly(a.at(j, i));      // A^T block
      w[n + i][n + j].e = UniPoly(a.at(i, j));
    }
  for (size_t i = 0; i < n; ++i) {
    w[i][n + i].o = UniPoly(Rat(1));
    w[n + i][i].o = UniPoly(Rat(1));
  }

  std::vector<UniPoly> sums(count + 1);
  sums[0] = UniPoly(Rat(static_cast<long>(m)));
  auto p = w;
  for (size_t j = 1; j <= count; ++j) {
    if (j > 1) {
      // p <- p * w
      std::vector<std::vector<PairPoly>> q(m, std::vector<PairPoly>(m));
      for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k < m; ++k) {
          if (p[r][k].e.is_zero() && p[r][k].o.is_zero()) continue;
          for (size_t cidx = 0; cidx < m; ++cidx) {
            if (w[k][cidx].e.is_zero() && w[k][cidx].o.is_zero()) continue;
            PairPoly t = pp_mul(p[r][k], w[k][cidx]);
            q[r][cidx].e = q[r][cidx].e + t.e;
            q[r][cidx].o = q[r][cidx].o + t.o;
          }
        }
      p = std::move(q);
    }
    UniPoly te, to;
    for (size_t r = 0; r < m; ++r) {
      te = te + p[r][r].e;
      to = to + p[r][r].o;
    }
    ensure(to.is_zero(), "newton_sums: odd part of a trace did not cancel");
    sums[j] = te;
  }
  return sums;
}

std::vector<UniPoly> newton_sums_from_phi(const BiPoly& phi, size_t count) {
  ensure(!phi.is_zero() && phi.lead() == UniPoly(Rat(1)),
         "newton_sums_from_phi: polynomial must be monic");
  const size_t n = static_cast<size_t>(phi.degree_lambda());
  // a[j] = coefficient of L^(n-j).
  std::vector<UniPoly> a(n + 1);
  for (size_t j = 0; j <= n; ++j) a[j] = phi.coeff(n - j);
  std::vector<UniPoly> s(count + 1);
  s[0] = UniPoly(Rat(static_cast<long>(n)));
  for (size_t k = 1; k <= count; ++k) {
    UniPoly acc;
    size_t lim = std::min(k, n);
    for (size_t j = 1; j <= lim; ++j) {
      if (j == k)
        acc = acc + Rat(static_cast<long>(k)) * a[j];
      else
        acc = acc + a[j] * s[k - j];
    }
    s[k] = -acc;
  }
  return s;
}

namespace {

struct ScaledSums {
  std::vector<UniPoly> sums;  // in the scaled variable y = d^2 z, integer coeffs
  Int d;
  size_t n = 0;
};

ScaledSums scaled_sums(const Matrix& a, size_t count) {
  ScaledSums out;
  out.n = a.n();
  ClearedMatrix cm = clear_matrix(a);
  out.d = cm.den;
  BiPoly psi = build_gram_det(cm.num);
  out.sums = newton_sums_from_phi(psi, count);
  return out;
}

std::vector<Int> eval_sums_int(const std::vector<UniPoly>& sums, const Rat& v) {
  std::vector<Int> out;
  out.reserve(sums.size());
  for (const auto& s : sums) {
    Rat val = eval(s, v);
    ensure(den(val) == 1, "integer Newton sum expected");
    out.push_back(num(val));
  }
  return out;
}

}  // namespace

std::vector<UniPoly> hankel_minors(const Matrix& a, size_t count) {
  ensure(count >= 1, "hankel_minors: count must be >= 1");
  ScaledSums ss = scaled_sums(a, 2 * count - 2);
  // Degree bound: deg_y S_k <= k(k-1)/2 (each s_m has degree <= m/2).
  const size_t bound = count * (count - 1) / 2;
  const size_t nodes = bound + 3;  // two oversamples for verification
  std::vector<std::vector<Int>> minors_at(nodes);
  for (size_t v = 0; v < nodes; ++v) {
    std::vector<Int> svals = eval_sums_int(ss.sums, Rat(static_cast<long>(v)));
    minors_at[v] = leading_principal_minors(hankel_from_sums(svals, count));
  }
  std::vector<UniPoly> out(count);
  for (size_t k = 1; k <= count; ++k) {
    size_t bk = k * (k - 1) / 2;
    std::vector<Rat> xs, ys;
    for (size_t v = 0; v <= bk; ++v) {
      xs.emplace_back(static_cast<long>(v));
      ys.emplace_back(minors_at[v][k - 1]);
    }
    UniPoly sk = interpolate(xs, ys);
    for (size_t v = bk + 1; v < nodes; ++v)
      ensure(eval(sk, Rat(static_cast<long>(v))) == Rat(minors_at[v][k - 1]),
             "hankel_minors: oversample mismatch");
    // Unscale from y = d^2 z back to z: [z^m] S_k = d^(2m - k(k-1)) [y^m] S'_k.
    if (ss.d != 1) {
      std::vector<Rat> c(sk.coeffs_low().size());
      for (size_t m = 0; m < c.size(); ++m)
        c[m] = sk.coeff(m) *
               pow_rat(Rat(ss.d), 2 * static_cast<long>(m) - static_cast<long>(k * (k - 1)));
      sk = UniPoly::from_low(std::move(c));
    }
    out[k - 1] = sk;
  }
  return out;
}

namespace {

DistanceEquation radical_equation(const PhiPoly& phi);

}  // namespace

DistanceEquation distance_equation(const Matrix& a) {
  const size_t n = a.n();
  if (n < 2) raise(Errc::DEGREE_TOO_LOW, "matrix dimension must be at least 2");
  UniPoly fa = charpoly(a);
  if (sgn(discriminant(fa)) == 0)
    raise(Errc::INPUT_DEFECTIVE, "input already has a multiple eigenvalue");

  ScaledSums ss = scaled_sums(a, 4 * n - 2);
  const size_t m = 2 * n;
  const size_t degf = n * (n - 1);

  // S(0) must vanish (the discriminant of Phi carries the factor z^n).
  {
    std::vector<Int> s0 = eval_sums_int(ss.sums, Rat(0));
    ensure(sgn(det_int(hankel_from_sums(s0, m))) == 0, "S(0) != 0");
  }

  std::vector<Rat> xs, ys;
  bool all_zero = true;
  for (size_t v = 1; v <= degf + 3; ++v) {
    std::vector<Int> svals = eval_sums_int(ss.sums, Rat(static_cast<long>(v)));
    Int sv = det_int(hankel_from_sums(svals, m));
    // F'(v) = S'(v) / v^n, exactly.
    Int vn = pow_int(Int(static_cast<long>(v)), static_cast<unsigned long>(n));
    Int fv, r;
    mpz_tdiv_qr(fv.get_mpz_t(), r.get_mpz_t(), sv.get_mpz_t(), vn.get_mpz_t());
    ensure(sgn(r) == 0, "S'(v) not divisible by v^n");
    if (sgn(fv) != 0) all_zero = false;
    xs.emplace_back(static_cast<long>(v));
    ys.emplace_back(fv);
  }

  if (all_zero) {
    PhiPoly phi;
    phi.n = n;
    ClearedMatrix cm = clear_matrix(a);
    phi.phi = unscale_phi(build_gram_det(cm.num), cm.den, n);
    DistanceEquation de = radical_equation(phi);
    if (de.f.is_zero()) raise(Errc::IDENTICALLY_ZERO, "distance equation vanished on both routes");
    return de;
  }

  // Interpolate on the first degf+1 nodes, verify on the rest.
  std::vector<Rat> xs1(xs.begin(), xs.begin() + degf + 1);
  std::vector<Rat> ys1(ys.begin(), ys.begin() + degf + 1);
  UniPoly fprime = interpolate(xs1, ys1);
  for (size_t i = degf + 1; i < xs.size(); ++i)
    ensure(eval(fprime, xs[i]) == ys[i], "distance equation: oversample mismatch");

  // Unscale from y = d^2 z: [z^k] F = d^(2k - 4n(n-1)) [y^k] F'.
  UniPoly f = fprime;
  if (ss.d != 1) {
    std::vector<Rat> c(fprime.coeffs_low().size());
    for (size_t k = 0; k < c.size(); ++k)
      c[k] = fprime.coeff(k) *
             pow_rat(Rat(ss.d), 2 * static_cast<long>(k) - 4 * static_cast<long>(n * (n - 1)));
    f = UniPoly::from_low(std::move(c));
  }

  DistanceEquation de;
  de.f = f;
  de.mode = DistanceEquation::Mode::NORMAL;
  de.leading_check = false;
  if (static_cast<size_t>(f.degree()) == degf) {
    Rat expected = pow_rat(Rat(4), static_cast<long>(n)) *
                   pow_rat(discriminant(charpoly(a + transpose(a))), 2);
    de.leading_check = (f.lead() == expected);
  }
  return de;
}

namespace {

// F = disc_L(G)/z^e where G is the radical of Phi in L (monic over Q[z]).
DistanceEquation radical_equation(const PhiPoly& phi) {
  const BiPoly& p = phi.phi;
  BiPoly d = gcd_lambda(p, d_lambda(p));
  if (d.degree_lambda() < 1) raise(Errc::NOT_A_SQUARE, "Phi has no repeated factor to deflate");
  // Monic divisor of a monic polynomial over Q[z]: coefficients stay in Q[z],
  // so dividing by the leading UniPoly is exact coefficient-wise.
  UniPoly lead = d.lead();
  std::vector<UniPoly> dm(d.coeffs_low().size());
  for (size_t i = 0; i < dm.size(); ++i) dm[i] = exact_div(d.coeff(i), lead);
  BiPoly dmonic = BiPoly::from_low(std::move(dm));
  BiPoly g = exact_div_lambda(p, dmonic);
  ensure(g.lead() == UniPoly(Rat(1)), "radical: quotient not monic");

  const size_t ng = static_cast<size_t>(g.degree_lambda());
  if (ng < 2) raise(Errc::IDENTICALLY_ZERO, "radical has degree < 2; no discriminant");
  std::vector<UniPoly> sums = newton_sums_from_phi(g, 2 * ng - 2);
  long degz = 0;
  for (const auto& u : g.coeffs_low()) degz = std::max(degz, u.degree());
  const size_t bound = static_cast<size_t>(degz) * (2 * ng - 2);
  const size_t nodes = bound + 3;
  std::vector<Rat> xs, ys;
  for (size_t v = 0; v < nodes; ++v) {
    Rat x(static_cast<long>(v));
    std::vector<Rat> svals;
    svals.reserve(sums.size());
    for (const auto& s : sums) svals.push_back(eval(s, x));
    xs.push_back(x);
    ys.push_back(det_rat(hankel_from_sums(svals, ng)));
  }
  std::vector<Rat> xs1(xs.begin(), xs.begin() + bound + 1);
  std::vector<Rat> ys1(ys.begin(), ys.begin() + bound + 1);
  UniPoly disc = interpolate(xs1, ys1);
  for (size_t i = bound + 1; i < nodes; ++i)
    ensure(eval(disc, xs[i]) == ys[i], "radical discriminant: oversample mismatch");

  DistanceEquation de;
  de.mode = DistanceEquation::Mode::SQRT_PHI;
  de.leading_check = false;
  if (disc.is_zero()) {
    de.f = UniPoly();
    return de;
  }
  size_t e = disc.trailing_order();
  std::vector<Rat> c(disc.coeffs_low().begin() + static_cast<long>(e), disc.coeffs_low().end());
  de.f = UniPoly::from_low(std::move(c));
  return de;
}

}  // namespace

DistanceEquation sqrt_phi_fallback(const Matrix& a) {
  const size_t n = a.n();
  if (n < 2) raise(Errc::DEGREE_TOO_LOW, "matrix dimension must be at least 2");
  PhiPoly phi = build_phi(a);
  DistanceEquation de = radical_equation(phi);
  if (de.f.is_zero()) raise(Errc::IDENTICALLY_ZERO, "radical discriminant vanished");
  return de;
}

namespace {

// Two-variable interpolation of values val(u, v) with deg_u <= 2n, deg_v <= n.
BiPoly interp_grid(size_t n, long ustart, const std::function<Rat(long, long)>& val) {
  std::vector<Rat> unodes;
  std::vector<UniPoly> per_u;
  for (long u = ustart; u <= ustart + 2 * static_cast<long>(n); ++u) {
    std::vector<Rat> xs, ys;
    for (long v = 0; v <= static_cast<long>(n); ++v) {
      xs.emplace_back(v);
      ys.push_back(val(u, v));
    }
    per_u.push_back(interpolate(xs, ys));
    unodes.emplace_back(u);
  }
  std::vector<UniPoly> in_u(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    std::vector<Rat> ys;
    for (const auto& f : per_u) ys.push_back(f.coeff(k));
    in_u[k] = interpolate(unodes, ys);
  }
  long dl = 0;
  for (const auto& f : in_u) dl = std::max(dl, f.degree());
  std::vector<UniPoly> lam(static_cast<size_t>(dl) + 1);
  for (long j = 0; j <= dl; ++j) {
    std::vector<Rat> zc(n + 1);
    for (size_t k = 0; k <= n; ++k) zc[k] = in_u[k].coeff(static_cast<size_t>(j));
    lam[static_cast<size_t>(j)] = UniPoly::from_low(std::move(zc));
  }
  return BiPoly::from_low(std::move(lam));
}

}  // namespace

SpecialFormInfo special_form(const Matrix& a) {
  const size_t n = a.n();
  ensure(n >= 1, "special_form: empty matrix");
  SpecialFormInfo out;
  UniPoly fa = charpoly(a);

  if (is_symmetric(a)) {
    out.form = MatrixForm::SYMMETRIC;
    out.closed_phi = interp_grid(n, -static_cast<long>(n), [&](long u, long v) {
      // Res_t(f_A(t), (u - t)^2 - v)
      UniPoly q = UniPoly::from_low({Rat(u) * Rat(u) - Rat(v), Rat(-2) * Rat(u), Rat(1)});
      return resultant(fa, q);
    });
    return out;
  }
  Rat c;
  if (is_skew_plus_scalar(a, &c)) {
    out.form = MatrixForm::SKEW_PLUS_SCALAR;
    out.scalar_shift = c;
    out.closed_phi = interp_grid(n, -static_cast<long>(n), [&](long u, long v) {
      // Res_t(f_A(t), (u - c)^2 - (t - c)^2 - v)
      Rat uc = Rat(u) - c;
      UniPoly q = UniPoly::from_low({uc * uc - c * c - Rat(v), Rat(2) * c, Rat(-1)});
      return resultant(fa, q);
    });
    return out;
  }
  if (is_orthogonal(a)) {
    out.form = MatrixForm::ORTHOGONAL;
    Rat da = det(a);
    Rat scale = (n % 2 == 0 ? Rat(1) : Rat(-1)) / da;
    out.closed_phi = interp_grid(n, 1, [&](long u, long v) {
      // (-1)^n/det(A) * Res_t(f_A(t), u t^2 - (u^2 + 1 - v) t + u), u != 0
      UniPoly q = UniPoly::from_low({Rat(u), Rat(v) - Rat(u) * Rat(u) - Rat(1), Rat(u)});
      return scale * resultant(fa, q);
    });
    return out;
  }
  out.form = MatrixForm::GENERIC;
  return out;
}

}  // namespace wdist
