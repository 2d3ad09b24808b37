#include "wdist/complexdist.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "wdist/detpoly.hpp"
#include "wdist/errors.hpp"

namespace wdist {

namespace {

struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned digits) : saved(current_precision_digits()) {
    set_thread_precision(digits);
  }
  ~PrecisionScope() { set_thread_precision(saved); }
};


Real real_pow(Real base, unsigned e) {
  Real out(1);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// XiPoly
// ---------------------------------------------------------------------------

BivarPoly XiPoly::at_z(const Rat& z) const {
  BivarPoly out;
  for (const auto& [m, c] : terms) {
    const Rat v = wdist::eval(c, z);
    if (v != 0) out.add_scaled(v, m, BivarPoly::term(Rat(1), 0, 0));
  }
  return out;
}

Rat XiPoly::eval(const Rat& a, const Rat& bb, const Rat& z) const {
  Rat acc(0);
  for (const auto& [m, c] : terms)
    acc += wdist::eval(c, z) * pow_rat(a, m.da) * pow_rat(bb, m.db);
  return acc;
}

long XiPoly::degree_a() const {
  long d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, static_cast<long>(m.da));
  return d;
}

long XiPoly::degree_bb() const {
  long d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, static_cast<long>(m.db));
  return d;
}

long XiPoly::degree_z() const {
  long d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, c.degree());
  return d;
}

Rat eval_theta(const XiPoly& xi, const Rat& a, const Rat& b, const Rat& z) {
  return xi.eval(a, b * b, z);
}

XiPoly d_a(const XiPoly& xi) {
  XiPoly out;
  out.n = xi.n;
  for (const auto& [m, c] : xi.terms) {
    if (m.da == 0) continue;
    out.terms[{m.da - 1, m.db}] = Rat(m.da) * c;
  }
  return out;
}

XiPoly d_bb2(const XiPoly& xi) {
  XiPoly out;
  out.n = xi.n;
  for (const auto& [m, c] : xi.terms) {
    if (m.db == 0) continue;
    out.terms[{m.da, m.db - 1}] = Rat(2 * m.db) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact construction of Xi on an integer grid.
// ---------------------------------------------------------------------------

XiPoly build_xi(const Matrix& a) {
  const size_t n = a.n();
  ensure(n >= 2, "grid construction needs order >= 2");
  const ClearedMatrix cm = clear_matrix(a);
  const long nl = static_cast<long>(n);

  std::vector<Rat> anodes, bnodes, znodes;
  for (long t = -nl; t <= nl; ++t) anodes.push_back(Rat(t));
  bnodes = anodes;
  for (long t = 0; t <= nl; ++t) znodes.push_back(Rat(t));

  const Int d = cm.den;
  const Int d2 = d * d;

  // Integer determinant of (alpha I - N)(conj(alpha) I - N^T) - (d^2 z) I
  // over the Gaussian integers; Hermitian, so the result must be real.
  auto det_at = [&](long av, long bv, long zv) -> Int {
    GaussMat p(n, std::vector<GaussInt>(n));
    GaussMat q(n, std::vector<GaussInt>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        p[i][j] = GaussInt(-cm.num[i][j], Int(0));
        q[i][j] = GaussInt(-cm.num[j][i], Int(0));
        if (i == j) {
          p[i][j].re += av;
          p[i][j].im += bv;
          q[i][j].re += av;
          q[i][j].im -= bv;
        }
      }
    GaussMat m(n, std::vector<GaussInt>(n, GaussInt()));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (p[i][k].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) m[i][j] = m[i][j] + p[i][k] * q[k][j];
      }
    for (size_t i = 0; i < n; ++i) m[i][i].re -= d2 * zv;
    const GaussInt dt = det_gauss(m);
    ensure(sgn(dt.im) == 0, "Hermitian slice determinant must be real");
    return dt.re;
  };

  // Stage 1: polynomial in a for every (b, z) node pair.
  const size_t na = anodes.size(), nb = bnodes.size(), nz = znodes.size();
  std::vector<std::vector<UniPoly>> in_a(nb, std::vector<UniPoly>(nz));
  for (size_t bi = 0; bi < nb; ++bi)
    for (size_t zi = 0; zi < nz; ++zi) {
      std::vector<Rat> ys(na);
      for (size_t ai = 0; ai < na; ++ai)
        ys[ai] = Rat(det_at(static_cast<long>(ai) - nl, static_cast<long>(bi) - nl,
                            static_cast<long>(zi)));
      in_a[bi][zi] = interpolate(anodes, ys);
      ensure(in_a[bi][zi].degree() <= 2 * nl, "a-degree exceeded the bound");
    }

  // Stage 2: polynomial in b per a-power; odd powers must cancel.
  // in_b[j][zi] holds the even b-coefficients (index m <-> b^(2m)).
  std::vector<std::vector<std::vector<Rat>>> in_b(
      2 * n + 1, std::vector<std::vector<Rat>>(nz));
  for (size_t j = 0; j <= 2 * n; ++j)
    for (size_t zi = 0; zi < nz; ++zi) {
      std::vector<Rat> ys(nb);
      for (size_t bi = 0; bi < nb; ++bi) ys[bi] = in_a[bi][zi].coeff(j);
      const UniPoly pb = interpolate(bnodes, ys);
      ensure(pb.degree() <= 2 * nl, "b-degree exceeded the bound");
      std::vector<Rat> even(n + 1, Rat(0));
      for (long k = 0; k <= pb.degree(); ++k) {
        const Rat c = pb.coeff(k);
        if (k % 2 == 1) {
          ensure(c == 0, "odd b-power survived in a Hermitian slice");
        } else {
          even[k / 2] = c;
        }
      }
      in_b[j][zi] = std::move(even);
    }

  // Stage 3: polynomial in z per (a, bb) monomial, then unscale A = N/d.
  XiPoly xi;
  xi.n = n;
  for (size_t j = 0; j <= 2 * n; ++j)
    for (size_t m = 0; m <= n; ++m) {
      std::vector<Rat> ys(nz);
      for (size_t zi = 0; zi < nz; ++zi) ys[zi] = in_b[j][zi][m];
      UniPoly pz = interpolate(znodes, ys);
      ensure(pz.degree() <= nl, "z-degree exceeded the bound");
      if (pz.is_zero()) continue;
      // Coefficient (j, 2m, l) of the cleared matrix scales by d^(j+2m+2l-2n).
      pz = scale_arg(pz, Rat(d2));
      const long base = static_cast<long>(j) + 2 * static_cast<long>(m) - 2 * nl;
      pz = pow_rat(Rat(d), base) * pz;
      xi.terms[{static_cast<unsigned>(j), static_cast<unsigned>(m)}] = pz;
    }

  const auto lead = xi.terms.find({static_cast<unsigned>(2 * n), 0});
  ensure(lead != xi.terms.end() && lead->second == UniPoly::monomial(0),
         "slice determinant must be monic in a");
  return xi;
}

// ---------------------------------------------------------------------------
// Quotient-ring data at one z node.
// ---------------------------------------------------------------------------

namespace {

struct NodeData {
  std::vector<Mono> basis;
  RatMat mt;  // transposed multiplication matrix of Xi(., ., z)
};

std::optional<NodeData> node_data(const XiPoly& xi, const XiPoly& xia,
                                  const XiPoly& xib, const Rat& z, size_t want_dim) {
  const std::vector<BivarPoly> gens = {xia.at_z(z), xib.at_z(z)};
  if (gens[0].is_zero() || gens[1].is_zero()) return std::nullopt;
  const std::vector<BivarPoly> gb = groebner_basis(gens);
  std::vector<Mono> basis;
  try {
    basis = quotient_basis(gb);
  } catch (const Error& e) {
    if (e.code() == Errc::ELIMINATION_DEGENERATE) return std::nullopt;
    throw;
  }
  if (basis.size() != want_dim) return std::nullopt;
  const RatMat m = multiplication_matrix(xi.at_z(z), gb, basis);
  NodeData out;
  out.basis = basis;
  out.mt.assign(m.size(), std::vector<Rat>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out.mt[i][j] = m[j][i];
  return out;
}

// Signed cofactors along the last row of a rational matrix.
std::vector<Rat> last_row_cofactors(const RatMat& m) {
  const size_t dim = m.size();
  std::vector<Rat> cof(dim);
  for (size_t j = 0; j < dim; ++j) {
    RatMat minor(dim - 1, std::vector<Rat>(dim - 1));
    for (size_t r = 0; r + 1 < dim; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < dim; ++c) {
        if (c == j) continue;
        minor[r][cc++] = m[r][c];
      }
    }
    cof[j] = det_rat(minor);
    if ((dim - 1 + j) % 2 == 1) cof[j] = -cof[j];
  }
  return cof;
}

// Determinant of a small polynomial matrix by Laplace expansion.
UniPoly unipoly_det(const std::vector<std::vector<UniPoly>>& m) {
  const size_t dim = m.size();
  if (dim == 0) return UniPoly::monomial(0);
  if (dim == 1) return m[0][0];
  UniPoly acc;
  for (size_t j = 0; j < dim; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor(dim - 1, std::vector<UniPoly>(dim - 1));
    for (size_t r = 1; r < dim; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < dim; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    UniPoly term = m[0][j] * unipoly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// The eliminant.
// ---------------------------------------------------------------------------

ComplexDistanceEquation complex_equation(const Matrix& a) {
  const size_t n = a.n();
  if (n < 2) raise(Errc::DEGREE_TOO_LOW, "matrix order must be at least 2");

  ComplexDistanceEquation out;
  out.n = n;
  out.stripped_power = static_cast<long>(n * (n - 1) / 2);

  const XiPoly xi = build_xi(a);
  const XiPoly xia = d_a(xi);
  const XiPoly xib = d_bb2(xi);
  const size_t want_dim = (n - 1) * (n - 1);

  const long strip = out.stripped_power;
  const long deg_bound = strip + static_cast<long>(n * (n - 1) * (n - 2) / 2);
  const size_t need = static_cast<size_t>(deg_bound) + 4;

  std::vector<Rat> xs;
  std::vector<Rat> ys;
  std::vector<NodeData> datas;  // kept for the n == 3 symbolic pass
  const bool symbolic = (n == 3);
  long r = 1;
  size_t attempts = 0;
  while (xs.size() < need) {
    if (++attempts > need + 64)
      raise(Errc::ELIMINATION_DEGENERATE,
            "interpolation nodes exhausted: the critical system stays degenerate");
    const Rat z(r++);
    auto nd = node_data(xi, xia, xib, z, want_dim);
    if (!nd) continue;
    xs.push_back(z);
    ys.push_back(det_rat(nd->mt));
    if (symbolic) datas.push_back(std::move(*nd));
  }

  const size_t base = static_cast<size_t>(deg_bound) + 1;
  UniPoly elim = interpolate(std::vector<Rat>(xs.begin(), xs.begin() + base),
                             std::vector<Rat>(ys.begin(), ys.begin() + base));
  for (size_t i = base; i < xs.size(); ++i)
    ensure(eval(elim, xs[i]) == ys[i], "eliminant interpolation failed oversampling");

  if (elim.is_zero())
    raise(Errc::ELIMINATION_DEGENERATE, "eliminant vanished identically");
  ensure(static_cast<long>(elim.trailing_order()) >= strip,
         "eliminant lacks the structural z-power");
  std::vector<Rat> shifted(elim.coeffs_low().begin() + strip, elim.coeffs_low().end());
  out.f_tilde = primitive_int(UniPoly::from_low(std::move(shifted)));
  ensure(out.f_tilde.degree() <= deg_bound - strip, "eliminant degree exceeds the bound");

  if (symbolic && !datas.empty()) {
    // Interpolate the transposed multiplication matrix entry-wise; shapes
    // must match the first usable node. Dropped silently on any mismatch:
    // the symbolic matrix is a convenience, the eliminant stands on its own.
    std::vector<size_t> keep;
    for (size_t i = 0; i < datas.size(); ++i)
      if (datas[i].basis == datas[0].basis) keep.push_back(i);
    const size_t dim = want_dim;
    const size_t ebase = static_cast<size_t>(deg_bound) + 1;
    if (keep.size() >= ebase + 2) {
      bool ok = true;
      std::vector<std::vector<UniPoly>> mat(dim, std::vector<UniPoly>(dim));
      for (size_t i = 0; ok && i < dim; ++i)
        for (size_t j = 0; ok && j < dim; ++j) {
          std::vector<Rat> exs, eys;
          for (size_t k = 0; k < ebase; ++k) {
            exs.push_back(xs[keep[k]]);
            eys.push_back(datas[keep[k]].mt[i][j]);
          }
          UniPoly e = interpolate(exs, eys);
          for (size_t k = ebase; k < keep.size(); ++k)
            if (eval(e, xs[keep[k]]) != datas[keep[k]].mt[i][j]) {
              ok = false;
              break;
            }
          if (ok) mat[i][j] = std::move(e);
        }
      if (ok) {
        UniPoly det = unipoly_det(mat);
        // Cross-check against the interpolated eliminant values.
        for (size_t k = 0; k < std::min<size_t>(keep.size(), 3); ++k)
          if (eval(det, xs[keep[k]]) != ys[keep[k]]) ok = false;
        if (ok) {
          out.basis = datas[0].basis;
          out.bezout = std::move(mat);
          out.bezout_det = std::move(det);
          out.cofactor_row.resize(dim);
          for (size_t j = 0; j < dim; ++j) {
            std::vector<std::vector<UniPoly>> minor(dim - 1,
                                                    std::vector<UniPoly>(dim - 1));
            for (size_t rr = 0; rr + 1 < dim; ++rr) {
              size_t cc = 0;
              for (size_t c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor[rr][cc++] = out.bezout[rr][c];
              }
            }
            UniPoly cof = unipoly_det(minor);
            if ((dim - 1 + j) % 2 == 1) cof = Rat(-1) * cof;
            out.cofactor_row[j] = std::move(cof);
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Recovery and the walk.
// ---------------------------------------------------------------------------

std::pair<Rat, Rat> recover_ab(const XiPoly& xi, const Rat& z) {
  const size_t n = xi.n;
  const size_t want_dim = (n - 1) * (n - 1);
  const auto nd = node_data(xi, d_a(xi), d_bb2(xi), z, want_dim);
  if (!nd)
    raise(Errc::ELIMINATION_DEGENERATE,
          "quotient dimension is wrong at the recovery point");

  long i1 = -1, ia = -1, ib = -1;
  for (size_t i = 0; i < nd->basis.size(); ++i) {
    if (nd->basis[i] == Mono{0, 0}) i1 = static_cast<long>(i);
    if (nd->basis[i] == Mono{1, 0}) ia = static_cast<long>(i);
    if (nd->basis[i] == Mono{0, 1}) ib = static_cast<long>(i);
  }
  if (i1 < 0 || ia < 0 || ib < 0)
    raise(Errc::COFACTOR_SINGULAR, "residue basis lacks the 1, a, bb monomials");

  const std::vector<Rat> cof = last_row_cofactors(nd->mt);
  if (cof[i1] == 0) raise(Errc::COFACTOR_SINGULAR, "unit cofactor vanished");
  const Rat av = cof[ia] / cof[i1];
  const Rat bbv = cof[ib] / cof[i1];
  if (bbv <= 0)
    raise(Errc::NEGATIVE_B,
          "recovered bb is not positive (" + rat_str(bbv) + "): real-axis critical point");
  return {av, bbv};
}

const char* complex_fate_name(ComplexZeroRecord::Fate f) {
  switch (f) {
    case ComplexZeroRecord::Fate::ACCEPTED: return "accepted";
    case ComplexZeroRecord::Fate::REJECTED_NONPOSITIVE_B: return "rejected_nonpositive_bb";
    case ComplexZeroRecord::Fate::REJECTED_DEGENERATE: return "rejected_degenerate";
    case ComplexZeroRecord::Fate::NOT_EXAMINED: return "not_examined";
  }
  return "?";
}

const char* complex_winner_name(ComplexReport::Winner w) {
  switch (w) {
    case ComplexReport::Winner::REAL_BRANCH: return "REAL_BRANCH";
    case ComplexReport::Winner::COMPLEX_BRANCH: return "COMPLEX_BRANCH";
  }
  return "?";
}

PerturbationC complex_min_perturbation(const Matrix& a, const Cplx& lambda,
                                       const Real& z) {
  const size_t n = a.n();
  ensure(n >= 2, "perturbation needs order >= 2");
  const unsigned digits = current_precision_digits();

  CplxMat m(n, std::vector<Cplx>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      m[i][j] = Cplx(-to_real(a.at(i, j)), Real(0));
      if (i == j) m[i][j] = m[i][j] + lambda;
    }
  CplxMat h(n, std::vector<Cplx>(n, Cplx()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) h[i][j] = h[i][j] + conj(m[k][i]) * m[k][j];

  const HermEigen he = jacobi_hermitian(h);
  Real scale = abs(z);
  for (const auto& v : he.values) scale = std::max(scale, abs(v));
  scale = std::max(scale, Real(1));

  size_t best = 0;
  Real best_d(-1), second_d(-1);
  for (size_t k = 0; k < n; ++k) {
    const Real dk = abs(he.values[k] - z);
    if (best_d < 0 || dk < best_d) {
      second_d = best_d;
      best_d = dk;
      best = k;
    } else if (second_d < 0 || dk < second_d) {
      second_d = dk;
    }
  }
  const long match_exp = digits > 10 ? static_cast<long>(digits) - 10 : 1;
  if (best_d > pow10(-match_exp) * scale)
    raise(Errc::SINGULAR_VALUE_MISMATCH,
          "no squared singular value of lambda*I - A matches z (closest offset " +
              sci_str(best_d, 6) + ")");
  if (second_d >= 0 && second_d < pow10(-static_cast<long>(digits) / 2) * scale)
    raise(Errc::CLUSTERED_SINGULAR_VALUES,
          "two squared singular values match z within half working precision");

  const Real mu = he.values[best];
  ensure(mu > 0, "matched singular value must be positive");
  const Real sig = sqrt(mu);

  PerturbationC out;
  out.sigma = sig;
  out.v = he.vectors[best];
  out.u.assign(n, Cplx());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out.u[i] = out.u[i] + m[i][j] * out.v[j];
    out.u[i] = out.u[i] / Cplx(sig);
  }

  // Deterministic phase: first non-negligible component of u made real > 0.
  const Real comp_tol = pow10(-static_cast<long>(digits) / 2);
  for (size_t i = 0; i < n; ++i) {
    const Real ai = abs(out.u[i]);
    if (ai <= comp_tol) continue;
    const Cplx phase = out.u[i] / Cplx(ai);
    const Cplx ph_conj = conj(phase);
    for (size_t k = 0; k < n; ++k) {
      out.u[k] = out.u[k] * ph_conj;
      out.v[k] = out.v[k] * ph_conj;
    }
    break;
  }

  // E = u (u^H M), B = A + E.
  std::vector<Cplx> w(n, Cplx());
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) w[j] = w[j] + conj(out.u[k]) * m[k][j];
  out.e.assign(n, std::vector<Cplx>(n, Cplx()));
  out.b.assign(n, std::vector<Cplx>(n, Cplx()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      out.e[i][j] = out.u[i] * w[j];
      out.b[i][j] = out.e[i][j] + Cplx(to_real(a.at(i, j)), Real(0));
    }
  return out;
}

namespace {

Real bivar_mag(const BivarPoly& p, const Rat& av, const Rat& bbv) {
  const Real aa = abs(to_real(av));
  const Real ab = abs(to_real(bbv));
  Real m(0);
  for (const auto& [mono, c] : p.terms())
    m += abs(to_real(c)) * real_pow(aa, mono.da) * real_pow(ab, mono.db);
  return m;
}

// Decimal outward rounding to denominator 10^r.
Rat floor_dec(const Rat& x, unsigned r) {
  const Int p = pow_int(Int(10), r);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), Int(num(x) * p).get_mpz_t(), den(x).get_mpz_t());
  return Rat(q, p);
}

Rat ceil_dec(const Rat& x, unsigned r) {
  const Int p = pow_int(Int(10), r);
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), Int(num(x) * p).get_mpz_t(), den(x).get_mpz_t());
  return Rat(q, p);
}

}  // namespace

ComplexReport complex_distance(const Matrix& a, unsigned digits) {
  const size_t n = a.n();
  if (n < 2) raise(Errc::DEGREE_TOO_LOW, "matrix order must be at least 2");
  if (digits < 10) digits = 10;
  set_thread_precision(digits);

  ComplexReport rep;
  rep.n = n;
  rep.digits = digits;
  rep.real_branch = wilkinson_distance(a, digits);

  if (rep.real_branch.status == DistanceStatus::INPUT_DEFECTIVE) {
    rep.has_d = true;
    rep.d = 0;
    rep.winner = ComplexReport::Winner::REAL_BRANCH;
    rep.notes.push_back("input already has a repeated eigenvalue; the distance is 0 "
                        "and the non-real search is skipped");
    return rep;
  }

  XiPoly xi;
  bool have_equation = false;
  try {
    xi = build_xi(a);
    rep.equation = complex_equation(a);
    have_equation = true;
  } catch (const Error& e) {
    rep.notes.push_back(std::string("non-real branch unavailable (") +
                        errc_name(e.code()) + ": " + e.what() + ")");
  }

  if (have_equation && rep.equation.f_tilde.degree() >= 1) {
    const unsigned rdig = n <= 4 ? digits : 8;
    const XiPoly xia = d_a(xi);
    const XiPoly xib = d_bb2(xi);
    bool accepted = false;
    for (const IsolatedRoot& raw : isolate_real_roots(rep.equation.f_tilde)) {
      ComplexZeroRecord zr;
      const IsolatedRoot r = refine(raw, digits);
      zr.lo = r.lo;
      zr.hi = r.hi;
      zr.exact = r.exact;
      zr.multiplicity = r.multiplicity;
      zr.value = to_real(r.mid());

      if (r.hi <= 0 || accepted) {
        if (r.hi <= 0) zr.note = "non-positive zero (outside the admissible range)";
        rep.inventory.push_back(std::move(zr));
        continue;
      }

      const Rat zlo = r.exact ? r.lo : floor_dec(r.lo, rdig);
      const Rat zhi = r.exact ? r.hi : ceil_dec(r.hi, rdig);
      try {
        const auto [alo, bblo] = recover_ab(xi, zlo);
        const auto [ahi, bbhi] = r.exact ? std::pair<Rat, Rat>(alo, bblo)
                                         : recover_ab(xi, zhi);
        PrecisionScope scope(2 * digits + 20);
        const Real agree_tol = pow10(-static_cast<long>(rdig) / 2);
        if (abs(to_real(alo - ahi)) > agree_tol * (Real(1) + abs(to_real(alo))) ||
            abs(to_real(bblo - bbhi)) > agree_tol * (Real(1) + abs(to_real(bblo)))) {
          zr.fate = ComplexZeroRecord::Fate::REJECTED_DEGENERATE;
          zr.note = "endpoint recoveries disagree";
          rep.inventory.push_back(std::move(zr));
          continue;
        }
        bool residual_ok = true;
        for (const XiPoly* deriv : {&xia, &xib}) {
          for (const Rat& zp : {zlo, zhi}) {
            const BivarPoly slice = deriv->at_z(zp);
            Rat acc(0);
            for (const auto& [mono, c] : slice.terms())
              acc += c * pow_rat(alo, mono.da) * pow_rat(bblo, mono.db);
            if (abs(to_real(acc)) > agree_tol * (bivar_mag(slice, alo, bblo) + 1)) {
              residual_ok = false;
              break;
            }
          }
          if (!residual_ok) break;
        }
        if (!residual_ok) {
          zr.fate = ComplexZeroRecord::Fate::REJECTED_DEGENERATE;
          zr.note = "critical-system residual too large at the recovery points";
          rep.inventory.push_back(std::move(zr));
          continue;
        }

        zr.fate = ComplexZeroRecord::Fate::ACCEPTED;
        const Rat am = (alo + ahi) / 2, bbm = (bblo + bbhi) / 2;
        zr.note = "critical point a = " + sci_str(to_real(am), 12) +
                  ", bb = " + sci_str(to_real(bbm), 12);
        accepted = true;
        rep.has_complex_candidate = true;
        rep.zt_lo = r.lo;
        rep.zt_hi = r.hi;
        rep.z_tilde = to_real(r.mid());
        rep.a0 = to_real(am);
        rep.b0 = sqrt(to_real(bbm));
        rep.d_complex = sqrt(rep.z_tilde);
        rep.notes.push_back("the conjugate critical point (a0, -b0) is the paired solution");
      } catch (const Error& e) {
        if (e.code() == Errc::NEGATIVE_B) {
          zr.fate = ComplexZeroRecord::Fate::REJECTED_NONPOSITIVE_B;
        } else {
          zr.fate = ComplexZeroRecord::Fate::REJECTED_DEGENERATE;
        }
        zr.note = e.what();
      }
      rep.inventory.push_back(std::move(zr));
    }
  } else if (have_equation) {
    rep.notes.push_back("no non-real critical points (the reduced eliminant is constant)");
  }

  // Perturbation at the complex candidate.
  if (rep.has_complex_candidate) {
    try {
      PerturbationC p =
          complex_min_perturbation(a, Cplx(rep.a0, rep.b0), rep.z_tilde);
      rep.has_perturbation = true;
      rep.e0 = std::move(p.e);
      rep.b0_matrix = std::move(p.b);
      rep.sigma = p.sigma;
    } catch (const Error& e) {
      rep.perturbation_note = std::string(errc_name(e.code())) + ": " + e.what() +
                              " (perturbation withheld)";
    }
  }

  // Branch competition.
  const bool real_ok = rep.real_branch.has_candidate;
  if (real_ok && rep.has_complex_candidate) {
    rep.has_d = true;
    if (rep.d_complex < rep.real_branch.d) {
      rep.winner = ComplexReport::Winner::COMPLEX_BRANCH;
      rep.d = rep.d_complex;
    } else {
      rep.winner = ComplexReport::Winner::REAL_BRANCH;
      rep.d = rep.real_branch.d;
      if (!(rep.real_branch.d < rep.d_complex))
        rep.notes.push_back("branches tie; the real branch is reported");
    }
  } else if (rep.has_complex_candidate) {
    rep.has_d = true;
    rep.winner = ComplexReport::Winner::COMPLEX_BRANCH;
    rep.d = rep.d_complex;
  } else if (real_ok) {
    rep.has_d = true;
    rep.winner = ComplexReport::Winner::REAL_BRANCH;
    rep.d = rep.real_branch.d;
  } else {
    rep.notes.push_back("no candidate on either branch");
  }
  return rep;
}

}  // namespace wdist
