#include "wdist/nearest.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "wdist/errors.hpp"
#include "wdist/intdet.hpp"

namespace wdist {

namespace {

// Restores the thread precision on scope exit.
struct PrecisionScope {
  unsigned saved;
  explicit PrecisionScope(unsigned digits) : saved(current_precision_digits()) {
    set_thread_precision(digits);
  }
  ~PrecisionScope() { set_thread_precision(saved); }
};

std::string cplx_str(const Cplx& c, unsigned digits) {
  std::ostringstream os;
  os << sci_str(c.re, digits);
  if (!(c.im == 0)) os << (c.im < 0 ? " - " : " + ") << sci_str(abs(c.im), digits) << "*i";
  return os.str();
}

Rat rat_pow10_inv(unsigned digits) { return Rat(1, pow_int(Int(10), digits)); }

// ---------------------------------------------------------------------------
// Eigenvalue clustering at a rational sample point z: the coincident pair of
// Phi(., z) found as the closest pair of its numerically computed roots. The
// mean of a splitting pair is first-order insensitive to the sample offset
// (a real pair splits along one axis, symmetrically), so classifying the mean
// as real/non-real is robust on either side of the exact zero.
// ---------------------------------------------------------------------------

struct ClusterScan {
  bool tight = false;        // closest pair is tiny next to the root radius
  bool residual_ok = false;  // chosen mean nearly annihilates the slice
  bool real_mean = false;    // chosen cluster mean is numerically real
  Real lambda;               // Re(mean) of the chosen cluster
  Cplx mean;                 // mean of the chosen cluster
  std::vector<Cplx> cluster_means;  // every coincident pair found (sorted)
};

ClusterScan cluster_scan(const BiPoly& phi, const Rat& z, unsigned digits) {
  PrecisionScope scope(2 * digits + 20);
  const UniPoly slice = eval_z(phi, z);
  const std::vector<Cplx> roots = roots_dk(slice);
  ensure(roots.size() >= 2, "cluster scan needs at least two eigenvalues");

  Real radius(1);
  for (const auto& r : roots) radius = std::max(radius, abs(r));

  struct PairRec {
    size_t i, j;
    Real gap;
  };
  std::vector<PairRec> pairs;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      pairs.push_back({i, j, abs(roots[i] - roots[j])});
  std::sort(pairs.begin(), pairs.end(),
            [](const PairRec& a, const PairRec& b) { return a.gap < b.gap; });

  ClusterScan out;
  const Real best_gap = pairs.front().gap;
  out.tight = best_gap <= pow10(-static_cast<long>(digits) / 3) * radius;

  // Disjoint pairs no wider than a small multiple of the best one.
  const Real keep =
      std::max(best_gap * 16, pow10(-static_cast<long>(digits) / 3) * radius);
  std::vector<bool> used(roots.size(), false);
  for (const auto& p : pairs) {
    if (p.gap > keep) break;
    if (used[p.i] || used[p.j]) continue;
    used[p.i] = used[p.j] = true;
    Cplx mean = roots[p.i] + roots[p.j];
    mean.re /= 2;
    mean.im /= 2;
    out.cluster_means.push_back(mean);
  }
  std::sort(out.cluster_means.begin(), out.cluster_means.end(),
            [](const Cplx& a, const Cplx& b) {
              if (a.re != b.re) return a.re < b.re;
              return a.im < b.im;
            });

  // Choose the smallest real mean if any cluster is real, else the first.
  const Real real_tol = pow10(-static_cast<long>(digits) / 4);
  const Cplx* chosen = nullptr;
  for (const auto& m : out.cluster_means) {
    if (abs(m.im) <= real_tol * (Real(1) + abs(m))) {
      chosen = &m;
      break;  // means are sorted by real part
    }
  }
  if (chosen != nullptr) {
    out.real_mean = true;
  } else {
    chosen = &out.cluster_means.front();
  }
  out.mean = *chosen;
  out.lambda = chosen->re;

  // Residual of the chosen mean against a coefficient-magnitude bound.
  Real mag(0);
  Real xp(1);
  const Real ax = std::max(Real(1), abs(*chosen));
  for (const auto& c : slice.coeffs_low()) {
    mag += abs(to_real(c)) * xp;
    xp *= ax;
  }
  out.residual_ok =
      abs(eval_cplx(slice, *chosen)) <= pow10(-static_cast<long>(digits) / 4) * mag;
  return out;
}

// Sample points inside (or right next to) a refined enclosure, for retries.
std::vector<Rat> sample_points(const IsolatedRoot& r, unsigned digits) {
  std::vector<Rat> pts;
  if (r.exact) {
    const Rat e = (Rat(1) + abs(r.lo)) * rat_pow10_inv(digits);
    pts = {r.lo, r.lo + e, r.lo - e, r.lo + 3 * e};
  } else {
    const Rat w = r.width();
    pts = {r.mid(), r.lo + w / 4, r.lo + 3 * w / 4, r.lo + w / 3};
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Rational recovery of the coincident root: for F(x) monic of degree N with a
// unique double zero, that zero equals s_1 - Dtilde/S_{N-1}, where S_{N-1} is
// the (N-1)-st leading principal minor of the Hankel matrix of power sums and
// Dtilde deletes the last row and second-to-last column of the full matrix.
// Evaluated at an exact rational z; empty when S_{N-1}(z) vanishes.
// ---------------------------------------------------------------------------

std::optional<Rat> coincident_root_formula(const std::vector<UniPoly>& sums,
                                           size_t bign, const Rat& z) {
  ensure(bign >= 2 && sums.size() >= 2 * bign - 1, "power sum table too short");
  std::vector<Rat> s(2 * bign - 1);
  for (size_t j = 0; j < s.size(); ++j) s[j] = eval(sums[j], z);

  RatMat sub(bign - 1, std::vector<Rat>(bign - 1));
  for (size_t i = 0; i + 1 < bign; ++i)
    for (size_t j = 0; j + 1 < bign; ++j) sub[i][j] = s[i + j];
  const Rat den = det_rat(sub);
  if (den == 0) return std::nullopt;

  RatMat dm(bign - 1, std::vector<Rat>(bign - 1));
  for (size_t i = 0; i + 1 < bign; ++i)
    for (size_t j = 0; j + 1 < bign; ++j) {
      const size_t col = (j + 2 < bign) ? j : bign - 1;
      dm[i][j] = s[i + col];
    }
  return s[1] - det_rat(dm) / den;
}

std::optional<Rat> formula_with_retry(const std::vector<UniPoly>& sums, size_t bign,
                                      const Rat& z0, const Rat& step) {
  static const int kShifts[] = {0, 1, -1, 2};
  for (int k : kShifts) {
    if (auto v = coincident_root_formula(sums, bign, z0 + k * step)) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Admissibility of one zero on the walk.
// ---------------------------------------------------------------------------

struct WalkOutcome {
  ZeroRecord::Fate fate = ZeroRecord::Fate::REJECTED_MISMATCH;
  Real lambda;
  std::string note;
};

std::string cluster_list_note(const ClusterScan& scan, unsigned digits) {
  std::ostringstream os;
  os << "coincident pairs at ";
  for (size_t i = 0; i < scan.cluster_means.size(); ++i) {
    if (i) os << ", ";
    os << cplx_str(scan.cluster_means[i], std::min(digits, 12u));
  }
  return os.str();
}

WalkOutcome examine_zero(const BiPoly& phi, const std::vector<UniPoly>& sums,
                         size_t n, const IsolatedRoot& r, unsigned digits) {
  WalkOutcome out;

  // Eigenvalue clustering at a sample point, retrying on poor resolution.
  std::optional<ClusterScan> scan;
  for (const Rat& z : sample_points(r, digits)) {
    ClusterScan s = cluster_scan(phi, z, digits);
    if (s.tight && s.residual_ok) {
      scan = std::move(s);
      break;
    }
  }
  if (!scan) {
    out.fate = ZeroRecord::Fate::REJECTED_MISMATCH;
    out.note = "no coincident eigenvalue pair resolved at the sample points";
    return out;
  }
  if (!scan->real_mean) {
    out.fate = ZeroRecord::Fate::REJECTED_COMPLEX_LAMBDA;
    out.note = "coincident eigenvalue pair is non-real: " +
               cplx_str(scan->mean, std::min(digits, 12u));
    return out;
  }

  if (r.multiplicity > 1) {
    // The unique-double-zero hypothesis of the rational formula fails here;
    // accept on the clustering evidence alone.
    out.fate = ZeroRecord::Fate::ACCEPTED;
    out.lambda = scan->lambda;
    out.note = "rational-formula route unavailable at multiple zero";
    if (scan->cluster_means.size() > 1)
      out.note += "; smallest real mean taken; " + cluster_list_note(*scan, digits);
    return out;
  }

  // Simple zero: rational formula at both enclosure endpoints, cross-checked
  // against the clustering value to half working precision.
  const Rat step =
      r.exact ? Rat((Rat(1) + abs(r.lo)) * rat_pow10_inv(digits)) : Rat(r.width() / 7);
  const auto lam_lo = formula_with_retry(sums, 2 * n, r.lo, step);
  const auto lam_hi = r.exact ? lam_lo : formula_with_retry(sums, 2 * n, r.hi, -step);
  if (!lam_lo || !lam_hi) {
    out.fate = ZeroRecord::Fate::REJECTED_MISMATCH;
    out.note = "coincidence subminor vanished at every sample point";
    return out;
  }

  PrecisionScope scope(2 * digits + 20);
  const Rat lam_mid = (*lam_lo + *lam_hi) / 2;
  const Real lam_scale = Real(1) + abs(to_real(lam_mid));
  const Real half_tol = pow10(-static_cast<long>(digits) / 2) * lam_scale;
  if (abs(to_real(*lam_lo - *lam_hi)) > half_tol) {
    out.fate = ZeroRecord::Fate::REJECTED_MISMATCH;
    out.note = "endpoint formula values disagree beyond half working precision";
    return out;
  }
  if (abs(to_real(lam_mid) - scan->lambda) > half_tol) {
    out.fate = ZeroRecord::Fate::REJECTED_MISMATCH;
    out.note = "formula and clustering eigenvalues disagree beyond half working precision";
    return out;
  }

  out.fate = ZeroRecord::Fate::ACCEPTED;
  out.lambda = to_real(lam_mid);
  out.note = r.exact ? "exact coincident eigenvalue " + rat_str(lam_mid)
                     : "formula endpoints and clustering agree";
  return out;
}

// Real-matrix helpers for the verification pass.

RealMat real_mul(const RealMat& x, const RealMat& y) {
  const size_t n = x.size();
  RealMat out(n, std::vector<Real>(n, Real(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

Real real_trace(const RealMat& x) {
  Real t(0);
  for (size_t i = 0; i < x.size(); ++i) t += x[i][i];
  return t;
}

// Monic characteristic polynomial of a floating matrix (low -> high).
std::vector<Real> charpoly_real(const RealMat& x) {
  const size_t n = x.size();
  std::vector<Real> c(n + 1, Real(0));
  c[n] = 1;
  RealMat am(n, std::vector<Real>(n, Real(0)));
  for (size_t k = 1; k <= n; ++k) {
    RealMat m = am;
    for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    am = real_mul(x, m);
    c[n - k] = -real_trace(am) / Real(static_cast<long>(k));
  }
  return c;
}

void add_check(VerifyReport& rep, const std::string& name, const Real& value,
               const Real& tol) {
  VerifyCheck c;
  c.name = name;
  c.value = value;
  c.tol = tol;
  c.pass = value <= tol;
  rep.pass = rep.pass && c.pass;
  rep.checks.push_back(std::move(c));
}

}  // namespace

const char* distance_status_name(DistanceStatus s) {
  switch (s) {
    case DistanceStatus::CERTIFIED_RANK1_MINIMUM: return "CERTIFIED_RANK1_MINIMUM";
    case DistanceStatus::CANDIDATE_ONLY: return "CANDIDATE_ONLY";
    case DistanceStatus::CANDIDATE_ONLY_COMPLEX_LAMBDA: return "CANDIDATE_ONLY_COMPLEX_LAMBDA";
    case DistanceStatus::CANDIDATE_ONLY_MULTIPLE_ZERO: return "CANDIDATE_ONLY_MULTIPLE_ZERO";
    case DistanceStatus::INPUT_DEFECTIVE: return "INPUT_DEFECTIVE";
  }
  return "?";
}

const char* zero_fate_name(ZeroRecord::Fate f) {
  switch (f) {
    case ZeroRecord::Fate::ACCEPTED: return "accepted";
    case ZeroRecord::Fate::REJECTED_COMPLEX_LAMBDA: return "rejected_complex_lambda";
    case ZeroRecord::Fate::REJECTED_MISMATCH: return "rejected_recovery_mismatch";
    case ZeroRecord::Fate::NOT_EXAMINED: return "not_examined";
  }
  return "?";
}

DistanceReport wilkinson_distance(const Matrix& a, unsigned digits,
                                  bool want_perturbation) {
  const size_t n = a.n();
  if (n < 2) raise(Errc::DEGREE_TOO_LOW, "matrix order must be at least 2");
  if (digits < 10) digits = 10;
  set_thread_precision(digits);

  DistanceReport rep;
  rep.n = n;
  rep.digits = digits;

  // A matrix that already has a coincident eigenvalue pair is at distance 0.
  const UniPoly fa = charpoly(a);
  if (discriminant(fa) == 0) {
    rep.status = DistanceStatus::INPUT_DEFECTIVE;
    rep.has_candidate = true;
    rep.z_lo = rep.z_hi = 0;
    rep.z_star = 0;
    rep.d = 0;
    rep.has_perturbation = true;
    rep.e_star = RealMat(n, std::vector<Real>(n, Real(0)));
    rep.b_star = to_real_mat(a);
    rep.sigma = 0;
    rep.notes.push_back("input already has a repeated eigenvalue; zero perturbation");
    const UniPoly rep_factor = gcd(fa, derivative(fa));
    bool real_found = false;
    if (rep_factor.degree() >= 1) {
      auto reps = isolate_real_roots(rep_factor);
      if (!reps.empty()) {
        const IsolatedRoot rr = refine(reps.front(), digits);
        rep.has_lambda = true;
        rep.lambda_star = to_real(rr.mid());
        real_found = true;
        if (reps.size() > 1)
          rep.notes.push_back("several repeated eigenvalues; smallest real one reported");
      }
    }
    if (!real_found) rep.notes.push_back("the repeated eigenvalue pair is non-real");
    return rep;
  }

  rep.equation = distance_equation(a);
  const UniPoly& f = rep.equation.f;
  rep.discriminant_guard = gcd(f, derivative(f)).degree() == 0;

  const PhiPoly phi = build_phi(a);
  const std::vector<UniPoly> sums = newton_sums_from_phi(phi.phi, 4 * n - 2);

  // Ascending certified real zeros.
  std::vector<IsolatedRoot> roots = isolate_real_roots(f);
  bool accepted = false;
  bool any_rejection_before = false;
  size_t accepted_idx = 0;
  for (const IsolatedRoot& raw : roots) {
    ZeroRecord zr;
    const IsolatedRoot r = refine(raw, digits);
    zr.lo = r.lo;
    zr.hi = r.hi;
    zr.exact = r.exact;
    zr.multiplicity = r.multiplicity;
    zr.value = to_real(r.mid());

    if (r.hi <= 0) {
      zr.fate = ZeroRecord::Fate::NOT_EXAMINED;
      zr.note = "non-positive zero (outside the admissible range)";
      rep.notes.push_back("unexpected non-positive zero of F(z) at " + rat_str(r.mid()));
      rep.inventory.push_back(std::move(zr));
      continue;
    }
    if (accepted) {
      zr.fate = ZeroRecord::Fate::NOT_EXAMINED;
      rep.inventory.push_back(std::move(zr));
      continue;
    }

    WalkOutcome wo;
    try {
      wo = examine_zero(phi.phi, sums, n, r, digits);
    } catch (const Error& e) {
      wo.fate = ZeroRecord::Fate::REJECTED_MISMATCH;
      wo.note = std::string("examination failed: ") + e.what();
    }
    zr.fate = wo.fate;
    zr.note = wo.note;
    if (wo.fate == ZeroRecord::Fate::ACCEPTED) {
      accepted = true;
      accepted_idx = rep.inventory.size();
      rep.has_candidate = true;
      rep.z_lo = r.lo;
      rep.z_hi = r.hi;
      rep.z_star = to_real(r.mid());
      rep.d = sqrt(rep.z_star);
      rep.has_lambda = true;
      rep.lambda_star = wo.lambda;
    } else {
      any_rejection_before = true;
    }
    rep.inventory.push_back(std::move(zr));
  }

  if (!accepted) {
    rep.status = DistanceStatus::CANDIDATE_ONLY;
    for (const ZeroRecord& zr : rep.inventory) {
      if (zr.hi <= 0) continue;
      rep.has_candidate = true;
      rep.z_lo = zr.lo;
      rep.z_hi = zr.hi;
      rep.z_star = zr.value;
      rep.d = sqrt(rep.z_star);
      break;
    }
    rep.notes.push_back(rep.has_candidate
                            ? "every zero was rejected: d is the smallest positive "
                              "zero of F(z), a lower bound with no eigenvalue attached"
                            : "no positive zero of F(z) found");
    return rep;
  }

  const bool accepted_simple = rep.inventory[accepted_idx].multiplicity == 1;
  if (rep.discriminant_guard && accepted_simple && !any_rejection_before) {
    rep.status = DistanceStatus::CERTIFIED_RANK1_MINIMUM;
  } else if (!rep.discriminant_guard) {
    rep.status = DistanceStatus::CANDIDATE_ONLY_MULTIPLE_ZERO;
  } else {
    rep.status = DistanceStatus::CANDIDATE_ONLY_COMPLEX_LAMBDA;
  }

  if (want_perturbation) {
    try {
      Perturbation p = min_perturbation(a, rep.lambda_star, rep.z_star);
      rep.has_perturbation = true;
      rep.e_star = std::move(p.e);
      rep.b_star = std::move(p.b);
      rep.sigma = p.sigma;
    } catch (const Error& e) {
      rep.has_perturbation = false;
      rep.perturbation_note =
          std::string(errc_name(e.code())) + ": " + e.what() + " (perturbation withheld)";
    }
  }
  return rep;
}

Real double_zero_lambda(const Matrix& a, const Rat& z0, unsigned digits) {
  const size_t n = a.n();
  if (n < 2) raise(Errc::DEGREE_TOO_LOW, "matrix order must be at least 2");
  if (digits < 10) digits = 10;
  PrecisionScope scope(digits);

  const DistanceEquation eq = distance_equation(a);

  // Refuse a z0 that designates a multiple zero of F: the unique-double-zero
  // hypothesis of the recovery formula fails there.
  const auto roots = isolate_real_roots(eq.f);
  const Rat near_tol = (Rat(1) + abs(z0)) * rat_pow10_inv(std::max(4u, digits / 4));
  for (const auto& r : roots) {
    const Rat dist = z0 < r.lo ? r.lo - z0 : (z0 > r.hi ? z0 - r.hi : Rat(0));
    if (dist <= near_tol && r.multiplicity > 1)
      raise(Errc::MULTIPLE_ZERO_Z,
            "z0 designates a multiple zero of F(z) (multiplicity " +
                std::to_string(r.multiplicity) + ")");
  }

  const PhiPoly phi = build_phi(a);
  const ClusterScan scan = cluster_scan(phi.phi, z0, digits);
  if (!scan.real_mean)
    raise(Errc::COMPLEX_LAMBDA, "coincident eigenvalue pair at z0 is non-real: " +
                                    cplx_str(scan.mean, std::min(digits, 12u)));

  const std::vector<UniPoly> sums = newton_sums_from_phi(phi.phi, 4 * n - 2);
  const Rat step = (Rat(1) + abs(z0)) * rat_pow10_inv(digits);
  const auto lam = formula_with_retry(sums, 2 * n, z0, step);
  if (!lam)
    raise(Errc::INTERNAL, "coincidence subminor vanished at every sample point");
  return to_real(*lam);
}

Perturbation min_perturbation(const Matrix& a, const Real& lambda, const Real& z) {
  const size_t n = a.n();
  ensure(n >= 2, "perturbation needs order >= 2");
  const unsigned digits = current_precision_digits();

  // M = lambda I - A and its Gram matrix.
  RealMat m(n, std::vector<Real>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? lambda : Real(0)) - to_real(a.at(i, j));
  RealMat g(n, std::vector<Real>(n, Real(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) g[i][j] += m[k][i] * m[k][j];

  const SymEigen se = jacobi_symmetric(g);
  Real scale = abs(z);
  for (const auto& v : se.values) scale = std::max(scale, abs(v));
  scale = std::max(scale, Real(1));

  size_t best = 0;
  Real best_d(-1), second_d(-1);
  for (size_t k = 0; k < n; ++k) {
    const Real dk = abs(se.values[k] - z);
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
  if (n >= 2 && second_d >= 0 && second_d < pow10(-static_cast<long>(digits) / 2) * scale)
    raise(Errc::CLUSTERED_SINGULAR_VALUES,
          "two squared singular values match z within half working precision");

  const Real mu = se.values[best];
  ensure(mu > 0, "matched singular value must be positive");
  const Real sig = sqrt(mu);

  Perturbation out;
  out.sigma = sig;
  out.v = se.vectors[best];
  out.u.assign(n, Real(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out.u[i] += m[i][j] * out.v[j];
    out.u[i] /= sig;
  }

  // Deterministic sign: first non-negligible component of u made positive.
  const Real comp_tol = pow10(-static_cast<long>(digits) / 2);
  for (size_t i = 0; i < n; ++i) {
    if (abs(out.u[i]) <= comp_tol) continue;
    if (out.u[i] < 0)
      for (size_t k = 0; k < n; ++k) {
        out.u[k] = -out.u[k];
        out.v[k] = -out.v[k];
      }
    break;
  }

  // E = u (M^T u)^T, B = A + E.
  std::vector<Real> w(n, Real(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) w[j] += m[k][j] * out.u[k];
  out.e.assign(n, std::vector<Real>(n, Real(0)));
  out.b = to_real_mat(a);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      out.e[i][j] = out.u[i] * w[j];
      out.b[i][j] += out.e[i][j];
    }
  return out;
}

VerifyReport verify_report(const Matrix& a, const DistanceReport& rep) {
  VerifyReport out;
  try {
    const unsigned digits = rep.digits ? rep.digits : 40;
    PrecisionScope scope(2 * digits + 20);
    const long d2 = static_cast<long>(digits) / 2;
    const long d4 = static_cast<long>(digits) / 4;

    if (rep.status == DistanceStatus::INPUT_DEFECTIVE) {
      const Rat disc = discriminant(charpoly(a));
      add_check(out, "input_discriminant_zero", abs(to_real(disc)), Real(0));
      return out;
    }
    if (!rep.has_candidate) {
      out.skipped = true;
      return out;
    }

    // The reported enclosure really brackets a zero of F(z).
    if (rep.z_lo == rep.z_hi) {
      add_check(out, "equation_zero_exact",
                eval(rep.equation.f, rep.z_lo) == 0 ? Real(0) : Real(1), Real(0));
    } else {
      const bool bracket = sign_at(rep.equation.f, rep.z_lo) *
                               sign_at(rep.equation.f, rep.z_hi) <
                           0;
      add_check(out, "equation_sign_change", bracket ? Real(0) : Real(1), Real(0));
      add_check(out, "enclosure_width", to_real(rep.z_hi - rep.z_lo),
                pow10(-static_cast<long>(digits)));
    }

    if (!rep.has_perturbation || !rep.has_lambda) {
      out.skipped = out.checks.empty();
      return out;
    }

    const size_t n = rep.e_star.size();

    // |E|_F against the reported distance.
    Real fro2(0);
    for (const auto& row : rep.e_star)
      for (const auto& x : row) fro2 += x * x;
    add_check(out, "perturbation_norm", abs(sqrt(fro2) - rep.d),
              pow10(-d2) * (Real(1) + rep.d));

    // Rank one: second singular value of E.
    RealMat g(n, std::vector<Real>(n, Real(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) g[i][j] += rep.e_star[k][i] * rep.e_star[k][j];
    const SymEigen se = jacobi_symmetric(g);
    const Real s1 = sqrt(std::max(se.values[n - 1], Real(0)));
    const Real s2 = n >= 2 ? sqrt(std::max(se.values[n - 2], Real(0))) : Real(0);
    add_check(out, "perturbation_rank_one", s2, pow10(-d2) * (Real(1) + s1));

    // B = A + E has a coincident pair at lambda*.
    const std::vector<Real> cb = charpoly_real(rep.b_star);
    std::vector<Cplx> cc;
    cc.reserve(cb.size());
    for (const auto& c : cb) cc.emplace_back(c, Real(0));
    std::vector<Cplx> ev = roots_dk(cc);
    std::sort(ev.begin(), ev.end(), [&](const Cplx& x, const Cplx& y) {
      return abs(x - Cplx(rep.lambda_star)) < abs(y - Cplx(rep.lambda_star));
    });
    ensure(ev.size() >= 2, "nearest matrix must have at least two eigenvalues");
    const Real lam_scale = Real(1) + abs(rep.lambda_star);
    const Real gap = abs(ev[0] - ev[1]);
    Cplx mean = ev[0] + ev[1];
    mean.re /= 2;
    mean.im /= 2;
    add_check(out, "eigenvalue_cluster_gap", gap, pow10(-d4) * lam_scale);
    add_check(out, "cluster_matches_lambda", abs(mean - Cplx(rep.lambda_star)),
              pow10(-d4) * lam_scale);

    // Numeric discriminant of f_B, normalized by the other root gaps.
    Real disc_abs(1), others(1);
    for (size_t i = 0; i < ev.size(); ++i)
      for (size_t j = i + 1; j < ev.size(); ++j) {
        const Real gij = abs(ev[i] - ev[j]);
        disc_abs *= gij * gij;
        if (!(i == 0 && j == 1)) others *= gij * gij;
      }
    add_check(out, "nearest_matrix_discriminant", disc_abs,
              pow10(-d4) * std::max(others, pow10(-static_cast<long>(digits))));
  } catch (const std::exception& e) {
    VerifyCheck c;
    c.name = std::string("verification_error: ") + e.what();
    c.value = 0;
    c.tol = 0;
    c.pass = false;
    out.pass = false;
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace wdist
