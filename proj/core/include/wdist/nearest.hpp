#pragma once

#include <string>
#include <vector>

#include "wdist/linalg.hpp"
#include "wdist/ratmatrix.hpp"
#include "wdist/roots.hpp"
#include "wdist/specpoly.hpp"

namespace wdist {

// Outcome classification for the real-perturbation distance search.
//  CERTIFIED_RANK1_MINIMUM  accepted zero is simple, every smaller positive
//                           zero was walked without any rejection, and F(z)
//                           is square-free: the rank-one construction is a
//                           certified global minimizer.
//  CANDIDATE_ONLY_MULTIPLE_ZERO   a multiple zero of F(z) was involved (the
//                           accepted one or a rejected smaller one) or F is
//                           not square-free; the candidate may still be the
//                           minimum but the simple-zero certificate fails.
//  CANDIDATE_ONLY_COMPLEX_LAMBDA  a smaller simple zero was rejected because
//                           its coincident eigenvalue pair is non-real (or
//                           its recovery failed); same caveat.
//  CANDIDATE_ONLY           every positive zero was rejected; d is the
//                           smallest-zero bound only, no eigenvalue attached.
//  INPUT_DEFECTIVE          the matrix already has a multiple eigenvalue;
//                           the distance is zero.
enum class DistanceStatus {
  CERTIFIED_RANK1_MINIMUM,
  CANDIDATE_ONLY,
  CANDIDATE_ONLY_COMPLEX_LAMBDA,
  CANDIDATE_ONLY_MULTIPLE_ZERO,
  INPUT_DEFECTIVE,
};
const char* distance_status_name(DistanceStatus s);

// One real zero of F(z) as met on the ascending walk.
struct ZeroRecord {
  enum class Fate {
    ACCEPTED,                  // admits a real coincident eigenvalue
    REJECTED_COMPLEX_LAMBDA,   // coincident pair is non-real
    REJECTED_MISMATCH,         // recovery routes disagreed / degenerated
    NOT_EXAMINED,              // beyond the accepted zero
  };
  Rat lo, hi;        // certified enclosure (lo == hi when exact)
  bool exact = false;
  int multiplicity = 1;
  Real value;        // refined midpoint at working precision
  Fate fate = Fate::NOT_EXAMINED;
  std::string note;
};
const char* zero_fate_name(ZeroRecord::Fate f);

struct Perturbation {
  RealMat e;            // minimal perturbation, rank one, |e|_F = sigma
  RealMat b;            // a + e, with a coincident eigenvalue pair
  Real sigma;           // matched singular value of lambda*I - A
  std::vector<Real> u;  // left/right singular vectors (sign-normalized)
  std::vector<Real> v;
};

struct DistanceReport {
  size_t n = 0;
  unsigned digits = 0;
  DistanceStatus status = DistanceStatus::CANDIDATE_ONLY;
  DistanceEquation equation;
  bool discriminant_guard = false;  // F(z) square-free
  std::vector<ZeroRecord> inventory;

  bool has_candidate = false;  // z_lo/z_hi/z_star/d valid
  Rat z_lo, z_hi;
  Real z_star;
  Real d;

  bool has_lambda = false;  // lambda_star valid
  Real lambda_star;

  bool has_perturbation = false;  // e_star/b_star/sigma valid
  RealMat e_star;
  RealMat b_star;
  Real sigma;
  std::string perturbation_note;  // reason when withheld

  std::vector<std::string> notes;
};

// Distance from A to the nearest real matrix with a coincident eigenvalue
// pair: builds F(z), walks its positive zeros in ascending order, accepts the
// first one whose coincident eigenvalue is real, and (optionally) constructs
// the rank-one minimal perturbation. Never returns without a status; errors
// are only raised for malformed input (DEGREE_TOO_LOW) or internal failures.
DistanceReport wilkinson_distance(const Matrix& a, unsigned digits,
                                  bool want_perturbation = true);

// The coincident eigenvalue attached to a zero z0 of F(z), by the rational
// Hankel-determinant formula (the unique double root of Phi(., z0)).
// Errors: MULTIPLE_ZERO_Z (z0 is a multiple zero of F, where the formula's
// hypothesis fails), COMPLEX_LAMBDA (the coincident pair is non-real),
// DEGREE_TOO_LOW / INPUT_DEFECTIVE from the equation build.
Real double_zero_lambda(const Matrix& a, const Rat& z0, unsigned digits);

// Rank-one perturbation at an accepted pair (lambda, z = sigma^2): matches z
// against the Gram spectrum of lambda*I - A, takes the corresponding singular
// pair (u, v), and returns E = u u^T (lambda I - A), B = A + E.
// Errors: SINGULAR_VALUE_MISMATCH (no Gram eigenvalue matches z),
// CLUSTERED_SINGULAR_VALUES (the match is ambiguous: two Gram eigenvalues
// within half working precision of z).
Perturbation min_perturbation(const Matrix& a, const Real& lambda, const Real& z);

// Recomputation-based self-check of a finished report; never throws.
struct VerifyCheck {
  std::string name;
  Real value;  // measured defect
  Real tol;
  bool pass = false;
};
struct VerifyReport {
  bool pass = true;
  bool skipped = false;  // nothing to verify (no candidate/perturbation)
  std::vector<VerifyCheck> checks;
};
VerifyReport verify_report(const Matrix& a, const DistanceReport& rep);

}  // namespace wdist
