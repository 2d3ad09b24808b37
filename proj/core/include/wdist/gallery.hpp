#pragma once

#include <string>
#include <vector>

#include "wdist/ratmatrix.hpp"
#include "wdist/real.hpp"

namespace wdist {

// Named test-matrix families with exact rational entries.
enum class Family { FRANK, KAHAN, GRCAR, EPSILON_FAMILY, EXPLICIT };
const char* family_name(Family f);

struct GallerySpec {
  Family family = Family::EXPLICIT;
  size_t n = 0;

  // KAHAN: upper triangular with diagonal s^0..s^(n-1) and -c*s^(i-1) to the
  // right; requires s^2 + c^2 == 1 exactly unless `approximate` is declared.
  Rat s, c;
  bool approximate = false;
  Rat approx_error;        // s^2 + c^2 - 1, recorded for approximate specs
  bool auto_series = false;  // s,c rationalized from s^(n-1) = 1/10
  unsigned auto_digits = 0;  // decimals kept by the rationalization

  // EPSILON_FAMILY (n == 4 only): the parametric counterexample matrix.
  Rat epsilon;

  std::string label;
};

// Grammar: "frank:N", "grcar:N", "kahan:N:s:c[:approx]",
// "kahan:N:auto[:digits]", "epsilon:4:eps". Rationals accept "p/q" and
// finite decimals. Errors: INVALID_PARAMS.
GallerySpec parse_gallery(const std::string& text);

// The exact matrix for a spec. Errors: INVALID_PARAMS (EXPLICIT specs carry
// no generator; Kahan off the unit circle without the approximate flag;
// epsilon family with n != 4; n == 0).
Matrix generate(const GallerySpec& spec);

// Kahan parameters for the s^(n-1) = 1/10 series: s is irrational, so both
// parameters are rounded (half away from zero) to `digits` decimals; the
// resulting spec is marked approximate with its circle defect recorded.
GallerySpec kahan_auto_spec(size_t n, unsigned digits = 20);

// Published reference data for a spec, as printed: approximate decimals carry
// only their printed digits. Errors: NOT_PUBLISHED.
struct ReferenceValues {
  bool has_d = false;
  Real d;  // distance over real perturbations
  bool has_d_complex = false;
  Real d_complex;
  bool has_real_zero_count = false;
  size_t real_zero_count = 0;
  bool has_equation_ints = false;
  std::vector<Int> equation_ints;  // exact integer coefficients, high -> low
  bool has_z1 = false;
  Real z1;  // least positive zero of the real-branch equation
  bool has_z1_tilde = false;
  Real z1_tilde;  // least zero of the complex-branch eliminant
  int epsilon_branch = 0;  // 1..3: which piece of the distance formula applies
  std::string note;
};
ReferenceValues reference_values(const GallerySpec& spec);

// Piecewise closed-form distance for the epsilon family (rank-2 piece
// included) and the value the rank-one search can attain; used by the
// reference table and the acceptance checks.
Real epsilon_family_distance(const Rat& eps, unsigned digits);
Real epsilon_family_rank1_distance(const Rat& eps, unsigned digits);
// Branch points: eps_c (rank-2/rank-1 crossover) and eps_2 (double-zero piece
// gives way to the constant piece).
Real epsilon_family_eps_c(unsigned digits);
Real epsilon_family_eps_2(unsigned digits);

}  // namespace wdist
