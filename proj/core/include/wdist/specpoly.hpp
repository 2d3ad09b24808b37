#pragma once

#include <optional>
#include <vector>

#include "wdist/bipoly.hpp"
#include "wdist/ratmatrix.hpp"

namespace wdist {

// Phi(L, z) = det[(L*I - A)(L*I - A)^T - z*I]: monic of degree 2n in L,
// degree n in z; Phi(L, 0) is the squared characteristic polynomial.
struct PhiPoly {
  size_t n = 0;
  BiPoly phi;
};

PhiPoly build_phi(const Matrix& a);

// Power sums s_0..s_count of the 2n roots of Phi(., z) as polynomials in z.
// Reference route: traces of powers of [[A^T, sqrt(z) I],[sqrt(z) I, A]],
// carried as even/odd parts in sqrt(z); the odd parts must cancel.
std::vector<UniPoly> newton_sums(const Matrix& a, size_t count);
// Same values from the coefficients of a monic Phi (classical recursion).
std::vector<UniPoly> newton_sums_from_phi(const BiPoly& phi, size_t count);

// Hankel minors S_1..S_count of the Newton-sum matrix, as polynomials in z
// (S_k = det [s_{i+j}]_{i,j=0..k-1}).
std::vector<UniPoly> hankel_minors(const Matrix& a, size_t count);

struct DistanceEquation {
  enum class Mode { NORMAL, SQRT_PHI };
  UniPoly f;  // F(z); real candidate distances are square roots of its zeros
  Mode mode = Mode::NORMAL;
  // True iff deg F == n(n-1) and lc(F) == 4^n * disc(charpoly(A + A^T))^2.
  bool leading_check = false;
};

// F(z) = disc_L(Phi)/z^n. Falls back to the square-free-part construction
// when the discriminant vanishes identically (returns Mode::SQRT_PHI).
// Errors: DEGREE_TOO_LOW (n < 2), INPUT_DEFECTIVE (disc(f_A) == 0),
// IDENTICALLY_ZERO (both routes degenerate).
DistanceEquation distance_equation(const Matrix& a);

// The fallback alone: G = radical of Phi in L, F = disc_L(G)/z^e with the
// exact trailing power stripped. Errors: NOT_A_SQUARE when Phi has no
// repeated factor (nothing to deflate).
DistanceEquation sqrt_phi_fallback(const Matrix& a);

enum class MatrixForm { GENERIC, SYMMETRIC, SKEW_PLUS_SCALAR, ORTHOGONAL };

struct SpecialFormInfo {
  MatrixForm form = MatrixForm::GENERIC;
  // Closed-form Phi via a resultant identity (absent for GENERIC).
  std::optional<BiPoly> closed_phi;
  Rat scalar_shift;  // c with A - cI skew, when form == SKEW_PLUS_SCALAR
};

// Detection priority: SYMMETRIC, then SKEW_PLUS_SCALAR, then ORTHOGONAL.
SpecialFormInfo special_form(const Matrix& a);

}  // namespace wdist
