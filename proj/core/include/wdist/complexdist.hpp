#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdist/groebner.hpp"
#include "wdist/nearest.hpp"

namespace wdist {

// Trivariate polynomial Xi(a, bb, z): the Hermitian Gram-slice determinant
// Theta(a, b, z) = det[((a+bi)I - A)((a-bi)I - A^T) - zI], which is real and
// even in b, written in bb = b^2. Terms are indexed by the (a, bb) monomial
// (Mono.da = a-power, Mono.db = bb-power) with UniPoly coefficients in z.
struct XiPoly {
  size_t n = 0;
  std::map<Mono, UniPoly, MonoLess> terms;

  BivarPoly at_z(const Rat& z) const;  // specialize z, keep (a, bb)
  Rat eval(const Rat& a, const Rat& bb, const Rat& z) const;
  long degree_a() const;
  long degree_bb() const;
  long degree_z() const;
};

// Exact interpolation of integer Gaussian-arithmetic determinants on an
// integer grid; checks that every determinant is real and that the odd
// b-powers cancel before collapsing to bb.
XiPoly build_xi(const Matrix& a);

// Theta(a, b, z) through the collapse (b enters squared).
Rat eval_theta(const XiPoly& xi, const Rat& a, const Rat& b, const Rat& z);

XiPoly d_a(const XiPoly& xi);    // dXi/da
XiPoly d_bb2(const XiPoly& xi);  // 2 * dXi/dbb (the paired-root convention)

// Candidate squared distances over non-real coincident eigenvalues: zeros of
// f_tilde, the eliminant of {dXi/da = 0, 2 dXi/dbb = 0} with the structural
// z-power stripped, integer-primitive with positive lead.
struct ComplexDistanceEquation {
  size_t n = 0;
  UniPoly f_tilde;
  long stripped_power = 0;  // n(n-1)/2 trailing zeros divided out
  // Symbolic recovery data, materialized for n == 3 only: the transposed
  // multiplication matrix of Xi on the residue basis (rows/cols follow
  // `basis`), its determinant, and the cofactors along its last row.
  std::vector<Mono> basis;
  std::vector<std::vector<UniPoly>> bezout;
  std::vector<UniPoly> cofactor_row;
  UniPoly bezout_det;
};

// Errors: ELIMINATION_DEGENERATE when every interpolation node yields a
// quotient ring of the wrong dimension.
ComplexDistanceEquation complex_equation(const Matrix& a);

// Critical-point recovery at an exact rational z: the last-row cofactors of
// the transposed multiplication matrix give (1 : a : bb) on the residue
// basis. Errors: COFACTOR_SINGULAR (unit cofactor vanishes or the basis
// lacks the needed monomials), NEGATIVE_B (recovered bb <= 0),
// ELIMINATION_DEGENERATE (wrong quotient dimension at z).
std::pair<Rat, Rat> recover_ab(const XiPoly& xi, const Rat& z);

struct ComplexZeroRecord {
  enum class Fate {
    ACCEPTED,
    REJECTED_NONPOSITIVE_B,  // critical point collapses to a real eigenvalue
    REJECTED_DEGENERATE,     // recovery failed / residuals or endpoints disagree
    NOT_EXAMINED,
  };
  Rat lo, hi;
  bool exact = false;
  int multiplicity = 1;
  Real value;
  Fate fate = Fate::NOT_EXAMINED;
  std::string note;
};
const char* complex_fate_name(ComplexZeroRecord::Fate f);

struct PerturbationC {
  CplxMat e;  // rank one, |e|_F = sigma
  CplxMat b;  // a + e with the coincident pair at lambda
  Real sigma;
  std::vector<Cplx> u, v;
};
// Errors: SINGULAR_VALUE_MISMATCH, CLUSTERED_SINGULAR_VALUES (as in the real
// construction, with the Hermitian Gram matrix).
PerturbationC complex_min_perturbation(const Matrix& a, const Cplx& lambda,
                                       const Real& z);

struct ComplexReport {
  size_t n = 0;
  unsigned digits = 0;
  DistanceReport real_branch;
  ComplexDistanceEquation equation;
  std::vector<ComplexZeroRecord> inventory;

  bool has_complex_candidate = false;
  Rat zt_lo, zt_hi;
  Real z_tilde;
  Real a0, b0;  // coincident eigenvalue a0 + b0*i, b0 = +sqrt(bb) > 0

  bool has_perturbation = false;
  CplxMat e0;
  CplxMat b0_matrix;
  Real sigma;
  std::string perturbation_note;

  bool has_d = false;
  Real d_complex;  // sqrt(z_tilde), when a complex candidate exists
  Real d;          // min over the two branches
  enum class Winner { REAL_BRANCH, COMPLEX_BRANCH } winner = Winner::REAL_BRANCH;

  std::vector<std::string> notes;
};
const char* complex_winner_name(ComplexReport::Winner w);

// Distance over all (real or complex) coincident eigenvalues: runs the real
// branch, walks the zeros of f_tilde for admissible non-real critical points,
// and takes the smaller of the two candidates.
ComplexReport complex_distance(const Matrix& a, unsigned digits);

}  // namespace wdist
