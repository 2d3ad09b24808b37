#pragma once

#include <vector>

#include "wdist/ratmatrix.hpp"
#include "wdist/real.hpp"
#include "wdist/unipoly.hpp"

namespace wdist {

using RealMat = std::vector<std::vector<Real>>;
using CplxMat = std::vector<std::vector<Cplx>>;

RealMat to_real_mat(const Matrix& m);

// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.
// vectors[k] is the unit eigenvector for values[k]; ascending eigenvalues.
struct SymEigen {
  std::vector<Real> values;
  RealMat vectors;
};
SymEigen jacobi_symmetric(RealMat a);

// Same for a complex Hermitian matrix (real eigenvalues, ascending).
struct HermEigen {
  std::vector<Real> values;
  CplxMat vectors;
};
HermEigen jacobi_hermitian(CplxMat a);

// All complex roots of a polynomial by the Durand-Kerner iteration at the
// current thread precision. Coefficients low -> high; lead must be nonzero.
std::vector<Cplx> roots_dk(const std::vector<Cplx>& coeffs);
std::vector<Cplx> roots_dk(const UniPoly& p);

// Polynomial evaluation with Real / Cplx arguments.
Real eval_real(const UniPoly& p, const Real& x);
Cplx eval_cplx(const UniPoly& p, const Cplx& x);

}  // namespace wdist
