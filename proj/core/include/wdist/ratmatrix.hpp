#pragma once

#include <vector>

#include "wdist/intdet.hpp"
#include "wdist/unipoly.hpp"

namespace wdist {

// Square matrix with exact rational entries.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(size_t n) : a_(n, std::vector<Rat>(n, Rat(0))) {}
  explicit Matrix(RatMat rows);
  static Matrix identity(size_t n);

  size_t n() const { return a_.size(); }
  Rat& at(size_t i, size_t j) { return a_[i][j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i][j]; }
  const RatMat& rows() const { return a_; }

  bool operator==(const Matrix& o) const { return a_ == o.a_; }

 private:
  RatMat a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Rat& s, const Matrix& x);
Matrix transpose(const Matrix& x);

Rat trace(const Matrix& x);
Rat frobenius_sq(const Matrix& x);  // sum of squared entries
Rat det(const Matrix& x);

bool is_symmetric(const Matrix& x);
bool is_orthogonal(const Matrix& x);  // X^T X == I exactly
// True iff X - cI is skew-symmetric for c = trace/n (the only candidate).
bool is_skew_plus_scalar(const Matrix& x, Rat* c_out = nullptr);

// Monic characteristic polynomial det(tI - X) by the Faddeev-LeVerrier
// recurrence (division-free except by small integers).
UniPoly charpoly(const Matrix& x);
// Same over plain integers (all intermediates stay integral).
UniPoly charpoly_int(const IntMat& x);

// Writes X = N / d with integer N and the smallest positive integer d.
struct ClearedMatrix {
  IntMat num;
  Int den;
};
ClearedMatrix clear_matrix(const Matrix& x);

}  // namespace wdist
