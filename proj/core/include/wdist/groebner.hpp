#pragma once

#include <map>
#include <string>
#include <vector>

#include "wdist/intdet.hpp"
#include "wdist/rat.hpp"

namespace wdist {

// Monomial a^da * b^db, ordered by graded reverse lexicographic order with
// a > b: higher total degree first, ties broken toward the smaller
// b-exponent (so a^2 > a*b > b^2).
struct Mono {
  unsigned da = 0, db = 0;
  bool operator==(const Mono& o) const { return da == o.da && db == o.db; }
  bool divides(const Mono& o) const { return da <= o.da && db <= o.db; }
};

// Ascending comparison (std::map keeps the leading term at rbegin()).
struct MonoLess {
  bool operator()(const Mono& p, const Mono& q) const {
    const unsigned tp = p.da + p.db, tq = q.da + q.db;
    if (tp != tq) return tp < tq;
    return p.db > q.db;
  }
};

// Sparse bivariate polynomial over Q.
class BivarPoly {
 public:
  using TermMap = std::map<Mono, Rat, MonoLess>;

  BivarPoly() = default;
  static BivarPoly term(const Rat& c, unsigned da, unsigned db);

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  Rat coeff(unsigned da, unsigned db) const;
  long degree_a() const;  // -1 when zero
  long degree_b() const;

  Mono lead_mono() const;   // errors IDENTICALLY_ZERO on the zero polynomial
  Rat lead_coeff() const;
  BivarPoly monic() const;

  // In place: *this += c * a^sa b^sb * q.
  void add_scaled(const Rat& c, const Mono& shift, const BivarPoly& q);

  bool operator==(const BivarPoly& o) const { return t_ == o.t_; }
  std::string str(const std::string& avar = "a", const std::string& bvar = "b") const;

 private:
  void strip();
  TermMap t_;
};

BivarPoly operator+(const BivarPoly& x, const BivarPoly& y);
BivarPoly operator-(const BivarPoly& x, const BivarPoly& y);
BivarPoly operator*(const BivarPoly& x, const BivarPoly& y);
BivarPoly operator*(const Rat& s, const BivarPoly& x);

// Total reduction of p modulo the (monic-lead) polynomials in g.
BivarPoly normal_form(BivarPoly p, const std::vector<BivarPoly>& g);

// Reduced monic Groebner basis (Buchberger with the coprime-lead criterion),
// sorted by ascending leading monomial.
std::vector<BivarPoly> groebner_basis(std::vector<BivarPoly> gens);

// Monomials under the staircase (the residue basis of the quotient ring),
// ascending. Errors: ELIMINATION_DEGENERATE when the quotient is not
// finite-dimensional (no pure power of a or of b among the leads).
std::vector<Mono> quotient_basis(const std::vector<BivarPoly>& gb);

// Matrix of multiplication by f on the quotient basis: column j holds the
// coordinates of normal_form(f * basis[j]).
RatMat multiplication_matrix(const BivarPoly& f, const std::vector<BivarPoly>& gb,
                             const std::vector<Mono>& basis);

}  // namespace wdist
