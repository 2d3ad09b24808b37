#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdist/linalg.hpp"
#include "wdist/roots.hpp"
#include "wdist/specpoly.hpp"

using namespace wdist;

namespace {
const bool prec_init = (set_thread_precision(40), true);

Matrix frank(size_t n) {
  Matrix a(n);
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= n; ++j)
      if (j + 1 >= i) a.at(i - 1, j - 1) = Rat(static_cast<long>(n + 1 - std::max(i, j)));
  return a;
}

Real rabs(const Real& x) { return x < 0 ? Real(-x) : x; }
}  // namespace

TEST_CASE("gram-slice determinant structure") {
  Matrix a(RatMat{{Rat(1, 2), Rat(2), Rat(0)}, {Rat(-1), Rat(3), Rat(1, 3)}, {Rat(0), Rat(1), Rat(-2)}});
  PhiPoly p = build_phi(a);
  const size_t n = 3;
  CHECK(p.n == n);
  CHECK(p.phi.degree_lambda() == long(2 * n));
  CHECK(p.phi.lead() == UniPoly(Rat(1)));
  CHECK(p.phi.degree_z() == long(n));
  // at z = 0 the slice is the squared characteristic polynomial
  UniPoly f = charpoly(a);
  CHECK(eval_z(p.phi, Rat(0)) == f * f);
  // the second-highest coefficient is -2 trace(A), independent of z
  CHECK(p.phi.coeff(2 * n - 1) == UniPoly(Rat(-2) * trace(a)));
}

TEST_CASE("newton sums: trace route equals coefficient route") {
  Matrix a(RatMat{{Rat(0), Rat(1), Rat(1)}, {Rat(-2), Rat(1, 2), Rat(0)}, {Rat(1), Rat(0), Rat(1)}});
  PhiPoly p = build_phi(a);
  auto s_tr = newton_sums(a, 8);
  auto s_cf = newton_sums_from_phi(p.phi, 8);
  REQUIRE(s_tr.size() == 9);
  REQUIRE(s_cf.size() == 9);
  for (size_t k = 0; k <= 8; ++k) CHECK(s_tr[k] == s_cf[k]);
  CHECK(s_tr[0] == UniPoly(Rat(6)));  // 2n roots
  CHECK(s_tr[1] == UniPoly(Rat(2) * trace(a)));
}

TEST_CASE("last hankel minor carries the distance equation") {
  Matrix a = frank(3);
  auto minors = hankel_minors(a, 6);
  REQUIRE(minors.size() == 6);
  CHECK(minors[0] == UniPoly(Rat(6)));
  DistanceEquation eq = distance_equation(a);
  CHECK(eq.mode == DistanceEquation::Mode::NORMAL);
  CHECK(eq.leading_check);
  CHECK(eq.f.degree() == 6);
  // S_{2n}(z) == z^n * F(z)
  CHECK(minors[5] == UniPoly::monomial(3) * eq.f);
  CHECK(eq.f.coeff(0) != Rat(0));
}

TEST_CASE("repeated-root inputs are refused") {
  Matrix j(RatMat{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  CHECK_THROWS_AS(distance_equation(j), Error);
  Matrix one(RatMat{{Rat(5)}});
  CHECK_THROWS_AS(distance_equation(one), Error);
}

TEST_CASE("symmetric 2x2: exact square equation") {
  // eigenvalues -1, 1: the only coincidence is at z = 1 (a double zero)
  Matrix a(RatMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  DistanceEquation eq = distance_equation(a);
  CHECK(eq.f == UniPoly::from_int_low({4096, -8192, 4096}));
}

TEST_CASE("special form detection and closed forms match the determinant") {
  Matrix sym(RatMat{{Rat(2), Rat(1), Rat(0)}, {Rat(1), Rat(3), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
  SpecialFormInfo si = special_form(sym);
  CHECK(si.form == MatrixForm::SYMMETRIC);
  REQUIRE(si.closed_phi.has_value());
  CHECK(*si.closed_phi == build_phi(sym).phi);

  Matrix skc(RatMat{{Rat(5), Rat(-4), Rat(2), Rat(-1)},
                    {Rat(4), Rat(5), Rat(7), Rat(3)},
                    {Rat(-2), Rat(-7), Rat(5), Rat(11)},
                    {Rat(1), Rat(-3), Rat(-11), Rat(5)}});
  SpecialFormInfo sk = special_form(skc);
  CHECK(sk.form == MatrixForm::SKEW_PLUS_SCALAR);
  CHECK(sk.scalar_shift == Rat(5));
  REQUIRE(sk.closed_phi.has_value());
  CHECK(*sk.closed_phi == build_phi(skc).phi);

  Matrix rot(RatMat{{Rat(3, 5), Rat(-4, 5), Rat(0)}, {Rat(4, 5), Rat(3, 5), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  SpecialFormInfo so = special_form(rot);
  CHECK(so.form == MatrixForm::ORTHOGONAL);
  REQUIRE(so.closed_phi.has_value());
  CHECK(*so.closed_phi == build_phi(rot).phi);

  Matrix gen(RatMat{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}});
  CHECK(special_form(gen).form == MatrixForm::GENERIC);
}

TEST_CASE("skew 4x4 engages the square-root deflation") {
  Matrix a(RatMat{{Rat(0), Rat(-4), Rat(2), Rat(-1)},
                  {Rat(4), Rat(0), Rat(7), Rat(3)},
                  {Rat(-2), Rat(-7), Rat(0), Rat(11)},
                  {Rat(1), Rat(-3), Rat(-11), Rat(0)}});
  DistanceEquation eq = distance_equation(a);
  CHECK(eq.mode == DistanceEquation::Mode::SQRT_PHI);
  UniPoly f = primitive_int(eq.f);
  CHECK(f == UniPoly::from_int_low({Int("37907565375744"), Int("-2333491251200"), Int("11667456256")}));
}

TEST_CASE("rotation block: deflation finds the exact rational zero") {
  Matrix rot(RatMat{{Rat(3, 5), Rat(-4, 5), Rat(0)}, {Rat(4, 5), Rat(3, 5), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  DistanceEquation eq = distance_equation(rot);
  CHECK(eq.mode == DistanceEquation::Mode::SQRT_PHI);
  auto roots = isolate_real_roots(eq.f);
  bool found = false;
  for (auto& r : roots) {
    IsolatedRoot rr = refine(r, 12);
    if (rr.exact && rr.lo == Rat(16, 25)) found = true;
    if (!rr.exact) {
      CHECK((rr.hi < Rat(16, 25) || rr.lo > Rat(16, 25)));
    }
  }
  CHECK(found);
}

TEST_CASE("root isolation with multiplicities") {
  UniPoly xm1 = UniPoly::from_int_low({-1, 1});
  UniPoly xm2 = UniPoly::from_int_low({-2, 1});
  UniPoly quad = UniPoly::from_int_low({1, 0, 1});
  UniPoly p = xm1 * xm1 * xm2 * quad;
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 2);
  CHECK(roots[1].multiplicity == 1);
  CHECK(roots[0].hi <= roots[1].lo);
  IsolatedRoot r0 = refine(roots[0], 10);
  CHECK(r0.exact);
  CHECK(r0.lo == Rat(1));
}

TEST_CASE("refinement certifies irrational enclosures") {
  UniPoly p = UniPoly::from_int_low({-2, 0, 1});  // x^2 - 2
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  IsolatedRoot pos = refine(roots[1], 50);
  CHECK(!pos.exact);
  CHECK(pos.width() <= Rat(1) / pow_int(Int(10), 50));
  CHECK(sign_at(p, pos.lo) < 0);
  CHECK(sign_at(p, pos.hi) > 0);
  // rational root caught exactly along the way
  UniPoly q = UniPoly::from_int_low({-5, 3}) * p;
  auto qr = isolate_real_roots(q);
  REQUIRE(qr.size() == 3);
  IsolatedRoot mid = refine(qr[1], 10);
  CHECK(mid.exact);
  CHECK(mid.lo == Rat(5, 3));
}

TEST_CASE("certified signs at rational points") {
  UniPoly p = UniPoly::from_int_low({-2, 0, 1});
  CHECK(sign_at(p, Rat(Int("1414213562373095048"), Int("1000000000000000000"))) < 0);
  CHECK(sign_at(p, Rat(Int("1414213562373095049"), Int("1000000000000000000"))) > 0);
  CHECK(sign_at(UniPoly::from_int_low({-3, 2}), Rat(3, 2)) == 0);
}

TEST_CASE("sign variations and complex pair counts") {
  CHECK(variation_count({Rat(1), Rat(2), Rat(-1), Rat(3)}) == 2);
  CHECK(variation_count({Rat(1), Rat(1), Rat(1)}) == 0);
  CHECK(variation_count({Rat(1), Rat(-1), Rat(0), Rat(0)}) == 1);  // trailing zeros drop
  CHECK_THROWS_AS(variation_count({Rat(1), Rat(0), Rat(-1)}), Error);
  UniPoly real3 = UniPoly::from_int_low({-6, 11, -6, 1});
  CHECK(count_complex_pairs(real3) == 0);
  UniPoly mixed = UniPoly::from_int_low({1, 0, 1}) * UniPoly::from_int_low({-5, 1});
  CHECK(count_complex_pairs(mixed) == 1);
}

TEST_CASE("jacobi eigensolvers") {
  RealMat s = {{Real(2), Real(1)}, {Real(1), Real(2)}};
  SymEigen se = jacobi_symmetric(s);
  REQUIRE(se.values.size() == 2);
  CHECK(rabs(se.values[0] - 1) < pow10(-30));
  CHECK(rabs(se.values[1] - 3) < pow10(-30));
  Real dot = se.vectors[0][0] * se.vectors[1][0] + se.vectors[0][1] * se.vectors[1][1];
  CHECK(rabs(dot) < pow10(-30));

  CplxMat h = {{Cplx(Real(2)), Cplx(Real(0), Real(1))}, {Cplx(Real(0), Real(-1)), Cplx(Real(2))}};
  HermEigen he = jacobi_hermitian(h);
  REQUIRE(he.values.size() == 2);
  CHECK(rabs(he.values[0] - 1) < pow10(-30));
  CHECK(rabs(he.values[1] - 3) < pow10(-30));
}

TEST_CASE("polynomial root finding at working precision") {
  UniPoly p = UniPoly::from_int_low({-6, 11, -6, 1});
  auto rts = roots_dk(p);
  REQUIRE(rts.size() == 3);
  Real prod(1);
  for (auto& r : rts) {
    CHECK(rabs(r.im) < pow10(-25));
    prod = prod * r.re;
  }
  CHECK(rabs(prod - 6) < pow10(-25));
  auto ipair = roots_dk(UniPoly::from_int_low({1, 0, 1}));
  REQUIRE(ipair.size() == 2);
  CHECK(rabs(rabs(ipair[0].im) - 1) < pow10(-25));
}
