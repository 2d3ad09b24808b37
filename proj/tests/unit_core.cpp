#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdist/bipoly.hpp"
#include "wdist/detpoly.hpp"
#include "wdist/digest.hpp"
#include "wdist/intdet.hpp"
#include "wdist/rat.hpp"
#include "wdist/ratmatrix.hpp"
#include "wdist/unipoly.hpp"

using namespace wdist;

TEST_CASE("parse_rat accepts fractions, integers and finite decimals") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-42") == Rat(-42));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("-3.25e-2") == Rat(-13, 400));
  CHECK(parse_rat("1e3") == Rat(1000));
  CHECK_THROWS_AS(parse_rat("seven"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK(rat_str(Rat(-6, 8)) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
}

TEST_CASE("simplest_in_interval picks the smallest denominator") {
  CHECK(simplest_in_interval(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
  CHECK(simplest_in_interval(Rat(-1, 3), Rat(1, 4)) == Rat(0));
  CHECK(simplest_in_interval(Rat(3, 7), Rat(3, 7)) == Rat(3, 7));
  CHECK(simplest_in_interval(Rat(-5, 2), Rat(-2)) == Rat(-2));
  // integral left endpoint with no further integer inside
  CHECK(simplest_in_interval(Rat(2), Rat(5, 2)) == Rat(2));
  CHECK(simplest_in_interval(Rat(7, 3), Rat(5, 2)) == Rat(5, 2));
  Rat x = simplest_in_interval(Rat(139, 1000), Rat(141, 1000));
  CHECK(x >= Rat(139, 1000));
  CHECK(x <= Rat(141, 1000));
  CHECK(den(x) <= 50);
}

TEST_CASE("decimal magnitude and length") {
  CHECK(decimal_magnitude(Rat(1)) == 0);
  CHECK(decimal_magnitude(Rat(999, 1000)) == -1);
  CHECK(decimal_magnitude(Rat(1000)) == 3);
  CHECK(decimal_magnitude(Rat(-1, 100)) == -2);
  CHECK(decimal_length(Int(0)) == 1);
  CHECK(decimal_length(Int(999)) == 3);
  CHECK(decimal_length(Int(-1000)) == 4);
}

TEST_CASE("integer helpers") {
  CHECK(pow_int(Int(3), 5) == 243);
  CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(gcd_int(Int(12), Int(-18)) == 6);
  CHECK(lcm_int(Int(4), Int(6)) == 12);
}

TEST_CASE("unipoly construction and basic queries") {
  UniPoly p = UniPoly::from_high({Rat(1), Rat(0), Rat(-2)});  // x^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rat(-2));
  CHECK(p.lead() == Rat(1));
  CHECK(UniPoly::from_low({Rat(0), Rat(0)}).is_zero());
  UniPoly t = UniPoly::from_int_low({0, 0, 3, 1});
  CHECK(t.trailing_order() == 2);
  CHECK(eval(p, Rat(3, 2)) == Rat(1, 4));
}

TEST_CASE("unipoly ring operations") {
  UniPoly xm1 = UniPoly::from_int_low({-1, 1});
  UniPoly xp1 = UniPoly::from_int_low({1, 1});
  CHECK(xm1 * xp1 == UniPoly::from_int_low({-1, 0, 1}));
  CHECK(xm1 + xp1 == UniPoly::from_int_low({0, 2}));
  CHECK((xm1 - xm1).is_zero());
  UniPoly a = UniPoly::from_int_low({2, -3, 0, 1});
  auto [q, r] = divmod(a, xm1);
  CHECK(q * xm1 + r == a);
  CHECK(r.degree() < xm1.degree());
  CHECK(exact_div(xm1 * xp1, xp1) == xm1);
  CHECK(derivative(a) == UniPoly::from_int_low({-3, 0, 3}));
}

TEST_CASE("argument transforms") {
  UniPoly p = UniPoly::from_int_low({1, 2, 3});
  CHECK(eval(scale_arg(p, Rat(2, 3)), Rat(3)) == eval(p, Rat(2)));
  CHECK(eval(shift_arg(p, Rat(5, 7)), Rat(1)) == eval(p, Rat(12, 7)));
}

TEST_CASE("normal forms") {
  UniPoly p = UniPoly::from_low({Rat(2, 3), Rat(0), Rat(-4, 3)});
  CHECK(monic(p).lead() == Rat(1));
  UniPoly pi = primitive_int(p);
  CHECK(pi == UniPoly::from_int_low({-1, 0, 2}));  // sign normalized
  CHECK(primitive_int(UniPoly::from_int_low({6, -9, 12})) ==
        UniPoly::from_int_low({2, -3, 4}));
}

TEST_CASE("gcd and squarefree machinery") {
  UniPoly xm1 = UniPoly::from_int_low({-1, 1});
  UniPoly xp2 = UniPoly::from_int_low({2, 1});
  CHECK(gcd(xm1 * xm1, xm1 * xp2) == xm1);
  CHECK(gcd(UniPoly::from_int_low({-2, 0, 1}), UniPoly::from_int_low({-3, 0, 1})).degree() == 0);
  UniPoly p = xm1 * xm1 * xp2;
  auto sq = squarefree_decomposition(p);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == xp2);
  CHECK(sq[0].second == 1);
  CHECK(sq[1].first == xm1);
  CHECK(sq[1].second == 2);
  CHECK(squarefree_part(p) == xm1 * xp2);
}

TEST_CASE("resultant and discriminant") {
  UniPoly a = UniPoly::from_int_low({-2, 0, 1});
  UniPoly b = UniPoly::from_int_low({-3, 0, 1});
  CHECK(resultant(a, b) == Rat(1));
  // x^2 + p x + q -> p^2 - 4q
  UniPoly quad = UniPoly::from_int_low({7, -5, 1});
  CHECK(discriminant(quad) == Rat(25 - 28));
  // x^3 + p x + q -> -4 p^3 - 27 q^2
  UniPoly cub = UniPoly::from_int_low({2, -1, 0, 1});
  CHECK(discriminant(cub) == Rat(4 - 108));
}

TEST_CASE("power sums and interpolation") {
  UniPoly p = UniPoly::from_int_low({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  auto s = power_sums(p, 3);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Rat(3));
  CHECK(s[1] == Rat(6));
  CHECK(s[2] == Rat(14));
  CHECK(s[3] == Rat(36));
  std::vector<Rat> xs = {Rat(0), Rat(1), Rat(-2)};
  std::vector<Rat> ys;
  UniPoly target = UniPoly::from_int_low({1, 0, 1});
  for (const Rat& x : xs) ys.push_back(eval(target, x));
  CHECK(interpolate(xs, ys) == target);
}

TEST_CASE("bipoly arithmetic and calculus") {
  // P(L, z) = (L - z)(L + 1) = L^2 + (1 - z) L - z
  BiPoly p = BiPoly::from_low(
      {UniPoly::from_int_low({0, -1}), UniPoly::from_int_low({1, -1}), UniPoly(Rat(1))});
  CHECK(p.degree_lambda() == 2);
  CHECK(p.degree_z() == 1);
  CHECK(eval_lambda(p, Rat(2)) == UniPoly::from_int_low({6, -3}));
  CHECK(eval_z(p, Rat(2)) == UniPoly::from_int_low({-2, -1, 1}));
  BiPoly dl = d_lambda(p);
  CHECK(dl == BiPoly::from_low({UniPoly::from_int_low({1, -1}), UniPoly(Rat(2))}));
  BiPoly dz = d_z(p);
  CHECK(dz == BiPoly::from_low({UniPoly(Rat(-1)), UniPoly(Rat(-1))}));
  BiPoly q = BiPoly::from_low({UniPoly::from_int_low({0, -1}), UniPoly(Rat(1))});  // L - z
  CHECK(exact_div_lambda(p, q) == BiPoly::from_low({UniPoly(Rat(1)), UniPoly(Rat(1))}));
}

TEST_CASE("bipoly gcd over Q(z)") {
  BiPoly lmz = BiPoly::from_low({UniPoly::from_int_low({0, -1}), UniPoly(Rat(1))});
  BiPoly lp1 = BiPoly::from_low({UniPoly(Rat(1)), UniPoly(Rat(1))});
  BiPoly lp2 = BiPoly::from_low({UniPoly(Rat(2)), UniPoly(Rat(1))});
  BiPoly g = gcd_lambda(lmz * lp1, lmz * lp2);
  CHECK(g == lmz);
  CHECK(gcd_lambda(lp1, lp2).degree_lambda() == 0);
}

TEST_CASE("bareiss determinants") {
  IntMat m = {{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}, {Int(7), Int(8), Int(10)}};
  CHECK(det_int(m) == -3);
  IntMat swap = {{Int(0), Int(1)}, {Int(1), Int(0)}};
  CHECK(det_int(swap) == -1);
  RatMat r = {{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 5)}};
  CHECK(det_rat(r) == Rat(1, 60));
  auto minors = leading_principal_minors(m);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == 1);
  CHECK(minors[1] == -3);
  CHECK(minors[2] == -3);
  IntMat zp = {{Int(0), Int(2)}, {Int(3), Int(4)}};
  auto zm = leading_principal_minors(zp);
  CHECK(zm[0] == 0);
  CHECK(zm[1] == -6);
}

TEST_CASE("gaussian integer ring") {
  GaussInt a(Int(1), Int(2)), b(Int(3), Int(-1));
  GaussInt p = a * b;  // (1+2i)(3-i) = 5+5i
  CHECK(p.re == 5);
  CHECK(p.im == 5);
  GaussInt q = exact_div(p, a);
  CHECK(q.re == 3);
  CHECK(q.im == -1);
  GaussMat m = {{GaussInt(Int(0), Int(1)), GaussInt()}, {GaussInt(), GaussInt(Int(0), Int(1))}};
  GaussInt d = det_gauss(m);
  CHECK(d.re == -1);
  CHECK(d.im == 0);
}

TEST_CASE("hankel assembly") {
  std::vector<Rat> s = {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)};
  RatMat h = hankel_from_sums(s, 3);
  REQUIRE(h.size() == 3);
  CHECK(h[0][0] == 2);
  CHECK(h[1][2] == h[2][1]);
  CHECK(h[2][2] == 11);
}

TEST_CASE("rational matrices") {
  Matrix r(RatMat{{Rat(3, 5), Rat(-4, 5)}, {Rat(4, 5), Rat(3, 5)}});
  CHECK(is_orthogonal(r));
  CHECK(!is_symmetric(r));
  Rat c;
  Matrix sk(RatMat{{Rat(2), Rat(3)}, {Rat(-3), Rat(2)}});
  CHECK(is_skew_plus_scalar(sk, &c));
  CHECK(c == Rat(2));
  CHECK(trace(sk) == Rat(4));
  CHECK(frobenius_sq(sk) == Rat(26));
  CHECK(det(sk) == Rat(13));
  Matrix prod = sk * transpose(sk);
  CHECK(is_symmetric(prod));
}

TEST_CASE("characteristic polynomial") {
  // companion matrix of x^3 - 2x^2 + 5
  Matrix comp(RatMat{{Rat(0), Rat(0), Rat(-5)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(2)}});
  CHECK(charpoly(comp) == UniPoly::from_int_low({5, 0, -2, 1}));
  IntMat ic = {{Int(0), Int(0), Int(-5)}, {Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(2)}};
  CHECK(charpoly_int(ic) == UniPoly::from_int_low({5, 0, -2, 1}));
  Matrix frac(RatMat{{Rat(1, 2), Rat(1, 3)}, {Rat(1, 5), Rat(1, 7)}});
  UniPoly cp = charpoly(frac);
  CHECK(cp.lead() == Rat(1));
  CHECK(cp.coeff(1) == -trace(frac));
  CHECK(cp.coeff(0) == det(frac));
}

TEST_CASE("clear_matrix") {
  Matrix m(RatMat{{Rat(1, 6), Rat(1, 4)}, {Rat(2), Rat(-3, 2)}});
  ClearedMatrix cm = clear_matrix(m);
  CHECK(cm.den == 12);
  CHECK(cm.num[0][0] == 2);
  CHECK(cm.num[0][1] == 3);
  CHECK(cm.num[1][0] == 24);
  CHECK(cm.num[1][1] == -18);
}

TEST_CASE("sha256 against known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("coefficient clearing and digests") {
  ClearedCoeffs cc = clear_denominators({Rat(1, 2), Rat(3), Rat(1, 3)});
  CHECK(cc.den == 6);
  REQUIRE(cc.ints.size() == 3);
  CHECK(cc.ints[0] == 3);
  CHECK(cc.ints[1] == 18);
  CHECK(cc.ints[2] == 2);
  // content is kept, so scaled lists hash differently
  CHECK(coeff_digest({Rat(1), Rat(2)}) != coeff_digest({Rat(2), Rat(4)}));
  CHECK(coeff_digest({Rat(1, 2)}) == coeff_digest({Rat(5, 10)}));
}
