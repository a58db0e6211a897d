#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "groups.hpp"

using namespace dvrinv;
using testing::random_integral;

TEST_CASE("valuation examples") {
  IntegerDvr z3(3);
  CHECK(z3.valuation(Rational::parse("6/5")) == 1);
  CHECK(z3.valuation(Rational(1)) == 0);
  CHECK(z3.valuation(Rational::parse("1/9")) == -2);
  CHECK_THROWS_WITH_AS(z3.valuation(Rational(0)), doctest::Contains("valuation undefined"), Error);
  PolynomialDvr f5(5);
  CHECK(f5.valuation(f5.parse("t^2/(t+1)")) == 2);
  CHECK(f5.valuation(f5.parse("(1)/(t^3+2*t)")) == -1);
}

TEST_CASE("reduction examples") {
  IntegerDvr z3(3);
  CHECK(z3.reduce(Rational::parse("7/2")) == Fp(3, 2));
  CHECK(z3.reduce(Rational(3)) == Fp(3, 0));
  CHECK(z3.reduce(Rational(-1)) == Fp(3, 2));
  CHECK_THROWS_WITH_AS(z3.reduce(Rational::parse("1/3")), doctest::Contains("not in O"), NotInRing);
  PolynomialDvr f5(5);
  CHECK(f5.reduce(f5.parse("2+t")) == Fp(5, 2));
  CHECK(f5.reduce(f5.parse("(3+t)/(2+t^2)")) == Fp(5, 4));
  CHECK_THROWS_AS(f5.reduce(f5.parse("1/t")), NotInRing);
}

TEST_CASE("unit examples") {
  IntegerDvr z3(3);
  CHECK(z3.is_unit(Rational(-2)));
  CHECK_FALSE(z3.is_unit(Rational(6)));
  CHECK_FALSE(z3.is_unit(Rational(0)));
  CHECK_FALSE(z3.is_unit(Rational::parse("1/3")));
  PolynomialDvr f5(5);
  CHECK_FALSE(f5.is_unit(f5.parse("t")));
  CHECK(f5.is_unit(f5.parse("4+t")));
}

TEST_CASE("group order gate") {
  CHECK(invert_group_order(IntegerDvr(3), 2) == Rational::parse("1/2"));
  CHECK(invert_group_order(IntegerDvr(5), 6) == Rational::parse("1/6"));
  CHECK_THROWS_WITH_AS(invert_group_order(IntegerDvr(2), 2), doctest::Contains("not invertible"),
                       HypothesisViolation);
  PolynomialDvr f5(5);
  CHECK(invert_group_order(f5, 4) * f5.fraction_field().from_int(4) == f5.fraction_field().one());
  CHECK_THROWS_AS(invert_group_order(f5, 10), HypothesisViolation);
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_WITH_AS(DvrDescriptor::make(DvrKind::IntLocalized, 4), doctest::Contains("p must be prime"), Error);
  CHECK_THROWS_AS(DvrDescriptor::make(DvrKind::RatFuncLocalized, 1), Error);
  CHECK(DvrDescriptor::make(DvrKind::RatFuncLocalized, 7).p == 7);
  CHECK(parse_dvr_kind("int-localized") == DvrKind::IntLocalized);
  CHECK(parse_dvr_kind("ratfunc-localized") == DvrKind::RatFuncLocalized);
  CHECK_THROWS_AS(parse_dvr_kind("adic"), Error);
}

TEST_CASE("scalar serialization") {
  CHECK(Rational::parse("-14/4").to_string() == "-7/2");
  CHECK(Rational::parse("−7/2").to_string() == "-7/2");
  CHECK(Rational::parse(" 6 ").to_string() == "6");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  PolynomialDvr f5(5);
  const auto x = f5.parse("(2+1*t^1)/(1+4*t^2)");
  CHECK(f5.format(x) == "(3+4*t^1)/(4+1*t^2)");
  CHECK(f5.parse(f5.format(x)) == x);
  CHECK(f5.format(f5.parse("2*t^2+t")) == "1*t^1+2*t^2");
  CHECK(f5.format(f5.parse("0")) == "0");
  CHECK(f5.parse("t/t") == f5.fraction_field().one());
  CHECK_THROWS_AS(f5.parse("(1)/(0)"), Error);
  CHECK_THROWS_AS(parse_integral(f5, "1/t"), NotInRing);
  CHECK_THROWS_WITH_AS(parse_integral(IntegerDvr(3), "1/3"), doctest::Contains("not in O"), NotInRing);
}

TEST_CASE("lift is a section of reduction") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    IntegerDvr z(p);
    PolynomialDvr f(p);
    for (std::uint32_t v = 0; v < p; ++v) {
      CHECK(z.reduce(z.lift(Fp(p, v))) == Fp(p, v));
      CHECK(f.reduce(f.lift(Fp(p, v))) == Fp(p, v));
    }
  }
}

template <Dvr D>
void ring_properties(const D& dvr, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto f = dvr.fraction_field();
  int nonzero_pairs = 0;
  for (int i = 0; i < 600; ++i) {
    const auto x = random_integral(rng, dvr);
    const auto y = random_integral(rng, dvr);
    const auto w = random_integral(rng, dvr);
    CHECK((x + y) + w == x + (y + w));
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
    CHECK(x + (-x) == f.zero());
    if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
    CHECK(dvr.reduce(x + y) == dvr.reduce(x) + dvr.reduce(y));
    CHECK(dvr.reduce(x * y) == dvr.reduce(x) * dvr.reduce(y));
    if (!x.is_zero()) CHECK(dvr.reduce(x).is_zero() == (dvr.valuation(x) >= 1));
    if (!x.is_zero() && !y.is_zero()) {
      ++nonzero_pairs;
      CHECK(dvr.valuation(x * y) == dvr.valuation(x) + dvr.valuation(y));
      if (!(x + y).is_zero())
        CHECK(dvr.valuation(x + y) >= std::min(dvr.valuation(x), dvr.valuation(y)));
    }
    CHECK(dvr.parse(dvr.format(x)) == x);
  }
  CHECK(nonzero_pairs >= 200);
}

TEST_CASE("ring axioms, valuation and reduction on random samples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    ring_properties(IntegerDvr(p), 100 + p);
    ring_properties(PolynomialDvr(p), 200 + p);
  }
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(inverse_mod(2, 3) == 2);
  CHECK(Fp(5, 2).pow(4) == Fp(5, 1));
  CHECK(Fp(5, 3).inverse() == Fp(5, 2));
  CHECK(Fp(7, -1) == Fp(7, 6));
  CHECK_THROWS_AS(Fp(5, 0).inverse(), Error);
  CHECK_THROWS_AS(Fp(5, 1) + Fp(7, 1), ShapeError);
}

TEST_CASE("polynomial arithmetic over F_p") {
  const FpPoly a(5, {1, 1});     // 1 + t
  const FpPoly b(5, {4, 0, 1});  // 4 + t^2 = (t+1)(t+4) mod 5
  CHECK(gcd(a, b) == a);
  CHECK(exact_div(b, a) == FpPoly(5, {4, 1}));
  CHECK_THROWS_AS(exact_div(b, FpPoly(5, {0, 1})), ConsistencyError);
  const auto [q, r] = divmod(b, FpPoly(5, {0, 1}));
  CHECK(q == FpPoly(5, {0, 1}));
  CHECK(r == FpPoly(5, {4}));
  CHECK(FpPoly(5, {0, 0, 3}).t_order() == 2);
}
