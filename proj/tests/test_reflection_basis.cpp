#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "groups.hpp"

using namespace dvrinv;
using testing::mat;
using testing::qmat;

Vector<Rational> qvec(std::initializer_list<const char*> xs) {
  Vector<Rational> v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

TEST_CASE("primitive_vector examples") {
  IntegerDvr z3(3);
  CHECK(primitive_vector(z3, qvec({"3", "6"})) == qvec({"1", "2"}));
  CHECK(primitive_vector(z3, qvec({"1/3", "1"})) == qvec({"1", "3"}));
  CHECK(primitive_vector(z3, qvec({"1", "2"})) == qvec({"1", "2"}));
  CHECK_THROWS_AS(primitive_vector(z3, qvec({"0", "0"})), Error);
}

TEST_CASE("unimodular completion has unit determinant") {
  IntegerDvr z3(3);
  const auto c = unimodular_completion(z3, qvec({"3", "2", "5"}));
  CHECK(z3.is_unit(det(c)));
  CHECK(c.column(0) == qvec({"3", "2", "5"}));
  CHECK_THROWS_AS(unimodular_completion(z3, qvec({"3", "6"})), Error);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Vector<Rational> v;
    for (int j = 0; j < 3; ++j) v.push_back(testing::random_integral(rng, z3));
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    const auto w = primitive_vector(z3, v);
    CHECK(z3.valuation(det(unimodular_completion(z3, w))) == 0);
  }
}

TEST_CASE("quotient_action examples") {
  IntegerDvr z3(3);
  const auto swap3 = qmat({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}});
  const auto q = quotient_action(z3, swap3, qvec({"0", "0", "1"}));
  CHECK(q.induced == qmat({{"0", "1"}, {"1", "0"}}));
  const auto q2 = quotient_action(z3, qmat({{"0", "1"}, {"1", "0"}}), qvec({"1", "1"}));
  CHECK(q2.induced == qmat({{"-1"}}));
  const auto block = qmat({{"1", "5", "7"}, {"0", "0", "1"}, {"0", "1", "0"}});
  CHECK(quotient_action(z3, block, qvec({"1", "0", "0"})).induced == qmat({{"0", "1"}, {"1", "0"}}));
  CHECK_THROWS_AS(quotient_action(z3, swap3, qvec({"1", "0", "0"})), Error);
}

TEST_CASE("diagonalizing basis examples") {
  IntegerDvr z3(3);
  const auto tri = diagonalizing_basis(z3, qmat({{"1", "1"}, {"0", "-1"}}), 2);
  CHECK(tri.verified);
  CHECK(tri.lambda == Rational(-1));
  CHECK(tri.basis.column(0) == qvec({"1", "0"}));
  CHECK(tri.basis.column(1) == qvec({"-1/2", "1"}));

  const auto sw = diagonalizing_basis(z3, qmat({{"0", "1"}, {"1", "0"}}), 2);
  CHECK(sw.verified);
  CHECK(sw.lambda == Rational(-1));
  CHECK(sw.basis.column(0) == qvec({"1", "1"}));
  // w2 is determined up to a unit of O: here a unit multiple of (1, -1)
  const auto w2 = sw.basis.column(1);
  const Rational ratio = w2[0] / Rational(1);
  CHECK(z3.is_unit(ratio));
  CHECK(w2[1] == ratio * Rational(-1));
  CHECK(z3.is_unit(det(sw.basis)));

  PolynomialDvr f5(5);
  const auto c = diagonalizing_basis(f5, mat(f5, {{"2"}}), 4);
  CHECK(c.verified);
  CHECK(c.lambda == f5.parse("2"));
  CHECK(c.order == 4);
  CHECK(c.lambda_order == 4);
  CHECK(c.basis == mat(f5, {{"1"}}));
}

TEST_CASE("diagonalizing basis error paths") {
  IntegerDvr z3(3);
  CHECK_THROWS_AS(diagonalizing_basis(z3, qmat({{"-1", "0"}, {"0", "-1"}}), 2), Error);
  CHECK_THROWS_AS(diagonalizing_basis(IntegerDvr(2), qmat({{"0", "1"}, {"1", "0"}}), 2), HypothesisViolation);
  // lambda - 1 = -2 is not a unit at p = 2: surfaced as a consistency failure
  CHECK_THROWS_AS(diagonalizing_basis(IntegerDvr(2), qmat({{"1", "0"}, {"0", "-1"}}), 3), ConsistencyError);
  CHECK_THROWS_AS(diagonalizing_basis(z3, qmat({{"1/3", "0"}, {"0", "-1"}}), 2), NotInRing);
}

TEST_CASE("verification catches a wrong basis") {
  IntegerDvr z3(3);
  const auto sigma = qmat({{"0", "1"}, {"1", "0"}});
  auto b = diagonalizing_basis(z3, sigma, 2);
  b.basis = qmat({{"1", "1"}, {"1", "4"}});
  CHECK_FALSE(verify_diagonalizing_basis(z3, sigma, b).empty());
  b.basis = qmat({{"3", "1"}, {"3", "-1"}});
  CHECK_FALSE(verify_diagonalizing_basis(z3, sigma, b).empty());
}

template <Dvr D>
void bases_for_group(const MatrixGroup<D>& g, std::uint64_t seed, int conjugates) {
  std::mt19937_64 rng(seed);
  const auto& dvr = g.dvr();
  for (const auto& r : classify_reflections(g).reflections) {
    const auto& sigma = g.elements()[r.index];
    for (int c = 0; c <= conjugates; ++c) {
      auto s = sigma;
      if (c > 0) {
        const auto t = testing::random_unimodular(rng, dvr, g.degree());
        s = t * sigma * inverse_over_ring(dvr, t);
      }
      const auto b = diagonalizing_basis(dvr, s, g.order());
      CHECK(b.verified);
      CHECK(verify_diagonalizing_basis(dvr, s, b).empty());
      CHECK(dvr.valuation(det(b.basis)) == 0);
      CHECK(b.lambda == det(s));
      CHECK(b.order == matrix_order(s, g.order()));
      CHECK(b.lambda_order == b.order);
      // independent eigen-relation check by explicit products
      const auto image = s * b.basis;
      for (std::size_t j = 0; j < g.degree(); ++j) {
        const auto expected = j + 1 == g.degree() ? b.lambda : dvr.fraction_field().one();
        for (std::size_t i = 0; i < g.degree(); ++i) CHECK(image(i, j) == expected * b.basis(i, j));
      }
    }
  }
}

TEST_CASE("bases for all reflections and random conjugates") {
  bases_for_group(testing::s3(5), 31, 20);
  bases_for_group(testing::b2(3), 32, 20);
  bases_for_group(testing::c4(), 33, 20);
  bases_for_group(testing::c4_wreath_s2(), 34, 5);
  bases_for_group(testing::b2_twisted(), 35, 5);
}
