#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "groups.hpp"

using namespace dvrinv;
using testing::qmat;

using QPoly = MultiPoly<Rational>;

QPoly X(std::size_t n, std::size_t i) { return QPoly::variable({}, n, i); }

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

TEST_CASE("monomial order and formatting") {
  const auto m = monomials_of_degree(2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == Exponent{2, 0});
  CHECK(m[1] == Exponent{1, 1});
  CHECK(m[2] == Exponent{0, 2});
  CHECK(monomials_of_degree(3, 4).size() == 15);
  CHECK(format_monomial({2, 0, 1}) == "X1^2*X3^1");
  const auto f = X(2, 0) * X(2, 0) + Rational(-3) * X(2, 1) + QPoly::constant({}, 2, Rational::parse("1/2"));
  CHECK(f.to_string() == "1 * X1^2 + -3 * X2^1 + 1/2");
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK((X(2, 0) * X(2, 1)).is_homogeneous());
  CHECK((f - f).is_zero());
  CHECK(f.derivative(0) == Rational(2) * X(2, 0));
}

TEST_CASE("action examples") {
  const auto swap = qmat({{"0", "1"}, {"1", "0"}});
  CHECK(act(swap, X(2, 0)) == X(2, 1));
  const auto f = X(2, 0) * X(2, 1) * X(2, 1) + Rational(3) * X(2, 0);
  CHECK(act(Matrix<Rational>::identity({}, 2), f) == f);
  const auto m = X(2, 0) * X(2, 1) * X(2, 1);
  CHECK(act(qmat({{"1", "0"}, {"0", "-1"}}), m) == m);
  // X_j -> sum_i g_ij X_i: the column of g gives the image of X_j
  const auto g = qmat({{"1", "2"}, {"3", "4"}});
  CHECK(act(g, X(2, 1)) == Rational(2) * X(2, 0) + Rational(4) * X(2, 1));
  CHECK_THROWS_AS(act(Matrix<Rational>::identity({}, 3), X(2, 0)), ShapeError);
}

TEST_CASE("reynolds examples") {
  const auto g = testing::s2(3);
  const Rational half = Rational::parse("1/2");
  CHECK(reynolds(g, X(2, 0)) == half * (X(2, 0) + X(2, 1)));
  CHECK(reynolds(g, X(2, 0) * X(2, 1)) == X(2, 0) * X(2, 1));
  CHECK(reynolds(g, X(2, 0) * X(2, 0)) == half * (X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1)));
  CHECK_THROWS_AS(reynolds(testing::s2(2), X(2, 0)), HypothesisViolation);
  const auto rr = reynolds_residue(g, MultiPoly<Fp>::variable(PrimeField{3}, 2, 0));
  CHECK(rr.coefficient({1, 0}) == Fp(3, 2));
}

TEST_CASE("invariant basis examples") {
  const auto g = testing::s2(3);
  const auto q = invariant_basis_fraction(g, 2);
  CHECK(q.polys.size() == 2);
  const auto k = invariant_basis_residue(g, 2);
  CHECK(k.polys.size() == 2);
  for (const auto& f : q.polys) {
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 2);
    for (const auto& s : g.generators()) CHECK(act(s, f) == f);
    bool has_unit = false;
    for (const auto& [e, c] : f.terms()) {
      CHECK(g.dvr().is_integral(c));
      has_unit = has_unit || g.dvr().is_unit(c);
    }
    CHECK(has_unit);
  }
  // span check: X1^2 + X2^2 and X1 X2 lie in the span
  const MonomialBasis basis(2, 2);
  IncrementalEchelon<Rational> span({}, basis.size());
  for (const auto& f : q.polys) span.insert(coefficient_vector(f, basis));
  CHECK(span.contains(coefficient_vector(X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1), basis)));
  CHECK(span.contains(coefficient_vector(X(2, 0) * X(2, 1), basis)));
  CHECK(invariant_dimension(testing::b2(3), 0, FieldTag::Fraction) == 1);
  CHECK(invariant_dimension(testing::b2(3), 1, FieldTag::Fraction) == 0);
  CHECK(invariant_dimension(testing::c4_wreath_s2(), 0, FieldTag::Residue) == 1);
}

TEST_CASE("primitive polynomial scaling") {
  IntegerDvr z3(3);
  const auto f = Rational::parse("1/9") * X(2, 0) + Rational::parse("2/3") * X(2, 1);
  const auto p = primitive_polynomial(z3, f);
  CHECK(p == X(2, 0) + Rational(6) * X(2, 1));
}

TEST_CASE("molien examples") {
  CHECK(molien_series(testing::s2(3), 4).coefficients == ints({1, 1, 2, 2, 3}));
  CHECK(molien_series(testing::trivial_group(3, 2), 2).coefficients == ints({1, 2, 3}));
  CHECK(molien_series(testing::s3(5), 6).coefficients == ints({1, 1, 2, 3, 4, 5, 7}));
  CHECK(molien_series(testing::b2(3), 8).coefficients == ints({1, 0, 1, 0, 2, 0, 2, 0, 3}));
  CHECK_THROWS_AS(molien_series(testing::s2(2), 3), HypothesisViolation);
  const auto c4 = molien_series(testing::c4(), 8);
  const auto kf = testing::c4().dvr().fraction_field();
  for (std::size_t d = 0; d <= 8; ++d) CHECK(c4.coefficients[d] == kf.from_int(d % 4 == 0 ? 1 : 0));
  CHECK(degree_product_series({2, 4}, 8) == std::vector<std::int64_t>{1, 0, 1, 0, 2, 0, 2, 0, 3});
  CHECK(degree_product_series({1, 2, 3}, 6) == std::vector<std::int64_t>{1, 1, 2, 3, 4, 5, 7});
}

TEST_CASE("inverse_det_series agrees with the cofactor oracle") {
  const auto g = testing::b2(3);
  for (const auto& e : g.elements()) {
    const auto a = oracle::det_one_minus_zg(oracle::rows_of(e), Rational(0), Rational(1));
    const auto b = inverse_det_series(e, 6);
    // (sum a_i z^i) * (sum b_j z^j) = 1 + O(z^7)
    for (std::size_t k = 0; k <= 6; ++k) {
      Rational s(0);
      for (std::size_t i = 0; i < a.size() && i <= k; ++i) s = s + a[i] * b[k - i];
      CHECK(s == Rational(k == 0 ? 1 : 0));
    }
  }
}

template <Dvr D>
void invariants_against_oracles(const MatrixGroup<D>& g, std::uint32_t bound) {
  const auto& dvr = g.dvr();
  const auto kf = dvr.fraction_field();
  const auto rf = dvr.residue_field();
  const auto elems = testing::oracle_elements(dvr, g.generators(), g.degree());
  const auto relems = testing::oracle_residue_elements(g);
  const auto mol = molien_series(g, bound);
  const auto oracle_mol = oracle::molien(elems, bound, kf.zero(), kf.one(),
                                         kf.from_int(static_cast<std::int64_t>(elems.size())).inverse());
  CHECK(mol.coefficients == oracle_mol);
  for (std::uint32_t d = 0; d <= bound; ++d) {
    const auto dim_k = invariant_dimension(g, d, FieldTag::Fraction);
    CHECK(dim_k == oracle::fixed_dimension(elems, d, kf.zero(), kf.one()));
    CHECK(dim_k == oracle::reynolds_dimension(elems, d, kf.zero(), kf.one()));
    CHECK(mol.coefficients[d] == kf.from_int(static_cast<std::int64_t>(dim_k)));
    CHECK(invariant_dimension(g, d, FieldTag::Residue) == oracle::fixed_dimension(relems, d, rf.zero(), rf.one()));
  }
}

TEST_CASE("Molien coefficients and invariant dimensions agree with brute-force oracles") {
  invariants_against_oracles(testing::s2(3), 6);
  invariants_against_oracles(testing::s3(5), 6);
  invariants_against_oracles(testing::b2(3), 8);
  invariants_against_oracles(testing::c4(), 8);
  invariants_against_oracles(testing::plus_minus_identity(3), 4);
  invariants_against_oracles(testing::c4_wreath_s2(), 8);
  invariants_against_oracles(testing::b2_twisted(), 6);
}

TEST_CASE("permutation groups: Molien equals monomial orbit count") {
  const auto g = testing::s3(5);
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& e : g.elements()) {
    std::vector<std::size_t> p(3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i)
        if (!e(i, j).is_zero()) p[j] = i;
    perms.push_back(p);
  }
  const auto mol = molien_series(g, 9);
  for (std::uint32_t d = 0; d <= 9; ++d)
    CHECK(mol.coefficients[d] == Rational(static_cast<std::int64_t>(oracle::monomial_orbits(perms, 3, d))));
}

TEST_CASE("action matrix columns are images of monomials") {
  const auto g = qmat({{"1", "2"}, {"3", "4"}});
  const MonomialBasis basis(2, 2);
  const auto a = action_matrix(g, basis);
  const auto o = oracle::action_on_forms(oracle::rows_of(g), basis.monomials(), Rational(0), Rational(1));
  CHECK(oracle::rows_of(a) == o);
}
