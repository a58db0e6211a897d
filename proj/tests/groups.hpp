#pragma once

// Test groups shared by the suites.

#include <random>
#include <string>
#include <vector>

#include "dvrinv/certify.hpp"
#include "oracles.hpp"

namespace testing {

using namespace dvrinv;

template <Dvr D>
Matrix<typename D::Fraction> mat(const D& dvr, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vector<typename D::Fraction>> out;
  for (const auto& r : rows) {
    Vector<typename D::Fraction> v;
    for (const auto& s : r) v.push_back(dvr.parse(s));
    out.push_back(std::move(v));
  }
  return Matrix<typename D::Fraction>::from_rows(dvr.fraction_field(), out);
}

inline Matrix<Rational> qmat(const std::vector<std::vector<std::string>>& rows) { return mat(IntegerDvr(3), rows); }

inline MatrixGroup<IntegerDvr> s2(std::uint32_t p) {
  IntegerDvr z(p);
  return generate_group(z, 2, {mat(z, {{"0", "1"}, {"1", "0"}})});
}

inline MatrixGroup<IntegerDvr> s3(std::uint32_t p) {
  IntegerDvr z(p);
  return generate_group(z, 3,
                        {mat(z, {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}),
                         mat(z, {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}})});
}

inline MatrixGroup<IntegerDvr> b2(std::uint32_t p) {
  IntegerDvr z(p);
  return generate_group(z, 2, {mat(z, {{"0", "1"}, {"1", "0"}}), mat(z, {{"1", "0"}, {"0", "-1"}})});
}

inline MatrixGroup<IntegerDvr> plus_minus_identity(std::uint32_t p) {
  IntegerDvr z(p);
  return generate_group(z, 2, {mat(z, {{"-1", "0"}, {"0", "-1"}})});
}

inline MatrixGroup<IntegerDvr> trivial_group(std::uint32_t p, std::size_t n) {
  IntegerDvr z(p);
  return generate_group(z, n, {});
}

inline MatrixGroup<PolynomialDvr> c4() {
  PolynomialDvr f(5);
  return generate_group(f, 1, {mat(f, {{"2"}})});
}

// C4 wreath S2: monomial matrices with entries in <2> of F5^x, order 32.
inline MatrixGroup<PolynomialDvr> c4_wreath_s2() {
  PolynomialDvr f(5);
  return generate_group(f, 2, {mat(f, {{"2", "0"}, {"0", "1"}}), mat(f, {{"0", "1"}, {"1", "0"}})});
}

// B2 conjugated by a unimodular matrix with a non-constant entry, so the
// reflections have entries involving t.
inline MatrixGroup<PolynomialDvr> b2_twisted() {
  PolynomialDvr f(3);
  const auto t = mat(f, {{"1", "t"}, {"0", "1"}});
  const auto ti = inverse(t);
  return generate_group(f, 2, {t * mat(f, {{"0", "1"}, {"1", "0"}}) * ti, t * mat(f, {{"1", "0"}, {"0", "-1"}}) * ti});
}

template <Dvr D>
std::vector<oracle::Rows<typename D::Fraction>> oracle_elements(const D& dvr,
                                                                 const std::vector<Matrix<typename D::Fraction>>& gens,
                                                                 std::size_t n) {
  std::vector<oracle::Rows<typename D::Fraction>> g;
  for (const auto& m : gens) g.push_back(oracle::rows_of(m));
  const auto f = dvr.fraction_field();
  return oracle::naive_closure(g, n, f.zero(), f.one());
}

template <Dvr D>
std::vector<oracle::Rows<typename D::Residue>> oracle_residue_elements(const MatrixGroup<D>& group) {
  std::vector<oracle::Rows<typename D::Residue>> g;
  for (const auto& m : group.residue_generators()) g.push_back(oracle::rows_of(m));
  const auto k = group.dvr().residue_field();
  return oracle::naive_closure(g, group.degree(), k.zero(), k.one());
}

// The oracle closure over K together with the reduction of each element,
// in the same order (reductions may repeat when eta is not injective).
template <Dvr D>
struct OracleAction {
  std::vector<std::vector<std::size_t>> table;
  std::vector<oracle::Rows<typename D::Fraction>> over_fraction;
  std::vector<oracle::Rows<typename D::Residue>> over_residue;
};

template <Dvr D>
OracleAction<D> oracle_action(const MatrixGroup<D>& group) {
  OracleAction<D> out;
  const auto& dvr = group.dvr();
  out.over_fraction = oracle_elements(dvr, group.generators(), group.degree());
  out.table = oracle::multiplication_table(out.over_fraction, dvr.fraction_field().zero());
  for (const auto& e : out.over_fraction) {
    oracle::Rows<typename D::Residue> r;
    for (const auto& row : e) {
      std::vector<typename D::Residue> v;
      for (const auto& x : row) v.push_back(dvr.reduce(x));
      r.push_back(std::move(v));
    }
    out.over_residue.push_back(std::move(r));
  }
  return out;
}

// Random element of O: a small fraction with unit denominator, scaled by a
// random power of the uniformizer.
inline Rational random_integral(std::mt19937_64& rng, const IntegerDvr& z, int max_abs = 9) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_abs);
  int d = den(rng);
  while (d % static_cast<int>(z.p()) == 0) d = den(rng);
  return Rational(mpz_class(num(rng)), mpz_class(d));
}

inline RatFunc random_integral(std::mt19937_64& rng, const PolynomialDvr& f, int max_deg = 2) {
  const auto p = f.p();
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  auto poly = [&](bool unit_constant) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (unit_constant && c[0] == 0) c[0] = 1;
    return FpPoly(p, c);
  };
  return RatFunc(poly(false), poly(true));
}

// Random matrix in GL_n(O): a product of elementary row operations with
// entries in O, and a diagonal of units.
template <Dvr D>
Matrix<typename D::Fraction> random_unimodular(std::mt19937_64& rng, const D& dvr, std::size_t n, int steps = 4) {
  const auto f = dvr.fraction_field();
  auto m = Matrix<typename D::Fraction>::identity(f, n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int s = 0; s < steps && n > 1; ++s) {
    const auto i = idx(rng);
    auto j = idx(rng);
    while (j == i) j = idx(rng);
    auto e = Matrix<typename D::Fraction>::identity(f, n);
    e(i, j) = random_integral(rng, dvr);
    m = e * m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto u = random_integral(rng, dvr);
    while (!dvr.is_unit(u)) u = random_integral(rng, dvr);
    auto d = Matrix<typename D::Fraction>::identity(f, n);
    d(i, i) = u;
    m = d * m;
  }
  return m;
}

}  // namespace testing
