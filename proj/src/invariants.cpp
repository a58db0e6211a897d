#include "dvrinv/invariants.hpp"

#include <limits>

namespace dvrinv {

template <FieldElement E>
GradedBasis<E> fixed_subspace(const typename E::Field& field, std::size_t n,
                              const std::vector<Matrix<E>>& generators, std::uint32_t degree) {
  const MonomialBasis basis(n, degree);
  const std::size_t dim = basis.size();
  GradedBasis<E> out;
  out.degree = degree;
  if (generators.empty()) {
    for (const auto& m : basis.monomials()) out.polys.push_back(MultiPoly<E>::monomial(field, m, field.one()));
    return out;
  }
  Matrix<E> stacked(field, dim * generators.size(), dim);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto a = action_matrix(generators[g], basis);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        stacked(g * dim + i, j) = i == j ? a(i, j) - field.one() : a(i, j);
      }
  }
  for (const auto& v : kernel(stacked).vectors) out.polys.push_back(from_coefficients(field, basis, v));
  return out;
}

template <Dvr D>
MultiPoly<typename D::Fraction> primitive_polynomial(const D& dvr,
                                                     const MultiPoly<typename D::Fraction>& f) {
  if (f.is_zero()) return f;
  int nu = std::numeric_limits<int>::max();
  for (const auto& [e, c] : f.terms()) nu = std::min(nu, dvr.valuation(c));
  return uniformizer_power(dvr, -nu) * f;
}

template <Dvr D>
GradedBasis<typename D::Fraction> invariant_basis_fraction(const MatrixGroup<D>& group,
                                                           std::uint32_t degree) {
  auto out = fixed_subspace(group.dvr().fraction_field(), group.degree(), group.generators(), degree);
  for (auto& f : out.polys) f = primitive_polynomial(group.dvr(), f);
  return out;
}

template <Dvr D>
GradedBasis<typename D::Residue> invariant_basis_residue(const MatrixGroup<D>& group,
                                                         std::uint32_t degree) {
  return fixed_subspace(group.dvr().residue_field(), group.degree(), group.residue_generators(), degree);
}

template <Dvr D>
MultiPoly<typename D::Fraction> reynolds(const MatrixGroup<D>& group,
                                         const MultiPoly<typename D::Fraction>& f) {
  invert_group_order(group.dvr(), group.order());
  return average_over(group.elements(), f);
}

template <Dvr D>
MultiPoly<typename D::Residue> reynolds_residue(const MatrixGroup<D>& group,
                                                const MultiPoly<typename D::Residue>& f) {
  invert_group_order(group.dvr(), group.order());
  std::vector<Matrix<typename D::Residue>> reduced;
  reduced.reserve(group.elements().size());
  for (const auto& g : group.elements()) reduced.push_back(reduce_matrix(group.dvr(), g));
  return average_over(reduced, f);
}

template <FieldElement E>
std::vector<E> inverse_det_series(const Matrix<E>& g, std::uint32_t max_degree) {
  const auto& field = g.field();
  const std::size_t n = g.rows();
  // det(I - z g) = z^n chi(1/z): coefficient of z^j is chi_{n-j}.
  const auto chi = characteristic_polynomial(g);
  std::vector<E> q(n + 1, field.zero());
  for (std::size_t j = 0; j <= n; ++j) q[j] = chi[n - j];
  const E q0_inv = q[0].inverse();
  std::vector<E> a(max_degree + 1, field.zero());
  a[0] = q0_inv;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    E acc = field.zero();
    for (std::size_t i = 1; i <= std::min<std::size_t>(k, n); ++i) acc += q[i] * a[k - i];
    a[k] = -acc * q0_inv;
  }
  return a;
}

template <Dvr D>
MolienSeries<typename D::Fraction> molien_series(const MatrixGroup<D>& group,
                                                 std::uint32_t max_degree) {
  const auto inv = invert_group_order(group.dvr(), group.order());
  const auto field = group.dvr().fraction_field();
  MolienSeries<typename D::Fraction> out;
  out.truncation = max_degree;
  out.coefficients.assign(max_degree + 1, field.zero());
  for (const auto& g : group.elements()) {
    const auto s = inverse_det_series(g, max_degree);
    for (std::size_t k = 0; k <= max_degree; ++k) out.coefficients[k] += s[k];
  }
  for (auto& c : out.coefficients) c = inv * c;
  return out;
}

std::vector<std::int64_t> degree_product_series(const std::vector<std::uint32_t>& degrees,
                                                std::uint32_t max_degree) {
  std::vector<std::int64_t> s(max_degree + 1, 0);
  s[0] = 1;
  for (auto d : degrees) {
    if (d == 0) continue;
    for (std::size_t k = d; k <= max_degree; ++k) s[k] += s[k - d];
  }
  return s;
}

template GradedBasis<Rational> fixed_subspace(const RationalField&, std::size_t,
                                              const std::vector<Matrix<Rational>>&, std::uint32_t);
template GradedBasis<RatFunc> fixed_subspace(const RatFuncField&, std::size_t,
                                             const std::vector<Matrix<RatFunc>>&, std::uint32_t);
template GradedBasis<Fp> fixed_subspace(const PrimeField&, std::size_t,
                                        const std::vector<Matrix<Fp>>&, std::uint32_t);
template std::vector<Rational> inverse_det_series(const Matrix<Rational>&, std::uint32_t);
template std::vector<RatFunc> inverse_det_series(const Matrix<RatFunc>&, std::uint32_t);
template std::vector<Fp> inverse_det_series(const Matrix<Fp>&, std::uint32_t);

#define DVRINV_INSTANTIATE_INVARIANTS(D)                                                        \
  template MultiPoly<D::Fraction> primitive_polynomial(const D&, const MultiPoly<D::Fraction>&); \
  template GradedBasis<D::Fraction> invariant_basis_fraction(const MatrixGroup<D>&,             \
                                                             std::uint32_t);                    \
  template GradedBasis<D::Residue> invariant_basis_residue(const MatrixGroup<D>&,               \
                                                           std::uint32_t);                      \
  template MultiPoly<D::Fraction> reynolds(const MatrixGroup<D>&, const MultiPoly<D::Fraction>&); \
  template MultiPoly<D::Residue> reynolds_residue(const MatrixGroup<D>&,                        \
                                                  const MultiPoly<D::Residue>&);                \
  template MolienSeries<D::Fraction> molien_series(const MatrixGroup<D>&, std::uint32_t);

DVRINV_INSTANTIATE_INVARIANTS(IntegerDvr)
DVRINV_INSTANTIATE_INVARIANTS(PolynomialDvr)

}  // namespace dvrinv
