#pragma once

#include <cstdint>
#include <vector>

#include "dvrinv/dvr.hpp"
#include "dvrinv/group.hpp"
#include "dvrinv/polynomial.hpp"

namespace dvrinv {

enum class FieldTag { Fraction, Residue };

template <FieldElement E>
struct GradedBasis {
  std::uint32_t degree = 0;
  std::vector<MultiPoly<E>> polys;  // homogeneous of `degree`, linearly independent
};

// Fixed subspace of R_d under the group generated by `generators`: the
// common kernel of (A_g - I) over the generators only.
template <FieldElement E>
GradedBasis<E> fixed_subspace(const typename E::Field& field, std::size_t n,
                              const std::vector<Matrix<E>>& generators, std::uint32_t degree);

// Rescales f by a power of pi so its coefficients lie in O with one a unit.
template <Dvr D>
MultiPoly<typename D::Fraction> primitive_polynomial(const D& dvr,
                                                     const MultiPoly<typename D::Fraction>& f);

// Invariants of degree d over K, each scaled primitive.
template <Dvr D>
GradedBasis<typename D::Fraction> invariant_basis_fraction(const MatrixGroup<D>& group,
                                                           std::uint32_t degree);

// Invariants of degree d over k for the reduced generators.
template <Dvr D>
GradedBasis<typename D::Residue> invariant_basis_residue(const MatrixGroup<D>& group,
                                                         std::uint32_t degree);

template <Dvr D>
std::size_t invariant_dimension(const MatrixGroup<D>& group, std::uint32_t degree, FieldTag tag) {
  return tag == FieldTag::Fraction ? invariant_basis_fraction(group, degree).polys.size()
                                   : invariant_basis_residue(group, degree).polys.size();
}

// (1/|G|) sum_g act(g, f) over an explicit element list.
template <FieldElement E>
MultiPoly<E> average_over(const std::vector<Matrix<E>>& elements, const MultiPoly<E>& f) {
  const auto& field = f.field();
  MultiPoly<E> sum(field, f.nvars());
  for (const auto& g : elements) sum += act(g, f);
  return field.from_int(static_cast<std::int64_t>(elements.size())).inverse() * sum;
}

// Reynolds operator over K (coefficients stay in O when f does).
template <Dvr D>
MultiPoly<typename D::Fraction> reynolds(const MatrixGroup<D>& group,
                                         const MultiPoly<typename D::Fraction>& f);

// Reynolds operator over k for the reduced group.
template <Dvr D>
MultiPoly<typename D::Residue> reynolds_residue(const MatrixGroup<D>& group,
                                                const MultiPoly<typename D::Residue>& f);

// Coefficients of 1/det(I - z g) up to z^D.
template <FieldElement E>
std::vector<E> inverse_det_series(const Matrix<E>& g, std::uint32_t max_degree);

template <FieldElement E>
struct MolienSeries {
  std::uint32_t truncation = 0;
  std::vector<E> coefficients;  // c_0..c_D
};

// (1/|G|) sum_g 1/det(I - z g) truncated at z^D, computed in K. Over
// F_p(t) the coefficients are only determined modulo p.
template <Dvr D>
MolienSeries<typename D::Fraction> molien_series(const MatrixGroup<D>& group,
                                                 std::uint32_t max_degree);

// Truncation of prod_i (1 - z^{d_i})^-1.
std::vector<std::int64_t> degree_product_series(const std::vector<std::uint32_t>& degrees,
                                                std::uint32_t max_degree);

}  // namespace dvrinv
