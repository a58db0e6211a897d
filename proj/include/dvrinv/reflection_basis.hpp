#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dvrinv/dvr.hpp"
#include "dvrinv/group.hpp"
#include "dvrinv/matrix.hpp"

namespace dvrinv {

// Scales v by pi^(-nu), nu the least coordinate valuation, so the result lies
// in O^n with at least one unit coordinate. Throws on the zero vector.
template <Dvr D>
Vector<typename D::Fraction> primitive_vector(const D& dvr, const Vector<typename D::Fraction>& v);

// Completes a primitive vector w to an O-basis: columns are w followed by the
// standard vectors e_j, j != pivot, where pivot is the lowest index with a
// unit coordinate. The determinant is +-w[pivot], a unit.
template <Dvr D>
Matrix<typename D::Fraction> unimodular_completion(const D& dvr,
                                                   const Vector<typename D::Fraction>& w);

template <Dvr D>
struct QuotientAction {
  Matrix<typename D::Fraction> completion;  // columns w1, e_j...
  // completion^-1 * sigma * completion = [[1, top_row], [0, induced]]
  Vector<typename D::Fraction> top_row;
  Matrix<typename D::Fraction> induced;
};

// Action of sigma on O^n / O w1 in the basis given by unimodular_completion.
// Requires w1 primitive and fixed by sigma.
template <Dvr D>
QuotientAction<D> quotient_action(const D& dvr, const Matrix<typename D::Fraction>& sigma,
                                  const Vector<typename D::Fraction>& w1);

template <Dvr D>
struct DiagonalizingBasis {
  // Columns w_1..w_n; sigma w_i = w_i for i < n and sigma w_n = lambda w_n.
  Matrix<typename D::Fraction> basis;
  typename D::Fraction lambda;
  std::uint64_t order = 0;         // ord(sigma)
  std::uint64_t lambda_order = 0;  // ord(lambda) in O^x
  bool verified = false;
  std::vector<std::string> issues;  // empty when verified
};

// Builds an O-basis adapted to the pseudo-reflection sigma, following the
// induction on n: fix a primitive vector w1, pass to the quotient by O w1,
// recurse, pull back, and correct the last vector by (a/(lambda-1)) w1.
// The vanishing of the pulled-back coefficients on the fixed vectors is
// checked, not assumed. Requires group_order to be a unit of O.
template <Dvr D>
DiagonalizingBasis<D> diagonalizing_basis(const D& dvr, const Matrix<typename D::Fraction>& sigma,
                                          std::uint64_t group_order);

template <Dvr D>
DiagonalizingBasis<D> diagonalizing_basis(const MatrixGroup<D>& group,
                                          const Matrix<typename D::Fraction>& sigma) {
  return diagonalizing_basis(group.dvr(), sigma, group.order());
}

// Re-applies sigma to every basis vector and checks the eigen-relations,
// integrality, det(T) a unit, lambda = det(sigma), lambda != 1, lambda^m = 1
// and ord(lambda) = ord(sigma). Returns the list of failures.
template <Dvr D>
std::vector<std::string> verify_diagonalizing_basis(const D& dvr,
                                                    const Matrix<typename D::Fraction>& sigma,
                                                    const DiagonalizingBasis<D>& result);

}  // namespace dvrinv
