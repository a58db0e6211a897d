#include "dvrinv/group.hpp"

#include <set>

#include "dvrinv/parallel.hpp"

namespace dvrinv {

template <Dvr D>
std::vector<Matrix<typename D::Residue>> MatrixGroup<D>::residue_generators() const {
  std::vector<Matrix<Residue>> out;
  out.reserve(generators().size());
  for (const auto& g : generators()) out.push_back(reduce_matrix(dvr_, g));
  return out;
}

template <Dvr D>
bool MatrixGroup<D>::contains(const Matrix<Fraction>& m) const {
  return std::find(elements().begin(), elements().end(), m) != elements().end();
}

template <Dvr D>
Matrix<typename D::Fraction> inverse_over_ring(const D& dvr, const Matrix<typename D::Fraction>& m) {
  if (!is_integral(dvr, m)) throw NotInRing("matrix has entries outside O");
  const auto d = det(m);
  if (d.is_zero()) throw NotInvertible("not invertible: matrix is singular");
  if (!dvr.is_unit(d)) {
    throw NotInvertible("not invertible over O: determinant " + dvr.format(d) + " has valuation " +
                        std::to_string(dvr.valuation(d)));
  }
  return inverse(m);
}

template <Dvr D>
MatrixGroup<D> generate_group(const D& dvr, std::size_t n,
                              std::vector<Matrix<typename D::Fraction>> generators, std::size_t cap) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& m = generators[g];
    if (!m.is_square() || m.rows() != n) {
      throw ShapeError("generator " + std::to_string(g) + " is not " + std::to_string(n) + "x" +
                       std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!dvr.is_integral(m(i, j))) {
          throw NotInRing("generator " + std::to_string(g) + " entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") = " + dvr.format(m(i, j)) + " is not in O");
        }
    const auto d = det(m);
    if (!dvr.is_unit(d)) {
      throw NotInvertible("generator " + std::to_string(g) + " is not in GL_n(O): determinant " +
                          dvr.format(d));
    }
  }
  auto closure = enumerate_closure(dvr.fraction_field(), n, std::move(generators), cap);
  return MatrixGroup<D>(dvr, n, std::move(closure));
}

template <FieldElement E>
ReflectionReport<E> classify_elements(const typename E::Field& field, std::size_t n,
                                      const std::vector<Matrix<E>>& elements) {
  std::vector<std::optional<ReflectionData<E>>> data(elements.size());
  parallel_for(elements.size(), [&](std::size_t i) {
    data[i] = pseudo_reflection(elements[i], elements.size());
  });

  ReflectionReport<E> report;
  std::vector<Matrix<E>> reflections;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!data[i]) continue;
    report.reflections.push_back({i, data[i]->lambda, data[i]->order});
    reflections.push_back(elements[i]);
  }
  if (elements.size() == 1) {
    report.vacuous = true;
    report.generated_by_reflections = true;
    return report;
  }
  const auto sub = enumerate_closure(field, n, std::move(reflections), elements.size() + 1);
  report.generated_by_reflections = sub.elements.size() == elements.size();
  return report;
}

template <Dvr D>
ReductionResult<D> reduction_map(const MatrixGroup<D>& group) {
  invert_group_order(group.dvr(), group.order());
  ReductionResult<D> out;
  out.images.reserve(group.elements().size());
  for (const auto& g : group.elements()) out.images.push_back(reduce_matrix(group.dvr(), g));
  std::set<Matrix<typename D::Residue>> distinct(out.images.begin(), out.images.end());
  out.injective = distinct.size() == out.images.size();
  return out;
}

template <Dvr D>
ReducedReflectionCheck verify_reduced_reflection_generation(const MatrixGroup<D>& group) {
  const auto reduced = reduction_map(group);
  std::set<Matrix<typename D::Residue>> distinct(reduced.images.begin(), reduced.images.end());
  std::vector<Matrix<typename D::Residue>> image(distinct.begin(), distinct.end());
  const auto report = classify_elements(group.dvr().residue_field(), group.degree(), image);
  return {image.size(), report.reflections.size(), report.generated_by_reflections};
}

#define DVRINV_INSTANTIATE_GROUP(D)                                                            \
  template class MatrixGroup<D>;                                                               \
  template Matrix<D::Fraction> inverse_over_ring(const D&, const Matrix<D::Fraction>&);        \
  template MatrixGroup<D> generate_group(const D&, std::size_t, std::vector<Matrix<D::Fraction>>, \
                                         std::size_t);                                         \
  template ReductionResult<D> reduction_map(const MatrixGroup<D>&);                           \
  template ReducedReflectionCheck verify_reduced_reflection_generation(const MatrixGroup<D>&);

DVRINV_INSTANTIATE_GROUP(IntegerDvr)
DVRINV_INSTANTIATE_GROUP(PolynomialDvr)

template ReflectionReport<Rational> classify_elements(const RationalField&, std::size_t,
                                                      const std::vector<Matrix<Rational>>&);
template ReflectionReport<RatFunc> classify_elements(const RatFuncField&, std::size_t,
                                                     const std::vector<Matrix<RatFunc>>&);
template ReflectionReport<Fp> classify_elements(const PrimeField&, std::size_t,
                                                const std::vector<Matrix<Fp>>&);

}  // namespace dvrinv
