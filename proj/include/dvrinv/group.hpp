#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dvrinv/dvr.hpp"
#include "dvrinv/matrix.hpp"

namespace dvrinv {

inline constexpr std::size_t kDefaultClosureCap = 20000;

// Breadth-first closure of a generating set under left multiplication.
// Element 0 is the identity; element i > 0 equals
// generators[via_generator[i]] * elements[parent[i]].
template <FieldElement E>
struct Closure {
  std::vector<Matrix<E>> generators;  // sorted, deduplicated
  std::vector<Matrix<E>> elements;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via_generator;
  // left_table[s][i] = index of generators[s] * elements[i]
  std::vector<std::vector<std::size_t>> left_table;
};

template <FieldElement E>
Closure<E> enumerate_closure(const typename E::Field& field, std::size_t n,
                             std::vector<Matrix<E>> generators, std::size_t cap) {
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n) throw ShapeError("generator is not " + std::to_string(n) + "x" + std::to_string(n));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Closure<E> out;
  out.generators = std::move(generators);
  std::map<Matrix<E>, std::size_t> index;
  out.elements.push_back(Matrix<E>::identity(field, n));
  out.parent.push_back(0);
  out.via_generator.push_back(0);
  index.emplace(out.elements[0], 0);
  out.left_table.assign(out.generators.size(), {});

  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t s = 0; s < out.generators.size(); ++s) {
      Matrix<E> next = out.generators[s] * out.elements[head];
      auto it = index.find(next);
      std::size_t id;
      if (it == index.end()) {
        if (out.elements.size() >= cap) {
          throw CapExceeded("group too large or infinite: closure exceeds cap " + std::to_string(cap));
        }
        id = out.elements.size();
        index.emplace(next, id);
        out.elements.push_back(std::move(next));
        out.parent.push_back(head);
        out.via_generator.push_back(s);
      } else {
        id = it->second;
      }
      out.left_table[s].push_back(id);
    }
  }
  return out;
}

// Finite subgroup of GL_n(O), fully enumerated.
template <Dvr D>
class MatrixGroup {
 public:
  using Fraction = typename D::Fraction;
  using Residue = typename D::Residue;

  MatrixGroup(D dvr, std::size_t n, Closure<Fraction> closure)
      : dvr_(std::move(dvr)), n_(n), closure_(std::move(closure)) {}

  const D& dvr() const { return dvr_; }
  std::size_t degree() const { return n_; }
  std::uint64_t order() const { return closure_.elements.size(); }
  const std::vector<Matrix<Fraction>>& generators() const { return closure_.generators; }
  const std::vector<Matrix<Fraction>>& elements() const { return closure_.elements; }
  const Closure<Fraction>& closure() const { return closure_; }

  std::vector<Matrix<Residue>> residue_generators() const;
  bool contains(const Matrix<Fraction>& m) const;

 private:
  D dvr_;
  std::size_t n_;
  Closure<Fraction> closure_;
};

template <Dvr D>
Matrix<typename D::Residue> reduce_matrix(const D& dvr, const Matrix<typename D::Fraction>& m) {
  return map_entries<typename D::Residue>(m, dvr.residue_field(),
                                          [&](const auto& x) { return dvr.reduce(x); });
}

template <Dvr D>
bool is_integral(const D& dvr, const Matrix<typename D::Fraction>& m) {
  for (const auto& x : m.entries())
    if (!dvr.is_integral(x)) return false;
  return true;
}

// Inverse over O; requires a unit determinant.
template <Dvr D>
Matrix<typename D::Fraction> inverse_over_ring(const D& dvr, const Matrix<typename D::Fraction>& m);

// Throws NotInRing / NotInvertible naming the offending generator.
template <Dvr D>
MatrixGroup<D> generate_group(const D& dvr, std::size_t n,
                              std::vector<Matrix<typename D::Fraction>> generators,
                              std::size_t cap = kDefaultClosureCap);

template <FieldElement E>
struct ReflectionData {
  E lambda;
  std::uint64_t order = 0;
};

// Pseudo-reflection test: rank(M - I) = 1 over the field of the entries.
template <FieldElement E>
std::optional<ReflectionData<E>> pseudo_reflection(const Matrix<E>& m,
                                                   std::uint64_t cap = kDefaultClosureCap) {
  if (!m.is_square()) throw ShapeError("pseudo-reflection test needs a square matrix");
  const auto diff = m - Matrix<E>::identity(m.field(), m.rows());
  if (rank(diff) != 1) return std::nullopt;
  return ReflectionData<E>{det(m), matrix_order(m, cap)};
}

template <FieldElement E>
struct ReflectionReport {
  struct Entry {
    std::size_t index;  // position in the element list
    E lambda;
    std::uint64_t order;
  };
  std::vector<Entry> reflections;
  bool generated_by_reflections = false;
  bool vacuous = false;  // trivial group
};

template <FieldElement E>
ReflectionReport<E> classify_elements(const typename E::Field& field, std::size_t n,
                                      const std::vector<Matrix<E>>& elements);

template <Dvr D>
ReflectionReport<typename D::Fraction> classify_reflections(const MatrixGroup<D>& group) {
  return classify_elements(group.dvr().fraction_field(), group.degree(), group.elements());
}

template <Dvr D>
struct ReductionResult {
  std::vector<Matrix<typename D::Residue>> images;
  bool injective = false;
};

// The reduction map G -> GL_n(O/pi O). Gated on |G| being a unit of O;
// injectivity is measured, not assumed.
template <Dvr D>
ReductionResult<D> reduction_map(const MatrixGroup<D>& group);

struct ReducedReflectionCheck {
  std::size_t image_order = 0;
  std::size_t reflection_count = 0;
  bool generated_by_reflections = false;
};

// Classifies pseudo-reflections among the reduced images (rank over the
// residue field) and checks that they generate the image group.
template <Dvr D>
ReducedReflectionCheck verify_reduced_reflection_generation(const MatrixGroup<D>& group);

}  // namespace dvrinv
