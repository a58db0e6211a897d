#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dvrinv/group.hpp"
#include "dvrinv/invariants.hpp"
#include "dvrinv/reflection_basis.hpp"

namespace dvrinv {

// Echelon basis of a growing subspace of E^dim; rows are kept sorted by
// pivot with pivot entry 1.
template <FieldElement E>
class IncrementalEchelon {
 public:
  IncrementalEchelon(typename E::Field field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

  // Remainder of v after elimination against the current rows.
  Vector<E> reduce(Vector<E> v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      const E f = v[pivot];
      for (std::size_t j = pivot; j < dim_; ++j)
        if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const Vector<E>& v) const { return is_zero_vector(reduce(v)); }

  // Adds v if it is independent; returns the normalized remainder that was
  // inserted, or nullopt if v was already in the span.
  std::optional<Vector<E>> insert(const Vector<E>& v) {
    Vector<E> r = reduce(v);
    std::size_t pivot = 0;
    while (pivot < dim_ && r[pivot].is_zero()) ++pivot;
    if (pivot == dim_) return std::nullopt;
    const E inv = r[pivot].inverse();
    for (auto& x : r) x = x * inv;
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->first < pivot) ++pos;
    rows_.insert(pos, {pivot, r});
    return r;
  }

  static bool is_zero_vector(const Vector<E>& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  typename E::Field field_;
  std::size_t dim_;
  std::vector<std::pair<std::size_t, Vector<E>>> rows_;
};

// All products prod f_i^{e_i} of total degree `degree`, generators taken in
// order; used to measure the subalgebra they generate in each degree.
template <FieldElement E>
std::vector<MultiPoly<E>> products_of_degree(const std::vector<MultiPoly<E>>& generators,
                                             std::uint32_t degree);

template <FieldElement E>
struct FundamentalInvariants {
  FieldTag field_tag = FieldTag::Fraction;
  std::uint32_t degree_bound = 0;
  std::vector<MultiPoly<E>> generators;
  std::vector<std::uint32_t> degrees;  // ascending
  bool complete = false;               // exactly n generators found
  bool degree_product_ok = false;      // prod d_i = |G|
  bool reflection_sum_ok = false;      // sum (d_i - 1) = #reflections
  bool jacobian_ok = false;
  bool generation_ok = false;          // subalgebra fills every R^G_d, d <= bound
  std::vector<std::string> issues;

  bool certified() const {
    return complete && degree_product_ok && reflection_sum_ok && jacobian_ok && generation_ok;
  }
};

// Greedy degree-ascending search: at each degree the invariants not yet
// spanned by products of earlier generators contribute new generators,
// taken as echelon remainders in graded-lex coordinates.
template <FieldElement E>
FundamentalInvariants<E> fundamental_invariants(const typename E::Field& field, std::size_t n,
                                                const std::vector<Matrix<E>>& group_generators,
                                                std::uint64_t group_order,
                                                std::size_t reflection_count,
                                                std::uint32_t degree_bound, FieldTag tag);

template <Dvr D>
FundamentalInvariants<typename D::Fraction> fundamental_invariants_fraction(const MatrixGroup<D>& group,
                                                                            std::uint32_t degree_bound);
template <Dvr D>
FundamentalInvariants<typename D::Residue> fundamental_invariants_residue(const MatrixGroup<D>& group,
                                                                          std::uint32_t degree_bound);

template <FieldElement E>
struct JacobianResult {
  bool independent = false;
  MultiPoly<E> determinant;
};

// det(d f_i / d X_j) as a polynomial.
template <FieldElement E>
JacobianResult<E> jacobian_independence(const std::vector<MultiPoly<E>>& polys);

struct GradedRow {
  std::uint32_t degree;
  std::size_t dim_fraction;
  std::size_t dim_residue;
  bool equal() const { return dim_fraction == dim_residue; }
};

// dim (K[X])^G_d against dim (k[X])^G_d for d <= bound, computed
// independently. Gated on |G| invertible.
template <Dvr D>
std::vector<GradedRow> graded_isomorphism_check(const MatrixGroup<D>& group, std::uint32_t degree_bound);

// dim Z^1 - dim B^1 for G acting on the degree-d piece over the field of the
// generator matrices. Cocycles are parametrized by their values on the
// generators and propagated along the breadth-first words of `closure`;
// the cocycle identity is imposed for every (generator, element) pair.
// Valid whether or not |G| is invertible.
template <FieldElement E, FieldElement G>
std::size_t h1_dimension(const typename E::Field& field, std::size_t n, const Closure<G>& closure,
                         const std::vector<Matrix<E>>& generators, std::uint32_t degree);

template <Dvr D>
std::size_t h1_dimension(const MatrixGroup<D>& group, std::uint32_t degree, FieldTag tag);

template <Dvr D>
struct LiftResult {
  std::vector<MultiPoly<typename D::Fraction>> lifts;
  std::vector<bool> lifted;
  bool invariant_over_ring = false;
  bool jacobian_ok = false;
  bool verified = false;
  std::vector<std::string> issues;
};

// Lifts each residue generator by a coefficientwise preimage followed by the
// Reynolds operator over O; accepts a lift whose reduction is a unit multiple
// of the generator modulo products of the generators found before it.
template <Dvr D>
LiftResult<D> lift_fundamentals(const MatrixGroup<D>& group,
                                const FundamentalInvariants<typename D::Residue>& residue_invariants);

enum class Verdict { Certified, RefutedHypothesis, Inconclusive, Complete };
std::string to_string(Verdict v);

struct CheckSet {
  bool reflections = false;
  bool eta = false;
  bool basis = false;
  bool molien = false;
  bool invariants = false;
  bool graded = false;
  bool h1 = false;
  bool certify = false;

  static CheckSet all() { return {true, true, true, true, true, true, true, true}; }
};

template <Dvr D>
struct H1Row {
  std::uint32_t degree;
  std::size_t dim_fraction;
  std::size_t dim_residue;
};

template <Dvr D>
struct RegularityCertificate {
  using K = typename D::Fraction;
  using k = typename D::Residue;

  std::uint64_t group_order = 0;
  std::size_t n = 0;
  std::uint32_t degree_bound = 0;
  std::uint32_t h1_bound = 0;

  bool hypothesis_ok = false;
  std::string hypothesis_message;

  std::optional<ReflectionReport<K>> reflections;
  std::optional<bool> eta_injective;
  std::optional<ReducedReflectionCheck> reduced;
  std::vector<DiagonalizingBasis<D>> bases;  // parallel to reflections->reflections
  std::optional<FundamentalInvariants<k>> fundamental_residue;
  std::optional<FundamentalInvariants<K>> fundamental_fraction;
  std::optional<bool> degrees_agree;
  std::vector<GradedRow> graded_table;
  std::optional<MolienSeries<K>> molien;
  std::vector<std::int64_t> hilbert;  // from the residue fundamental degrees
  std::optional<bool> molien_matches_hilbert;
  std::optional<bool> molien_matches_dimensions;
  std::vector<H1Row<D>> h1;
  std::optional<LiftResult<D>> lift;

  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

// Runs the requested checks in dependency order; sub-check failures are
// recorded, not thrown.
template <Dvr D>
RegularityCertificate<D> analyze(const MatrixGroup<D>& group, std::uint32_t degree_bound,
                                 const CheckSet& checks);

template <Dvr D>
RegularityCertificate<D> certify(const MatrixGroup<D>& group, std::uint32_t degree_bound) {
  return analyze(group, degree_bound, CheckSet::all());
}

}  // namespace dvrinv
