#include "dvrinv/certify.hpp"

#include <algorithm>
#include <bit>

#include "dvrinv/parallel.hpp"

namespace dvrinv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "certified";
    case Verdict::RefutedHypothesis:
      return "refuted-hypothesis";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::Complete:
      return "complete";
  }
  return "inconclusive";
}

namespace {

template <FieldElement E>
void collect_products(const std::vector<MultiPoly<E>>& gens, std::size_t idx, std::uint32_t remaining,
                      const MultiPoly<E>& current, std::vector<MultiPoly<E>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (idx == gens.size()) return;
  const auto d = static_cast<std::uint32_t>(gens[idx].degree());
  if (d == 0) throw ShapeError("generator of degree 0 in products_of_degree");
  MultiPoly<E> cur = current;
  for (std::uint32_t used = 0; used <= remaining; used += d) {
    collect_products(gens, idx + 1, remaining - used, cur, out);
    if (used + d > remaining) break;
    cur = cur * gens[idx];
  }
}

template <Dvr D>
bool is_integral_poly(const D& dvr, const MultiPoly<typename D::Fraction>& f) {
  for (const auto& [e, c] : f.terms())
    if (!dvr.is_integral(c)) return false;
  return true;
}

}  // namespace

template <FieldElement E>
std::vector<MultiPoly<E>> products_of_degree(const std::vector<MultiPoly<E>>& generators,
                                             std::uint32_t degree) {
  std::vector<MultiPoly<E>> out;
  if (generators.empty()) return out;
  const auto& first = generators.front();
  collect_products(generators, 0, degree,
                   MultiPoly<E>::constant(first.field(), first.nvars(), first.field().one()), out);
  return out;
}

template <FieldElement E>
FundamentalInvariants<E> fundamental_invariants(const typename E::Field& field, std::size_t n,
                                                const std::vector<Matrix<E>>& group_generators,
                                                std::uint64_t group_order,
                                                std::size_t reflection_count,
                                                std::uint32_t degree_bound, FieldTag tag) {
  FundamentalInvariants<E> out;
  out.field_tag = tag;
  out.degree_bound = degree_bound;
  bool overflow = false;
  for (std::uint32_t d = 1; d <= degree_bound; ++d) {
    const auto invariants = fixed_subspace(field, n, group_generators, d);
    if (invariants.polys.empty()) continue;
    const MonomialBasis basis(n, d);
    IncrementalEchelon<E> span(field, basis.size());
    for (const auto& prod : products_of_degree(out.generators, d)) span.insert(coefficient_vector(prod, basis));
    if (span.rank() > invariants.polys.size()) {
      throw ConsistencyError("products of invariants exceed the invariant space in degree " +
                             std::to_string(d));
    }
    for (const auto& f : invariants.polys) {
      if (span.rank() == invariants.polys.size()) break;
      auto fresh = span.insert(coefficient_vector(f, basis));
      if (!fresh) continue;
      if (out.generators.size() >= n && !overflow) {
        overflow = true;
        out.issues.push_back("degree " + std::to_string(d) + " needs a generator beyond the first n = " +
                             std::to_string(n) + "; the invariant ring is not polynomial on these generators");
      }
      out.generators.push_back(from_coefficients(field, basis, *fresh));
      out.degrees.push_back(d);
    }
  }

  out.complete = out.generators.size() == n;
  if (out.generators.size() < n) {
    out.issues.push_back("inconclusive: search exhausted degree " + std::to_string(degree_bound) +
                         " with " + std::to_string(out.generators.size()) + " of " + std::to_string(n) +
                         " generators; raise the degree bound");
  }
  std::uint64_t product = 1;
  std::size_t excess = 0;
  for (auto d : out.degrees) {
    product *= d;
    excess += d - 1;
  }
  out.degree_product_ok = out.complete && product == group_order;
  out.reflection_sum_ok = out.complete && excess == reflection_count;
  if (out.complete && !out.degree_product_ok) {
    out.issues.push_back("product of degrees " + std::to_string(product) + " != |G| = " +
                         std::to_string(group_order));
  }
  if (out.complete && !out.reflection_sum_ok) {
    out.issues.push_back("sum of (d_i - 1) = " + std::to_string(excess) + " != reflection count " +
                         std::to_string(reflection_count));
  }
  if (out.complete) {
    out.jacobian_ok = jacobian_independence(out.generators).independent;
    if (!out.jacobian_ok) out.issues.push_back("Jacobian determinant vanishes identically");
  }
  out.generation_ok = out.complete && !overflow;
  return out;
}

template <Dvr D>
FundamentalInvariants<typename D::Fraction> fundamental_invariants_fraction(const MatrixGroup<D>& group,
                                                                            std::uint32_t degree_bound) {
  invert_group_order(group.dvr(), group.order());
  const auto refl = classify_reflections(group);
  auto out = fundamental_invariants(group.dvr().fraction_field(), group.degree(), group.generators(),
                                    group.order(), refl.reflections.size(), degree_bound,
                                    FieldTag::Fraction);
  for (auto& f : out.generators) f = primitive_polynomial(group.dvr(), f);
  return out;
}

template <Dvr D>
FundamentalInvariants<typename D::Residue> fundamental_invariants_residue(const MatrixGroup<D>& group,
                                                                          std::uint32_t degree_bound) {
  const auto reduced = verify_reduced_reflection_generation(group);
  return fundamental_invariants(group.dvr().residue_field(), group.degree(), group.residue_generators(),
                                reduced.image_order, reduced.reflection_count, degree_bound,
                                FieldTag::Residue);
}

template <FieldElement E>
JacobianResult<E> jacobian_independence(const std::vector<MultiPoly<E>>& polys) {
  JacobianResult<E> out;
  if (polys.empty()) return out;
  const std::size_t n = polys.front().nvars();
  const auto field = polys.front().field();
  out.determinant = MultiPoly<E>(field, n);
  if (polys.size() != n || n > 20) return out;
  std::vector<std::vector<MultiPoly<E>>> jac(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(polys[i].derivative(j));

  // Row-by-row expansion over column subsets.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<MultiPoly<E>> partial(full + 1, MultiPoly<E>(field, n));
  partial[0] = MultiPoly<E>::constant(field, n, field.one());
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (partial[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (jac[row][j].is_zero()) continue;
      const bool negate = std::popcount(mask >> (j + 1)) % 2 == 1;
      MultiPoly<E> term = jac[row][j] * partial[mask];
      partial[mask | (std::size_t{1} << j)] += negate ? (-field.one()) * term : term;
    }
  }
  out.determinant = partial[full];
  out.independent = !out.determinant.is_zero();
  return out;
}

template <Dvr D>
std::vector<GradedRow> graded_isomorphism_check(const MatrixGroup<D>& group, std::uint32_t degree_bound) {
  invert_group_order(group.dvr(), group.order());
  std::vector<GradedRow> rows(degree_bound + 1);
  parallel_for(rows.size(), [&](std::size_t d) {
    const auto deg = static_cast<std::uint32_t>(d);
    rows[d] = {deg, invariant_dimension(group, deg, FieldTag::Fraction),
               invariant_dimension(group, deg, FieldTag::Residue)};
  });
  return rows;
}

template <FieldElement E, FieldElement G>
std::size_t h1_dimension(const typename E::Field& field, std::size_t n, const Closure<G>& closure,
                         const std::vector<Matrix<E>>& generators, std::uint32_t degree) {
  const std::size_t k = generators.size();
  if (k != closure.generators.size()) throw ShapeError("generator lists do not match the closure");
  if (k == 0) return 0;
  const MonomialBasis basis(n, degree);
  const std::size_t dim = basis.size();
  const std::size_t unknowns = k * dim;
  std::vector<Matrix<E>> actions;
  actions.reserve(k);
  for (const auto& g : generators) actions.push_back(action_matrix(g, basis));

  auto selector = [&](std::size_t s) {
    Matrix<E> m(field, dim, unknowns);
    for (std::size_t i = 0; i < dim; ++i) m(i, s * dim + i) = field.one();
    return m;
  };
  std::vector<Matrix<E>> selectors;
  for (std::size_t s = 0; s < k; ++s) selectors.push_back(selector(s));

  // c(g) = words[g] * (c(s_1), ..., c(s_k)), from c(s h) = c(s) + s c(h).
  const std::size_t order = closure.elements.size();
  std::vector<Matrix<E>> words(order, Matrix<E>(field, dim, unknowns));
  for (std::size_t i = 1; i < order; ++i) {
    const std::size_t s = closure.via_generator[i];
    words[i] = selectors[s] + actions[s] * words[closure.parent[i]];
  }

  std::vector<Vector<E>> constraints;
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t j = closure.left_table[s][i];
      const Matrix<E> r = words[j] - selectors[s] - actions[s] * words[i];
      for (std::size_t row = 0; row < dim; ++row) {
        Vector<E> v = r.row(row);
        if (!IncrementalEchelon<E>::is_zero_vector(v)) constraints.push_back(std::move(v));
      }
    }
  }
  std::size_t cocycles = unknowns;
  if (!constraints.empty()) cocycles -= rank(Matrix<E>::from_rows(field, constraints));
  const std::size_t fixed = fixed_subspace(field, n, generators, degree).polys.size();
  const std::size_t coboundaries = dim - fixed;
  if (cocycles < coboundaries) throw ConsistencyError("coboundaries exceed cocycles");
  return cocycles - coboundaries;
}

template <Dvr D>
std::size_t h1_dimension(const MatrixGroup<D>& group, std::uint32_t degree, FieldTag tag) {
  if (tag == FieldTag::Fraction) {
    return h1_dimension(group.dvr().fraction_field(), group.degree(), group.closure(), group.generators(),
                        degree);
  }
  return h1_dimension(group.dvr().residue_field(), group.degree(), group.closure(),
                      group.residue_generators(), degree);
}

template <Dvr D>
LiftResult<D> lift_fundamentals(const MatrixGroup<D>& group,
                                const FundamentalInvariants<typename D::Residue>& residue_invariants) {
  using K = typename D::Fraction;
  using k = typename D::Residue;
  const auto& dvr = group.dvr();
  const auto kf = dvr.fraction_field();
  const auto rf = dvr.residue_field();
  const std::size_t n = group.degree();
  const auto& gens = residue_invariants.generators;

  LiftResult<D> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& target = gens[i];
    const auto d = static_cast<std::uint32_t>(target.degree());
    const MonomialBasis basis(n, d);
    IncrementalEchelon<k> lower(rf, basis.size());
    const std::vector<MultiPoly<k>> earlier(gens.begin(), gens.begin() + static_cast<long>(i));
    for (const auto& prod : products_of_degree(earlier, d)) lower.insert(coefficient_vector(prod, basis));

    std::vector<MultiPoly<K>> candidates;
    candidates.push_back(map_coefficients<K>(target, kf, [&](const k& c) { return dvr.lift(c); }));
    for (const auto& [e, c] : target.terms()) candidates.push_back(MultiPoly<K>::monomial(kf, e, dvr.lift(c)));

    bool accepted = false;
    for (const auto& cand : candidates) {
      const auto lifted = reynolds(group, cand);
      if (!is_integral_poly(dvr, lifted)) continue;
      const auto reduced = map_coefficients<k>(lifted, rf, [&](const K& c) { return dvr.reduce(c); });
      if (reduced.is_zero()) continue;  // valuation drop
      const auto rv = coefficient_vector(reduced, basis);
      if (lower.contains(rv)) continue;
      IncrementalEchelon<k> with_target = lower;
      with_target.insert(coefficient_vector(target, basis));
      if (!with_target.contains(rv)) continue;
      out.lifts.push_back(lifted);
      accepted = true;
      break;
    }
    out.lifted.push_back(accepted);
    if (!accepted) {
      out.lifts.push_back(MultiPoly<K>(kf, n));
      out.issues.push_back("inconclusive: no monomial preimage of generator " + std::to_string(i + 1) +
                           " lifts to an O-invariant with matching reduction");
    }
  }

  out.invariant_over_ring = true;
  for (const auto& f : out.lifts) {
    if (f.is_zero() || !is_integral_poly(dvr, f)) {
      out.invariant_over_ring = false;
      continue;
    }
    for (const auto& g : group.generators())
      if (!(act(g, f) == f)) out.invariant_over_ring = false;
  }
  if (!out.invariant_over_ring) out.issues.push_back("a lift is not a G-invariant over O");
  out.jacobian_ok = out.lifts.size() == n && jacobian_independence(out.lifts).independent;
  if (!out.jacobian_ok) out.issues.push_back("lifted generators are not algebraically independent over K");
  out.verified = !gens.empty() && std::all_of(out.lifted.begin(), out.lifted.end(), [](bool b) { return b; }) &&
                 out.invariant_over_ring && out.jacobian_ok;
  return out;
}

template <Dvr D>
RegularityCertificate<D> analyze(const MatrixGroup<D>& group, std::uint32_t degree_bound,
                                 const CheckSet& checks) {
  RegularityCertificate<D> cert;
  const auto& dvr = group.dvr();
  const auto kf = dvr.fraction_field();
  const bool full = checks.certify;
  cert.group_order = group.order();
  cert.n = group.degree();
  cert.degree_bound = degree_bound;
  cert.h1_bound = std::min<std::uint32_t>(degree_bound, 5);

  try {
    invert_group_order(dvr, group.order());
    cert.hypothesis_ok = true;
  } catch (const HypothesisViolation& e) {
    cert.hypothesis_message = e.what();
  }

  auto run_h1 = [&] {
    cert.h1.assign(cert.h1_bound + 1, {});
    parallel_for(cert.h1.size(), [&](std::size_t d) {
      const auto deg = static_cast<std::uint32_t>(d);
      cert.h1[d] = {deg, h1_dimension(group, deg, FieldTag::Fraction),
                    h1_dimension(group, deg, FieldTag::Residue)};
    });
  };

  if (full || checks.reflections || checks.basis || checks.invariants) {
    cert.reflections = classify_reflections(group);
  }
  const bool needs_hypothesis =
      full || checks.eta || checks.basis || checks.molien || checks.invariants || checks.graded;
  if (!cert.hypothesis_ok && needs_hypothesis) {
    cert.verdict = Verdict::RefutedHypothesis;
    cert.notes.push_back(cert.hypothesis_message);
    if (checks.h1) run_h1();
    return cert;
  }

  if (full || checks.eta) {
    cert.eta_injective = reduction_map(group).injective;
    cert.reduced = verify_reduced_reflection_generation(group);
  }
  if (full && !cert.reflections->generated_by_reflections) {
    cert.verdict = Verdict::Inconclusive;
    cert.notes.push_back("G is not generated by pseudo-reflections over K; polynomiality over O is not predicted");
    return cert;
  }

  if (full || checks.basis) {
    for (const auto& entry : cert.reflections->reflections) {
      const auto& sigma = group.elements()[entry.index];
      try {
        cert.bases.push_back(diagonalizing_basis(group, sigma));
      } catch (const Error& e) {
        DiagonalizingBasis<D> failed;
        failed.basis = Matrix<typename D::Fraction>::identity(kf, group.degree());
        failed.lambda = entry.lambda;
        failed.order = entry.order;
        failed.issues.push_back(e.what());
        cert.bases.push_back(std::move(failed));
      }
    }
  }

  if (full || checks.invariants) {
    cert.fundamental_residue = fundamental_invariants_residue(group, degree_bound);
    cert.fundamental_fraction = fundamental_invariants_fraction(group, degree_bound);
    cert.degrees_agree = cert.fundamental_residue->degrees == cert.fundamental_fraction->degrees;
  }

  if (full || checks.graded) cert.graded_table = graded_isomorphism_check(group, degree_bound);

  if (full || checks.molien) {
    cert.molien = molien_series(group, degree_bound);
    const auto& c = cert.molien->coefficients;
    if (cert.fundamental_residue && cert.fundamental_residue->complete) {
      cert.hilbert = degree_product_series(cert.fundamental_residue->degrees, degree_bound);
      bool match = true;
      for (std::size_t d = 0; d <= degree_bound; ++d) match = match && c[d] == kf.from_int(cert.hilbert[d]);
      cert.molien_matches_hilbert = match;
    }
    std::vector<std::size_t> dims(degree_bound + 1);
    if (cert.graded_table.size() == dims.size()) {
      for (std::size_t d = 0; d < dims.size(); ++d) dims[d] = cert.graded_table[d].dim_fraction;
    } else {
      parallel_for(dims.size(), [&](std::size_t d) {
        dims[d] = invariant_dimension(group, static_cast<std::uint32_t>(d), FieldTag::Fraction);
      });
    }
    bool match = true;
    for (std::size_t d = 0; d < dims.size(); ++d)
      match = match && c[d] == kf.from_int(static_cast<std::int64_t>(dims[d]));
    cert.molien_matches_dimensions = match;
  }

  if (full || checks.h1) run_h1();

  if (full) {
    const bool graded_ok = std::all_of(cert.graded_table.begin(), cert.graded_table.end(),
                                       [](const GradedRow& r) { return r.equal(); });
    if (cert.fundamental_residue->complete && graded_ok) {
      cert.lift = lift_fundamentals(group, *cert.fundamental_residue);
    } else {
      cert.notes.push_back("lift skipped: residue generators incomplete or graded dimensions differ");
    }
  }

  if (!full) {
    cert.verdict = Verdict::Complete;
    return cert;
  }

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) cert.notes.push_back("failed: " + what);
    return ok;
  };
  bool ok = true;
  ok &= require(*cert.eta_injective, "reduction map is not injective");
  ok &= require(cert.reduced->generated_by_reflections, "reduced group is not generated by pseudo-reflections");
  for (std::size_t i = 0; i < cert.bases.size(); ++i)
    ok &= require(cert.bases[i].verified, "diagonalizing basis for reflection " + std::to_string(i));
  for (const auto& issue : cert.fundamental_residue->issues) cert.notes.push_back("k: " + issue);
  for (const auto& issue : cert.fundamental_fraction->issues) cert.notes.push_back("K: " + issue);
  ok &= require(cert.fundamental_residue->certified(), "fundamental invariants over k");
  ok &= require(cert.fundamental_fraction->certified(), "fundamental invariants over K");
  ok &= require(*cert.degrees_agree, "fundamental degrees over k and K differ");
  for (const auto& row : cert.graded_table)
    ok &= require(row.equal(), "graded dimension mismatch in degree " + std::to_string(row.degree));
  ok &= require(cert.molien_matches_hilbert.value_or(false), "Molien series vs degree product series");
  ok &= require(cert.molien_matches_dimensions.value_or(false), "Molien series vs invariant dimensions");
  for (const auto& row : cert.h1)
    ok &= require(row.dim_fraction == 0 && row.dim_residue == 0,
                  "H^1 nonzero in degree " + std::to_string(row.degree));
  ok &= require(cert.lift && cert.lift->verified, "lift of residue generators to O");
  if (cert.lift)
    for (const auto& issue : cert.lift->issues) cert.notes.push_back("lift: " + issue);
  cert.verdict = ok ? Verdict::Certified : Verdict::Inconclusive;
  return cert;
}

#define DVRINV_INSTANTIATE_FIELD(E)                                                              \
  template std::vector<MultiPoly<E>> products_of_degree(const std::vector<MultiPoly<E>>&,       \
                                                        std::uint32_t);                          \
  template FundamentalInvariants<E> fundamental_invariants(                                      \
      const E::Field&, std::size_t, const std::vector<Matrix<E>>&, std::uint64_t, std::size_t,   \
      std::uint32_t, FieldTag);                                                                  \
  template JacobianResult<E> jacobian_independence(const std::vector<MultiPoly<E>>&);           \
  template std::size_t h1_dimension(const E::Field&, std::size_t, const Closure<Rational>&,      \
                                    const std::vector<Matrix<E>>&, std::uint32_t);               \
  template std::size_t h1_dimension(const E::Field&, std::size_t, const Closure<RatFunc>&,       \
                                    const std::vector<Matrix<E>>&, std::uint32_t);               \
  template std::size_t h1_dimension(const E::Field&, std::size_t, const Closure<Fp>&,            \
                                    const std::vector<Matrix<E>>&, std::uint32_t);

DVRINV_INSTANTIATE_FIELD(Rational)
DVRINV_INSTANTIATE_FIELD(RatFunc)
DVRINV_INSTANTIATE_FIELD(Fp)

#define DVRINV_INSTANTIATE_CERTIFY(D)                                                            \
  template FundamentalInvariants<D::Fraction> fundamental_invariants_fraction(                   \
      const MatrixGroup<D>&, std::uint32_t);                                                     \
  template FundamentalInvariants<D::Residue> fundamental_invariants_residue(                     \
      const MatrixGroup<D>&, std::uint32_t);                                                     \
  template std::vector<GradedRow> graded_isomorphism_check(const MatrixGroup<D>&, std::uint32_t); \
  template std::size_t h1_dimension(const MatrixGroup<D>&, std::uint32_t, FieldTag);             \
  template LiftResult<D> lift_fundamentals(const MatrixGroup<D>&,                                \
                                           const FundamentalInvariants<D::Residue>&);            \
  template RegularityCertificate<D> analyze(const MatrixGroup<D>&, std::uint32_t, const CheckSet&);

DVRINV_INSTANTIATE_CERTIFY(IntegerDvr)
DVRINV_INSTANTIATE_CERTIFY(PolynomialDvr)

}  // namespace dvrinv
