#include "dvrinv/reflection_basis.hpp"

#include <algorithm>
#include <limits>

namespace dvrinv {

template <Dvr D>
Vector<typename D::Fraction> primitive_vector(const D& dvr, const Vector<typename D::Fraction>& v) {
  int nu = std::numeric_limits<int>::max();
  for (const auto& x : v)
    if (!x.is_zero()) nu = std::min(nu, dvr.valuation(x));
  if (nu == std::numeric_limits<int>::max()) throw Error("primitive vector of the zero vector");
  const auto scale = uniformizer_power(dvr, -nu);
  Vector<typename D::Fraction> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scale * x);
  return out;
}

template <Dvr D>
Matrix<typename D::Fraction> unimodular_completion(const D& dvr,
                                                   const Vector<typename D::Fraction>& w) {
  const std::size_t n = w.size();
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!dvr.is_integral(w[i])) throw NotInRing("vector to complete is not in O^n");
    if (pivot == n && dvr.is_unit(w[i])) pivot = i;
  }
  if (pivot == n) throw Error("vector to complete is not primitive");
  const auto field = dvr.fraction_field();
  std::vector<Vector<typename D::Fraction>> columns{w};
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    Vector<typename D::Fraction> e(n, field.zero());
    e[j] = field.one();
    columns.push_back(std::move(e));
  }
  return Matrix<typename D::Fraction>::from_columns(field, columns);
}

template <Dvr D>
QuotientAction<D> quotient_action(const D& dvr, const Matrix<typename D::Fraction>& sigma,
                                  const Vector<typename D::Fraction>& w1) {
  const std::size_t n = sigma.rows();
  if (!sigma.is_square() || w1.size() != n) throw ShapeError("quotient_action shape mismatch");
  if (n < 2) throw ShapeError("quotient_action needs n >= 2");
  if (!(sigma.apply(w1) == w1)) throw Error("w1 is not fixed by sigma");
  auto completion = unimodular_completion(dvr, w1);
  const auto s = inverse(completion) * sigma * completion;
  const auto field = dvr.fraction_field();
  for (std::size_t i = 1; i < n; ++i)
    if (!s(i, 0).is_zero()) throw ConsistencyError("quotient_action: w1 column is not e1");
  QuotientAction<D> out{completion, Vector<typename D::Fraction>(n - 1, field.zero()),
                        Matrix<typename D::Fraction>(field, n - 1, n - 1)};
  for (std::size_t j = 1; j < n; ++j) {
    out.top_row[j - 1] = s(0, j);
    for (std::size_t i = 1; i < n; ++i) out.induced(i - 1, j - 1) = s(i, j);
  }
  if (!is_integral(dvr, out.induced)) throw ConsistencyError("quotient action left O");
  return out;
}

namespace {

template <Dvr D>
Matrix<typename D::Fraction> adapted_basis(const D& dvr, const Matrix<typename D::Fraction>& sigma,
                                           const typename D::Fraction& lambda) {
  using K = typename D::Fraction;
  const auto field = dvr.fraction_field();
  const std::size_t n = sigma.rows();
  if (n == 1) {
    if (!(sigma(0, 0) == lambda)) throw ConsistencyError("1x1 block is not lambda");
    return Matrix<K>::identity(field, 1);
  }
  const auto fixed = kernel(sigma - Matrix<K>::identity(field, n));
  if (fixed.vectors.size() != n - 1) {
    throw Error("not a pseudo-reflection: fixed space has dimension " +
                std::to_string(fixed.vectors.size()) + " in n = " + std::to_string(n));
  }
  const auto w1 = primitive_vector(dvr, fixed.vectors.front());
  const auto q = quotient_action(dvr, sigma, w1);
  const auto sub = adapted_basis(dvr, q.induced, lambda);

  const K lambda_minus_one = lambda - field.one();
  std::vector<Vector<K>> columns{w1};
  for (std::size_t i = 0; i < n - 1; ++i) {
    Vector<K> lifted(n, field.zero());
    lifted[0] = field.zero();
    for (std::size_t r = 0; r < n - 1; ++r) lifted[r + 1] = sub(r, i);
    K a = field.zero();
    for (std::size_t r = 0; r < n - 1; ++r) a += q.top_row[r] * sub(r, i);
    Vector<K> w = q.completion.apply(lifted);
    if (i + 1 < n - 1) {
      if (!a.is_zero()) {
        throw ConsistencyError("coefficient a_" + std::to_string(i + 2) + " = " + dvr.format(a) +
                               " on w1 does not vanish");
      }
    } else {
      const K c = a / lambda_minus_one;
      for (std::size_t r = 0; r < n; ++r) w[r] += c * w1[r];
    }
    columns.push_back(std::move(w));
  }
  return Matrix<K>::from_columns(field, columns);
}

}  // namespace

template <Dvr D>
DiagonalizingBasis<D> diagonalizing_basis(const D& dvr, const Matrix<typename D::Fraction>& sigma,
                                          std::uint64_t group_order) {
  invert_group_order(dvr, group_order);
  if (!is_integral(dvr, sigma)) throw NotInRing("sigma has entries outside O");
  const auto refl = pseudo_reflection(sigma, group_order);
  if (!refl) throw Error("not a pseudo-reflection: rank(sigma - I) != 1");

  const auto lambda_minus_one = refl->lambda - dvr.fraction_field().one();
  if (!dvr.is_unit(lambda_minus_one)) {
    throw ConsistencyError("lambda - 1 = " + dvr.format(lambda_minus_one) +
                           " is not a unit of O although |G| is invertible");
  }

  DiagonalizingBasis<D> out;
  out.lambda = refl->lambda;
  out.order = refl->order;
  try {
    out.lambda_order = multiplicative_order(out.lambda, std::max<std::uint64_t>(out.order, 1));
  } catch (const CapExceeded&) {
  }
  out.basis = adapted_basis(dvr, sigma, out.lambda);
  out.issues = verify_diagonalizing_basis(dvr, sigma, out);
  out.verified = out.issues.empty();
  return out;
}

template <Dvr D>
std::vector<std::string> verify_diagonalizing_basis(const D& dvr,
                                                    const Matrix<typename D::Fraction>& sigma,
                                                    const DiagonalizingBasis<D>& result) {
  using K = typename D::Fraction;
  std::vector<std::string> issues;
  const auto& t = result.basis;
  const std::size_t n = sigma.rows();
  if (t.rows() != n || t.cols() != n) return {"basis has the wrong shape"};
  if (!is_integral(dvr, t)) issues.push_back("basis vectors leave O^n");
  const K dt = det(t);
  if (!dvr.is_unit(dt)) issues.push_back("det(T) = " + dvr.format(dt) + " is not a unit of O");
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = t.column(i);
    const auto image = sigma.apply(w);
    Vector<K> expected = w;
    if (i + 1 == n)
      for (auto& x : expected) x = result.lambda * x;
    if (!(image == expected)) {
      issues.push_back(i + 1 == n ? "sigma w_n != lambda w_n"
                                  : "sigma w_" + std::to_string(i + 1) + " != w_" + std::to_string(i + 1));
    }
  }
  const auto field = dvr.fraction_field();
  if (!(result.lambda == det(sigma))) issues.push_back("lambda != det(sigma)");
  if (result.lambda == field.one()) issues.push_back("lambda = 1");
  K lp = field.one();
  for (std::uint64_t k = 0; k < result.order; ++k) lp = lp * result.lambda;
  if (!(lp == field.one())) issues.push_back("lambda^m != 1");
  std::uint64_t lambda_order = 0;
  try {
    lambda_order = multiplicative_order(result.lambda, std::max<std::uint64_t>(result.order, 1));
  } catch (const CapExceeded&) {
  }
  if (lambda_order != result.order) {
    issues.push_back("ord(lambda) = " + std::to_string(lambda_order) + " differs from ord(sigma) = " +
                     std::to_string(result.order));
  }
  return issues;
}

#define DVRINV_INSTANTIATE_BASIS(D)                                                              \
  template Vector<D::Fraction> primitive_vector(const D&, const Vector<D::Fraction>&);          \
  template Matrix<D::Fraction> unimodular_completion(const D&, const Vector<D::Fraction>&);     \
  template QuotientAction<D> quotient_action(const D&, const Matrix<D::Fraction>&,             \
                                             const Vector<D::Fraction>&);                       \
  template DiagonalizingBasis<D> diagonalizing_basis(const D&, const Matrix<D::Fraction>&,     \
                                                     std::uint64_t);                            \
  template std::vector<std::string> verify_diagonalizing_basis(                                \
      const D&, const Matrix<D::Fraction>&, const DiagonalizingBasis<D>&);

DVRINV_INSTANTIATE_BASIS(IntegerDvr)
DVRINV_INSTANTIATE_BASIS(PolynomialDvr)

}  // namespace dvrinv
