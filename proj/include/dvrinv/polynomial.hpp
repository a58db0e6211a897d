#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dvrinv/matrix.hpp"

namespace dvrinv {

using Exponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponent& e);

// Graded lexicographic order with X1 > X2 > ... > Xn, largest first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponent vectors of total degree d in n variables, in graded-lex
// order (X1^d first).
std::vector<Exponent> monomials_of_degree(std::size_t n, std::uint32_t d);

std::string format_monomial(const Exponent& e);

// Index of the degree-d monomials; coordinates for the graded piece R_d.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, std::uint32_t degree);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  // Throws ShapeError if e is not a degree-d monomial in n variables.
  std::size_t index_of(const Exponent& e) const;

 private:
  std::size_t nvars_;
  std::uint32_t degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

template <FieldElement E>
class MultiPoly {
 public:
  using Field = typename E::Field;
  using Terms = std::map<Exponent, E, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static MultiPoly constant(Field field, std::size_t nvars, const E& c) {
    MultiPoly f(field, nvars);
    f.add_term(Exponent(nvars, 0), c);
    return f;
  }
  static MultiPoly variable(Field field, std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(field, std::move(e), field.one());
  }
  static MultiPoly monomial(Field field, Exponent e, const E& c) {
    MultiPoly f(field, e.size());
    f.add_term(e, c);
    return f;
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  E coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  // Largest total degree; -1 for zero.
  long degree() const {
    return terms_.empty() ? -1 : static_cast<long>(total_degree(terms_.begin()->first));
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  void add_term(const Exponent& e, const E& c) {
    if (e.size() != nvars_) throw ShapeError("exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.field_, a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(const E& s, const MultiPoly& f) {
    MultiPoly out(f.field_, f.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), e, s * c);
    return out;
  }

  MultiPoly pow(std::uint32_t k) const {
    MultiPoly out = constant(field_, nvars_, field_.one());
    for (std::uint32_t i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponent d = e;
      d[var] -= 1;
      out.add_term(d, field_.from_int(e[var]) * c);
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // "c * X1^a*X2^b + ..." in graded-lex order; zero exponents omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      const std::string mono = format_monomial(e);
      out += mono.empty() ? c.to_string() : c.to_string() + " * " + mono;
    }
    return out;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw ShapeError("polynomials in different variable counts");
  }

  Field field_{};
  std::size_t nvars_ = 0;
  Terms terms_;
};

// Linear substitution X_j -> sum_i g(i, j) X_i extended multiplicatively.
// g -> act(g, .) is a left action: act(g h, f) = act(g, act(h, f)).
template <FieldElement E>
MultiPoly<E> act(const Matrix<E>& g, const MultiPoly<E>& f) {
  const std::size_t n = f.nvars();
  if (!g.is_square() || g.rows() != n) throw ShapeError("group element size does not match variables");
  const auto& field = f.field();
  std::vector<MultiPoly<E>> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly<E> lin(field, n);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n, 0);
      e[i] = 1;
      lin.add_term(e, g(i, j));
    }
    images.push_back(std::move(lin));
  }
  // powers[j][k] = images[j]^k, grown on demand
  std::vector<std::vector<MultiPoly<E>>> powers(n);
  for (std::size_t j = 0; j < n; ++j) powers[j].push_back(MultiPoly<E>::constant(field, n, field.one()));
  auto power_of = [&](std::size_t j, std::uint32_t k) -> const MultiPoly<E>& {
    while (powers[j].size() <= k) powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][k];
  };

  MultiPoly<E> out(field, n);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly<E> term = MultiPoly<E>::constant(field, n, c);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] > 0) term = term * power_of(j, e[j]);
    out += term;
  }
  return out;
}

template <FieldElement E>
Vector<E> coefficient_vector(const MultiPoly<E>& f, const MonomialBasis& basis) {
  Vector<E> v(basis.size(), f.field().zero());
  for (const auto& [e, c] : f.terms()) v[basis.index_of(e)] = c;
  return v;
}

template <FieldElement E>
MultiPoly<E> from_coefficients(const typename E::Field& field, const MonomialBasis& basis,
                               const Vector<E>& v) {
  if (v.size() != basis.size()) throw ShapeError("coefficient vector length mismatch");
  MultiPoly<E> f(field, basis.nvars());
  for (std::size_t k = 0; k < v.size(); ++k) f.add_term(basis.monomials()[k], v[k]);
  return f;
}

// Matrix of act(g, .) on R_d in the monomial basis; column k holds the
// coordinates of act(g, m_k).
template <FieldElement E>
Matrix<E> action_matrix(const Matrix<E>& g, const MonomialBasis& basis) {
  const auto& field = g.field();
  Matrix<E> a(field, basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto image = act(g, MultiPoly<E>::monomial(field, basis.monomials()[k], field.one()));
    for (const auto& [e, c] : image.terms()) a(basis.index_of(e), k) = c;
  }
  return a;
}

template <FieldElement Out, FieldElement In, class F>
MultiPoly<Out> map_coefficients(const MultiPoly<In>& f, typename Out::Field field, F&& fn) {
  MultiPoly<Out> out(field, f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, fn(c));
  return out;
}

}  // namespace dvrinv
