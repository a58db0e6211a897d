#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dvrinv/errors.hpp"
#include "dvrinv/fp_poly.hpp"
#include "dvrinv/prime_field.hpp"
#include "dvrinv/rational.hpp"
#include "dvrinv/rational_function.hpp"

namespace dvrinv {

template <class E>
concept FieldElement = std::regular<E> && requires(const E a, const E b) {
  typename E::Field;
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a * b } -> std::same_as<E>;
  { a / b } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<E>;
  { a.field() } -> std::same_as<typename E::Field>;
  { a < b } -> std::convertible_to<bool>;
};

template <FieldElement E>
using Vector = std::vector<E>;

template <FieldElement E>
class Matrix {
 public:
  using Element = E;
  using Field = typename E::Field;

  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(Field field, const std::vector<std::vector<E>>& rows) {
    if (rows.empty()) throw ShapeError("matrix needs at least one row");
    Matrix m(field, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(Field field, const std::vector<Vector<E>>& columns) {
    if (columns.empty()) throw ShapeError("matrix needs at least one column");
    Matrix m(field, columns[0].size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_) throw ShapeError("ragged matrix columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<E> row(std::size_t i) const {
    return Vector<E>(data_.begin() + static_cast<long>(i * cols_),
                     data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  Vector<E> column(std::size_t j) const {
    Vector<E> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  const std::vector<E>& entries() const { return data_; }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const E& x = (*this)(i, j);
        if (i == j ? !(x == field_.one()) : !x.is_zero()) return false;
      }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    if (!(a.field_ == b.field_)) throw ShapeError("matrix product ring mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const E& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator*(const E& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_) x = s * x;
    return out;
  }

  Vector<E> apply(const Vector<E>& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
    Vector<E> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  // Lexicographic on shape and entries; a total order for deduplication only.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    if (!(field_ == o.field_)) throw ShapeError("matrix ring mismatch");
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

// Builds a matrix over another field by mapping every entry.
template <FieldElement Out, FieldElement In, class F>
Matrix<Out> map_entries(const Matrix<In>& m, typename Out::Field field, F&& fn) {
  Matrix<Out> out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = fn(m(i, j));
  return out;
}

// ---- fraction-free support ----

// Fields that are fractions of a Euclidean domain get Bareiss elimination
// over that domain; other fields (F_p) use ordinary Gaussian elimination.
template <class E>
struct FractionFreeTraits;

template <>
struct FractionFreeTraits<Rational> {
  using Domain = mpz_class;
  static Domain numerator(const Rational& x) { return x.numerator(); }
  static Domain denominator(const Rational& x) { return x.denominator(); }
  static Domain one(const RationalField&) { return 1; }
  static bool is_zero(const Domain& d) { return sgn(d) == 0; }
  static Domain lcm(const Domain& a, const Domain& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
  static Domain exact_div(const Domain& a, const Domain& b) {
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }
  static Rational embed(const Domain& d, const RationalField&) { return Rational(d); }
};

template <>
struct FractionFreeTraits<RatFunc> {
  using Domain = FpPoly;
  static Domain numerator(const RatFunc& x) { return x.numerator(); }
  static Domain denominator(const RatFunc& x) { return x.denominator(); }
  static Domain one(const RatFuncField& f) { return FpPoly::constant(f.p, 1); }
  static bool is_zero(const Domain& d) { return d.is_zero(); }
  static Domain lcm(const Domain& a, const Domain& b) { return dvrinv::lcm(a, b); }
  static Domain exact_div(const Domain& a, const Domain& b) { return dvrinv::exact_div(a, b); }
  static RatFunc embed(const Domain& d, const RatFuncField&) { return RatFunc(d); }
};

template <class E>
concept FractionFree = requires { typename FractionFreeTraits<E>::Domain; };

template <FieldElement E>
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<Vector<E>> rows;       // nonzero rows in echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
  E determinant{};                   // meaningful for square input only
};

namespace detail {

template <FieldElement E>
RowEchelon<E> bareiss_echelon(const Matrix<E>& m) {
  using T = FractionFreeTraits<E>;
  using D = typename T::Domain;
  const auto& field = m.field();
  const std::size_t r = m.rows(), c = m.cols();

  std::vector<std::vector<D>> a(r);
  D scale = T::one(field);
  for (std::size_t i = 0; i < r; ++i) {
    D l = T::one(field);
    for (std::size_t j = 0; j < c; ++j)
      if (!m(i, j).is_zero()) l = T::lcm(l, T::denominator(m(i, j)));
    a[i].reserve(c);
    for (std::size_t j = 0; j < c; ++j) {
      const E& x = m(i, j);
      a[i].push_back(x.is_zero() ? D(T::numerator(x))
                                 : T::numerator(x) * T::exact_div(l, T::denominator(x)));
    }
    scale = scale * l;
  }

  RowEchelon<E> out;
  out.cols = c;
  D prev = T::one(field);
  bool negate = false;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && T::is_zero(a[piv][col])) ++piv;
    if (piv == r) continue;
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      negate = !negate;
    }
    const D& p = a[rank][col];
    for (std::size_t i = rank + 1; i < r; ++i) {
      const D f = a[i][col];
      for (std::size_t j = col + 1; j < c; ++j) {
        D v = p * a[i][j] - f * a[rank][j];
        a[i][j] = T::exact_div(v, prev);
      }
      a[i][col] = D(T::numerator(field.zero()));
    }
    prev = a[rank][col];
    out.pivots.push_back(col);
    ++rank;
  }
  for (std::size_t i = 0; i < rank; ++i) {
    Vector<E> row;
    row.reserve(c);
    for (std::size_t j = 0; j < c; ++j) row.push_back(T::embed(a[i][j], field));
    out.rows.push_back(std::move(row));
  }
  if (r == c && rank == r) {
    E det = T::embed(prev, field) / T::embed(scale, field);
    out.determinant = negate ? -det : det;
  } else {
    out.determinant = field.zero();
  }
  return out;
}

template <FieldElement E>
RowEchelon<E> gaussian_echelon(const Matrix<E>& m) {
  const auto& field = m.field();
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Vector<E>> a(r);
  for (std::size_t i = 0; i < r; ++i) a[i] = m.row(i);

  RowEchelon<E> out;
  out.cols = c;
  E det = field.one();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a[piv][col].is_zero()) ++piv;
    if (piv == r) continue;
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      det = -det;
    }
    const E inv = a[rank][col].inverse();
    det = det * a[rank][col];
    for (std::size_t i = rank + 1; i < r; ++i) {
      if (a[i][col].is_zero()) continue;
      const E f = a[i][col] * inv;
      for (std::size_t j = col; j < c; ++j) a[i][j] -= f * a[rank][j];
    }
    out.pivots.push_back(col);
    ++rank;
  }
  a.resize(rank);
  out.rows = std::move(a);
  out.determinant = (r == c && rank == r) ? det : field.zero();
  return out;
}

}  // namespace detail

template <FieldElement E>
RowEchelon<E> row_echelon(const Matrix<E>& m) {
  if constexpr (FractionFree<E>) {
    return detail::bareiss_echelon(m);
  } else {
    return detail::gaussian_echelon(m);
  }
}

template <FieldElement E>
std::size_t rank(const Matrix<E>& m) {
  return row_echelon(m).pivots.size();
}

template <FieldElement E>
E det(const Matrix<E>& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  return row_echelon(m).determinant;
}

template <FieldElement E>
struct KernelBasis {
  std::size_t ambient_dim = 0;
  // One vector per free column: 1 at that column, 0 at the other free
  // columns. This representative is independent of the elimination path.
  std::vector<Vector<E>> vectors;
};

template <FieldElement E>
KernelBasis<E> kernel(const RowEchelon<E>& ech, const typename E::Field& field) {
  const std::size_t c = ech.cols;
  std::vector<bool> is_pivot(c, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  KernelBasis<E> out;
  out.ambient_dim = c;
  for (std::size_t free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    Vector<E> x(c, field.zero());
    x[free] = field.one();
    for (std::size_t k = ech.rows.size(); k-- > 0;) {
      const auto& row = ech.rows[k];
      const std::size_t pc = ech.pivots[k];
      E acc = field.zero();
      for (std::size_t j = pc + 1; j < c; ++j)
        if (!x[j].is_zero() && !row[j].is_zero()) acc += row[j] * x[j];
      x[pc] = -acc / row[pc];
    }
    out.vectors.push_back(std::move(x));
  }
  return out;
}

template <FieldElement E>
KernelBasis<E> kernel(const Matrix<E>& m) {
  return kernel(row_echelon(m), m.field());
}

// Solves A X = B for square invertible A.
template <FieldElement E>
Matrix<E> solve(const Matrix<E>& a, const Matrix<E>& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw ShapeError("solve shape mismatch");
  const std::size_t n = a.rows(), k = b.cols();
  Matrix<E> aug(a.field(), n, n + k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  const auto ech = row_echelon(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw NotInvertible("matrix is singular");
  Matrix<E> x(a.field(), n, k);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      const auto& row = ech.rows[i];
      E acc = row[n + col];
      for (std::size_t j = i + 1; j < n; ++j) acc -= row[j] * x(j, col);
      x(i, col) = acc / row[i];
    }
  }
  return x;
}

template <FieldElement E>
Matrix<E> inverse(const Matrix<E>& m) {
  return solve(m, Matrix<E>::identity(m.field(), m.rows()));
}

template <FieldElement E>
Matrix<E> power(Matrix<E> base, std::uint64_t e) {
  if (!base.is_square()) throw ShapeError("power of a non-square matrix");
  Matrix<E> out = Matrix<E>::identity(base.field(), base.rows());
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

// Least m >= 1 with M^m = I.
template <FieldElement E>
std::uint64_t matrix_order(const Matrix<E>& m, std::uint64_t cap) {
  if (!m.is_square()) throw ShapeError("order of a non-square matrix");
  Matrix<E> acc = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  throw CapExceeded("order exceeds cap " + std::to_string(cap) + " (group may be infinite)");
}

template <FieldElement E>
std::uint64_t multiplicative_order(const E& x, std::uint64_t cap) {
  const E one = x.field().one();
  E acc = x;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (acc == one) return k;
    acc = acc * x;
  }
  throw CapExceeded("scalar order exceeds cap " + std::to_string(cap));
}

// Coefficients c_0..c_n of det(x I - M), via similarity to Hessenberg form.
template <FieldElement E>
std::vector<E> characteristic_polynomial(const Matrix<E>& m) {
  if (!m.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const auto& field = m.field();
  const std::size_t n = m.rows();
  Matrix<E> h = m;
  for (std::size_t col = 1; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && h(piv, col - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(col, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, col));
    }
    const E inv = h(col, col - 1).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (h(i, col - 1).is_zero()) continue;
      const E u = h(i, col - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(col, j);
      for (std::size_t j = 0; j < n; ++j) h(j, col) += u * h(j, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<E>> polys(n + 1);
  polys[0] = {field.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<E> pk(k + 1, field.zero());
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] += prev[d];
      pk[d] -= h(k - 1, k - 1) * prev[d];
    }
    E sub = field.one();
    for (std::size_t i = k - 1; i-- > 0;) {
      sub = sub * h(i + 1, i);
      if (sub.is_zero()) break;
      const E coef = h(i, k - 1) * sub;
      const auto& pi = polys[i];
      for (std::size_t d = 0; d < pi.size(); ++d) pk[d] -= coef * pi[d];
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

template <FieldElement E>
std::string format_matrix(const Matrix<E>& m, const std::function<std::string(const E&)>& fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + fmt(m(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace dvrinv
