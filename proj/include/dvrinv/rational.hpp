#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dvrinv {

class Rational;

struct RationalField {
  using Element = Rational;
  Rational zero() const;
  Rational one() const;
  Rational from_int(std::int64_t v) const;
  std::uint32_t characteristic() const { return 0; }
  bool operator==(const RationalField&) const = default;
};

// Element of Q kept in lowest terms with positive denominator.
class Rational {
 public:
  using Field = RationalField;

  Rational() = default;
  Rational(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT
  explicit Rational(const mpz_class& v) : value_(v) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v);

  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  Field field() const { return {}; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  mpq_class value_{0};
};

}  // namespace dvrinv
