#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "dvrinv/fp_poly.hpp"

namespace dvrinv {

class RatFunc;

struct RatFuncField {
  std::uint32_t p = 2;
  RatFunc zero() const;
  RatFunc one() const;
  RatFunc from_int(std::int64_t v) const;
  RatFunc t() const;
  std::uint32_t characteristic() const { return p; }
  bool operator==(const RatFuncField&) const = default;
};

// Element of F_p(t) as num/den with gcd 1 and monic denominator.
class RatFunc {
 public:
  using Field = RatFuncField;

  RatFunc() = default;
  explicit RatFunc(FpPoly num);
  RatFunc(FpPoly num, FpPoly den);

  // Accepts "(a)/(b)", "a/b" or a bare polynomial; terms like "c*t^k", "c*t",
  // "t^k", "t", "c" joined by '+' or '-'.
  static RatFunc parse(std::uint32_t p, std::string_view text);

  const FpPoly& numerator() const { return num_; }
  const FpPoly& denominator() const { return den_; }
  std::uint32_t modulus() const { return num_.modulus(); }
  Field field() const { return {modulus()}; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  RatFunc inverse() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

  // Bare numerator when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(FpPoly num, FpPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  FpPoly num_;
  FpPoly den_ = FpPoly::constant(2, 1);
};

}  // namespace dvrinv
