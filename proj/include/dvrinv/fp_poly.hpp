#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dvrinv {

// Univariate polynomial in t over F_p; coefficients low degree first, no
// trailing zeros. The zero polynomial has an empty coefficient list.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint32_t p) : p_(p) {}
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t k);

  std::uint32_t modulus() const { return p_; }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t constant_term() const { return c_.empty() ? 0 : c_[0]; }
  std::uint32_t coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  // Order of vanishing at t = 0; the polynomial must be nonzero.
  std::size_t t_order() const;

  FpPoly monic() const;
  FpPoly scaled(std::uint32_t c) const;

  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);

  friend bool operator==(const FpPoly&, const FpPoly&) = default;
  friend std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b);

  // "c*t^k" terms joined by "+", constant term written bare; "0" for zero.
  std::string to_string() const;

 private:
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

// Quotient and remainder; the divisor must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
// Division known to be exact; throws if a remainder appears.
FpPoly exact_div(const FpPoly& a, const FpPoly& b);
// Monic gcd (zero if both are zero).
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly lcm(const FpPoly& a, const FpPoly& b);

}  // namespace dvrinv
