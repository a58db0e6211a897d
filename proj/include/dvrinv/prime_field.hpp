#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dvrinv {

bool is_prime(std::uint64_t n);

// Inverse of a modulo m by the extended Euclidean algorithm; requires gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

class Fp;

struct PrimeField {
  std::uint32_t p = 2;
  Fp zero() const;
  Fp one() const;
  Fp from_int(std::int64_t v) const;
  std::uint32_t characteristic() const { return p; }
  bool operator==(const PrimeField&) const = default;
};

// Residue class modulo a prime p, value kept in [0, p).
class Fp {
 public:
  using Field = PrimeField;

  Fp() = default;
  Fp(std::uint32_t p, std::int64_t v);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const { return v_; }
  Field field() const { return {p_}; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : p_ - v_); }
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp&, const Fp&) = default;
  friend auto operator<=>(const Fp&, const Fp&) = default;

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check_same(const Fp& o) const;

  std::uint32_t p_ = 2;
  std::uint32_t v_ = 0;
};

}  // namespace dvrinv
