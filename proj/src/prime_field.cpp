#include "dvrinv/prime_field.hpp"

#include "dvrinv/errors.hpp"

namespace dvrinv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw NotInvertible("no inverse modulo " + std::to_string(m));
  const std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

Fp PrimeField::zero() const { return Fp(p, 0); }
Fp PrimeField::one() const { return Fp(p, 1); }
Fp PrimeField::from_int(std::int64_t v) const { return Fp(p, v); }

Fp::Fp(std::uint32_t p, std::int64_t v) : p_(p) {
  const std::int64_t m = static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint32_t>(((v % m) + m) % m);
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_) throw ShapeError("mixing residues of different characteristic");
}

Fp Fp::inverse() const {
  if (v_ == 0) throw NotInvertible("inverse of zero in F_" + std::to_string(p_));
  return Fp(p_, static_cast<std::int64_t>(inverse_mod(v_, p_)));
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this, out(p_, 1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Fp& Fp::operator+=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
  return *this;
}
Fp& Fp::operator-=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
  return *this;
}
Fp& Fp::operator*=(const Fp& o) {
  check_same(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
  return *this;
}

}  // namespace dvrinv
