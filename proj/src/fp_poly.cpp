#include "dvrinv/fp_poly.hpp"

#include <algorithm>

#include "dvrinv/errors.hpp"
#include "dvrinv/prime_field.hpp"

namespace dvrinv {

namespace {

void check_same(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw ShapeError("mixing polynomials over different F_p");
}

}  // namespace

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) {
  const std::int64_t m = p;
  return FpPoly(p, {static_cast<std::uint32_t>(((c % m) + m) % m)});
}

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t k) {
  std::vector<std::uint32_t> coeffs(k + 1, 0);
  coeffs[k] = c;
  return FpPoly(p, std::move(coeffs));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::t_order() const {
  if (c_.empty()) throw ShapeError("t-order of the zero polynomial");
  std::size_t k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i] = static_cast<std::uint32_t>((std::uint64_t{c_[i]} * c) % p_);
  }
  return FpPoly(p_, std::move(out));
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(static_cast<std::uint32_t>(inverse_mod(leading(), p_)));
}

FpPoly FpPoly::operator-() const { return scaled(p_ - 1); }

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  check_same(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  check_same(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  const std::uint64_t p = a.p_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return FpPoly(a.p_, std::move(out));
}

std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += "+";
    out += std::to_string(c_[k]);
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw NotInvertible("polynomial division by zero");
  const std::uint32_t p = a.modulus();
  const auto& bc = b.coefficients();
  std::vector<std::uint32_t> r = a.coefficients();
  if (r.size() < bc.size()) return {FpPoly(p), a};
  const std::uint64_t lead_inv = inverse_mod(b.leading(), p);
  std::vector<std::uint32_t> q(r.size() - bc.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t coef = (std::uint64_t{r[k + bc.size() - 1]} * lead_inv) % p;
    q[k] = static_cast<std::uint32_t>(coef);
    if (coef == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      r[k + j] = static_cast<std::uint32_t>((r[k + j] + p - (coef * bc[j]) % p) % p);
    }
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly exact_div(const FpPoly& a, const FpPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly lcm(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.modulus());
  return exact_div(a * b, gcd(a, b)).monic();
}

}  // namespace dvrinv
