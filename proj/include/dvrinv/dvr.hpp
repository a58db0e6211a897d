#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dvrinv/prime_field.hpp"
#include "dvrinv/rational.hpp"
#include "dvrinv/rational_function.hpp"

namespace dvrinv {

enum class DvrKind { IntLocalized, RatFuncLocalized };

std::string to_string(DvrKind kind);
DvrKind parse_dvr_kind(std::string_view name);

struct DvrDescriptor {
  DvrKind kind = DvrKind::IntLocalized;
  std::uint32_t p = 2;

  // Throws InputError unless p is prime.
  static DvrDescriptor make(DvrKind kind, std::int64_t p);
  bool operator==(const DvrDescriptor&) const = default;
};

// Z localized at (p): fraction field Q, residue field F_p, uniformizer p.
class IntegerDvr {
 public:
  using Fraction = Rational;
  using Residue = Fp;

  explicit IntegerDvr(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  DvrDescriptor descriptor() const { return {DvrKind::IntLocalized, p_}; }
  RationalField fraction_field() const { return {}; }
  PrimeField residue_field() const { return {p_}; }
  Rational uniformizer() const { return Rational(std::int64_t{p_}); }

  // p-adic valuation; throws Error on zero.
  int valuation(const Rational& x) const;
  bool is_integral(const Rational& x) const;
  bool is_unit(const Rational& x) const;
  // Reduction O -> O/pO; throws NotInRing if the denominator is divisible by p.
  Fp reduce(const Rational& x) const;
  // Representative in [0, p).
  Rational lift(const Fp& x) const;

  Rational parse(std::string_view text) const { return Rational::parse(text); }
  std::string format(const Rational& x) const { return x.to_string(); }

 private:
  std::uint32_t p_;
};

// F_p[t] localized at (t): fraction field F_p(t), residue field F_p, uniformizer t.
class PolynomialDvr {
 public:
  using Fraction = RatFunc;
  using Residue = Fp;

  explicit PolynomialDvr(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  DvrDescriptor descriptor() const { return {DvrKind::RatFuncLocalized, p_}; }
  RatFuncField fraction_field() const { return {p_}; }
  PrimeField residue_field() const { return {p_}; }
  RatFunc uniformizer() const { return fraction_field().t(); }

  int valuation(const RatFunc& x) const;
  bool is_integral(const RatFunc& x) const;
  bool is_unit(const RatFunc& x) const;
  // Evaluation at t = 0.
  Fp reduce(const RatFunc& x) const;
  RatFunc lift(const Fp& x) const;

  RatFunc parse(std::string_view text) const { return RatFunc::parse(p_, text); }
  std::string format(const RatFunc& x) const { return x.to_string(); }

 private:
  std::uint32_t p_;
};

template <class D>
concept Dvr = requires(const D& dvr, const typename D::Fraction& x, const typename D::Residue& r) {
  { dvr.valuation(x) } -> std::convertible_to<int>;
  { dvr.is_integral(x) } -> std::convertible_to<bool>;
  { dvr.is_unit(x) } -> std::convertible_to<bool>;
  { dvr.reduce(x) } -> std::same_as<typename D::Residue>;
  { dvr.lift(r) } -> std::same_as<typename D::Fraction>;
  { dvr.fraction_field() };
  { dvr.residue_field() };
  { dvr.descriptor() } -> std::same_as<DvrDescriptor>;
};

using AnyDvr = std::variant<IntegerDvr, PolynomialDvr>;
AnyDvr make_dvr(const DvrDescriptor& descriptor);

// Parses a scalar that must lie in O (denominator of valuation 0).
template <Dvr D>
typename D::Fraction parse_integral(const D& dvr, std::string_view text);

// 1/r as an element of O. Throws HypothesisViolation when p divides r;
// every averaging step is gated on this.
template <Dvr D>
typename D::Fraction invert_group_order(const D& dvr, std::uint64_t r);

// pi^k for k >= 0, pi^-k for k < 0.
template <Dvr D>
typename D::Fraction uniformizer_power(const D& dvr, int k);

}  // namespace dvrinv
