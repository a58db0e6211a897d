#include "dvrinv/rational_function.hpp"

#include <cctype>

#include "dvrinv/errors.hpp"
#include "dvrinv/prime_field.hpp"
#include "text_util.hpp"

namespace dvrinv {

namespace {

[[noreturn]] void malformed(std::string_view text) {
  throw InputError("malformed rational function \"" + std::string(text) + "\"");
}

std::int64_t parse_int(std::string_view s, std::string_view text) {
  if (s.empty() || s.size() > 18) malformed(text);
  std::int64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) malformed(text);
    v = v * 10 + (ch - '0');
  }
  return v;
}

// term := [int] ["*"] ["t" ["^" int]]
FpPoly parse_term(std::uint32_t p, std::string_view term, bool negative, std::string_view text) {
  if (term.empty()) malformed(text);
  std::int64_t coef = 1;
  std::size_t power = 0;
  const auto tpos = term.find('t');
  std::string_view coef_part = term.substr(0, tpos);
  if (tpos != std::string_view::npos) {
    if (!coef_part.empty()) {
      if (coef_part.back() != '*') malformed(text);
      coef_part.remove_suffix(1);
      if (coef_part.empty()) malformed(text);
    }
    std::string_view rest = term.substr(tpos + 1);
    if (rest.empty()) {
      power = 1;
    } else {
      if (rest[0] != '^') malformed(text);
      power = static_cast<std::size_t>(parse_int(rest.substr(1), text));
    }
  }
  if (!coef_part.empty()) coef = parse_int(coef_part, text);
  const std::int64_t m = p;
  std::int64_t c = coef % m;
  if (negative) c = (m - c) % m;
  return FpPoly::monomial(p, static_cast<std::uint32_t>(c), power);
}

FpPoly parse_poly(std::uint32_t p, std::string_view s, std::string_view text) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) malformed(text);
  FpPoly out(p);
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      out += parse_term(p, s.substr(start, i - start), negative, text);
      if (i < s.size()) negative = s[i] == '-';
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

RatFunc RatFuncField::zero() const { return RatFunc(FpPoly(p)); }
RatFunc RatFuncField::one() const { return RatFunc(FpPoly::constant(p, 1)); }
RatFunc RatFuncField::from_int(std::int64_t v) const { return RatFunc(FpPoly::constant(p, v)); }
RatFunc RatFuncField::t() const { return RatFunc(FpPoly::monomial(p, 1, 1)); }

RatFunc::RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.modulus(), 1)) {}

RatFunc::RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.modulus() != den_.modulus()) throw ShapeError("mixing polynomials over different F_p");
  if (den_.is_zero()) throw NotInvertible("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const std::uint32_t p = num_.modulus();
  if (num_.is_zero()) {
    den_ = FpPoly::constant(p, 1);
    return;
  }
  const FpPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const auto inv = static_cast<std::uint32_t>(inverse_mod(den_.leading(), p));
  if (inv != 1) {
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::parse(std::uint32_t p, std::string_view text) {
  const std::string s = detail::normalize_scalar_text(text);
  if (s.empty()) malformed(text);
  // Split at a '/' outside parentheses.
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) malformed(text);
    if (s[i] == '/' && depth == 0) {
      if (slash != std::string::npos) malformed(text);
      slash = i;
    }
  }
  if (depth != 0) malformed(text);
  if (slash == std::string::npos) return RatFunc(parse_poly(p, s, text));
  FpPoly num = parse_poly(p, std::string_view(s).substr(0, slash), text);
  FpPoly den = parse_poly(p, std::string_view(s).substr(slash + 1), text);
  if (den.is_zero()) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ - o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFunc(FpPoly(modulus()));
    return *this;
  }
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw NotInvertible("division by zero");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace dvrinv
