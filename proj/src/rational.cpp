#include "dvrinv/rational.hpp"

#include <cctype>

#include "dvrinv/errors.hpp"
#include "text_util.hpp"

namespace dvrinv {

namespace {

mpz_class parse_integer(const std::string& s, std::string_view original) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw InputError("malformed rational \"" + std::string(original) + "\"");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw InputError("malformed rational \"" + std::string(original) + "\"");
    }
  }
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational RationalField::zero() const { return Rational(0); }
Rational RationalField::one() const { return Rational(1); }
Rational RationalField::from_int(std::int64_t v) const { return Rational(v); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw NotInvertible("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s = detail::normalize_scalar_text(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const mpz_class den = parse_integer(s.substr(slash + 1), text);
  if (sgn(den) == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NotInvertible("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

}  // namespace dvrinv
