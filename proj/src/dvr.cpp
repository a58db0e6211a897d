#include "dvrinv/dvr.hpp"

#include "dvrinv/errors.hpp"

namespace dvrinv {

std::string to_string(DvrKind kind) {
  return kind == DvrKind::IntLocalized ? "int-localized" : "ratfunc-localized";
}

DvrKind parse_dvr_kind(std::string_view name) {
  if (name == "int-localized") return DvrKind::IntLocalized;
  if (name == "ratfunc-localized") return DvrKind::RatFuncLocalized;
  throw InputError("unknown dvr kind \"" + std::string(name) + "\"");
}

DvrDescriptor DvrDescriptor::make(DvrKind kind, std::int64_t p) {
  if (p < 2 || p > (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError("p must be prime (got " + std::to_string(p) + ")");
  }
  return {kind, static_cast<std::uint32_t>(p)};
}

AnyDvr make_dvr(const DvrDescriptor& d) {
  if (d.kind == DvrKind::IntLocalized) return IntegerDvr(d.p);
  return PolynomialDvr(d.p);
}

// ---- Z_(p) ----

IntegerDvr::IntegerDvr(std::uint32_t p) : p_(DvrDescriptor::make(DvrKind::IntLocalized, p).p) {}

namespace {

int mpz_valuation(mpz_class v, unsigned long p) {
  int k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++k;
  }
  return k;
}

}  // namespace

int IntegerDvr::valuation(const Rational& x) const {
  if (x.is_zero()) throw Error("valuation undefined for zero");
  return mpz_valuation(x.numerator(), p_) - mpz_valuation(x.denominator(), p_);
}

bool IntegerDvr::is_integral(const Rational& x) const {
  return !mpz_divisible_ui_p(x.value().get_den_mpz_t(), p_);
}

bool IntegerDvr::is_unit(const Rational& x) const {
  return !x.is_zero() && is_integral(x) && !mpz_divisible_ui_p(x.value().get_num_mpz_t(), p_);
}

Fp IntegerDvr::reduce(const Rational& x) const {
  if (!is_integral(x)) throw NotInRing("entry not in O: " + x.to_string());
  const unsigned long num = mpz_fdiv_ui(x.value().get_num_mpz_t(), p_);
  const unsigned long den = mpz_fdiv_ui(x.value().get_den_mpz_t(), p_);
  return Fp(p_, static_cast<std::int64_t>(num)) / Fp(p_, static_cast<std::int64_t>(den));
}

Rational IntegerDvr::lift(const Fp& x) const { return Rational(std::int64_t{x.value()}); }

// ---- F_p[t]_(t) ----

PolynomialDvr::PolynomialDvr(std::uint32_t p)
    : p_(DvrDescriptor::make(DvrKind::RatFuncLocalized, p).p) {}

int PolynomialDvr::valuation(const RatFunc& x) const {
  if (x.is_zero()) throw Error("valuation undefined for zero");
  return static_cast<int>(x.numerator().t_order()) - static_cast<int>(x.denominator().t_order());
}

bool PolynomialDvr::is_integral(const RatFunc& x) const {
  return x.denominator().constant_term() != 0;
}

bool PolynomialDvr::is_unit(const RatFunc& x) const {
  return is_integral(x) && x.numerator().constant_term() != 0;
}

Fp PolynomialDvr::reduce(const RatFunc& x) const {
  if (!is_integral(x)) throw NotInRing("entry not in O: " + x.to_string());
  return Fp(p_, x.numerator().constant_term()) / Fp(p_, x.denominator().constant_term());
}

RatFunc PolynomialDvr::lift(const Fp& x) const {
  return RatFunc(FpPoly::constant(p_, x.value()));
}

// ---- generic helpers ----

template <Dvr D>
typename D::Fraction parse_integral(const D& dvr, std::string_view text) {
  auto x = dvr.parse(text);
  if (!dvr.is_integral(x)) {
    throw NotInRing("entry not in O: \"" + std::string(text) + "\" has valuation " +
                    std::to_string(dvr.valuation(x)));
  }
  return x;
}

template <Dvr D>
typename D::Fraction invert_group_order(const D& dvr, std::uint64_t r) {
  if (r == 0 || r % dvr.p() == 0) {
    throw HypothesisViolation("|G| = " + std::to_string(r) + " is not invertible in O (p = " +
                              std::to_string(dvr.p()) + ")");
  }
  return dvr.fraction_field().from_int(static_cast<std::int64_t>(r)).inverse();
}

template <Dvr D>
typename D::Fraction uniformizer_power(const D& dvr, int k) {
  auto base = k >= 0 ? dvr.uniformizer() : dvr.uniformizer().inverse();
  auto out = dvr.fraction_field().one();
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) out *= base;
  return out;
}

template Rational parse_integral(const IntegerDvr&, std::string_view);
template RatFunc parse_integral(const PolynomialDvr&, std::string_view);
template Rational invert_group_order(const IntegerDvr&, std::uint64_t);
template RatFunc invert_group_order(const PolynomialDvr&, std::uint64_t);
template Rational uniformizer_power(const IntegerDvr&, int);
template RatFunc uniformizer_power(const PolynomialDvr&, int);

}  // namespace dvrinv
