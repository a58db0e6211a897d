#include "dvrinv/polynomial.hpp"

#include <numeric>

namespace dvrinv {

std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

void fill(std::size_t var, std::uint32_t remaining, Exponent& e, std::vector<Exponent>& out) {
  if (var + 1 == e.size()) {
    e[var] = remaining;
    out.push_back(e);
    return;
  }
  for (std::uint32_t k = remaining + 1; k-- > 0;) {
    e[var] = k;
    fill(var + 1, remaining - k, e, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Exponent> out;
  if (n == 0) return out;
  Exponent e(n, 0);
  fill(0, d, e, out);
  return out;
}

std::string format_monomial(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "X" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
  }
  return out;
}

MonomialBasis::MonomialBasis(std::size_t nvars, std::uint32_t degree)
    : nvars_(nvars), degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw ShapeError("monomial " + format_monomial(e) + " not in degree " +
                                           std::to_string(degree_) + " basis");
  return it->second;
}

}  // namespace dvrinv
