#include "vaffine/univariate.hpp"

#include "vaffine/text.hpp"

#include <algorithm>
#include <stdexcept>

namespace vaffine {

UnivariatePoly::UnivariatePoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

UnivariatePoly UnivariatePoly::monomial(const BigRational& c, std::size_t degree) {
  std::vector<BigRational> v(degree + 1);
  v[degree] = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && vaffine::is_zero(coeffs_.back())) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return *this;
  BigRational inv = inverse(leading_coefficient());
  std::vector<BigRational> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * inv;
  return UnivariatePoly(std::move(v));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return UnivariatePoly(std::move(v));
}

UnivariatePoly operator-(const UnivariatePoly& a) {
  std::vector<BigRational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coeffs_[i];
  return UnivariatePoly(std::move(v));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(std::move(v));
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigRational& c = coeffs_[k];
    if (vaffine::is_zero(c)) continue;
    BigRational mag = abs(c);
    std::string mono;
    if (k == 1) mono = var;
    if (k > 1) mono = var + "^" + std::to_string(k);
    text::append_summand(out, sgn(c) < 0, (mag == 1 && k > 0) ? "" : vaffine::to_string(mag), mono);
  }
  return out.empty() ? "0" : out;
}

QuotientRemainder divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  if (a.degree() < b.degree()) return {UnivariatePoly(), a};
  std::vector<BigRational> rem = a.coeffs();
  std::vector<BigRational> quo(rem.size() - b.coeffs().size() + 1);
  const std::size_t db = static_cast<std::size_t>(b.degree());
  BigRational inv_lead = inverse(b.leading_coefficient());
  for (std::size_t k = quo.size(); k-- > 0;) {
    BigRational c = rem[k + db] * inv_lead;
    quo[k] = c;
    if (vaffine::is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

ExtendedGcd extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly r0 = a, r1 = b;
  UnivariatePoly s0 = UnivariatePoly::constant(1), s1;
  UnivariatePoly t0, t1 = UnivariatePoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  UnivariatePoly scale = UnivariatePoly::constant(inverse(r0.leading_coefficient()));
  return {r0 * scale, s0 * scale, t0 * scale};
}

}  // namespace vaffine
