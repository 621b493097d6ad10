#include "vaffine/cyclotomic.hpp"

#include "vaffine/text.hpp"

#include <numeric>

namespace vaffine {

UnivariatePoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  UnivariatePoly acc = UnivariatePoly::monomial(1, n) - UnivariatePoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(acc, cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    acc = std::move(q);
  }
  return acc;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(unsigned n)
    : order_(n), modulus_(cyclotomic_polynomial(n)) {
  degree_ = static_cast<std::size_t>(modulus_.degree());
  // residues_[k] = z^k mod Φ_n; z^(k+1) = z * z^k, folding the top
  // coefficient back through z^deg = -(lower part of Φ_n).
  residues_.assign(2 * degree_, std::vector<BigRational>(degree_));
  if (degree_ > 0) residues_[0][0] = 1;
  for (std::size_t k = 1; k < residues_.size(); ++k) {
    const auto& prev = residues_[k - 1];
    auto& cur = residues_[k];
    BigRational top = prev[degree_ - 1];
    for (std::size_t j = degree_ - 1; j > 0; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (!is_zero(top)) {
      for (std::size_t j = 0; j < degree_; ++j) cur[j] -= top * modulus_.coeffs()[j];
    }
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::create(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic field order must be positive");
  return std::shared_ptr<const CyclotomicField>(new CyclotomicField(n));
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, const BigRational& c)
    : field_(std::move(field)), coeffs_(field_->degree()) {
  coeffs_[0] = c;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<BigRational> reduced, int)
    : field_(std::move(field)), coeffs_(std::move(reduced)) {}

CyclotomicNumber CyclotomicNumber::from_coeffs(FieldPtr field,
                                               const std::vector<BigRational>& coeffs) {
  const std::size_t deg = field->degree();
  if (coeffs.size() <= 2 * deg) {
    std::vector<BigRational> out(deg);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (vaffine::is_zero(coeffs[k])) continue;
      if (k < deg) {
        out[k] += coeffs[k];
      } else {
        const auto& r = field->power_residue(k);
        for (std::size_t j = 0; j < deg; ++j) out[j] += coeffs[k] * r[j];
      }
    }
    return CyclotomicNumber(std::move(field), std::move(out), 0);
  }
  UnivariatePoly rem = divmod(UnivariatePoly(coeffs), field->modulus()).remainder;
  std::vector<BigRational> out(deg);
  for (std::size_t j = 0; j < deg; ++j) out[j] = rem.coefficient(j);
  return CyclotomicNumber(std::move(field), std::move(out), 0);
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& b) const {
  if (field_->order() != b.field_->order()) throw OrderMismatch(order(), b.order());
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!vaffine::is_zero(c)) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (!vaffine::is_zero(coeffs_[j])) return false;
  }
  return true;
}

BigRational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) {
  require_same_field(b);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& b) {
  require_same_field(b);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= b.coeffs_[j];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) {
  require_same_field(b);
  const std::size_t deg = coeffs_.size();
  std::vector<BigRational> prod(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (vaffine::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (!vaffine::is_zero(b.coeffs_[j])) prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = from_coeffs(field_, prod);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& b) {
  return *this *= b.inverse();
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // Φ_n is irreducible, so gcd(a, Φ_n) = 1 and s*a ≡ 1 (mod Φ_n).
  ExtendedGcd eg = extended_gcd(UnivariatePoly(coeffs_), field_->modulus());
  if (eg.gcd.degree() != 0) throw std::logic_error("cyclotomic inverse: non-unit gcd");
  return from_coeffs(field_, eg.s.coeffs());
}

CyclotomicNumber CyclotomicNumber::galois(long long k) const {
  const long long n = order();
  long long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw std::invalid_argument("galois: exponent not coprime to order");
  CyclotomicNumber out(field_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (vaffine::is_zero(coeffs_[j])) continue;
    out += CyclotomicNumber(field_, coeffs_[j]) * zeta_power(field_, kk * static_cast<long long>(j));
  }
  return out;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long e) const {
  CyclotomicNumber result(field_, 1);
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string CyclotomicNumber::to_string() const {
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigRational& c = coeffs_[k];
    if (vaffine::is_zero(c)) continue;
    BigRational mag = abs(c);
    std::string mono;
    if (k == 1) mono = "z";
    if (k > 1) mono = "z^" + std::to_string(k);
    text::append_summand(out, sgn(c) < 0, (mag == 1 && k > 0) ? "" : vaffine::to_string(mag),
                         mono);
  }
  return out.empty() ? "0" : out;
}

CyclotomicNumber zeta_power(const FieldPtr& field, long long k) {
  const long long n = field->order();
  const std::size_t e = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<BigRational> coeffs(e + 1);
  coeffs[e] = 1;
  return CyclotomicNumber::from_coeffs(field, coeffs);
}

CyclotomicNumber zeta_power(unsigned n, long long k) {
  return zeta_power(CyclotomicField::create(n), k);
}

CyclotomicNumber parse_cyclotomic(std::string_view input, const FieldPtr& field) {
  std::vector<BigRational> coeffs;
  for (const auto& term : text::parse_terms(input)) {
    std::size_t degree = 0;
    for (const auto& p : term.powers) {
      if (p.name != "z") throw text::ParseError("unknown symbol '" + p.name + "'", 0);
      degree += p.exponent;
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += term.coefficient;
  }
  return CyclotomicNumber::from_coeffs(field, coeffs);
}

}  // namespace vaffine
