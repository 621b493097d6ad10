#pragma once

#include "vaffine/rational.hpp"
#include "vaffine/univariate.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vaffine {

// Φ_n, obtained by exact division of x^n - 1 by Φ_d for every proper divisor d.
UnivariatePoly cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch(unsigned a, unsigned b)
      : std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

// Q(ζ_n) = Q[z]/(Φ_n). Immutable; shared by all of its elements.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> create(unsigned n);

  unsigned order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const UnivariatePoly& modulus() const { return modulus_; }

  // z^k mod Φ_n as a dense vector of length degree(), for 0 <= k < 2*degree().
  const std::vector<BigRational>& power_residue(std::size_t k) const { return residues_[k]; }

 private:
  explicit CyclotomicField(unsigned n);

  unsigned order_;
  std::size_t degree_;
  UnivariatePoly modulus_;
  std::vector<std::vector<BigRational>> residues_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// Element of Q(ζ_n): coefficients of a polynomial in ζ of degree < φ(n),
// always reduced modulo Φ_n and zero-padded to length φ(n).
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(FieldPtr field, const BigRational& c = BigRational(0));

  // Reduces an arbitrary-length coefficient list modulo Φ_n.
  static CyclotomicNumber from_coeffs(FieldPtr field, const std::vector<BigRational>& coeffs);

  unsigned order() const { return field_->order(); }
  const FieldPtr& field() const { return field_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Precondition: is_rational().
  BigRational rational_value() const;

  CyclotomicNumber inverse() const;
  // Automorphism ζ -> ζ^k; requires gcd(k, n) = 1.
  CyclotomicNumber galois(long long k) const;
  CyclotomicNumber pow(unsigned long e) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& b);
  CyclotomicNumber& operator-=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const CyclotomicNumber& b);
  CyclotomicNumber& operator/=(const CyclotomicNumber& b);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a);

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // Polynomial in z, highest degree first, e.g. "1/2*z^3 - z + 2".
  std::string to_string() const;

 private:
  CyclotomicNumber(FieldPtr field, std::vector<BigRational> reduced, int);
  void require_same_field(const CyclotomicNumber& b) const;

  FieldPtr field_;
  std::vector<BigRational> coeffs_;
};

CyclotomicNumber zeta_power(const FieldPtr& field, long long k);
CyclotomicNumber zeta_power(unsigned n, long long k);

// Parses the to_string() grammar (a polynomial in z) and reduces mod Φ_n.
CyclotomicNumber parse_cyclotomic(std::string_view text, const FieldPtr& field);

inline bool is_zero(const CyclotomicNumber& a) { return a.is_zero(); }
inline CyclotomicNumber inverse(const CyclotomicNumber& a) { return a.inverse(); }
inline std::string to_string(const CyclotomicNumber& a) { return a.to_string(); }
inline CyclotomicNumber embed(const BigRational& q, const CyclotomicNumber& like) {
  return CyclotomicNumber(like.field(), q);
}

}  // namespace vaffine
