#pragma once

#include "vaffine/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vaffine {

// Dense univariate polynomial over Q, lowest degree first. The leading
// coefficient is nonzero unless the polynomial is zero (empty vector).
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<BigRational> coeffs);

  static UnivariatePoly monomial(const BigRational& c, std::size_t degree);
  static UnivariatePoly constant(const BigRational& c) { return monomial(c, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
  }
  const BigRational& leading_coefficient() const { return coeffs_.back(); }
  UnivariatePoly monic() const;

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct QuotientRemainder {
  UnivariatePoly quotient;
  UnivariatePoly remainder;
};

// Throws std::domain_error when dividing by zero.
QuotientRemainder divmod(const UnivariatePoly& a, const UnivariatePoly& b);

// s*a + t*b = gcd with gcd monic (or zero when a = b = 0).
struct ExtendedGcd {
  UnivariatePoly gcd;
  UnivariatePoly s;
  UnivariatePoly t;
};

ExtendedGcd extended_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

}  // namespace vaffine
