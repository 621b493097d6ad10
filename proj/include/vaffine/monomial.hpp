#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace vaffine {

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector with inline storage; arity is fixed by the owning ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
    if (arity > kMaxVariables) throw std::length_error("too many ring variables");
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
    std::copy(exps.begin(), exps.end(), e_.begin());
  }

  static Monomial variable(std::size_t arity, std::size_t index) {
    Monomial m(arity);
    m.e_[index] = 1;
    return m;
  }

  std::size_t arity() const { return arity_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const std::uint32_t> exponents() const { return {e_.data(), arity_}; }

  std::uint64_t degree(std::size_t begin, std::size_t end) const {
    std::uint64_t d = 0;
    for (std::size_t i = begin; i < end; ++i) d += e_[i];
    return d;
  }
  std::uint64_t degree() const { return degree(0, arity_); }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }
  // No variable occurs in both.
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  // Precondition: b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && std::equal(a.e_.begin(), a.e_.begin() + a.arity_, b.e_.begin());
  }

 private:
  std::array<std::uint32_t, kMaxVariables> e_{};
  std::uint8_t arity_ = 0;
};

// lex, grevlex, or block(k): the first k variables are eliminated
// (lex between the two blocks, grevlex inside each).
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::block, k); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  // Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.arity();
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
      case Kind::grevlex:
        return grevlex_range(a, b, 0, n);
      case Kind::block: {
        const std::size_t k = std::min(block_, n);
        if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
        return grevlex_range(a, b, k, n);
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::block: return "block(" + std::to_string(block_) + ")";
    }
    return "";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin,
                           std::size_t end) {
    const auto da = a.degree(begin, end), db = b.degree(begin, end);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = end; i-- > begin;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace vaffine
