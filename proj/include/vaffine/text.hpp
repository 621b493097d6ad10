#pragma once

// Shared lexer/parser for the polynomial text grammar:
//
//   poly   := [sign] term (sign term)*
//   term   := coeff ['*'] [power ('*' power)*]  |  power ('*' power)*
//   coeff  := digits ['/' digits]
//   power  := ident ['^' digits]
//
// Whitespace is insignificant. Identifiers are [A-Za-z_][A-Za-z0-9_]*.

#include "vaffine/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vaffine::text {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Power {
  std::string name;
  unsigned exponent = 1;
};

struct Term {
  BigRational coefficient;
  std::vector<Power> powers;
};

std::vector<Term> parse_terms(std::string_view input);

// Appends one signed summand. `magnitude` is the absolute coefficient text
// ("" when the coefficient is a unit and a monomial follows).
void append_summand(std::string& out, bool negative, const std::string& magnitude,
                    const std::string& monomial);

}  // namespace vaffine::text
