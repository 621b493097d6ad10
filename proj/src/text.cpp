#include "vaffine/text.hpp"

#include <cctype>

namespace vaffine::text {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  char peek() {
    skip_space();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return i_; }

  std::string digits() {
    skip_space();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected digits", start);
    return std::string(s_.substr(start, i_ - start));
  }

  std::string identifier() {
    skip_space();
    std::size_t start = i_;
    if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      ++i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        ++i_;
      }
    }
    if (start == i_) throw ParseError("expected identifier", start);
    return std::string(s_.substr(start, i_ - start));
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

Power parse_power(Cursor& cur) {
  Power p;
  p.name = cur.identifier();
  if (cur.accept('^')) {
    std::size_t at = cur.pos();
    std::string e = cur.digits();
    if (e.size() > 9) throw ParseError("exponent too large", at);
    p.exponent = static_cast<unsigned>(std::stoul(e));
  }
  return p;
}

Term parse_term(Cursor& cur) {
  Term t;
  t.coefficient = 1;
  bool have_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    std::string num = cur.digits();
    if (cur.accept('/')) num += "/" + cur.digits();
    std::size_t at = cur.pos();
    try {
      t.coefficient = parse_rational(num);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), at);
    }
    have_coeff = true;
    if (cur.accept('*')) {
      if (!is_ident_start(cur.peek())) throw ParseError("expected variable after '*'", cur.pos());
    }
  }
  if (is_ident_start(cur.peek())) {
    t.powers.push_back(parse_power(cur));
    while (cur.accept('*')) t.powers.push_back(parse_power(cur));
  } else if (!have_coeff) {
    throw ParseError("expected term", cur.pos());
  }
  return t;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view input) {
  Cursor cur(input);
  std::vector<Term> terms;
  if (cur.done()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      throw ParseError("expected '+' or '-'", cur.pos());
    }
    Term t = parse_term(cur);
    if (negative) t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
    first = false;
  }
  return terms;
}

void append_summand(std::string& out, bool negative, const std::string& magnitude,
                    const std::string& monomial) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += magnitude.empty() ? "1" : magnitude;
  } else if (magnitude.empty()) {
    out += monomial;
  } else {
    out += magnitude + "*" + monomial;
  }
}

}  // namespace vaffine::text
