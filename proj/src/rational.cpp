#include "vaffine/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vaffine {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  BigRational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw std::domain_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

BigRational inverse(const BigRational& q) {
  if (is_zero(q)) throw std::domain_error("inverse of zero rational");
  return BigRational(1) / q;
}

}  // namespace vaffine
