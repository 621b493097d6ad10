#include "vaffine/polynomial.hpp"

#include <set>

namespace vaffine {

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.size() > kMaxVariables) throw std::length_error("too many ring variables");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !seen.insert(v).second) throw std::invalid_argument("bad or duplicate variable name: " + v);
  }
}

std::shared_ptr<const PolyRing> PolyRing::create(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::string PolyRing::fresh_name(const std::string& stem) const {
  if (!index_of(stem)) return stem;
  for (std::size_t k = 0;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

QPoly parse_polynomial(std::string_view input, const RingPtr& ring, MonomialOrder order) {
  std::vector<Term<BigRational>> terms;
  for (auto& t : text::parse_terms(input)) {
    Monomial m(ring->arity());
    for (const auto& p : t.powers) {
      auto idx = ring->index_of(p.name);
      if (!idx) throw text::ParseError("unknown variable '" + p.name + "'", 0);
      m[*idx] += p.exponent;
    }
    terms.push_back({m, std::move(t.coefficient)});
  }
  return QPoly(ring, order, std::move(terms));
}

QPoly q_variable(const RingPtr& ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable: " + std::string(name));
  return QPoly::variable(ring, *idx, BigRational(1));
}

QPoly q_constant(const RingPtr& ring, const BigRational& c) { return QPoly::constant(ring, c); }

}  // namespace vaffine
