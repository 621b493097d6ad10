#pragma once

#include "vaffine/budget.hpp"
#include "vaffine/monomial.hpp"
#include "vaffine/rational.hpp"
#include "vaffine/text.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vaffine {

class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);
  static std::shared_ptr<const PolyRing> create(std::vector<std::string> variables);

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // A variable name not yet used by this ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace detail {
template <class K>
bool coeff_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

template <class K>
struct Term {
  Monomial monomial;
  K coefficient;
};

// Sparse polynomial over the exact field K. Terms are kept sorted in
// descending order under the attached monomial order, with no zero
// coefficients; all outputs are therefore reproducible.
template <class K>
class MultiPoly {
 public:
  using TermType = Term<K>;

  explicit MultiPoly(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex())
      : ring_(std::move(ring)), order_(order) {}

  // Sorts, combines like terms and drops zeros.
  MultiPoly(RingPtr ring, MonomialOrder order, std::vector<TermType> terms)
      : ring_(std::move(ring)), order_(order), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
      if (t.monomial.arity() != ring_->arity()) throw std::invalid_argument("monomial arity mismatch");
    }
    normalize();
  }

  static MultiPoly constant(RingPtr ring, const K& c, MonomialOrder order = MonomialOrder::grevlex()) {
    Monomial one(ring->arity());
    return MultiPoly(ring, order, {TermType{one, c}});
  }
  static MultiPoly variable(RingPtr ring, std::size_t index, const K& one,
                            MonomialOrder order = MonomialOrder::grevlex()) {
    Monomial m = Monomial::variable(ring->arity(), index);
    return MultiPoly(ring, order, {TermType{m, one}});
  }

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const TermType> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const TermType& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const K& leading_coefficient() const { return leading_term().coefficient; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  MultiPoly with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    MultiPoly r(ring_, order);
    r.terms_ = terms_;
    r.sort();
    return r;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scale(inverse(leading_coefficient()));
  }

  MultiPoly scale(const K& c) const {
    MultiPoly r(ring_, order_);
    if (detail::coeff_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, K(t.coefficient * c)});
    return r;
  }

  // c * m * this; order is multiplicative so the result stays sorted.
  MultiPoly mul_term(const Monomial& m, const K& c) const {
    MultiPoly r(ring_, order_);
    if (detail::coeff_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, K(t.coefficient * c)});
    return r;
  }

  // this - c*m*g, merged in one pass.
  MultiPoly sub_mul_term(const K& c, const Monomial& m, const MultiPoly& g) const {
    check_ring(g);
    const MultiPoly& gg = g.order_ == order_ ? g : g.with_order(order_);
    MultiPoly r(ring_, order_);
    r.terms_.reserve(terms_.size() + gg.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < gg.terms_.size()) {
      if (j == gg.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial mj = gg.terms_[j].monomial * m;
      int cmp = i == terms_.size() ? -1 : order_.compare(terms_[i].monomial, mj);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({mj, K(-(gg.terms_[j].coefficient * c))});
        ++j;
      } else {
        K v = terms_[i].coefficient - gg.terms_[j].coefficient * c;
        if (!detail::coeff_zero(v)) r.terms_.push_back({mj, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    if (b.is_zero()) return a;
    return a.sub_mul_term(K(-b.one_like()), Monomial(a.ring_->arity()), b);
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    if (b.is_zero()) return a;
    return a.sub_mul_term(b.one_like(), Monomial(a.ring_->arity()), b);
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    std::vector<TermType> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, K(s.coefficient * t.coefficient)});
    }
    return MultiPoly(a.ring_, a.order_, std::move(prod));
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(ring_, one_like(), order_);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  // Equality of polynomials, independent of the attached order.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    const MultiPoly& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == bb.terms_[i].monomial) ||
          !(a.terms_[i].coefficient == bb.terms_[i].coefficient)) {
        return false;
      }
    }
    return true;
  }

  // Re-embeds into `target`; `index_map[i]` is the target index of variable i.
  MultiPoly map_to(RingPtr target, std::span<const std::size_t> index_map,
                   std::optional<MonomialOrder> order = std::nullopt) const {
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->arity());
      for (std::size_t i = 0; i < ring_->arity(); ++i) {
        if (t.monomial[i] == 0) continue;
        if (index_map[i] >= target->arity()) throw std::invalid_argument("variable has no image in target ring");
        m[index_map[i]] += t.monomial[i];
      }
      out.push_back({m, t.coefficient});
    }
    return MultiPoly(std::move(target), order.value_or(order_), std::move(out));
  }

  // Uses only variables from `vars` (indices).
  bool supported_on(std::span<const std::size_t> vars) const {
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < ring_->arity(); ++i) {
        if (t.monomial[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
      }
    }
    return true;
  }

  void pop_leading() { terms_.erase(terms_.begin()); }

  void check_ring(const MultiPoly& other) const {
    if (!same_ring(ring_, other.ring_)) throw RingMismatch();
  }

 private:
  K one_like() const {
    if (terms_.empty()) throw std::logic_error("no coefficient available to derive unity");
    const K& c = terms_.front().coefficient;
    return K(c * inverse(c));
  }

  void sort() {
    std::sort(terms_.begin(), terms_.end(), [this](const TermType& a, const TermType& b) {
      return order_.greater(a.monomial, b.monomial);
    });
  }

  void normalize() {
    sort();
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coefficient = out.back().coefficient + t.coefficient;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const TermType& t) { return detail::coeff_zero(t.coefficient); });
    terms_ = std::move(out);
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<TermType> terms_;
};

using QPoly = MultiPoly<BigRational>;

template <class K>
struct Division {
  std::vector<MultiPoly<K>> quotients;
  MultiPoly<K> remainder;
};

namespace detail {

template <class K>
std::string coefficient_magnitude(const K& c, bool& negative) {
  if constexpr (std::is_same_v<K, BigRational>) {
    negative = sgn(c) < 0;
    return to_string(BigRational(abs(c)));
  } else {
    negative = false;
    return "(" + to_string(c) + ")";
  }
}

template <class K>
bool is_unit_magnitude(const K& c) {
  if constexpr (std::is_same_v<K, BigRational>) {
    return abs(c) == 1;
  } else {
    return false;
  }
}

}  // namespace detail

std::string format_monomial(const PolyRing& ring, const Monomial& m);

// Terms in descending order under `order` (default: the polynomial's own).
template <class K>
std::string to_string(const MultiPoly<K>& f, std::optional<MonomialOrder> order = std::nullopt) {
  const MultiPoly<K> g = order ? f.with_order(*order) : f;
  std::string out;
  for (const auto& t : g.terms()) {
    bool negative = false;
    std::string mag = detail::coefficient_magnitude(t.coefficient, negative);
    std::string mono = format_monomial(*g.ring(), t.monomial);
    if (!mono.empty() && detail::is_unit_magnitude(t.coefficient)) mag.clear();
    text::append_summand(out, negative, mag, mono);
  }
  return out.empty() ? "0" : out;
}

// Multivariate division: f = sum q_i g_i + r, with no term of r divisible
// by any LM(g_i). Divisors are tried in list order. With `track_quotients`
// false the quotient list is left empty. Each reduction step is charged to
// `budget` when one is given.
template <class K>
Division<K> divide(const MultiPoly<K>& f, std::span<const MultiPoly<K>> divisors,
                   const MonomialOrder& order, bool track_quotients = true,
                   StepBudget* budget = nullptr) {
  std::vector<MultiPoly<K>> converted;
  converted.reserve(divisors.size());
  std::vector<const MultiPoly<K>*> gs;
  gs.reserve(divisors.size());
  for (const auto& g : divisors) {
    f.check_ring(g);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (g.order() == order) {
      gs.push_back(&g);
    } else {
      converted.push_back(g.with_order(order));
      gs.push_back(&converted.back());
    }
  }
  std::vector<std::vector<Term<K>>> quotient_terms(track_quotients ? gs.size() : 0);
  std::vector<Term<K>> remainder;
  MultiPoly<K> p = f.with_order(order);
  while (!p.is_zero()) {
    const Term<K>& lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const Monomial& lm = gs[i]->leading_monomial();
      if (!lm.divides(lt.monomial)) continue;
      if (budget) budget->charge();
      Monomial m = lt.monomial / lm;
      K c = lt.coefficient / gs[i]->leading_coefficient();
      if (track_quotients) quotient_terms[i].push_back({m, c});
      p = p.sub_mul_term(c, m, *gs[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      p.pop_leading();
    }
  }
  Division<K> out{{}, MultiPoly<K>(f.ring(), order, std::move(remainder))};
  for (auto& q : quotient_terms) out.quotients.emplace_back(f.ring(), order, std::move(q));
  return out;
}

template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& f, std::span<const MultiPoly<K>> divisors,
                         const MonomialOrder& order, StepBudget* budget = nullptr) {
  return divide(f, divisors, order, false, budget).remainder;
}

template <class K>
MultiPoly<K> s_polynomial(const MultiPoly<K>& f, const MultiPoly<K>& g, const MonomialOrder& order) {
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) throw std::domain_error("s_polynomial of zero polynomial");
  MultiPoly<K> fo = f.with_order(order), go = g.with_order(order);
  const Monomial l = lcm(fo.leading_monomial(), go.leading_monomial());
  MultiPoly<K> a = fo.mul_term(l / fo.leading_monomial(), inverse(fo.leading_coefficient()));
  return a.sub_mul_term(inverse(go.leading_coefficient()), l / go.leading_monomial(), go);
}

// Partial derivative with respect to variable `index`.
inline QPoly derivative(const QPoly& f, std::size_t index) {
  std::vector<Term<BigRational>> out;
  for (const auto& t : f.terms()) {
    if (t.monomial[index] == 0) continue;
    Monomial m = t.monomial;
    BigRational c = t.coefficient * m[index];
    m[index] -= 1;
    out.push_back({m, std::move(c)});
  }
  return QPoly(f.ring(), f.order(), std::move(out));
}

// Evaluates a rational polynomial at a point with coordinates in any field
// containing Q. Precondition: point.size() == arity >= 1.
template <class K>
K evaluate(const QPoly& f, std::span<const K> point) {
  if (point.size() != f.ring()->arity() || point.empty()) {
    throw std::invalid_argument("evaluate: point dimension mismatch");
  }
  K acc = embed(BigRational(0), point[0]);
  for (const auto& t : f.terms()) {
    K v = embed(t.coefficient, point[0]);
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v = v * point[i];
    }
    acc = acc + v;
  }
  return acc;
}

// Parsing of the text grammar into Q[ring]; unknown variables are an error.
QPoly parse_polynomial(std::string_view input, const RingPtr& ring,
                       MonomialOrder order = MonomialOrder::grevlex());

QPoly q_variable(const RingPtr& ring, std::string_view name);
QPoly q_constant(const RingPtr& ring, const BigRational& c);

}  // namespace vaffine
