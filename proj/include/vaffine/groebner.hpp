#pragma once

// Buchberger's algorithm and the ideal operations built on it.

#include "vaffine/budget.hpp"
#include "vaffine/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace vaffine {

template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<MultiPoly<K>> polys;
};

// Generator list plus an optional reduced Gröbner basis for one order.
// Values are immutable; with_basis() returns a new snapshot.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MultiPoly<K>> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (!same_ring(ring_, g.ring())) throw RingMismatch();
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly<K>>& generators() const { return generators_; }
  const std::optional<GroebnerBasis<K>>& cached_basis() const { return cache_; }

  Ideal with_basis(GroebnerBasis<K> basis) const {
    Ideal copy = *this;
    copy.cache_ = std::move(basis);
    return copy;
  }

 private:
  RingPtr ring_;
  std::vector<MultiPoly<K>> generators_;
  std::optional<GroebnerBasis<K>> cache_;
};

using QIdeal = Ideal<BigRational>;

// Minimal, inter-reduced, monic; sorted by descending leading monomial.
template <class K>
std::vector<MultiPoly<K>> reduce_basis(std::vector<MultiPoly<K>> g, const MonomialOrder& ord,
                                       StepBudget* budget = nullptr) {
  for (auto& p : g) p = p.with_order(ord).monic();
  std::stable_sort(g.begin(), g.end(), [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<MultiPoly<K>> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const MultiPoly<K>& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<MultiPoly<K>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(j < i ? reduced[j] : minimal[j]);
    }
    reduced.push_back(normal_form<K>(minimal[i], others, ord, budget).monic());
  }
  std::reverse(reduced.begin(), reduced.end());
  return reduced;
}

// Reduced Gröbner basis of ⟨gens⟩. Pairs are processed by the normal
// strategy (smallest lcm first, ties by creation index) and filtered by
// Buchberger's product and chain criteria.
template <class K>
std::vector<MultiPoly<K>> buchberger(std::span<const MultiPoly<K>> gens, const MonomialOrder& ord,
                                     StepBudget* budget = nullptr) {
  std::vector<MultiPoly<K>> basis;
  for (const auto& f : gens) {
    if (!f.is_zero()) basis.push_back(f.with_order(ord).monic());
  }
  if (basis.empty()) return {};

  struct Pair {
    Monomial lcm;
    std::size_t seq;
    std::size_t i;
    std::size_t j;
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    int c = ord.compare(a.lcm, b.lcm);
    return c != 0 ? c < 0 : a.seq < b.seq;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::vector<std::vector<bool>> pending;
  std::size_t seq = 0;

  auto add_pairs_for = [&](std::size_t k) {
    pending.emplace_back(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      queue.insert(Pair{lcm(basis[i].leading_monomial(), basis[k].leading_monomial()), seq++, i, k});
      pending[k][i] = true;
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending[b][a] : pending[a][b];
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending[p.j][p.i] = false;
    const Monomial& lm_i = basis[p.i].leading_monomial();
    const Monomial& lm_j = basis[p.j].leading_monomial();
    if (lm_i.coprime(lm_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      chain = basis[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
    }
    if (chain) continue;
    MultiPoly<K> r = normal_form<K>(s_polynomial(basis[p.i], basis[p.j], ord), basis, ord, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return reduce_basis(std::move(basis), ord, budget);
}

// Reduced basis for `ord`, reusing the ideal's cache when it matches.
template <class K>
std::vector<MultiPoly<K>> groebner_basis(const Ideal<K>& ideal, const MonomialOrder& ord,
                                         StepBudget* budget = nullptr) {
  if (ideal.cached_basis() && ideal.cached_basis()->order == ord) return ideal.cached_basis()->polys;
  return buchberger<K>(ideal.generators(), ord, budget);
}

template <class K>
Ideal<K> with_groebner_basis(const Ideal<K>& ideal, const MonomialOrder& ord,
                             StepBudget* budget = nullptr) {
  if (ideal.cached_basis() && ideal.cached_basis()->order == ord) return ideal;
  return ideal.with_basis({ord, buchberger<K>(ideal.generators(), ord, budget)});
}

// Every S-polynomial of a pair in `g` has normal form zero against `g`.
template <class K>
bool is_groebner_basis(std::span<const MultiPoly<K>> g, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form<K>(s_polynomial(g[i], g[j], ord), g, ord).is_zero()) return false;
    }
  }
  return true;
}

// Monic, and no term of any element divisible by another element's LM.
template <class K>
bool is_reduced_basis(std::span<const MultiPoly<K>> g, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    MultiPoly<K> gi = g[i].with_order(ord);
    if (gi.is_zero() || !(gi == gi.monic())) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const Monomial& lm = g[j].with_order(ord).leading_monomial();
      for (const auto& t : gi.terms()) {
        if (lm.divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

template <class K>
bool ideal_membership(const MultiPoly<K>& f, const Ideal<K>& ideal, const MonomialOrder& ord,
                      StepBudget* budget = nullptr) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch();
  auto g = groebner_basis(ideal, ord, budget);
  if (g.empty()) return f.is_zero();
  return normal_form<K>(f, g, ord, budget).is_zero();
}

enum class EliminationOrder { block, lex };

// I ∩ k[x_{k+1}, ..., x_n] for the first k ring variables. The result lives
// in a ring of the remaining variables and carries its reduced basis
// (grevlex for the block order, lex for pure lex).
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::size_t k, EliminationOrder kind = EliminationOrder::block,
                   StepBudget* budget = nullptr, RingPtr target = nullptr) {
  const PolyRing& ring = *ideal.ring();
  if (k > ring.arity()) throw std::invalid_argument("eliminate: more variables than the ring has");
  std::vector<std::string> rest(ring.variables().begin() + static_cast<std::ptrdiff_t>(k),
                                ring.variables().end());
  if (!target) target = PolyRing::create(rest);
  if (target->variables() != rest) throw std::invalid_argument("eliminate: target ring mismatch");

  const MonomialOrder ord = kind == EliminationOrder::block ? MonomialOrder::block(k) : MonomialOrder::lex();
  const MonomialOrder sub_ord = kind == EliminationOrder::block ? MonomialOrder::grevlex() : MonomialOrder::lex();
  auto g = groebner_basis(ideal, ord, budget);

  std::vector<std::size_t> kept(rest.size());
  std::iota(kept.begin(), kept.end(), k);
  std::vector<std::size_t> index_map(ring.arity(), ring.arity() + 1);
  for (std::size_t i = k; i < ring.arity(); ++i) index_map[i] = i - k;

  std::vector<MultiPoly<K>> out;
  for (const auto& p : g) {
    if (p.supported_on(kept)) out.push_back(p.map_to(target, index_map, sub_ord));
  }
  Ideal<K> result(target, out);
  return result.with_basis({sub_ord, out});
}

// I : f^∞ by the Rabinowitsch construction: adjoin s, add 1 - s*f,
// eliminate s.
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const MultiPoly<K>& f, StepBudget* budget = nullptr) {
  if (!same_ring(f.ring(), ideal.ring())) throw RingMismatch();
  if (f.is_zero()) throw std::invalid_argument("saturate by zero polynomial");
  const RingPtr& ring = ideal.ring();
  std::vector<std::string> names{ring->fresh_name("s")};
  names.insert(names.end(), ring->variables().begin(), ring->variables().end());
  RingPtr extended = PolyRing::create(names);

  std::vector<std::size_t> shift(ring->arity());
  std::iota(shift.begin(), shift.end(), 1);
  const MonomialOrder ord = MonomialOrder::block(1);
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) gens.push_back(g.map_to(extended, shift, ord));
  }
  MultiPoly<K> fe = f.map_to(extended, shift, ord);
  const K& lc = fe.leading_coefficient();
  const K one = lc * inverse(lc);
  MultiPoly<K> s = MultiPoly<K>::variable(extended, 0, one, ord);
  gens.push_back(MultiPoly<K>::constant(extended, one, ord) - s * fe);
  return eliminate(Ideal<K>(extended, std::move(gens)), 1, EliminationOrder::block, budget, ring);
}

// Iterated single-factor saturation, in the given order.
template <class K>
Ideal<K> saturate_product(const Ideal<K>& ideal, std::span<const MultiPoly<K>> factors,
                          StepBudget* budget = nullptr) {
  Ideal<K> acc = ideal;
  for (const auto& f : factors) acc = saturate(acc, f, budget);
  return acc;
}

// Mutual containment, checked by normal forms against each side's basis.
template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b, const MonomialOrder& ord,
                 StepBudget* budget = nullptr) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  auto ga = groebner_basis(a, ord, budget);
  auto gb = groebner_basis(b, ord, budget);
  auto contained = [&](const std::vector<MultiPoly<K>>& gens, const std::vector<MultiPoly<K>>& basis) {
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      if (basis.empty() || !normal_form<K>(f, basis, ord, budget).is_zero()) return false;
    }
    return true;
  };
  return contained(b.generators(), ga) && contained(a.generators(), gb);
}

// Drops, front to back, every generator that lies in the ideal of the ones
// still kept. The result generates the same ideal but need not be minimal.
template <class K>
std::vector<MultiPoly<K>> trim_generators(std::vector<MultiPoly<K>> gens, const MonomialOrder& ord,
                                          StepBudget* budget = nullptr) {
  std::erase_if(gens, [](const MultiPoly<K>& g) { return g.is_zero(); });
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<MultiPoly<K>> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    auto basis = buchberger<K>(others, ord, budget);
    if (!basis.empty() && normal_form<K>(gens[i], basis, ord, budget).is_zero()) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return gens;
}

// Largest set of variables containing the support of no leading monomial of
// a Gröbner basis. Throws std::domain_error for the unit ideal.
template <class K>
std::size_t krull_dimension(const Ideal<K>& ideal, const MonomialOrder& ord = MonomialOrder::grevlex(),
                            StepBudget* budget = nullptr) {
  auto g = groebner_basis(ideal, ord, budget);
  const std::size_t n = ideal.ring()->arity();
  std::vector<std::uint32_t> supports;
  for (const auto& p : g) {
    if (p.leading_monomial().is_one()) throw std::domain_error("krull_dimension of the unit ideal");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.leading_monomial()[i] != 0) mask |= 1u << i;
    }
    supports.push_back(mask);
  }
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace vaffine
