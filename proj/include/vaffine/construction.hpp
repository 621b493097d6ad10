#pragma once

// The surface U = {w + y = x + z = 1} in the 4-torus, the Z/n action
// (w, x, y, z) -> (ξw, ξx, ξ^-1 y, ξ^-1 z), the quotient map
// p_n(w, x, y, z) = (w^n, w/x, wy, wz), and the equations of U_n = p_n(U).

#include "vaffine/budget.hpp"
#include "vaffine/cyclotomic.hpp"
#include "vaffine/groebner.hpp"
#include "vaffine/polynomial.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vaffine {

template <class K>
struct TorusPoint {
  std::array<K, 4> coords;

  const K& operator[](std::size_t i) const { return coords[i]; }
  std::span<const K> span() const { return coords; }
  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords == b.coords; }
};

using QPoint = TorusPoint<BigRational>;
using CyclotomicPoint = TorusPoint<CyclotomicNumber>;

template <class K>
bool in_torus(const TorusPoint<K>& u) {
  for (const auto& c : u.coords) {
    if (is_zero(c)) return false;
  }
  return true;
}

// Odd n >= 1; construction throws std::invalid_argument otherwise.
class QuotientMapSpec {
 public:
  explicit QuotientMapSpec(unsigned n);
  unsigned n() const { return n_; }

 private:
  unsigned n_;
};

RingPtr torus_ring();  // Q[w, x, y, z]
RingPtr graph_ring();  // Q[w, x, y, z, t1, t2, t3, t4]
RingPtr image_ring();  // Q[t1, t2, t3, t4]

// ⟨w + y - 1, x + z - 1⟩.
QIdeal ideal_of_U();

template <class K>
bool on_U(const TorusPoint<K>& u) {
  const K one = embed(BigRational(1), u[0]);
  return u[0] + u[2] == one && u[1] + u[3] == one;
}

CyclotomicPoint to_cyclotomic(const QPoint& u, const FieldPtr& field);

// ξ^k applied with weights (+1, +1, -1, -1); the point must live in Q(ζ_n).
CyclotomicPoint act(unsigned n, long long k, const CyclotomicPoint& u);

// Throws std::domain_error if a coordinate is zero.
template <class K>
TorusPoint<K> evaluate_pn(unsigned n, const TorusPoint<K>& u) {
  if (n == 0) throw std::invalid_argument("evaluate_pn: n must be positive");
  if (!in_torus(u)) throw std::domain_error("evaluate_pn: point has a zero coordinate");
  const K& w = u[0];
  K wn = w;
  for (unsigned i = 1; i < n; ++i) wn = wn * w;
  return TorusPoint<K>{{wn, K(w / u[1]), K(w * u[2]), K(w * u[3])}};
}

// ⟨w+y-1, x+z-1, t1-w^n, t2*x-w, t3-w*y, t4-w*z⟩ saturated by w, x, y, z in
// turn; lives in graph_ring().
QIdeal graph_ideal(const QuotientMapSpec& spec, StepBudget* budget = nullptr);

// Elimination of w, x, y, z from graph_ideal; lives in image_ring() and
// carries its reduced basis.
QIdeal implicitize(const QuotientMapSpec& spec, EliminationOrder order = EliminationOrder::block,
                   StepBudget* budget = nullptr);

// Saturation by t1, t2, t3, t4 in turn.
QIdeal saturate_torus(const QIdeal& ideal, StepBudget* budget = nullptr);

// (a, b) -> (a, b, 1 - a, 1 - b).
QPoint point_from_parameters(const BigRational& a, const BigRational& b);

// Deterministic for a given seed; parameters avoid {0, 1}.
std::vector<QPoint> sample_U_points(std::size_t count, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20140305;

struct Fixture {
  std::string path;
  std::string sha256;
  std::vector<std::string> lines;  // polynomial lines, comments removed
};

// Path of the vendored published U_5 system and its SHA-256.
std::string default_fixture_path();
inline constexpr const char* kFixtureSha256 =
    "09d6a567dbd45844f1848737b983b252bdd6809e682f4d5ed93530af00fe75d4";

// Throws std::runtime_error if the file cannot be read.
Fixture load_fixture(const std::string& path);
// Parse failures are fatal (text::ParseError).
std::vector<QPoly> parse_fixture(const Fixture& fixture, const RingPtr& ring);

std::string sha256_hex(std::string_view bytes);

struct Example5Report {
  std::vector<bool> forward_membership;   // published generator ∈ computed ideal
  std::vector<bool> backward_membership;  // computed generator ∈ saturated published ideal
  bool ideals_equal = false;
  std::size_t dimension = 0;
  std::vector<QPoly> computed_basis;
  std::vector<QPoly> published;

  bool all_membership() const;
};

// Compares implicitize(5) (pass `computed` to reuse one) with the published
// system after saturating both by t1*t2*t3*t4.
Example5Report verify_example5(const std::vector<QPoly>& published, const QIdeal& computed,
                               StepBudget* budget = nullptr);
Example5Report verify_example5(StepBudget* budget = nullptr);

}  // namespace vaffine
