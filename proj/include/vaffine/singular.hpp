#pragma once

// Exact certificates, over Q(ζ_n), for the points where U meets its
// translates ξ^i U, the singular points of U_n they produce, and the
// resulting Euler characteristic.

#include "vaffine/construction.hpp"
#include "vaffine/cyclotomic.hpp"
#include "vaffine/linalg.hpp"
#include "vaffine/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vaffine {

// Rows (1,0,1,0), (0,1,0,1), (ξ^-i,0,ξ^i,0), (0,ξ^-i,0,ξ^i) over (w,x,y,z);
// right-hand side all ones.
Matrix<CyclotomicNumber> intersection_system(const FieldPtr& field, long long i);

// (ξ^i/(1+ξ^i), ξ^i/(1+ξ^i), 1/(1+ξ^i), 1/(1+ξ^i)).
CyclotomicPoint closed_form_intersection(const FieldPtr& field, long long i);

// u satisfies ξ^-i w + ξ^i y = 1 and ξ^-i x + ξ^i z = 1.
bool on_translate(const CyclotomicPoint& u, long long i);

struct IntersectionCertificate {
  unsigned n = 0;
  unsigned i = 0;
  std::size_t rank = 0;
  CyclotomicPoint point;
  CyclotomicPoint closed_form;
  CyclotomicNumber det;
  CyclotomicNumber expected_det;  // (ξ^i - ξ^-i)^2
  CyclotomicPoint image;          // p_n(point)

  bool unique() const { return rank == 4; }
  bool matches_closed_form() const { return point == closed_form; }
  bool det_matches() const { return det == expected_det; }
  bool transverse() const { return !det.is_zero(); }
  bool on_both() const { return on_U(point) && on_translate(point, i); }
  // Fixed by complex conjugation ζ -> ζ^-1.
  bool image_real() const;
};

// Throws std::invalid_argument for even n or i outside 1..n-1.
IntersectionCertificate intersection_point(const FieldPtr& field, unsigned i);
IntersectionCertificate intersection_point(unsigned n, unsigned i);

CyclotomicNumber transversality_det(const FieldPtr& field, unsigned i);
CyclotomicNumber transversality_det(unsigned n, unsigned i);

// No point lies on U ∩ ξ^i U ∩ ξ^j U for 1 <= i < j <= n-1.
bool triple_intersections_empty(unsigned n);

// {k mod n : ξ^k u ∈ U}, ascending. Throws std::invalid_argument if u ∉ U.
std::vector<unsigned> fiber_in_U(unsigned n, const CyclotomicPoint& u);

// Rank of the Jacobian of `gens` at `point` (coordinates in t1..t4 order).
std::size_t jacobian_rank(const std::vector<QPoly>& gens, const CyclotomicPoint& point);

inline constexpr int kEulerCharacteristicOfU = 1;
inline constexpr const char* kEulerCharacteristicOfUProvenance =
    "U is isomorphic to (C - {0,1})^2 via (a,b) -> (a,b,1-a,1-b); Kunneth gives (-1)*(-1) = 1";

struct EulerReport {
  unsigned n = 0;
  int chi_U = kEulerCharacteristicOfU;
  std::size_t num_intersections = 0;
  std::size_t num_singular_points = 0;
  int chi_Un = 0;
  std::vector<std::pair<unsigned, unsigned>> pairing;
  std::vector<IntersectionCertificate> certificates;
  std::vector<CyclotomicPoint> singular_images;  // images for i = 1..(n-1)/2
  Section lemma{"lemma"};
  Section corollary{"corollary"};
  Section theorem{"theorem"};

  bool all_passed() const {
    return lemma.all_passed() && corollary.all_passed() && theorem.all_passed();
  }
};

// Lemma certificates for every i in 1..n-1, plus the triple-intersection check.
Section lemma_checks(unsigned n, std::vector<IntersectionCertificate>* certificates = nullptr);

// Counts and pairing of singular points (n odd, n >= 3). When `implicit`
// is given, every image is also checked against its generators.
EulerReport singular_points(unsigned n, const QIdeal* implicit = nullptr);

// χ(U_n) = χ(U) - (n-1) + (n-1)/2, checked against (3-n)/2 (n odd, n >= 1).
EulerReport euler_characteristic(unsigned n, const QIdeal* implicit = nullptr);

std::string to_string(const CyclotomicPoint& u);

}  // namespace vaffine
