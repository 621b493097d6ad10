#include "vaffine/singular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vaffine {

namespace {

void require_index(unsigned n, unsigned i) {
  QuotientMapSpec spec(n);
  if (i < 1 || i >= n) {
    throw std::invalid_argument("intersection index must lie in 1.." + std::to_string(n - 1));
  }
}

std::string label(unsigned i) { return "i=" + std::to_string(i); }

}  // namespace

std::string to_string(const CyclotomicPoint& u) {
  std::string out = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ", ";
    out += u[k].to_string();
  }
  return out + ")";
}

Matrix<CyclotomicNumber> intersection_system(const FieldPtr& field, long long i) {
  const CyclotomicNumber zero(field), one(field, 1);
  const CyclotomicNumber up = zeta_power(field, i), down = zeta_power(field, -i);
  Matrix<CyclotomicNumber> m(4, 4, zero);
  m(0, 0) = one;
  m(0, 2) = one;
  m(1, 1) = one;
  m(1, 3) = one;
  m(2, 0) = down;
  m(2, 2) = up;
  m(3, 1) = down;
  m(3, 3) = up;
  return m;
}

CyclotomicPoint closed_form_intersection(const FieldPtr& field, long long i) {
  const CyclotomicNumber up = zeta_power(field, i);
  const CyclotomicNumber inv = (CyclotomicNumber(field, 1) + up).inverse();
  const CyclotomicNumber a = up * inv;
  return CyclotomicPoint{{a, a, inv, inv}};
}

bool on_translate(const CyclotomicPoint& u, long long i) {
  const FieldPtr& field = u[0].field();
  const CyclotomicNumber one(field, 1);
  const CyclotomicNumber up = zeta_power(field, i), down = zeta_power(field, -i);
  return down * u[0] + up * u[2] == one && down * u[1] + up * u[3] == one;
}

bool IntersectionCertificate::image_real() const {
  for (const auto& c : image.coords) {
    if (!(c.galois(-1) == c)) return false;
  }
  return true;
}

IntersectionCertificate intersection_point(const FieldPtr& field, unsigned i) {
  const unsigned n = field->order();
  require_index(n, i);
  const CyclotomicNumber one(field, 1);
  LinearSolution<CyclotomicNumber> sol =
      solve_linear(intersection_system(field, i), std::vector<CyclotomicNumber>(4, one));
  const CyclotomicNumber diff = zeta_power(field, i) - zeta_power(field, -static_cast<long long>(i));
  CyclotomicPoint closed = closed_form_intersection(field, i);
  CyclotomicPoint point = sol.solution ? CyclotomicPoint{{(*sol.solution)[0], (*sol.solution)[1],
                                                          (*sol.solution)[2], (*sol.solution)[3]}}
                                       : closed;
  CyclotomicPoint image = evaluate_pn(n, point);
  return IntersectionCertificate{n,     i,          sol.rank,   std::move(point), std::move(closed),
                                 sol.determinant, diff * diff, std::move(image)};
}

IntersectionCertificate intersection_point(unsigned n, unsigned i) {
  require_index(n, i);
  return intersection_point(CyclotomicField::create(n), i);
}

CyclotomicNumber transversality_det(const FieldPtr& field, unsigned i) {
  require_index(field->order(), i);
  const CyclotomicNumber one(field, 1);
  return solve_linear(intersection_system(field, i), std::vector<CyclotomicNumber>(4, one)).determinant;
}

CyclotomicNumber transversality_det(unsigned n, unsigned i) {
  require_index(n, i);
  return transversality_det(CyclotomicField::create(n), i);
}

bool triple_intersections_empty(unsigned n) {
  QuotientMapSpec spec(n);
  const FieldPtr field = CyclotomicField::create(n);
  std::vector<CyclotomicPoint> points;
  for (unsigned i = 1; i < n; ++i) points.push_back(closed_form_intersection(field, i));
  for (unsigned i = 0; i < points.size(); ++i) {
    for (unsigned j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) return false;
    }
  }
  return true;
}

std::vector<unsigned> fiber_in_U(unsigned n, const CyclotomicPoint& u) {
  if (!on_U(u)) throw std::invalid_argument("fiber_in_U: point is not on U");
  std::vector<unsigned> out;
  for (unsigned k = 0; k < n; ++k) {
    if (on_U(act(n, k, u))) out.push_back(k);
  }
  return out;
}

std::size_t jacobian_rank(const std::vector<QPoly>& gens, const CyclotomicPoint& point) {
  if (gens.empty()) return 0;
  Matrix<CyclotomicNumber> jac(gens.size(), 4, CyclotomicNumber(point[0].field()));
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      jac(r, c) = evaluate<CyclotomicNumber>(derivative(gens[r], c), point.span());
    }
  }
  return matrix_rank(std::move(jac));
}

Section lemma_checks(unsigned n, std::vector<IntersectionCertificate>* certificates) {
  QuotientMapSpec spec(n);
  const FieldPtr field = CyclotomicField::create(n);
  Section sec{"lemma"};
  std::vector<IntersectionCertificate> certs;
  for (unsigned i = 1; i < n; ++i) certs.push_back(intersection_point(field, i));
  for (const auto& c : certs) {
    const std::string at = label(c.i);
    sec.add(at + ": unique solution", c.unique(), "rank " + std::to_string(c.rank));
    sec.add(at + ": matches closed form", c.matches_closed_form(), to_string(c.point));
    sec.add(at + ": lies on U and translate", c.on_both(), "");
    sec.add(at + ": det = (xi^i - xi^-i)^2", c.det_matches(), c.det.to_string());
    sec.add(at + ": transverse (det != 0)", c.transverse(), c.det.to_string());
  }
  sec.add("triple intersections empty", triple_intersections_empty(n),
          std::to_string(certs.size() * (certs.size() - (certs.empty() ? 0 : 1)) / 2) + " pairs compared");
  sec.values["n"] = n;
  sec.values["intersections"] = certs.size();
  if (certificates) *certificates = std::move(certs);
  return sec;
}

EulerReport singular_points(unsigned n, const QIdeal* implicit) {
  QuotientMapSpec spec(n);
  if (n < 3) throw std::invalid_argument("singular_points requires n >= 3");
  EulerReport rep;
  rep.n = n;
  rep.lemma = lemma_checks(n, &rep.certificates);
  rep.num_intersections = rep.certificates.size();
  const auto& certs = rep.certificates;
  auto image = [&](unsigned i) -> const CyclotomicPoint& { return certs[i - 1].image; };

  Section& sec = rep.corollary;
  for (unsigned i = 1; i <= (n - 1) / 2; ++i) {
    const bool paired = image(i) == image(n - i);
    if (paired) rep.pairing.emplace_back(i, n - i);
    sec.add("image(" + std::to_string(i) + ") = image(" + std::to_string(n - i) + ")", paired,
            to_string(image(i)));
    rep.singular_images.push_back(image(i));
  }
  for (const auto& c : certs) {
    const auto fiber = fiber_in_U(n, c.point);
    const bool ok = fiber == std::vector<unsigned>{0, n - c.i};
    std::string w = "{";
    for (std::size_t k = 0; k < fiber.size(); ++k) w += (k ? ", " : "") + std::to_string(fiber[k]);
    sec.add(label(c.i) + ": fiber of intersection point is {0, n-i}", ok, w + "}");
    sec.add(label(c.i) + ": image fixed by complex conjugation", c.image_real(), "");
  }

  bool distinct = true;
  for (std::size_t a = 0; a < rep.singular_images.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.singular_images.size(); ++b) {
      if (rep.singular_images[a] == rep.singular_images[b]) distinct = false;
    }
  }
  sec.add("images for i = 1..(n-1)/2 pairwise distinct", distinct, "");

  std::vector<CyclotomicPoint> unique;
  for (const auto& c : certs) {
    if (std::find(unique.begin(), unique.end(), c.image) == unique.end()) unique.push_back(c.image);
  }
  rep.num_singular_points = unique.size();
  sec.add("distinct images = (n-1)/2", unique.size() == (n - 1) / 2,
          std::to_string(unique.size()) + " distinct of " + std::to_string(certs.size()));

  // σ_k(point_i) = point_{ki}, so σ_k must permute the images the same way.
  bool galois_stable = true;
  for (unsigned k = 2; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    for (const auto& c : certs) {
      CyclotomicPoint conj{{c.image[0].galois(k), c.image[1].galois(k), c.image[2].galois(k),
                            c.image[3].galois(k)}};
      if (!(conj == image(static_cast<unsigned>((static_cast<unsigned long>(k) * c.i) % n)))) {
        galois_stable = false;
      }
    }
  }
  sec.add("Galois action permutes images", galois_stable, "");

  if (implicit) {
    const std::vector<QPoly>& gens = implicit->generators();
    bool vanish = true;
    std::size_t max_rank = 0;
    for (const auto& p : rep.singular_images) {
      for (const auto& g : gens) {
        if (!evaluate<CyclotomicNumber>(g, p.span()).is_zero()) vanish = false;
      }
      max_rank = std::max(max_rank, jacobian_rank(gens, p));
    }
    sec.add("images satisfy every generator of implicitize(n)", vanish,
            std::to_string(gens.size()) + " generators");
    sec.add("Jacobian rank < 2 at every image", max_rank < 2, "max rank " + std::to_string(max_rank));
  }

  sec.values["n"] = n;
  sec.values["num_singular_points"] = rep.num_singular_points;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : rep.pairing) pairs.push_back(std::to_string(a) + "<->" + std::to_string(b));
  sec.values["pairing"] = std::move(pairs);
  nlohmann::ordered_json imgs = nlohmann::ordered_json::array();
  for (const auto& p : rep.singular_images) imgs.push_back(to_string(p));
  sec.values["singular_points"] = std::move(imgs);
  return rep;
}

EulerReport euler_characteristic(unsigned n, const QIdeal* implicit) {
  QuotientMapSpec spec(n);
  EulerReport rep;
  if (n == 1) {
    rep.n = 1;
    rep.lemma.values["n"] = 1;
    rep.lemma.values["intersections"] = 0;
    rep.corollary.values["n"] = 1;
    rep.corollary.values["num_singular_points"] = 0;
  } else {
    rep = singular_points(n, implicit);
  }
  const int k = static_cast<int>(n);
  rep.chi_Un = rep.chi_U - static_cast<int>(rep.num_intersections) + static_cast<int>(rep.num_singular_points);
  const int expected = (3 - k) / 2;
  Section& sec = rep.theorem;
  sec.values["n"] = n;
  sec.values["chi_U"] = rep.chi_U;
  sec.values["chi_U_provenance"] = kEulerCharacteristicOfUProvenance;
  sec.values["num_intersections"] = rep.num_intersections;
  sec.values["num_singular_points"] = rep.num_singular_points;
  sec.values["chi_Un"] = rep.chi_Un;
  sec.add("intersections = n-1", rep.num_intersections == n - 1, std::to_string(rep.num_intersections));
  sec.add("singular points = (n-1)/2", rep.num_singular_points == (n - 1) / 2,
          std::to_string(rep.num_singular_points));
  sec.add("chi(U_n) = (3-n)/2", rep.chi_Un == expected,
          "chi(U_n) = " + std::to_string(rep.chi_U) + " - " + std::to_string(rep.num_intersections) + " + " +
              std::to_string(rep.num_singular_points) + " = " + std::to_string(rep.chi_Un));
  return rep;
}

}  // namespace vaffine
