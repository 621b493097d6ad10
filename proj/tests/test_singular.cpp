#include "vaffine/singular.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace vaffine;

namespace {

// Leibniz expansion over all 24 permutations; independent of the elimination code.
CyclotomicNumber leibniz_det(const Matrix<CyclotomicNumber>& m) {
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  CyclotomicNumber sum(m(0, 0).field());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b];
    }
    CyclotomicNumber prod(m(0, 0).field(), 1);
    for (std::size_t r = 0; r < 4; ++r) prod = prod * m(r, perm[r]);
    sum = inversions % 2 ? sum - prod : sum + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// Cramer's rule with right-hand side all ones.
CyclotomicPoint cramer(const Matrix<CyclotomicNumber>& m) {
  const CyclotomicNumber d = leibniz_det(m);
  std::array<CyclotomicNumber, 4> out{d, d, d, d};
  for (std::size_t c = 0; c < 4; ++c) {
    Matrix<CyclotomicNumber> mc = m;
    for (std::size_t r = 0; r < 4; ++r) mc(r, c) = CyclotomicNumber(d.field(), 1);
    out[c] = leibniz_det(mc) / d;
  }
  return CyclotomicPoint{out};
}

}  // namespace

TEST_CASE("intersection point for n = 5, i = 1") {
  FieldPtr f = CyclotomicField::create(5);
  IntersectionCertificate c = intersection_point(f, 1);
  CHECK(c.unique());
  CHECK(c.matches_closed_form());
  CHECK(c.on_both());
  const CyclotomicNumber z = zeta_power(f, 1);
  const CyclotomicNumber a = z / (CyclotomicNumber(f, 1) + z);
  CHECK(c.point[0] == a);
  CHECK(c.point[2] == CyclotomicNumber(f, 1) - a);
  CHECK(on_U(c.point));
  CHECK(on_translate(c.point, 1));
  CHECK_FALSE(on_translate(c.point, 2));
}

TEST_CASE("intersection points agree with Cramer's rule") {
  for (unsigned n : {3u, 5u, 7u}) {
    FieldPtr f = CyclotomicField::create(n);
    for (unsigned i = 1; i < n; ++i) {
      IntersectionCertificate c = intersection_point(f, i);
      CHECK(c.point == cramer(intersection_system(f, i)));
      CHECK(c.det == leibniz_det(intersection_system(f, i)));
    }
  }
}

TEST_CASE("transversality determinant") {
  for (unsigned n = 3; n <= 11; n += 2) {
    FieldPtr f = CyclotomicField::create(n);
    for (unsigned i = 1; i < n; ++i) {
      const CyclotomicNumber diff = zeta_power(f, i) - zeta_power(f, -static_cast<long long>(i));
      const CyclotomicNumber det = transversality_det(f, i);
      CHECK(det == diff * diff);
      CHECK_FALSE(det.is_zero());
      CHECK(intersection_point(f, i).det_matches());
    }
  }
}

TEST_CASE("no triple intersections") {
  for (unsigned n = 3; n <= 11; n += 2) CHECK(triple_intersections_empty(n));
}

TEST_CASE("fibers inside U") {
  FieldPtr f = CyclotomicField::create(5);
  CyclotomicPoint generic{{CyclotomicNumber(f, 2), CyclotomicNumber(f, 3), CyclotomicNumber(f, -1),
                           CyclotomicNumber(f, -2)}};
  CHECK(fiber_in_U(5, generic) == std::vector<unsigned>{0});
  CHECK(fiber_in_U(5, intersection_point(f, 1).point) == std::vector<unsigned>{0, 4});
  CHECK(fiber_in_U(5, intersection_point(f, 4).point) == std::vector<unsigned>{0, 1});
  CHECK_THROWS_AS(fiber_in_U(5, act(5, 1, generic)), std::invalid_argument);
}

TEST_CASE("singular images") {
  for (unsigned n = 3; n <= 11; n += 2) {
    EulerReport r = singular_points(n);
    CHECK(r.num_intersections == n - 1);
    CHECK(r.num_singular_points == (n - 1) / 2);
    CHECK(r.singular_images.size() == (n - 1) / 2);
    CHECK(r.all_passed());
    for (unsigned i = 1; i < n; ++i) {
      CHECK(r.certificates[i - 1].image == r.certificates[n - i - 1].image);
      CHECK(r.certificates[i - 1].image_real());
    }
    for (std::size_t a = 0; a < r.singular_images.size(); ++a) {
      for (std::size_t b = a + 1; b < r.singular_images.size(); ++b) {
        CHECK_FALSE(r.singular_images[a] == r.singular_images[b]);
      }
    }
  }
  CHECK_THROWS_AS(singular_points(4), std::invalid_argument);
  CHECK_THROWS_AS(singular_points(1), std::invalid_argument);
  CHECK_THROWS_AS(intersection_point(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(intersection_point(6, 1), std::invalid_argument);
}

TEST_CASE("images are rational for n = 3 only") {
  auto rational = [](const CyclotomicPoint& u) {
    return std::all_of(u.coords.begin(), u.coords.end(), [](const CyclotomicNumber& c) { return c.is_rational(); });
  };
  CHECK(rational(intersection_point(3, 1).image));
  CHECK_FALSE(rational(intersection_point(5, 1).image));
  CHECK(intersection_point(5, 1).image[1].is_rational());
}

TEST_CASE("images are singular on the implicit surface") {
  for (unsigned n : {3u, 5u}) {
    QIdeal imp = implicitize(QuotientMapSpec(n));
    EulerReport r = singular_points(n, &imp);
    CHECK(r.corollary.all_passed());
    for (const auto& img : r.singular_images) CHECK(jacobian_rank(imp.generators(), img) < 2);
  }
}

TEST_CASE("euler characteristic") {
  for (unsigned n : {1u, 3u, 5u, 7u, 9u, 11u}) {
    EulerReport r = euler_characteristic(n);
    CHECK(2 * r.chi_Un == 3 - static_cast<int>(n));
    CHECK(r.all_passed());
  }
  CHECK(euler_characteristic(7).chi_Un == -2);
  CHECK_THROWS_AS(euler_characteristic(8), std::invalid_argument);
}
