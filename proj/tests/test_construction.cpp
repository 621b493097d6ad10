#include "vaffine/construction.hpp"

#include <doctest.h>

#include <fstream>

using namespace vaffine;

namespace {

QPoint Q4(long w, long x, long y, long z) {
  return QPoint{{BigRational(w), BigRational(x), BigRational(y), BigRational(z)}};
}

bool vanishes(const std::vector<QPoly>& gens, const QPoint& t) {
  for (const auto& g : gens) {
    if (!is_zero(evaluate<BigRational>(g, t.span()))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the surface U") {
  CHECK(on_U(Q4(2, 3, -1, -2)));
  CHECK_FALSE(on_U(Q4(2, 3, -1, -1)));
  QIdeal u = ideal_of_U();
  CHECK(u.ring()->variables() == std::vector<std::string>{"w", "x", "y", "z"});
  auto lex = groebner_basis(u, MonomialOrder::lex());
  REQUIRE(lex.size() == 2);
  CHECK(lex[0] == parse_polynomial("w + y - 1", u.ring()));
  CHECK(lex[1] == parse_polynomial("x + z - 1", u.ring()));

  CHECK(point_from_parameters(BigRational(1, 2), BigRational(1, 3)) ==
        QPoint{{BigRational(1, 2), BigRational(1, 3), BigRational(1, 2), BigRational(2, 3)}});
}

TEST_CASE("quotient map values") {
  CHECK(evaluate_pn(5, Q4(2, 3, -1, -2)) ==
        QPoint{{BigRational(32), BigRational(2, 3), BigRational(-2), BigRational(-4)}});
  QPoint u = point_from_parameters(BigRational(1, 2), BigRational(1, 3));
  CHECK(evaluate_pn(1, u) ==
        QPoint{{BigRational(1, 2), BigRational(3, 2), BigRational(1, 4), BigRational(1, 3)}});
  CHECK_THROWS_AS(evaluate_pn(3, Q4(0, 1, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(QuotientMapSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(QuotientMapSpec(0), std::invalid_argument);
}

TEST_CASE("the group action") {
  FieldPtr f = CyclotomicField::create(5);
  CyclotomicPoint u = to_cyclotomic(Q4(2, 3, -1, -2), f);
  CHECK(act(5, 0, u) == u);
  CHECK(act(5, 5, u) == u);
  CHECK(act(5, 2, act(5, 3, u)) == u);
  CHECK(act(5, 1, act(5, 1, u)) == act(5, 2, u));
  CHECK(act(5, -1, u) == act(5, 4, u));
  CyclotomicPoint moved = act(5, 1, u);
  CHECK(moved[0] == zeta_power(f, 1) * u[0]);
  CHECK(moved[2] == zeta_power(f, -1) * u[2]);
  CHECK_FALSE(on_U(moved));
  CHECK_THROWS_AS(act(7, 1, u), OrderMismatch);
}

TEST_CASE("the quotient map is constant on orbits") {
  auto pts = sample_U_points(50, kDefaultSeed);
  REQUIRE(pts.size() == 50);
  for (unsigned n : {3u, 5u, 7u}) {
    FieldPtr f = CyclotomicField::create(n);
    for (const auto& p : pts) {
      CHECK(on_U(p));
      CyclotomicPoint u = to_cyclotomic(p, f);
      const CyclotomicPoint image = evaluate_pn(n, u);
      for (unsigned k = 1; k < n; ++k) CHECK(evaluate_pn(n, act(n, k, u)) == image);
    }
  }
}

TEST_CASE("sampling is deterministic") {
  auto a = sample_U_points(20, 7), b = sample_U_points(20, 7), c = sample_U_points(20, 8);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& p : a) CHECK(in_torus(p));
}

TEST_CASE("graph ideal") {
  QIdeal g = graph_ideal(QuotientMapSpec(3));
  CHECK(g.ring()->arity() == 8);
  CHECK(ideal_membership(parse_polynomial("t1 - w^3", g.ring()), g, MonomialOrder::grevlex()));
  CHECK(ideal_membership(parse_polynomial("w + y - 1", g.ring()), g, MonomialOrder::grevlex()));
  CHECK_FALSE(ideal_membership(parse_polynomial("1", g.ring()), g, MonomialOrder::grevlex()));
  CHECK(krull_dimension(g) == 2);
}

TEST_CASE("implicitization for n = 1 matches the hand computation") {
  QIdeal imp = implicitize(QuotientMapSpec(1));
  RingPtr t = image_ring();
  QIdeal hand(t, {parse_polynomial("t1^2 - t1 + t3", t), parse_polynomial("t1^2 - t1*t2 + t2*t4", t)});
  CHECK(ideal_equal(saturate_torus(imp), saturate_torus(hand), MonomialOrder::grevlex()));
  CHECK(krull_dimension(imp) == 2);
  for (const auto& p : sample_U_points(10, 3)) CHECK(vanishes(imp.generators(), evaluate_pn(1, p)));
}

TEST_CASE("implicitization for n = 5") {
  QIdeal imp = implicitize(QuotientMapSpec(5));
  REQUIRE(imp.cached_basis().has_value());
  CHECK(is_groebner_basis<BigRational>(imp.generators(), MonomialOrder::grevlex()));
  CHECK(vanishes(imp.generators(), QPoint{{BigRational(32), BigRational(2, 3), BigRational(-2), BigRational(-4)}}));
  QPoly first = parse_polynomial("t2^2*t4^2 + t2^2*t3 - t2^2*t4 - 2*t2*t3*t4 - t2*t3 + t3^2 + t2*t4", imp.ring());
  CHECK(ideal_membership(first, imp, MonomialOrder::grevlex()));
  CHECK_FALSE(ideal_membership(parse_polynomial("t1 - 1", imp.ring()), imp, MonomialOrder::grevlex()));

  QIdeal lex = implicitize(QuotientMapSpec(5), EliminationOrder::lex);
  CHECK(ideal_equal(imp, lex, MonomialOrder::grevlex()));

  // Two independent computations agree term for term.
  QIdeal again = implicitize(QuotientMapSpec(5));
  REQUIRE(again.generators().size() == imp.generators().size());
  for (std::size_t i = 0; i < imp.generators().size(); ++i) {
    CHECK(to_string(again.generators()[i]) == to_string(imp.generators()[i]));
  }
}

TEST_CASE("fixture") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  Fixture fx = load_fixture(default_fixture_path());
  CHECK(fx.sha256 == kFixtureSha256);
  CHECK(fx.lines.size() == 4);
  auto eqs = parse_fixture(fx, image_ring());
  REQUIRE(eqs.size() == 4);
  for (const auto& p : sample_U_points(5, 11)) CHECK(vanishes(eqs, evaluate_pn(5, p)));
  CHECK_THROWS_AS(load_fixture("/nonexistent/u5.txt"), std::runtime_error);
}

TEST_CASE("published system for n = 5") {
  Example5Report r = verify_example5();
  CHECK(r.published.size() == 4);
  CHECK(r.all_membership());
  CHECK(r.ideals_equal);
  CHECK(r.dimension == 2);

  // Dropping an equation breaks equality.
  std::vector<QPoly> partial(r.published.begin(), r.published.begin() + 2);
  Example5Report broken = verify_example5(partial, implicitize(QuotientMapSpec(5)));
  CHECK_FALSE(broken.ideals_equal);
}
