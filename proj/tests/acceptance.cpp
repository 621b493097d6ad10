// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "vaffine/cli.hpp"
#include "vaffine/construction.hpp"
#include "vaffine/cyclotomic.hpp"
#include "vaffine/groebner.hpp"
#include "vaffine/singular.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace vaffine;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << title;
  if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
  std::cout << std::endl;
}

std::string run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "vaffine");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string without_timestamp_line(const std::string& s) {
  std::istringstream in(s);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

std::string fmt(double secs) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << secs << "s";
  return o.str();
}

CyclotomicNumber random_element(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<BigRational> c(f->degree());
  for (auto& x : c) {
    x = BigRational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
    x.canonicalize();
  }
  return CyclotomicNumber::from_coeffs(f, c);
}

QPoly random_poly(std::mt19937_64& rng, const RingPtr& r, std::size_t terms) {
  std::vector<Term<BigRational>> t;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(r->arity());
    for (std::size_t i = 0; i < r->arity(); ++i) m[i] = static_cast<std::uint32_t>(rng() % 2);
    t.push_back({m, BigRational(static_cast<long>(rng() % 9) - 4)});
  }
  return QPoly(r, MonomialOrder::grevlex(), std::move(t));
}

std::vector<QPoly> random_ideal(std::mt19937_64& rng, const RingPtr& r) {
  std::vector<QPoly> g;
  while (g.size() < 2) {
    QPoly p = random_poly(rng, r, 3);
    if (!p.is_zero()) g.push_back(p);
  }
  return g;
}

}  // namespace

int main() {
  criterion(1, "verify --n 5 proves implicitize(5) equals the saturated published system in < 300 s", [] {
    const auto start = Clock::now();
    int code = 0;
    nlohmann::json j = nlohmann::json::parse(run_cli({"verify", "--n", "5", "--output", "structured"}, code));
    const double t = seconds_since(start);
    bool equal = false;
    for (const auto& c : j["sections"]["example5"]["checks"]) {
      if (c["name"] == "ideals equal after torus saturation") equal = c["status"] == "pass";
    }
    return Outcome{code == cli::kPass && equal && t < 300.0, "exit " + std::to_string(code) + ", " + fmt(t)};
  });

  criterion(2, "chi(U_n) = (3-n)/2 for n in {1,3,5,7,9,11}, each < 30 s", [] {
    bool ok = true;
    std::string detail;
    for (unsigned n : {1u, 3u, 5u, 7u, 9u, 11u}) {
      const auto start = Clock::now();
      const QIdeal implicit = implicitize(QuotientMapSpec(n));
      EulerReport r = euler_characteristic(n, &implicit);
      const double t = seconds_since(start);
      ok = ok && r.all_passed() && 2 * r.chi_Un == 3 - static_cast<int>(n) && t < 30.0;
      detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                std::to_string(r.chi_Un) + " in " + fmt(t);
    }
    return Outcome{ok, detail};
  });

  criterion(3, "(n-1)/2 distinct singular images with image(i) = image(n-i)", [] {
    bool ok = true;
    for (unsigned n = 3; n <= 11; n += 2) {
      EulerReport r = singular_points(n);
      ok = ok && r.singular_images.size() == (n - 1) / 2 && r.num_singular_points == (n - 1) / 2;
      for (unsigned i = 1; i < n; ++i) ok = ok && r.certificates[i - 1].image == r.certificates[n - i - 1].image;
      for (std::size_t a = 0; a < r.singular_images.size(); ++a) {
        for (std::size_t b = a + 1; b < r.singular_images.size(); ++b) {
          ok = ok && !(r.singular_images[a] == r.singular_images[b]);
        }
      }
    }
    return Outcome{ok, "n = 3..11 odd"};
  });

  criterion(4, "intersection certificates for n in {3,5,7,9,11}", [] {
    bool ok = true;
    std::size_t count = 0;
    for (unsigned n = 3; n <= 11; n += 2) {
      FieldPtr f = CyclotomicField::create(n);
      for (unsigned i = 1; i < n; ++i) {
        IntersectionCertificate c = intersection_point(f, i);
        const CyclotomicNumber diff = zeta_power(f, i) - zeta_power(f, -static_cast<long long>(i));
        ok = ok && c.unique() && c.matches_closed_form() && c.on_both() && c.det == diff * diff && c.transverse();
        ++count;
      }
      ok = ok && triple_intersections_empty(n);
    }
    return Outcome{ok, std::to_string(count) + " certificates"};
  });

  criterion(5, "20 seeded samples through p_n satisfy implicitize(n) for n in {3,5}", [] {
    bool ok = true;
    std::size_t evaluations = 0;
    const auto pts = sample_U_points(20, kDefaultSeed);
    for (unsigned n : {3u, 5u}) {
      const QIdeal implicit = implicitize(QuotientMapSpec(n));
      for (const auto& p : pts) {
        const QPoint t = evaluate_pn(n, p);
        for (const auto& g : implicit.generators()) {
          ok = ok && is_zero(evaluate<BigRational>(g, t.span()));
          ++evaluations;
        }
      }
    }
    return Outcome{ok && pts.size() == 20, std::to_string(evaluations) + " evaluations"};
  });

  criterion(6, "krull_dimension(implicitize(5)) = 2", [] {
    const std::size_t d = krull_dimension(implicitize(QuotientMapSpec(5)));
    return Outcome{d == 2, "dimension " + std::to_string(d)};
  });

  criterion(7, "kernel property suites (a)-(e)", [] {
    std::string failed;
    std::mt19937_64 rng(kDefaultSeed);
    RingPtr abc = PolyRing::create({"a", "b", "c"});

    // (a) every basis returned on random ideals and on the implicit ideals passes the S-pair test.
    bool a = true;
    for (int trial = 0; trial < 30; ++trial) {
      auto gens = random_ideal(rng, abc);
      for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
        a = a && is_groebner_basis<BigRational>(buchberger<BigRational>(gens, ord), ord);
      }
    }
    for (unsigned n : {1u, 3u, 5u, 7u}) {
      for (auto kind : {EliminationOrder::block, EliminationOrder::lex}) {
        if (kind == EliminationOrder::lex && n > 5) continue;  // pure lex is far slower from n = 7 on
        const QIdeal imp = implicitize(QuotientMapSpec(n), kind);
        a = a && is_groebner_basis<BigRational>(imp.cached_basis()->polys, imp.cached_basis()->order);
      }
    }
    if (!a) failed += "a";

    // (b)
    RingPtr xy = PolyRing::create({"x", "y"});
    auto g = buchberger<BigRational>(
        std::vector<QPoly>{parse_polynomial("x^2 - y", xy), parse_polynomial("x*y - 1", xy)}, MonomialOrder::lex());
    const bool b = g.size() == 2 && g[0] == parse_polynomial("x - y^2", xy) && g[1] == parse_polynomial("y^3 - 1", xy);
    if (!b) failed += "b";

    // (c)
    bool c = true;
    for (unsigned n = 1; n <= 30; ++n) {
      UnivariatePoly prod = UnivariatePoly::constant(1);
      for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
      }
      c = c && prod == UnivariatePoly::monomial(1, n) - UnivariatePoly::constant(1);
    }
    if (!c) failed += "c";

    // (d)
    bool d = true;
    const unsigned orders[] = {3, 5, 7, 9, 11};
    for (int k = 0; k < 100; ++k) {
      FieldPtr f = CyclotomicField::create(orders[k % 5]);
      CyclotomicNumber x = random_element(f, rng);
      if (x.is_zero()) x = CyclotomicNumber(f, 1);
      d = d && x * x.inverse() == CyclotomicNumber(f, 1);
    }
    if (!d) failed += "d";

    // (e)
    bool e = true;
    for (int trial = 0; trial < 30; ++trial) {
      QIdeal ideal(abc, random_ideal(rng, abc));
      QPoly probe = random_poly(rng, abc, 4);
      QPoly member = random_poly(rng, abc, 2) * ideal.generators()[0] + random_poly(rng, abc, 2) * ideal.generators()[1];
      for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
        auto basis = groebner_basis(ideal, ord);
        QPoly r = normal_form<BigRational>(probe, basis, ord);
        e = e && normal_form<BigRational>(r, basis, ord) == r;
      }
      const bool in_lex = ideal_membership(probe, ideal, MonomialOrder::lex());
      e = e && in_lex == ideal_membership(probe, ideal, MonomialOrder::grevlex());
      e = e && ideal_membership(member, ideal, MonomialOrder::lex()) &&
          ideal_membership(member, ideal, MonomialOrder::grevlex());
    }
    if (!e) failed += "e";

    return Outcome{failed.empty(), failed.empty() ? "a b c d e" : "failed: " + failed};
  });

  criterion(8, "two structured verify --n 5 runs are byte-identical apart from the timestamp", [] {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli({"verify", "--n", "5", "--output", "structured"}, c1);
    const std::string b = run_cli({"verify", "--n", "5", "--output", "structured"}, c2);
    const bool ok = c1 == cli::kPass && c2 == cli::kPass && without_timestamp_line(a) == without_timestamp_line(b) &&
                    a.find("\"timestamp\"") != std::string::npos;
    return Outcome{ok, std::to_string(a.size()) + " bytes"};
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
