#include "vaffine/construction.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#ifndef VAFFINE_DATA_DIR
#define VAFFINE_DATA_DIR "data"
#endif

namespace vaffine {

QuotientMapSpec::QuotientMapSpec(unsigned n) : n_(n) {
  if (n == 0 || n % 2 == 0) {
    throw std::invalid_argument("quotient map order must be odd and positive, got " + std::to_string(n));
  }
}

RingPtr torus_ring() { return PolyRing::create({"w", "x", "y", "z"}); }
RingPtr graph_ring() { return PolyRing::create({"w", "x", "y", "z", "t1", "t2", "t3", "t4"}); }
RingPtr image_ring() { return PolyRing::create({"t1", "t2", "t3", "t4"}); }

QIdeal ideal_of_U() {
  RingPtr r = torus_ring();
  return QIdeal(r, {parse_polynomial("w + y - 1", r), parse_polynomial("x + z - 1", r)});
}

CyclotomicPoint to_cyclotomic(const QPoint& u, const FieldPtr& field) {
  return CyclotomicPoint{{CyclotomicNumber(field, u[0]), CyclotomicNumber(field, u[1]),
                          CyclotomicNumber(field, u[2]), CyclotomicNumber(field, u[3])}};
}

CyclotomicPoint act(unsigned n, long long k, const CyclotomicPoint& u) {
  for (const auto& c : u.coords) {
    if (c.order() != n) throw OrderMismatch(n, c.order());
  }
  if (!in_torus(u)) throw std::domain_error("act: point has a zero coordinate");
  const FieldPtr& field = u[0].field();
  const CyclotomicNumber up = zeta_power(field, k);
  const CyclotomicNumber down = zeta_power(field, -k);
  return CyclotomicPoint{{u[0] * up, u[1] * up, u[2] * down, u[3] * down}};
}

QIdeal graph_ideal(const QuotientMapSpec& spec, StepBudget* budget) {
  RingPtr r = graph_ring();
  const std::string n = std::to_string(spec.n());
  std::vector<QPoly> gens{
      parse_polynomial("w + y - 1", r),  parse_polynomial("x + z - 1", r),
      parse_polynomial("t1 - w^" + n, r), parse_polynomial("t2*x - w", r),
      parse_polynomial("t3 - w*y", r),   parse_polynomial("t4 - w*z", r),
  };
  const std::vector<QPoly> torus{q_variable(r, "w"), q_variable(r, "x"), q_variable(r, "y"),
                                 q_variable(r, "z")};
  return saturate_product(QIdeal(r, std::move(gens)), std::span<const QPoly>(torus), budget);
}

QIdeal implicitize(const QuotientMapSpec& spec, EliminationOrder order, StepBudget* budget) {
  return eliminate(graph_ideal(spec, budget), 4, order, budget, image_ring());
}

QIdeal saturate_torus(const QIdeal& ideal, StepBudget* budget) {
  const RingPtr& r = ideal.ring();
  std::vector<QPoly> vars;
  for (std::size_t i = 0; i < r->arity(); ++i) vars.push_back(QPoly::variable(r, i, BigRational(1)));
  return saturate_product(ideal, std::span<const QPoly>(vars), budget);
}

QPoint point_from_parameters(const BigRational& a, const BigRational& b) {
  return QPoint{{a, b, BigRational(1 - a), BigRational(1 - b)}};
}

std::vector<QPoint> sample_U_points(std::size_t count, std::uint64_t seed) {
  // Raw engine output only: distribution objects are implementation-defined.
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    for (;;) {
      const long num = static_cast<long>(rng() % 41) - 20;
      const long den = static_cast<long>(rng() % 9) + 1;
      BigRational q(num, den);
      q.canonicalize();
      if (q != 0 && q != 1) return q;
    }
  };
  std::vector<QPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BigRational a = draw();
    BigRational b = draw();
    out.push_back(point_from_parameters(a, b));
  }
  return out;
}

std::string default_fixture_path() { return std::string(VAFFINE_DATA_DIR) + "/u5_equations.txt"; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();

  Fixture f{path, sha256_hex(content), {}};
  std::istringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    f.lines.push_back(line);
  }
  return f;
}

std::vector<QPoly> parse_fixture(const Fixture& fixture, const RingPtr& ring) {
  std::vector<QPoly> out;
  for (const auto& line : fixture.lines) out.push_back(parse_polynomial(line, ring));
  return out;
}

bool Example5Report::all_membership() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(forward_membership) && all(backward_membership);
}

Example5Report verify_example5(const std::vector<QPoly>& published, const QIdeal& computed,
                               StepBudget* budget) {
  const MonomialOrder ord = MonomialOrder::grevlex();
  Example5Report report;
  report.published = published;
  const QIdeal computed_sat = with_groebner_basis(saturate_torus(computed, budget), ord, budget);
  report.computed_basis = groebner_basis(computed_sat, ord, budget);
  for (const auto& f : published) report.forward_membership.push_back(ideal_membership(f, computed_sat, ord, budget));

  const QIdeal published_sat =
      with_groebner_basis(saturate_torus(QIdeal(computed.ring(), published), budget), ord, budget);
  for (const auto& g : computed.generators()) {
    report.backward_membership.push_back(ideal_membership(g, published_sat, ord, budget));
  }
  report.ideals_equal = ideal_equal(computed_sat, published_sat, ord, budget);
  report.dimension = krull_dimension(computed_sat, ord, budget);
  return report;
}

Example5Report verify_example5(StepBudget* budget) {
  const Fixture fixture = load_fixture(default_fixture_path());
  return verify_example5(parse_fixture(fixture, image_ring()), implicitize(QuotientMapSpec(5), EliminationOrder::block, budget),
                         budget);
}

}  // namespace vaffine
