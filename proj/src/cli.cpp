#include "vaffine/cli.hpp"

#include "vaffine/singular.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <map>
#include <ostream>

namespace vaffine::cli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string order_name(EliminationOrder o) { return o == EliminationOrder::block ? "block" : "lex"; }

std::string point_text(const QPoint& u) {
  return "(" + to_string(u[0]) + ", " + to_string(u[1]) + ", " + to_string(u[2]) + ", " + to_string(u[3]) + ")";
}

nlohmann::ordered_json poly_list(const std::vector<QPoly>& polys) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : polys) arr.push_back(to_string(p));
  return arr;
}

Section config_section(const RunConfig& c) {
  Section s("config");
  s.values["command"] = command_name(c.command);
  s.values["n"] = c.n;
  s.values["seed"] = c.seed;
  s.values["samples"] = c.samples;
  s.values["order"] = order_name(c.order);
  s.values["budget"] = c.budget;
  s.values["fixture"] = c.fixture ? *c.fixture : "default";
  return s;
}

Section construction_section(const RunConfig& c, const QIdeal& implicit, StepBudget& budget,
                             bool full) {
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  const QuotientMapSpec spec(c.n);
  Section s("construction");
  const std::vector<QPoly>& basis = implicit.generators();
  const MonomialOrder basis_order = implicit.cached_basis()->order;
  s.values["n"] = c.n;
  s.values["basis_order"] = basis_order.name();
  s.values["basis"] = poly_list(basis);
  s.values["trimmed_generators"] = poly_list(trim_generators(basis, basis_order, &budget));

  s.add("basis passes S-pair certificate", is_groebner_basis<BigRational>(basis, basis_order),
        std::to_string(basis.size()) + " elements");
  s.add("basis is reduced", is_reduced_basis<BigRational>(basis, basis_order), "");
  const std::size_t dim = krull_dimension(implicit, basis_order, &budget);
  s.values["dimension"] = dim;
  s.add("krull dimension = 2", dim == 2, std::to_string(dim));
  if (!full) return s;

  const QIdeal u_ideal = ideal_of_U();
  s.add("ideal of U is a reduced lex basis",
        is_groebner_basis<BigRational>(u_ideal.generators(), MonomialOrder::lex()) &&
            is_reduced_basis<BigRational>(u_ideal.generators(), MonomialOrder::lex()),
        to_string(u_ideal.generators()[0]) + ", " + to_string(u_ideal.generators()[1]));

  const QIdeal graph = with_groebner_basis(graph_ideal(spec, &budget), grevlex, &budget);
  const RingPtr gr = graph.ring();
  s.add("graph ideal is proper", !ideal_membership(q_constant(gr, 1), graph, grevlex, &budget), "");
  s.add("t1 - w^n lies in the graph ideal",
        ideal_membership(parse_polynomial("t1 - w^" + std::to_string(c.n), gr), graph, grevlex, &budget), "");

  const FieldPtr field = CyclotomicField::create(c.n);
  const auto points = sample_U_points(c.samples, c.seed);
  const auto graph_basis = groebner_basis(graph, grevlex);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const QPoint& u = points[k];
    const QPoint img = evaluate_pn(c.n, u);
    const std::string tag = "sample " + std::to_string(k);

    bool vanish = true;
    for (const auto& g : basis) vanish = vanish && is_zero(evaluate<BigRational>(g, img.span()));
    s.add(tag + ": p_n(u) satisfies every generator", vanish, point_text(u) + " -> " + point_text(img));

    std::vector<BigRational> joint(u.coords.begin(), u.coords.end());
    joint.insert(joint.end(), img.coords.begin(), img.coords.end());
    bool on_graph = true;
    for (const auto& g : graph_basis) on_graph = on_graph && is_zero(evaluate<BigRational>(g, joint));
    s.add(tag + ": (u, p_n(u)) lies on the graph", on_graph, "");

    const CyclotomicPoint uc = to_cyclotomic(u, field);
    const CyclotomicPoint base = evaluate_pn(c.n, uc);
    bool invariant = true;
    for (unsigned k2 = 0; k2 < c.n; ++k2) invariant = invariant && evaluate_pn(c.n, act(c.n, k2, uc)) == base;
    s.add(tag + ": p_n constant on the orbit", invariant, "");
  }

  return s;
}

Section example5_section(const RunConfig& c, const QIdeal& implicit5, StepBudget& budget) {
  Section s("example5");
  const Fixture fixture = load_fixture(c.fixture ? *c.fixture : default_fixture_path());
  const std::vector<QPoly> published = parse_fixture(fixture, image_ring());
  const Example5Report rep = verify_example5(published, implicit5, &budget);

  s.values["fixture"] = c.fixture ? "override" : "default";
  s.values["fixture_sha256"] = fixture.sha256;
  s.values["published"] = poly_list(published);
  if (!c.fixture) s.add("fixture checksum matches", fixture.sha256 == kFixtureSha256, fixture.sha256);

  for (std::size_t k = 0; k < rep.forward_membership.size(); ++k) {
    s.add("published equation " + std::to_string(k + 1) + " in computed ideal", rep.forward_membership[k],
          to_string(published[k]));
  }
  for (std::size_t k = 0; k < rep.backward_membership.size(); ++k) {
    s.add("computed generator " + std::to_string(k + 1) + " in saturated published ideal",
          rep.backward_membership[k], to_string(implicit5.generators()[k]));
  }
  s.add("ideals equal after torus saturation", rep.ideals_equal, "");
  s.add("krull dimension = 2", rep.dimension == 2, std::to_string(rep.dimension));

  const MonomialOrder ord = implicit5.cached_basis()->order;
  std::vector<QPoly> trimmed = trim_generators(implicit5.generators(), ord, &budget);
  bool literal = trimmed.size() == published.size() &&
                 std::all_of(published.begin(), published.end(), [&](const QPoly& p) {
                   return std::find(trimmed.begin(), trimmed.end(), p) != trimmed.end();
                 });
  s.values["redundant_generators"] = implicit5.generators().size() - trimmed.size();
  s.values["trimmed_basis_equals_published"] = literal;
  return s;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::construct: return "construct";
    case Command::euler: return "euler";
    case Command::intersections: return "intersections";
    case Command::verify: return "verify";
    case Command::example5: return "example5";
  }
  return "";
}

void validate(const RunConfig& c) {
  if (c.command != Command::example5) QuotientMapSpec spec(c.n);
  if (c.samples < 1) throw std::invalid_argument("--samples must be at least 1");
}

Report build_report(const RunConfig& c, StepBudget& budget) {
  validate(c);
  Report report;
  report.timestamp = utc_timestamp();
  report.sections.push_back(config_section(c));

  auto implicit_for = [&](unsigned n) {
    return implicitize(QuotientMapSpec(n), c.order, &budget);
  };

  switch (c.command) {
    case Command::construct: {
      report.sections.push_back(construction_section(c, implicit_for(c.n), budget, false));
      break;
    }
    case Command::intersections: {
      if (c.n >= 3) report.sections.push_back(lemma_checks(c.n));
      else report.sections.push_back(Section("lemma"));
      break;
    }
    case Command::euler: {
      EulerReport e = euler_characteristic(c.n);
      report.sections.push_back(std::move(e.lemma));
      report.sections.push_back(std::move(e.corollary));
      report.sections.push_back(std::move(e.theorem));
      break;
    }
    case Command::verify: {
      const QIdeal implicit = implicit_for(c.n);
      report.sections.push_back(construction_section(c, implicit, budget, true));
      EulerReport e = euler_characteristic(c.n, &implicit);
      report.sections.push_back(std::move(e.lemma));
      report.sections.push_back(std::move(e.corollary));
      report.sections.push_back(std::move(e.theorem));
      if (c.n == 5) report.sections.push_back(example5_section(c, implicit, budget));
      break;
    }
    case Command::example5: {
      report.sections.push_back(example5_section(c, implicit_for(5), budget));
      break;
    }
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the surfaces U_n = p_n(U) in the 4-torus"};
  app.require_subcommand(1);
  RunConfig config;
  std::string order = "block", output = "text";
  std::string fixture;
  long long samples = 20;

  const std::map<std::string, Command> commands{
      {"construct", Command::construct}, {"euler", Command::euler},
      {"intersections", Command::intersections}, {"verify", Command::verify},
      {"example5", Command::example5}};
  const std::map<std::string, std::string> help{
      {"construct", "print the reduced basis of the ideal of U_n"},
      {"euler", "certify the singular points and the Euler characteristic of U_n"},
      {"intersections", "certify the intersection points of U with its translates"},
      {"verify", "run every check for U_n (and the published U_5 system when n = 5)"},
      {"example5", "compare the published U_5 equations with the computed ideal"}};
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
    if (cmd != Command::example5) sub->add_option("--n", config.n, "odd order of the group action")->required();
    sub->add_option("--seed", config.seed, "seed for sampled points of U");
    sub->add_option("--samples", samples, "number of sampled points");
    sub->add_option("--order", order, "elimination order")->check(CLI::IsMember({"lex", "block"}));
    sub->add_option("--output", output, "report format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--fixture", fixture, "override the published U_5 equations");
    sub->add_option("--budget", config.budget, "Groebner reduction step budget");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  config.order = order == "lex" ? EliminationOrder::lex : EliminationOrder::block;
  config.output = output == "structured" ? OutputFormat::structured : OutputFormat::text;
  if (!fixture.empty()) config.fixture = fixture;
  if (samples < 1) {
    err << "usage error: --samples must be at least 1\n";
    return kUsage;
  }
  config.samples = static_cast<std::size_t>(samples);
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  StepBudget budget(config.budget);
  Report report;
  try {
    report = build_report(config, budget);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const text::ParseError& e) {
    err << "fixture parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << (config.output == OutputFormat::structured ? render_structured(report) : render_text(report));
  return report.all_passed() ? kPass : kCheckFailed;
}

}  // namespace vaffine::cli
