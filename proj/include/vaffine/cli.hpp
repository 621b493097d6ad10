#pragma once

#include "vaffine/budget.hpp"
#include "vaffine/construction.hpp"
#include "vaffine/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vaffine::cli {

enum class Command { construct, euler, intersections, verify, example5 };
enum class OutputFormat { text, structured };

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudgetExceeded = 3 };

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct RunConfig {
  Command command = Command::verify;
  unsigned n = 5;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 20;
  EliminationOrder order = EliminationOrder::block;
  OutputFormat output = OutputFormat::text;
  std::optional<std::string> fixture;
  std::uint64_t budget = kDefaultBudget;
};

std::string command_name(Command c);

// Throws std::invalid_argument when the config violates its invariants.
void validate(const RunConfig& config);

// Runs the command's checks; throws BudgetExceeded from the Gröbner engine.
Report build_report(const RunConfig& config, StepBudget& budget);

// Full front end: parses argv, writes the report to `out`, diagnostics to
// `err`, and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vaffine::cli
