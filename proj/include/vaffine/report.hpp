#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace vaffine {

// One verified claim; the witness is printed so a failure is self-diagnosing.
struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct Section {
  Section() = default;
  explicit Section(std::string section_name) : name(std::move(section_name)) {}

  std::string name;
  std::vector<Check> checks;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();

  void add(std::string check_name, bool passed, std::string witness) {
    checks.push_back({std::move(check_name), passed, std::move(witness)});
  }
  bool all_passed() const;
};

// Sections in emission order. The timestamp is the only run-dependent field
// and lives alone in the header.
struct Report {
  std::string timestamp;
  std::vector<Section> sections;

  bool all_passed() const;
  std::size_t check_count() const;
};

std::string render_structured(const Report& report);
std::string render_text(const Report& report);

}  // namespace vaffine
