#include "vaffine/report.hpp"

#include <algorithm>
#include <sstream>

namespace vaffine {

bool Section::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool Report::all_passed() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.all_passed(); });
}

std::size_t Report::check_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.checks.size();
  return n;
}

std::string render_structured(const Report& report) {
  nlohmann::ordered_json doc;
  doc["header"] = {{"timestamp", report.timestamp}};
  doc["status"] = report.all_passed() ? "pass" : "fail";
  nlohmann::ordered_json sections = nlohmann::ordered_json::object();
  for (const auto& s : report.sections) {
    nlohmann::ordered_json sec;
    sec["status"] = s.all_passed() ? "pass" : "fail";
    if (!s.values.empty()) sec["values"] = s.values;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
    }
    sec["checks"] = std::move(checks);
    sections[s.name] = std::move(sec);
  }
  doc["sections"] = std::move(sections);
  return doc.dump(2) + "\n";
}

namespace {

void render_value(std::ostringstream& out, const std::string& key, const nlohmann::ordered_json& v) {
  if (v.is_array()) {
    out << "  " << key << ":\n";
    for (const auto& item : v) out << "    " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
  } else {
    out << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "# generated " << report.timestamp << "\n";
  for (const auto& s : report.sections) {
    out << "[" << s.name << "] " << (s.all_passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& [key, v] : s.values.items()) render_value(out, key, v);
    for (const auto& c : s.checks) {
      out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
      if (!c.witness.empty()) out << "  -- " << c.witness;
      out << "\n";
    }
  }
  out << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << " (" << report.check_count() << " checks)\n";
  return out.str();
}

}  // namespace vaffine
