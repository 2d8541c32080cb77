#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "locmod/version.hpp"

namespace locmod::cli {

// A check passes when its state is Verified, NotApplicable or pass.
struct ReportCheck {
  std::string subject, name, state, witness;
  bool ok() const { return state == "Verified" || state == "NotApplicable" || state == "pass"; }
};

struct ReportCount {
  std::string subject, name;
  std::uint64_t q = 0;  // 0 when not tied to a field
  std::uint64_t value = 0;
};

struct ReportDim {
  std::string subject, name;
  long estimate = 0, expected = 0;
  bool stable = true;
};

struct ReportTiming {
  std::string subject;
  double seconds = 0;
};

struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<ReportCheck> checks;
  std::vector<ReportCount> counts;
  std::vector<ReportDim> dims;
  std::vector<ReportTiming> timings;
  std::optional<std::string> error;

  void check(std::string subject, std::string name, bool ok, std::string witness = {}) {
    checks.push_back({std::move(subject), std::move(name), ok ? "pass" : "fail", ok ? std::string{} : std::move(witness)});
  }
  void count(std::string subject, std::string name, std::uint64_t q, std::uint64_t v) {
    counts.push_back({std::move(subject), std::move(name), q, v});
  }

  bool passed() const {
    if (error) return false;
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }

  // Everything but the timings is a function of the configuration.
  nlohmann::ordered_json to_json(bool with_timings = true) const {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = config;
    j["passed"] = passed();
    if (error) j["error"] = *error;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"subject", c.subject}, {"name", c.name}, {"state", c.state}, {"witness", c.witness}});
    j["counts"] = nlohmann::ordered_json::array();
    for (const auto& c : counts)
      j["counts"].push_back({{"subject", c.subject}, {"name", c.name}, {"q", c.q}, {"value", c.value}});
    j["dims"] = nlohmann::ordered_json::array();
    for (const auto& d : dims)
      j["dims"].push_back({{"subject", d.subject},
                           {"name", d.name},
                           {"estimate", d.estimate},
                           {"expected", d.expected},
                           {"stable", d.stable}});
    if (with_timings) {
      j["timings"] = nlohmann::ordered_json::array();
      for (const auto& t : timings) j["timings"].push_back({{"subject", t.subject}, {"seconds", t.seconds}});
    }
    return j;
  }

  // One table, first column says which JSON section a row comes from.
  std::string to_csv(bool with_timings = true) const {
    std::ostringstream os;
    os << "section,subject,name,q,value,expected,state,detail\n";
    auto field = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return out + "\"";
    };
    os << "meta,,schema_version,," << kReportSchemaVersion << ",,,\n";
    os << "meta,,version,," << kVersion << ",,,\n";
    os << "meta,,command,," << field(command) << ",,,\n";
    os << "meta,,passed,," << (passed() ? "true" : "false") << ",,,\n";
    if (error) os << "meta,,error,,,,," << field(*error) << "\n";
    for (const auto& [k, v] : config.items()) os << "config,," << field(k) << ",," << field(v.dump()) << ",,,\n";
    for (const auto& c : checks)
      os << "check," << field(c.subject) << "," << field(c.name) << ",,,," << c.state << "," << field(c.witness) << "\n";
    for (const auto& c : counts)
      os << "count," << field(c.subject) << "," << field(c.name) << "," << c.q << "," << c.value << ",,,\n";
    for (const auto& d : dims)
      os << "dim," << field(d.subject) << "," << field(d.name) << ",," << d.estimate << "," << d.expected << ","
         << (d.stable ? "stable" : "unstable") << ",\n";
    if (with_timings)
      for (const auto& t : timings) os << "timing," << field(t.subject) << ",seconds,," << t.seconds << ",,,\n";
    return os.str();
  }
};

}  // namespace locmod::cli
