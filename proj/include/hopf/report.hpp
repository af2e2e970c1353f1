#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopf/check.hpp"

namespace hopf {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
  }
}

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string witness;
};

// Machine-readable outcome of one CLI command.  Exit code 0 iff nothing
// failed; skipped checks do not fail.
struct Report {
  std::string command;
  std::string instance;
  std::vector<Check> checks;
  nlohmann::json extra;  // command-specific payload (e.g. the class listing)

  void add(const std::string& name, const CheckResult& r) {
    checks.push_back({name, r.pass ? Status::pass : Status::fail, r.detail});
  }
  void add_status(const std::string& name, Status s,
                  const std::string& witness = "") {
    checks.push_back({name, s, witness});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
  int exit_code() const { return all_pass() ? 0 : 1; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["instance"] = instance;
    if (!extra.is_null()) j["extra"] = extra;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["status"] = status_name(c.status);
      if (!c.witness.empty()) jc["witness"] = c.witness;
      j["checks"].push_back(std::move(jc));
    }
    j["exit_code"] = exit_code();
    return j;
  }

  void print_text(std::ostream& os) const {
    os << "command: " << command << "\n";
    if (!instance.empty()) os << "instance: " << instance << "\n";
    if (extra.is_object()) {
      for (const auto& [key, value] : extra.items()) {
        if (value.is_array()) {
          os << key << ":\n";
          for (const auto& line : value)
            os << "  " << (line.is_string()
                               ? line.get<std::string>()
                               : line.dump())
               << "\n";
        } else {
          os << key << ": "
             << (value.is_string() ? value.get<std::string>() : value.dump())
             << "\n";
        }
      }
    }
    for (const auto& c : checks) {
      os << "[" << status_name(c.status) << "] " << c.name;
      if (!c.witness.empty()) os << "  (" << c.witness << ")";
      os << "\n";
    }
    os << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  }
};

}  // namespace hopf
