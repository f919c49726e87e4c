#pragma once

#include <string>
#include <vector>

namespace mpap {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success unless the value itself is the point
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

}  // namespace mpap
