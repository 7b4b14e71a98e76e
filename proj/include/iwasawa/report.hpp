#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace iwasawa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Itemized pass/fail list produced by the verify_* functions.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace iwasawa
