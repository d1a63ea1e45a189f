#include "dcat/diagnostics.hpp"

namespace dcat {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::vacuous:
      return "vacuous";
  }
  return "unknown";
}

void DiagnosticReport::merge(const DiagnosticReport& other,
                             const std::string& prefix) {
  for (const CheckResult& check : other.checks_) {
    CheckResult renamed = check;
    renamed.name = prefix.empty() ? check.name : prefix + "/" + check.name;
    checks_.push_back(std::move(renamed));
  }
}

const CheckResult* DiagnosticReport::find(const std::string& name) const {
  for (const CheckResult& check : checks_) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

std::uint64_t DiagnosticReport::total_violations() const {
  std::uint64_t total = 0;
  for (const CheckResult& check : checks_) total += check.violations;
  return total;
}

CheckStatus DiagnosticReport::status() const {
  bool vacuous = false;
  for (const CheckResult& check : checks_) {
    switch (check.status()) {
      case CheckStatus::fail:
        return CheckStatus::fail;
      case CheckStatus::vacuous:
        vacuous = true;
        break;
      case CheckStatus::pass:
        break;
    }
  }
  return vacuous ? CheckStatus::vacuous : CheckStatus::pass;
}

}  // namespace dcat
