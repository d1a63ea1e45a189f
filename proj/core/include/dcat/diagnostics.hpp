#ifndef DCAT_DIAGNOSTICS_HPP
#define DCAT_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dcat {

enum class CheckStatus { pass, fail, vacuous };

std::string to_string(CheckStatus s);

// Recorded when a check ran on a deterministic sample rather than the whole
// population of candidate instances.
struct SamplingInfo {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t population = 0;
};

// One counterexample, as named-arrow bindings plus a rendered equation.
struct Witness {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string detail;
};

// Outcome of one named check: how many instances qualified, how many failed,
// and a bounded list of witnesses. Zero qualifying instances is reported as
// `vacuous`, never silently as a pass.
struct CheckResult {
  static constexpr std::size_t kMaxWitnesses = 25;

  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
  std::optional<SamplingInfo> sampling;

  explicit CheckResult(std::string name_ = "") : name(std::move(name_)) {}

  void add_violation(Witness w) {
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }

  CheckStatus status() const {
    if (violations > 0) return CheckStatus::fail;
    if (instances == 0) return CheckStatus::vacuous;
    return CheckStatus::pass;
  }
};

class DiagnosticReport {
 public:
  void add(CheckResult check) { checks_.push_back(std::move(check)); }

  // Appends another report's checks under "prefix/".
  void merge(const DiagnosticReport& other, const std::string& prefix);

  const std::vector<CheckResult>& checks() const { return checks_; }

  const CheckResult* find(const std::string& name) const;

  std::uint64_t total_violations() const;

  // fail if any check failed, else vacuous if any check was vacuous.
  CheckStatus status() const;

  bool ok() const { return status() != CheckStatus::fail; }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace dcat

#endif  // DCAT_DIAGNOSTICS_HPP
