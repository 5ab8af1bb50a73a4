#ifndef VIRFOCK_SUITES_HPP
#define VIRFOCK_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "virfock/rep.hpp"

namespace virfock {

// Batch verification driver. All cutoffs explicit; exit is clean only when
// every sub-check passes exactly.
struct RunConfig {
  std::string command;        // verify-clifford, verify-heisenberg, ...
  long energy_cutoff = 48;    // quarters
  long q_order = 60;          // quarters
  int z_window = 6;
  int mode_window = 4;
  std::optional<std::string> lambda_text;
  std::optional<std::string> b_text;
  std::optional<int> sector;
  int max_level = 9;
  int j_max = 4;
  int discrete_max_m = 4;
  std::string format = "plain";  // json, csv, plain
};

struct CheckResult {
  std::string name;
  std::string anchor;  // which algebraic identity the check exercises
  bool passed;
  std::string detail;  // first discrepancy, empty when passed
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckResult> checks;
  bool verdict() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  std::string to_json() const;
  std::string to_csv() const;
  std::string to_plain() const;
  std::string render(const std::string& format) const;
};

Report run_suite(const RunConfig& config);

}  // namespace virfock

#endif
