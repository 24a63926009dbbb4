#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qstx {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual <= tolerance; }
};

// Structured pass/fail record of an audit.  `passed` holds exactly when
// every residual is within its tolerance.
struct Report {
  bool passed = true;
  std::vector<Check> checks;
  std::string notes;

  static Report from_checks(std::vector<Check> checks, std::string notes = {}) {
    Report r;
    r.checks = std::move(checks);
    r.notes = std::move(notes);
    r.passed = true;
    for (const auto& c : r.checks) r.passed = r.passed && c.passed();
    return r;
  }

  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
};

}  // namespace qstx
