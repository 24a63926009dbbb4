#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qstx/report.hpp"

namespace qstx::verify {

struct Options {
  // Overrides the module-default comparison tolerance (1e-10 family) of
  // checks that use it.  Acceptance-pinned thresholds never move.
  std::optional<double> default_tol_override;

  // Test hook: perturbs the closed-form kernel inside the
  // dual-construction check, at the entries its singular branch produces.
  double closed_kernel_fault = 0.0;
};

struct Entry {
  std::string module;
  std::string name;
  int criterion = 0;  // acceptance criterion this entry belongs to, 0 if none
  std::function<Check(const Options&)> run;
};

const std::vector<Entry>& registry();
std::vector<std::string> module_names();

// Runs every entry of `selection` ("all" or a module name), printing one
// line per invariant with the measured residual and tolerance.  Returns 0
// when everything passes, 1 on any failure.  Unknown module names throw.
int run_suite(const std::string& selection, const Options& options,
              std::ostream& out);

// Runs the entries belonging to one acceptance criterion.
std::vector<Check> run_criterion(int criterion, const Options& options);

}  // namespace qstx::verify
