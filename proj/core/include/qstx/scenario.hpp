#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstx/io.hpp"
#include "qstx/tensor.hpp"

namespace qstx::cli {

enum class Scenario {
  shift,
  hamiltonian,
  qubot,
  rail_switch,
  chessman,
  pst,
  walk,
  controlled_walk,
  audit,
};

Scenario scenario_from_name(const std::string& name);
const std::string& scenario_name(Scenario s);

struct SweepSpec {
  std::string key;
  double start = 0.0;
  double stop = 0.0;
  long count = 1;
};

// Declarative scenario request.  Parameters arrive as strings (numbers may
// use "pi" forms, e.g. "pi/2") and are validated against the scenario's
// parameter list before any operator is built.
struct ScenarioConfig {
  Scenario scenario = Scenario::shift;
  std::map<std::string, std::string> params;
  Format format = Format::json;
  std::string out_path;   // written when non-empty
  bool force_dump = false;
  std::optional<SweepSpec> sweep;
};

// Parses a real number, accepting multiples of pi: "pi", "2pi", "2*pi",
// "pi/2", "3pi/4", "-pi", plus plain decimal/scientific literals.
double parse_real(const std::string& text, const std::string& what = "value");
long parse_int(const std::string& text, const std::string& what = "value");

// State parser: "+" (uniform), "-" (qubit |0>-|1> only), a basis index, or
// a comma-separated amplitude list with entries "re" or "re:im".  The
// result is normalized.
ComplexVector parse_state(const std::string& text, int dim);

// "k,j;k,j;..." integer move pairs.
std::vector<std::pair<int, int>> parse_moves(const std::string& text);

// "key=start:stop:count" with pi-form bounds.
SweepSpec parse_sweep(const std::string& text);

// Validates the configuration, runs the scenario (or the sweep grid), and
// writes the result when an output path is set.  Deterministic: identical
// configurations produce byte-identical emitted files.
RunResult run_scenario(const ScenarioConfig& config);

}  // namespace qstx::cli
