// qstx: scenario runner and verification driver for programmable
// state-transfer networks on cyclic lattices.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstx/errors.hpp"
#include "qstx/io.hpp"
#include "qstx/scenario.hpp"
#include "qstx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::map<std::string, std::string> params;
  std::string out_path;
  std::string format = "json";
  std::string config_path;
  std::string sweep;
  bool force_dump = false;
};

void add_param_option(CLI::App* cmd, CommonFlags& flags, const std::string& key,
                      const std::string& help) {
  cmd->add_option_function<std::string>(
      "--" + key, [&flags, key](const std::string& v) { flags.params[key] = v; },
      help);
}

void add_common_options(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out_path, "Output file path (default: stdout)");
  cmd->add_option("--format", flags.format, "Output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--config", flags.config_path,
                  "JSON config file; explicit flags override its values");
  cmd->add_option("--sweep", flags.sweep,
                  "Grid sweep 'key=start:stop:count' over one parameter");
  cmd->add_flag("--force-dump", flags.force_dump,
                "Allow matrix dumps above n = 256");
}

// Loads {"scenario":…, "parameters":{…}, "output":{"format":…, "path":…}}.
// Values already present in `flags.params` (i.e. given as flags) win.
void merge_config_file(const std::string& path, CommonFlags& flags) {
  std::ifstream f(path);
  if (!f) throw qstx::IoError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw qstx::ValidationError("config file " + path + ": " + e.what());
  }
  if (doc.contains("parameters")) {
    for (const auto& [key, value] : doc["parameters"].items()) {
      if (flags.params.count(key)) continue;
      flags.params[key] =
          value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  if (doc.contains("output")) {
    const auto& out = doc["output"];
    if (out.contains("format") && flags.format == "json")
      flags.format = out["format"].get<std::string>();
    if (out.contains("path") && flags.out_path.empty())
      flags.out_path = out["path"].get<std::string>();
  }
}

int run_scenario_command(const std::string& name, CommonFlags& flags) {
  if (!flags.config_path.empty()) merge_config_file(flags.config_path, flags);

  qstx::cli::ScenarioConfig config;
  config.scenario = qstx::cli::scenario_from_name(name);
  config.params = flags.params;
  config.format =
      flags.format == "csv" ? qstx::cli::Format::csv : qstx::cli::Format::json;
  config.out_path = flags.out_path;
  config.force_dump = flags.force_dump;
  if (!flags.sweep.empty()) config.sweep = qstx::cli::parse_sweep(flags.sweep);

  // Audits honor QSTX_TOL unless a tolerance was given explicitly.
  if (config.scenario == qstx::cli::Scenario::audit &&
      !config.params.count("tol")) {
    if (const char* env = std::getenv("QSTX_TOL")) config.params["tol"] = env;
  }

  const qstx::cli::RunResult result = qstx::cli::run_scenario(config);
  if (config.out_path.empty()) qstx::cli::emit(result, config.format, "");
  std::cerr << "completed in " << result.wall_seconds << "s\n";

  for (const auto& [rname, report] : result.reports) {
    if (!report.passed) {
      std::cerr << "audit '" << rname << "' failed\n";
      return kExitInvariantFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qstx - programmable quantum state transfer on cyclic lattices.\n"
      "Builds fractional shift operators and their generators, conditional\n"
      "(program-controlled) transfer gates, engineered-coupling chains with\n"
      "perfect endpoint transfer, and programmable coined walks.\n"};
  app.require_subcommand(1);

  const struct {
    const char* name;
    const char* help;
  } scenarios[] = {
      {"shift",
       "Fractional cyclic shift U(alpha) by Fourier conjugation of clock "
       "phases; dumps the matrix with unitarity and closed-form residuals"},
      {"hamiltonian",
       "Shift generator H with spectrum {2*pi*k/n}; dumps matrix, spectrum "
       "and the spectral/closed-form agreement residual"},
      {"qubot",
       "Conditional shift driven by a control qubit (|0> forward, |1> "
       "backward); reports final distribution and control/data entropy"},
      {"switch",
       "Conditional transport with a two-rail switch; reports rail "
       "populations over time and the commutation residual"},
      {"chessman",
       "Control-selected move velocities on an m x n lattice; reports the "
       "2-D distribution after evolution"},
      {"pst",
       "Engineered-coupling chain (tridiagonal generator); reports transfer "
       "fidelity between two sites and the coupling profile"},
      {"walk",
       "Coined walk on a cycle: coin then conditional shift per step; "
       "reports distribution, cyclic sigma and the classical baseline"},
      {"controlled-walk",
       "Cascade of a coin bank controlled by a third register on top of the "
       "conditional shift; reports distribution and control entropy"},
      {"audit",
       "Programmability and program-orthogonality audits for a conditional "
       "gate (default: the qubot bank); exit 1 when an audit fails"},
  };

  std::map<std::string, CommonFlags> flag_sets;
  for (const auto& s : scenarios) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    CommonFlags& flags = flag_sets[s.name];
    add_param_option(cmd, flags, "n", "Number of lattice sites (>= 2)");
    add_common_options(cmd, flags);
    const std::string name = s.name;
    if (name == "shift")
      add_param_option(cmd, flags, "alpha", "Shift amount (pi forms allowed)");
    if (name == "qubot" || name == "switch" || name == "chessman" ||
        name == "walk" || name == "controlled-walk" || name == "audit")
      add_param_option(cmd, flags, "program",
                       "Control state: basis index, '+', '-', or amplitude "
                       "list 're[:im],...' ( ';'-separated list for audit)");
    if (name == "qubot" || name == "switch" || name == "walk" ||
        name == "controlled-walk")
      add_param_option(cmd, flags, "source", "Initial site (default 0)");
    if (name == "chessman")
      add_param_option(cmd, flags, "source", "Initial site 'x,y'");
    if (name == "pst") {
      add_param_option(cmd, flags, "source", "Source site");
      add_param_option(cmd, flags, "target", "Target site");
      add_param_option(cmd, flags, "omega", "Coupling strength (non-zero)");
    }
    if (name == "qubot" || name == "switch" || name == "walk" ||
        name == "controlled-walk")
      add_param_option(cmd, flags, "steps",
                       name == "switch" ? "Number of time samples"
                                        : "Number of steps");
    if (name == "switch" || name == "chessman" || name == "pst")
      add_param_option(cmd, flags, "time", "Evolution time (pi forms allowed)");
    if (name == "switch")
      add_param_option(cmd, flags, "g", "Rail coupling (default 2/(n-1))");
    if (name == "chessman") {
      add_param_option(cmd, flags, "m", "First lattice size (default n)");
      add_param_option(cmd, flags, "moves",
                       "Move pairs 'k,j;k,j;...' (default king moves)");
    }
    if (name == "walk") {
      add_param_option(cmd, flags, "coin",
                       "Coin: hadamard_y|hadamard_x|rotation");
      add_param_option(cmd, flags, "theta", "Rotation coin angle");
    }
    if (name == "controlled-walk" || name == "audit")
      add_param_option(cmd, flags, "coins",
                       "Coin list, e.g. 'hadamard_y,rotation:pi/4'");
    if (name == "audit")
      add_param_option(cmd, flags, "tol",
                       "Audit tolerance (default 1e-8, or QSTX_TOL)");
  }

  std::string verify_selection = "all";
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Run the invariant suite (all modules or one), one line per invariant "
      "with measured residual and tolerance; exit 0 only if everything "
      "passes");
  verify_cmd->add_option("selection", verify_selection,
                         "all | tensor-core | shift-lattice | "
                         "programmable-dynamics | perfect-transfer | "
                         "coined-walk");

  app.footer(
      "Exit codes: 0 success/all-pass, 1 invariant failure, 2 usage or\n"
      "validation error, 3 I/O error.  QSTX_TOL overrides the default audit\n"
      "and default-equality comparison tolerances (acceptance thresholds\n"
      "stay pinned).");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      qstx::verify::Options options;
      if (const char* env = std::getenv("QSTX_TOL"))
        options.default_tol_override =
            qstx::cli::parse_real(env, "QSTX_TOL");
      return qstx::verify::run_suite(verify_selection, options, std::cout) == 0
                 ? kExitOk
                 : kExitInvariantFailure;
    }
    for (auto* sub : app.get_subcommands())
      return run_scenario_command(sub->get_name(), flag_sets[sub->get_name()]);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const qstx::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const qstx::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qstx::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
}
