#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qstx/errors.hpp"
#include "qstx/io.hpp"
#include "qstx/scenario.hpp"
#include "qstx/verify.hpp"

using namespace qstx;
using cli::Format;
using cli::RunResult;
using cli::ScenarioConfig;

namespace {
constexpr double kPi = std::numbers::pi;

ScenarioConfig make_config(const std::string& scenario,
                           std::map<std::string, std::string> params) {
  ScenarioConfig c;
  c.scenario = cli::scenario_from_name(scenario);
  c.params = std::move(params);
  return c;
}
}  // namespace

TEST_CASE("parse_real handles pi forms and plain literals") {
  CHECK(cli::parse_real("pi") == doctest::Approx(kPi));
  CHECK(cli::parse_real("2pi") == doctest::Approx(2 * kPi));
  CHECK(cli::parse_real("2*pi") == doctest::Approx(2 * kPi));
  CHECK(cli::parse_real("pi/2") == doctest::Approx(kPi / 2));
  CHECK(cli::parse_real("3pi/4") == doctest::Approx(3 * kPi / 4));
  CHECK(cli::parse_real("-pi/3") == doctest::Approx(-kPi / 3));
  CHECK(cli::parse_real("0.5") == doctest::Approx(0.5));
  CHECK(cli::parse_real("1e-3") == doctest::Approx(1e-3));
  CHECK(cli::parse_real("-2.5") == doctest::Approx(-2.5));
  CHECK_THROWS_AS((void)cli::parse_real("abc"), ValidationError);
  CHECK_THROWS_AS((void)cli::parse_real(""), ValidationError);
  CHECK_THROWS_AS((void)cli::parse_real("pi/0"), ValidationError);
}

TEST_CASE("parse_state shorthands and amplitude lists") {
  const ComplexVector plus = cli::parse_state("+", 2);
  CHECK(std::abs(plus[0] - Complex(1 / std::sqrt(2.0), 0)) < 1e-15);

  const ComplexVector one = cli::parse_state("1", 2);
  CHECK(std::abs(one[1] - Complex(1, 0)) < 1e-15);

  const ComplexVector basis3 = cli::parse_state("3", 5);
  CHECK(std::abs(basis3[3] - Complex(1, 0)) < 1e-15);

  const ComplexVector amps = cli::parse_state("1,0:1", 2);
  CHECK(std::abs(amps[0] - Complex(1 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK(std::abs(amps[1] - Complex(0, 1 / std::sqrt(2.0))) < 1e-15);

  // normalization of unnormalized inputs
  const ComplexVector scaled = cli::parse_state("3,4", 2);
  CHECK(std::abs(scaled.norm() - 1.0) < 1e-15);
  CHECK(std::abs(scaled[0] - Complex(0.6, 0)) < 1e-15);

  CHECK_THROWS_AS((void)cli::parse_state("9", 5), ValidationError);
  CHECK_THROWS_AS((void)cli::parse_state("1,2,3", 2), ValidationError);
  CHECK_THROWS_AS((void)cli::parse_state("0,0", 2), ValidationError);
  CHECK_THROWS_AS((void)cli::parse_state("-", 3), ValidationError);
}

TEST_CASE("parse_moves and parse_sweep") {
  const auto moves = cli::parse_moves("1,0;0,-1;2,3");
  REQUIRE(moves.size() == 3);
  CHECK(moves[1] == std::pair<int, int>{0, -1});
  CHECK_THROWS_AS((void)cli::parse_moves("1;2"), ValidationError);

  const auto sweep = cli::parse_sweep("time=0:pi:9");
  CHECK(sweep.key == "time");
  CHECK(sweep.stop == doctest::Approx(kPi));
  CHECK(sweep.count == 9);
  CHECK_THROWS_AS((void)cli::parse_sweep("time=0:1"), ValidationError);
  CHECK_THROWS_AS((void)cli::parse_sweep("nope"), ValidationError);
}

TEST_CASE("run_scenario shift example") {
  const RunResult r =
      cli::run_scenario(make_config("shift", {{"n", "8"}, {"alpha", "0.5"}}));
  const ComplexMatrix& m = r.matrices.at("shift_root");
  CHECK(m.rows() == 8);
  CHECK(r.scalars.at("unitarity_residual") < 1e-11);
  CHECK(r.scalars.at("closed_spectral_residual") < 1e-10);
}

TEST_CASE("run_scenario pst example reaches unit fidelity") {
  const RunResult r = cli::run_scenario(make_config(
      "pst", {{"n", "16"}, {"omega", "1"}, {"time", "pi"},
              {"source", "0"}, {"target", "15"}}));
  CHECK(r.scalars.at("fidelity") == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.vectors.at("couplings").size() == 15);
}

TEST_CASE("run_scenario walk example distribution") {
  const RunResult r = cli::run_scenario(make_config(
      "walk", {{"n", "8"}, {"coin", "hadamard_y"}, {"steps", "1"},
               {"source", "0"}}));
  const auto& dist = r.vectors.at("position");
  CHECK(dist[1] == doctest::Approx(0.5));
  CHECK(dist[7] == doctest::Approx(0.5));
  CHECK(dist[0] == doctest::Approx(0.0));
}

TEST_CASE("run_scenario validates before computing") {
  CHECK_THROWS_WITH_AS(
      (void)cli::run_scenario(make_config("shift", {{"n", "8"},
                                                    {"bogus", "1"}})),
      doctest::Contains("bogus"), ValidationError);
  CHECK_THROWS_WITH_AS((void)cli::run_scenario(make_config("shift", {})),
                       doctest::Contains("'n'"), ValidationError);
  CHECK_THROWS_AS(
      (void)cli::run_scenario(make_config("shift", {{"n", "1"}})),
      ValidationError);
  CHECK_THROWS_AS(
      (void)cli::run_scenario(make_config("pst", {{"n", "8"},
                                                  {"omega", "0"}})),
      ValidationError);
  CHECK_THROWS_AS(
      (void)cli::run_scenario(make_config("walk", {{"n", "8"},
                                                   {"source", "9"}})),
      ValidationError);
  // matrix dumps above 256 sites need the explicit flag
  CHECK_THROWS_WITH_AS(
      (void)cli::run_scenario(make_config("shift", {{"n", "300"}})),
      doctest::Contains("force-dump"), ValidationError);
  ScenarioConfig forced = make_config("shift", {{"n", "300"}});
  forced.force_dump = true;
  CHECK(cli::run_scenario(forced).matrices.at("shift_root").rows() == 300);
}

TEST_CASE("run_scenario audit detects non-orthogonal programs") {
  const RunResult good = cli::run_scenario(make_config("audit", {{"n", "5"}}));
  CHECK(good.reports.at("programmability").passed);
  CHECK(good.reports.at("orthogonality").passed);

  const RunResult bad = cli::run_scenario(
      make_config("audit", {{"n", "5"}, {"program", "0;+"}}));
  CHECK_FALSE(bad.reports.at("orthogonality").passed);
  CHECK_FALSE(bad.reports.at("programmability").passed);
}

TEST_CASE("run_scenario switch scenario rail populations") {
  const RunResult r = cli::run_scenario(make_config(
      "switch", {{"n", "5"}, {"program", "1"}, {"g", "0.5"},
                 {"time", "pi"}, {"steps", "4"}}));
  const auto& rows = r.tables.at("rail_populations").rows;
  REQUIRE(rows.size() == 5);
  CHECK(rows.back()[2] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.scalars.at("commutator_residual") < 1e-12);

  const RunResult quiet = cli::run_scenario(make_config(
      "switch", {{"n", "5"}, {"program", "0"}, {"time", "2"}}));
  CHECK(quiet.scalars.at("max_rail1_population") < 1e-12);
}

TEST_CASE("run_scenario sweep grid") {
  ScenarioConfig config = make_config("pst", {{"n", "8"}});
  config.sweep = cli::parse_sweep("time=0:pi:5");
  const RunResult r = cli::run_scenario(config);
  const auto& t = r.tables.at("sweep");
  REQUIRE(t.rows.size() == 5);
  CHECK(t.columns[0] == "time");
  CHECK(t.columns[1] == "fidelity");
  CHECK(t.rows.back()[1] == doctest::Approx(1.0).epsilon(1e-9));

  ScenarioConfig bad = make_config("hamiltonian", {{"n", "8"}});
  bad.sweep = cli::parse_sweep("n=2:8:3");
  CHECK_THROWS_AS((void)cli::run_scenario(bad), ValidationError);
}

TEST_CASE("run_scenario output is deterministic") {
  const auto run = [] {
    return cli::to_json(cli::run_scenario(make_config(
        "walk", {{"n", "16"}, {"steps", "9"}, {"coin", "rotation"},
                 {"theta", "pi/5"}})));
  };
  CHECK(run() == run());
}

TEST_CASE("to_json round-trips doubles bit-exactly") {
  RunResult r;
  r.scenario = "shift";
  ComplexMatrix m(2, 2);
  m << Complex(1 / 3.0, -kPi), Complex(0, 1e-17), Complex(std::sqrt(2.0), 0),
      Complex(-0.1, 0.3);
  r.matrices["m"] = m;
  r.scalars["x"] = 0.1 + 0.2;

  const auto doc = nlohmann::json::parse(cli::to_json(r));
  const auto& entries = doc["outputs"]["matrices"]["m"]["entries"];
  int idx = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j, ++idx) {
      CHECK(entries[idx]["re"].get<double>() == m(i, j).real());
      CHECK(entries[idx]["im"].get<double>() == m(i, j).imag());
    }
  CHECK(doc["outputs"]["scalars"]["x"].get<double>() == 0.1 + 0.2);
}

TEST_CASE("to_csv sections and row counts") {
  RunResult r;
  r.scenario = "walk";
  r.vectors["position"] = {0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5};
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, Complex(0, -1);
  r.matrices["u"] = m;

  const std::string csv = cli::to_csv(r);
  std::istringstream lines(csv);
  std::string line;
  int vector_rows = 0, matrix_rows = 0;
  std::string section;
  bool expect_header = false;
  while (std::getline(lines, line)) {
    if (line.rfind("# ", 0) == 0) {
      section = line;
      expect_header = true;
      continue;
    }
    if (expect_header) {  // column header row
      expect_header = false;
      continue;
    }
    if (section == "# vector:position") ++vector_rows;
    if (section == "# matrix:u") ++matrix_rows;
  }
  CHECK(vector_rows == 8);
  CHECK(matrix_rows == 4);
  // 17-significant-digit round trip
  CHECK(csv.find("0.5") != std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("verify suite fault injection names the failing invariant") {
  verify::Options fault;
  fault.closed_kernel_fault = 1e-3;
  std::ostringstream out;
  const int code = verify::run_suite("shift-lattice", fault, out);
  CHECK(code == 1);
  CHECK(out.str().find("[FAIL]") != std::string::npos);
  CHECK(out.str().find("dual-construction-roots") != std::string::npos);

  std::ostringstream clean_out;
  verify::Options clean;
  CHECK(verify::run_suite("tensor-core", clean, clean_out) == 0);
  CHECK_THROWS_AS((void)verify::run_suite("no-such-module", clean, clean_out),
                  ValidationError);
}
