#include "qstx/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <future>
#include <iostream>
#include <numbers>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "qstx/errors.hpp"
#include "qstx/program.hpp"
#include "qstx/shift.hpp"
#include "qstx/transfer.hpp"
#include "qstx/walk.hpp"

namespace qstx::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDumpLimit = 256;

using lattice::LatticeSize;

const std::map<std::string, Scenario>& scenario_names() {
  static const std::map<std::string, Scenario> names = {
      {"shift", Scenario::shift},
      {"hamiltonian", Scenario::hamiltonian},
      {"qubot", Scenario::qubot},
      {"switch", Scenario::rail_switch},
      {"chessman", Scenario::chessman},
      {"pst", Scenario::pst},
      {"walk", Scenario::walk},
      {"controlled-walk", Scenario::controlled_walk},
      {"audit", Scenario::audit},
  };
  return names;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Typed access to the raw parameter map with an allow list; unknown keys
// are usage errors naming the offending key.
class Params {
 public:
  Params(const ScenarioConfig& config, std::set<std::string> allowed)
      : config_(config) {
    for (const auto& [key, value] : config.params) {
      (void)value;
      if (!allowed.count(key))
        throw ValidationError("unknown parameter '" + key + "' for scenario '" +
                              scenario_name(config.scenario) + "'");
    }
  }

  bool has(const std::string& key) const { return config_.params.count(key) > 0; }

  std::string str(const std::string& key) const {
    auto it = config_.params.find(key);
    if (it == config_.params.end())
      throw ValidationError("missing required parameter '" + key +
                            "' for scenario '" +
                            scenario_name(config_.scenario) + "'");
    return it->second;
  }

  std::string str_or(const std::string& key, const std::string& def) const {
    return has(key) ? str(key) : def;
  }

  double real(const std::string& key) const { return parse_real(str(key), key); }
  double real_or(const std::string& key, double def) const {
    return has(key) ? real(key) : def;
  }

  long integer(const std::string& key) const { return parse_int(str(key), key); }
  long integer_or(const std::string& key, long def) const {
    return has(key) ? integer(key) : def;
  }

 private:
  const ScenarioConfig& config_;
};

int lattice_param(const Params& p, const std::string& key = "n") {
  const long n = p.integer(key);
  if (n < 2 || n > kDimensionCap)
    throw ValidationError("parameter '" + key + "' must be in [2, " +
                          std::to_string(kDimensionCap) + "], got " +
                          std::to_string(n));
  return static_cast<int>(n);
}

int site_param(const Params& p, const std::string& key, int def, int n) {
  const long s = p.integer_or(key, def);
  if (s < 0 || s >= n)
    throw ValidationError("parameter '" + key + "' must be a site in [0, " +
                          std::to_string(n - 1) + "], got " + std::to_string(s));
  return static_cast<int>(s);
}

long steps_param(const Params& p, long def) {
  const long t = p.integer_or("steps", def);
  if (t < 0) throw ValidationError("parameter 'steps' must be non-negative");
  return t;
}

void check_dump_size(int n, const ScenarioConfig& config) {
  if (n > kDumpLimit && !config.force_dump)
    throw ValidationError("matrix dump for n > " + std::to_string(kDumpLimit) +
                          " requires --force-dump (quadratic output size)");
}

walk::Coin coin_from_token(const std::string& token) {
  const std::string t = trim(token);
  if (t == "hadamard_y") return walk::make_coin(walk::CoinKind::hadamard_y);
  if (t == "hadamard_x") return walk::make_coin(walk::CoinKind::hadamard_x);
  if (t.rfind("rotation:", 0) == 0)
    return walk::make_coin(walk::CoinKind::rotation,
                           parse_real(t.substr(9), "rotation angle"));
  throw ValidationError("unknown coin '" + t +
                        "' (expected hadamard_y, hadamard_x or rotation:<angle>)");
}

std::vector<walk::Coin> parse_coins(const std::string& text) {
  std::vector<walk::Coin> coins;
  for (const auto& tok : split(text, ','))
    coins.push_back(coin_from_token(tok));
  return coins;
}

// Deterministic data samples for the audit scenario: two basis states, the
// uniform superposition, and one fixed pseudorandom state.
std::vector<PureState> audit_data_samples(int dim) {
  std::vector<PureState> samples;
  samples.push_back(PureState::basis(TensorShape({dim}), {0}));
  samples.push_back(PureState::basis(TensorShape({dim}), {dim - 1}));
  samples.push_back(
      PureState(TensorShape({dim}), parse_state("+", dim)));
  std::mt19937 rng(7741);
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  v /= v.norm();
  samples.emplace_back(TensorShape({dim}), v);
  return samples;
}

// Cached Hermitian evolution for scenarios sampling many times.
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& h) : es_(h) {
    if (es_.info() != Eigen::Success)
      throw ValidationError("propagator: eigendecomposition failed");
  }
  ComplexVector apply(const ComplexVector& v, double t) const {
    ComplexVector phases(es_.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
      phases[k] = std::polar(1.0, es_.eigenvalues()[k] * t);
    return es_.eigenvectors() *
           (phases.asDiagonal() * (es_.eigenvectors().adjoint() * v));
  }

 private:
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es_;
};

// ---------------------------------------------------------------------
// scenario runners
// ---------------------------------------------------------------------

RunResult run_shift(const ScenarioConfig& config) {
  Params p(config, {"n", "alpha"});
  const LatticeSize n(lattice_param(p));
  const double alpha = p.real_or("alpha", 1.0);
  check_dump_size(n.value(), config);

  RunResult r;
  const ComplexMatrix u = lattice::shift_root_spectral(n, alpha);
  r.matrices["shift_root"] = u;
  r.scalars["unitarity_residual"] = unitarity_residual(u);
  r.scalars["closed_spectral_residual"] =
      max_abs_diff(u, lattice::shift_root_closed(n, alpha));
  r.tolerances["unitarity"] = 1e-11;
  r.tolerances["construction_agreement"] = 1e-10;
  return r;
}

RunResult run_hamiltonian(const ScenarioConfig& config) {
  Params p(config, {"n"});
  const LatticeSize n(lattice_param(p));
  check_dump_size(n.value(), config);

  RunResult r;
  const ComplexMatrix h = lattice::shift_hamiltonian_spectral(n);
  r.matrices["hamiltonian"] = h;
  r.scalars["hermiticity_residual"] = hermiticity_residual(h);
  r.scalars["closed_spectral_residual"] =
      max_abs_diff(h, lattice::shift_hamiltonian_closed(n));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> spectrum(es.eigenvalues().data(),
                               es.eigenvalues().data() + n.value());
  r.vectors["spectrum"] = spectrum;
  r.tolerances["construction_agreement"] = 1e-10;
  return r;
}

RunResult run_qubot(const ScenarioConfig& config) {
  Params p(config, {"n", "program", "source", "steps"});
  const LatticeSize n(lattice_param(p));
  const ComplexVector program = parse_state(p.str_or("program", "0"), 2);
  const int source = site_param(p, "source", 0, n.value());
  const long steps = steps_param(p, 1);
  if (steps > 1000000)
    throw ValidationError("parameter 'steps' too large");

  const auto out = prog::run_conditional(
      prog::qubot_gate(n), PureState(TensorShape({2}), program),
      PureState::basis(TensorShape({n.value()}), {source}),
      static_cast<int>(steps));

  RunResult r;
  r.vectors["position"] = factor_distribution(out.state, 1);
  r.vectors["control"] = factor_distribution(out.state, 0);
  r.scalars["entropy_bits"] = out.entropy_bits;
  return r;
}

RunResult run_switch(const ScenarioConfig& config) {
  Params p(config, {"n", "g", "time", "program", "source", "steps"});
  const LatticeSize n(lattice_param(p));
  const double g = p.real_or("g", prog::default_switch_coupling(n));
  const double time = p.real_or("time", 1.0);
  const ComplexVector program = parse_state(p.str_or("program", "1"), 2);
  const int source = site_param(p, "source", 0, n.value());
  const long samples = steps_param(p, 25);

  const ComplexMatrix h = prog::switch_hamiltonian(n, g);
  const PureState start =
      tensor(PureState(TensorShape({2}), program),
             PureState::basis(TensorShape({2, n.value()}), {0, source}));
  const Propagator prop(h);

  RunResult r;
  Table rails{{"t", "rail0", "rail1"}, {}};
  double max_leak = 0.0;
  for (long i = 0; i <= samples; ++i) {
    const double t = samples == 0 ? time : time * i / samples;
    const PureState evolved(start.shape, prop.apply(start.amps, t));
    const auto pop = factor_distribution(evolved, 1);
    rails.rows.push_back({t, pop[0], pop[1]});
    max_leak = std::max(max_leak, pop[1]);
    if (i == samples) r.vectors["position"] = factor_distribution(evolved, 2);
  }
  r.tables["rail_populations"] = std::move(rails);
  r.scalars["max_rail1_population"] = max_leak;

  // The generator splits into commuting transport and rail-rotation parts.
  const ComplexMatrix transport = prog::switch_hamiltonian(n, 0.0);
  const ComplexMatrix coupling = h - transport;
  r.scalars["commutator_residual"] =
      (transport * coupling - coupling * transport).cwiseAbs().maxCoeff();
  r.tolerances["commutation"] = 1e-12;
  return r;
}

RunResult run_chessman(const ScenarioConfig& config) {
  Params p(config, {"n", "m", "moves", "program", "source", "time"});
  const LatticeSize n(lattice_param(p));
  const LatticeSize m(p.has("m") ? lattice_param(p, "m") : n.value());
  const auto moves = p.has("moves") ? parse_moves(p.str("moves"))
                                    : prog::default_chess_moves();
  const int c = static_cast<int>(moves.size());
  const ComplexVector program = parse_state(p.str_or("program", "0"), c);
  const auto src = split(p.str_or("source", "0,0"), ',');
  if (src.size() != 2)
    throw ValidationError("parameter 'source' for chessman must be 'x,y'");
  const long sx = parse_int(trim(src[0]), "source.x");
  const long sy = parse_int(trim(src[1]), "source.y");
  if (sx < 0 || sx >= m.value() || sy < 0 || sy >= n.value())
    throw ValidationError("chessman source site out of range");
  const double time = p.real_or("time", 1.0);

  const ComplexMatrix h = prog::chessman_hamiltonian(m, n, moves);
  const auto out = prog::run_conditional(
      h, PureState(TensorShape({c}), program),
      PureState::basis(TensorShape({m.value(), n.value()}),
                       {static_cast<int>(sx), static_cast<int>(sy)}),
      time);

  RunResult r;
  Table grid{{"x", "y", "p"}, {}};
  const long mn = static_cast<long>(m.value()) * n.value();
  for (int x = 0; x < m.value(); ++x)
    for (int y = 0; y < n.value(); ++y) {
      double prob = 0.0;
      for (int ci = 0; ci < c; ++ci)
        prob += std::norm(out.state.amps[ci * mn + x * n.value() + y]);
      grid.rows.push_back({static_cast<double>(x), static_cast<double>(y), prob});
    }
  r.tables["lattice2d"] = std::move(grid);
  r.scalars["entropy_bits"] = out.entropy_bits;
  return r;
}

RunResult run_pst(const ScenarioConfig& config) {
  Params p(config, {"n", "omega", "time", "source", "target"});
  const LatticeSize n(lattice_param(p));
  const double omega = p.real_or("omega", 1.0);
  if (omega == 0.0)
    throw ValidationError("parameter 'omega' must be non-zero");
  const double time = p.real_or("time", kPi / std::abs(omega));
  const int source = site_param(p, "source", 0, n.value());
  const int target = site_param(p, "target", n.value() - 1, n.value());

  RunResult r;
  r.scalars["fidelity"] =
      pst::transfer_fidelity(pst::pst_hamiltonian(n, omega), time, source, target);
  const auto profile = pst::coupling_profile(n, omega);
  r.vectors["couplings"] = profile;
  return r;
}

RunResult run_walk(const ScenarioConfig& config) {
  Params p(config, {"n", "coin", "theta", "steps", "source", "program"});
  const LatticeSize n(lattice_param(p));
  std::string coin_name = p.str_or("coin", "hadamard_y");
  if (coin_name == "rotation") {
    if (!p.has("theta"))
      throw ValidationError("coin 'rotation' requires parameter 'theta'");
    coin_name = "rotation:" + p.str("theta");
  } else if (p.has("theta") && coin_name.rfind("rotation", 0) != 0) {
    throw ValidationError("parameter 'theta' only applies to the rotation coin");
  }
  const walk::Coin coin = coin_from_token(coin_name);
  const long steps = steps_param(p, 10);
  if (steps > 100000) throw ValidationError("parameter 'steps' too large");
  const int source = site_param(p, "source", 0, n.value());
  const ComplexVector coin_state = parse_state(p.str_or("program", "0"), 2);

  const walk::WalkState initial{
      tensor(PureState(TensorShape({2}), coin_state),
             PureState::basis(TensorShape({n.value()}), {source})),
      0};
  const auto traj =
      walk::walk_evolve(n, walk::CoinSchedule({coin}), steps, initial);
  const auto dist = walk::position_distribution(traj.back());

  RunResult r;
  r.vectors["position"] = dist;
  const double sigma = walk::spread_sigma(dist, source);
  const double classical_sigma = walk::spread_sigma(
      walk::classical_walk_reference(n, steps, 0.5), 0);
  r.scalars["sigma"] = sigma;
  r.scalars["classical_sigma"] = classical_sigma;
  if (classical_sigma > 0.0)
    r.scalars["quantum_classical_ratio"] = sigma / classical_sigma;

  // Cyclic displacement variance is only meaningful while the walker stays
  // clear of the antipode.
  double wrap_mass = 0.0;
  const int quarter = n.value() / 4;
  for (int x = 0; x < n.value(); ++x) {
    int d = (x - source + n.value()) % n.value();
    if (d >= (n.value() + 1) / 2) d -= n.value();
    if (std::abs(d) > quarter) wrap_mass += dist[x];
  }
  if (wrap_mass > 0.01)
    std::cerr << "warning: " << fmt17(wrap_mass)
              << " of the probability mass lies beyond n/4 from the origin; "
                 "cyclic sigma is unreliable\n";
  return r;
}

RunResult run_controlled_walk(const ScenarioConfig& config) {
  Params p(config, {"n", "coins", "program", "steps", "source"});
  const LatticeSize n(lattice_param(p));
  const auto coins = parse_coins(p.str_or("coins", "hadamard_y,hadamard_x"));
  std::vector<ComplexMatrix> ops;
  ops.reserve(coins.size());
  for (const auto& c : coins) ops.push_back(c.matrix);
  const prog::ProgramBank bank(ops);
  const int c = bank.size();
  const ComplexVector program = parse_state(p.str_or("program", "0"), c);
  const long steps = steps_param(p, 10);
  if (steps > 100000) throw ValidationError("parameter 'steps' too large");
  const int source = site_param(p, "source", 0, n.value());

  const ComplexMatrix s = walk::controlled_walk_step(bank, n);
  PureState state =
      tensor(PureState(TensorShape({c}), program),
             PureState::basis(TensorShape({2, n.value()}), {0, source}));
  ComplexVector v = state.amps;
  for (long t = 0; t < steps; ++t) v = s * v;
  const PureState final_state(state.shape, v);

  RunResult r;
  r.vectors["position"] = factor_distribution(final_state, 2);
  r.scalars["control_entropy_bits"] = entanglement_entropy(final_state, {0});
  return r;
}

RunResult run_audit(const ScenarioConfig& config) {
  Params p(config, {"n", "coins", "program", "tol"});
  const LatticeSize n(lattice_param(p));
  const double tol = p.real_or("tol", 1e-8);
  if (!(tol > 0.0))
    throw ValidationError("parameter 'tol' must be positive");

  std::vector<ComplexMatrix> ops;
  if (p.has("coins")) {
    for (const auto& c : parse_coins(p.str("coins"))) ops.push_back(c.matrix);
  } else {
    const ComplexMatrix u = lattice::shift_operator(n);
    ops = {u, u.adjoint()};
  }
  const prog::ProgramBank bank(ops);

  std::vector<PureState> programs;
  if (p.has("program")) {
    for (const auto& tok : split(p.str("program"), ';'))
      programs.emplace_back(TensorShape({bank.size()}),
                            parse_state(trim(tok), bank.size()));
  } else {
    for (int k = 0; k < bank.size(); ++k)
      programs.push_back(PureState::basis(TensorShape({bank.size()}), {k}));
  }
  if (programs.size() != static_cast<std::size_t>(bank.size()))
    throw ValidationError("audit: number of program states (" +
                          std::to_string(programs.size()) +
                          ") must equal the bank size (" +
                          std::to_string(bank.size()) + ")");

  const auto gate = prog::conditional_gate(bank);
  RunResult r;
  r.reports["programmability"] = prog::check_programmability(
      gate.matrix, programs, audit_data_samples(bank.op_dim()), tol);
  r.reports["orthogonality"] = prog::program_overlap_audit(programs, bank, tol);
  r.scalars["max_residual"] =
      std::max(r.reports["programmability"].max_residual(),
               r.reports["orthogonality"].max_residual());
  r.tolerances["audit"] = tol;
  return r;
}

RunResult dispatch(const ScenarioConfig& config) {
  switch (config.scenario) {
    case Scenario::shift: return run_shift(config);
    case Scenario::hamiltonian: return run_hamiltonian(config);
    case Scenario::qubot: return run_qubot(config);
    case Scenario::rail_switch: return run_switch(config);
    case Scenario::chessman: return run_chessman(config);
    case Scenario::pst: return run_pst(config);
    case Scenario::walk: return run_walk(config);
    case Scenario::controlled_walk: return run_controlled_walk(config);
    case Scenario::audit: return run_audit(config);
  }
  throw ValidationError("unknown scenario");
}

// Summary scalar reported per grid point of a sweep.
const std::map<Scenario, std::string>& summary_keys() {
  static const std::map<Scenario, std::string> keys = {
      {Scenario::shift, "unitarity_residual"},
      {Scenario::hamiltonian, "closed_spectral_residual"},
      {Scenario::qubot, "entropy_bits"},
      {Scenario::rail_switch, "max_rail1_population"},
      {Scenario::chessman, "entropy_bits"},
      {Scenario::pst, "fidelity"},
      {Scenario::walk, "sigma"},
      {Scenario::controlled_walk, "control_entropy_bits"},
      {Scenario::audit, "max_residual"},
  };
  return keys;
}

const std::set<std::string>& sweepable_keys(Scenario s) {
  static const std::map<Scenario, std::set<std::string>> keys = {
      {Scenario::shift, {"alpha"}},
      {Scenario::hamiltonian, {}},
      {Scenario::qubot, {"steps"}},
      {Scenario::rail_switch, {"g", "time"}},
      {Scenario::chessman, {"time"}},
      {Scenario::pst, {"omega", "time"}},
      {Scenario::walk, {"theta", "steps"}},
      {Scenario::controlled_walk, {"steps"}},
      {Scenario::audit, {"tol"}},
  };
  return keys.at(s);
}

RunResult run_sweep(const ScenarioConfig& config) {
  const SweepSpec& sweep = *config.sweep;
  if (sweep.count < 1)
    throw ValidationError("sweep count must be at least 1");
  if (!std::isfinite(sweep.start) || !std::isfinite(sweep.stop))
    throw ValidationError("sweep bounds must be finite");
  if (!sweepable_keys(config.scenario).count(sweep.key))
    throw ValidationError("parameter '" + sweep.key +
                          "' is not sweepable for scenario '" +
                          scenario_name(config.scenario) + "'");

  std::vector<double> values(sweep.count);
  for (long i = 0; i < sweep.count; ++i)
    values[i] = sweep.count == 1
                    ? sweep.start
                    : sweep.start + (sweep.stop - sweep.start) * i /
                                        (sweep.count - 1);

  const bool integer_key = sweep.key == "steps";
  const auto run_point = [&](double v) {
    ScenarioConfig point = config;
    point.sweep.reset();
    point.out_path.clear();
    point.params[sweep.key] =
        integer_key ? std::to_string(std::llround(v)) : fmt17(v);
    return dispatch(point);
  };

  // Validate the first point eagerly so configuration errors surface
  // before any grid work is scheduled.
  std::vector<double> summaries(sweep.count);
  const std::string summary_key = summary_keys().at(config.scenario);
  summaries[0] = run_point(values[0]).scalars.at(summary_key);

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  for (long base = 1; base < sweep.count;
       base += static_cast<long>(workers)) {
    std::vector<std::future<double>> batch;
    const long end = std::min<long>(sweep.count, base + workers);
    for (long i = base; i < end; ++i)
      batch.push_back(std::async(std::launch::async, [&, i] {
        return run_point(values[i]).scalars.at(summary_key);
      }));
    for (long i = base; i < end; ++i) summaries[i] = batch[i - base].get();
  }

  RunResult r;
  Table t{{sweep.key, summary_key}, {}};
  for (long i = 0; i < sweep.count; ++i)
    t.rows.push_back({values[i], summaries[i]});
  r.tables["sweep"] = std::move(t);
  return r;
}

}  // namespace

Scenario scenario_from_name(const std::string& name) {
  auto it = scenario_names().find(name);
  if (it == scenario_names().end())
    throw ValidationError("unknown scenario '" + name + "'");
  return it->second;
}

const std::string& scenario_name(Scenario s) {
  for (const auto& [name, value] : scenario_names())
    if (value == s) return name;
  throw ValidationError("unknown scenario enum value");
}

double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) throw ValidationError(what + ": empty number");

  static const std::regex pi_form(
      R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi(?:\s*/\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))?$)");
  std::smatch m;
  if (std::regex_match(t, m, pi_form)) {
    double v = kPi;
    if (m[2].matched) v *= std::stod(m[2].str());
    if (m[3].matched) {
      const double d = std::stod(m[3].str());
      if (d == 0.0) throw ValidationError(what + ": division by zero");
      v /= d;
    }
    if (m[1].str() == "-") v = -v;
    return v;
  }

  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v))
    throw ValidationError(what + ": cannot parse number '" + t + "'");
  return v;
}

long parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ValidationError(what + ": cannot parse integer '" + t + "'");
  return v;
}

ComplexVector parse_state(const std::string& text, int dim) {
  const std::string t = trim(text);
  if (dim < 1) throw ValidationError("parse_state: dimension must be positive");
  if (t == "+") {
    ComplexVector v = ComplexVector::Constant(dim, 1.0 / std::sqrt(double(dim)));
    return v;
  }
  if (t == "-") {
    if (dim != 2)
      throw ValidationError("state '-' is only defined for a qubit register");
    ComplexVector v(2);
    v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    return v;
  }
  if (t.find(',') == std::string::npos && t.find(':') == std::string::npos) {
    // Bare integer: basis state index.
    long idx = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), idx);
    if (ec == std::errc{} && ptr == t.data() + t.size()) {
      if (idx < 0 || idx >= dim)
        throw ValidationError("basis state index " + std::to_string(idx) +
                              " out of range for dimension " +
                              std::to_string(dim));
      ComplexVector v = ComplexVector::Zero(dim);
      v[idx] = 1.0;
      return v;
    }
  }

  const auto parts = split(t, ',');
  if (static_cast<int>(parts.size()) != dim)
    throw ValidationError("state needs " + std::to_string(dim) +
                          " amplitudes, got " + std::to_string(parts.size()));
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const auto reim = split(trim(parts[i]), ':');
    if (reim.size() == 1)
      v[i] = Complex(parse_real(reim[0], "amplitude"), 0.0);
    else if (reim.size() == 2)
      v[i] = Complex(parse_real(reim[0], "amplitude.re"),
                     parse_real(reim[1], "amplitude.im"));
    else
      throw ValidationError("amplitude must be 're' or 're:im', got '" +
                            parts[i] + "'");
  }
  const double nrm = v.norm();
  if (nrm < 1e-12) throw ValidationError("state vector has zero norm");
  return v / nrm;
}

std::vector<std::pair<int, int>> parse_moves(const std::string& text) {
  std::vector<std::pair<int, int>> moves;
  for (const auto& tok : split(text, ';')) {
    const auto kj = split(trim(tok), ',');
    if (kj.size() != 2)
      throw ValidationError("move must be 'k,j', got '" + tok + "'");
    moves.emplace_back(static_cast<int>(parse_int(trim(kj[0]), "move.k")),
                       static_cast<int>(parse_int(trim(kj[1]), "move.j")));
  }
  return moves;
}

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw ValidationError("sweep must be 'key=start:stop:count', got '" + text +
                          "'");
  SweepSpec s;
  s.key = trim(text.substr(0, eq));
  const auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3)
    throw ValidationError("sweep must be 'key=start:stop:count', got '" + text +
                          "'");
  s.start = parse_real(parts[0], "sweep start");
  s.stop = parse_real(parts[1], "sweep stop");
  s.count = parse_int(parts[2], "sweep count");
  if (s.count < 1) throw ValidationError("sweep count must be at least 1");
  return s;
}

RunResult run_scenario(const ScenarioConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r = config.sweep ? run_sweep(config) : dispatch(config);
  r.scenario = scenario_name(config.scenario);
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (!config.out_path.empty()) emit(r, config.format, config.out_path);
  return r;
}

}  // namespace qstx::cli
