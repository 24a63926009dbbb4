#include "qstx/walk.hpp"

#include <cmath>
#include <string>

#include "qstx/errors.hpp"

namespace qstx::walk {

Coin make_coin(CoinKind kind, std::optional<double> theta) {
  ComplexMatrix m(2, 2);
  switch (kind) {
    case CoinKind::hadamard_y:
      m << 1, 1, -1, 1;
      m /= std::sqrt(2.0);
      return Coin{std::move(m), "hadamard_y"};
    case CoinKind::hadamard_x:
      m << Complex(1, 0), Complex(0, 1), Complex(0, 1), Complex(1, 0);
      m /= std::sqrt(2.0);
      return Coin{std::move(m), "hadamard_x"};
    case CoinKind::rotation: {
      if (!theta)
        throw ValidationError("make_coin: rotation coin requires an angle");
      const double c = std::cos(*theta);
      const double s = std::sin(*theta);
      m << Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0);
      return Coin{std::move(m), "rotation(" + std::to_string(*theta) + ")"};
    }
  }
  throw ValidationError("make_coin: unknown coin kind");
}

Coin custom_coin(ComplexMatrix m, std::string label) {
  if (m.rows() != 2 || m.cols() != 2)
    throw ValidationError("custom_coin: coin must be 2x2");
  const double r = unitarity_residual(m);
  if (r > 1e-12)
    throw ValidationError("custom_coin: coin is not unitary, residual = " +
                          std::to_string(r));
  return Coin{std::move(m), std::move(label)};
}

CoinSchedule::CoinSchedule(std::vector<Coin> coins_) : coins(std::move(coins_)) {
  if (coins.empty()) throw ValidationError("CoinSchedule: empty coin list");
}

WalkState initial_walker(lattice::LatticeSize n, int coin_state, int site) {
  if (coin_state < 0 || coin_state > 1)
    throw ValidationError("initial_walker: coin state must be 0 or 1");
  if (site < 0 || site >= n.value())
    throw ValidationError("initial_walker: site out of range");
  return WalkState{PureState::basis(TensorShape({2, n.value()}),
                                    {coin_state, site}),
                   0};
}

ComplexMatrix walk_step(lattice::LatticeSize n, const Coin& coin) {
  const ComplexMatrix b = prog::qubot_gate(n).matrix;
  return b * kron(coin.matrix, ComplexMatrix::Identity(n.value(), n.value()));
}

std::vector<WalkState> walk_evolve(lattice::LatticeSize n,
                                   const CoinSchedule& schedule, long steps,
                                   const WalkState& initial) {
  if (steps < 0)
    throw ValidationError("walk_evolve: step count must be non-negative");
  const std::vector<int> expected{2, n.value()};
  if (initial.state.shape.factors != expected)
    throw ValidationError("walk_evolve: initial state must have shape [2, n]");

  std::vector<ComplexMatrix> ops;
  ops.reserve(schedule.coins.size());
  for (const auto& c : schedule.coins) ops.push_back(walk_step(n, c));

  std::vector<WalkState> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(initial);
  ComplexVector v = initial.state.amps;
  for (long t = 0; t < steps; ++t) {
    v = ops[t % ops.size()] * v;
    trajectory.push_back(
        WalkState{PureState(initial.state.shape, v), initial.step_count + t + 1});
  }
  return trajectory;
}

std::vector<double> position_distribution(const WalkState& ws) {
  const auto& factors = ws.state.shape.factors;
  const int n = factors.back();
  const long rest = ws.state.shape.dim() / n;
  std::vector<double> p(n, 0.0);
  for (long r = 0; r < rest; ++r)
    for (int x = 0; x < n; ++x) p[x] += std::norm(ws.state.amps[r * n + x]);
  return p;
}

ComplexMatrix controlled_walk_step(const prog::ProgramBank& bank,
                                   lattice::LatticeSize n) {
  if (bank.op_dim() != 2)
    throw ValidationError("controlled_walk_step: bank operators must be 2x2 coins");
  const int c = bank.size();
  const ComplexMatrix cond = prog::conditional_gate(bank).matrix;
  const ComplexMatrix b = prog::qubot_gate(n).matrix;
  return kron(cond, ComplexMatrix::Identity(n.value(), n.value())) *
         kron(ComplexMatrix::Identity(c, c), b);
}

std::vector<double> classical_walk_reference(lattice::LatticeSize n,
                                             long steps, double p_right) {
  if (steps < 0)
    throw ValidationError("classical_walk_reference: step count must be non-negative");
  if (!(p_right >= 0.0 && p_right <= 1.0))
    throw ValidationError("classical_walk_reference: p_right must lie in [0, 1]");
  const int N = n.value();
  std::vector<double> d(N, 0.0);
  d[0] = 1.0;
  std::vector<double> next(N, 0.0);
  for (long t = 0; t < steps; ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int x = 0; x < N; ++x) {
      if (d[x] == 0.0) continue;
      next[(x + 1) % N] += p_right * d[x];
      next[(x - 1 + N) % N] += (1.0 - p_right) * d[x];
    }
    d.swap(next);
  }
  return d;
}

double spread_sigma(const std::vector<double>& dist, int origin) {
  const int n = static_cast<int>(dist.size());
  if (n == 0) throw ValidationError("spread_sigma: empty distribution");
  if (origin < 0 || origin >= n)
    throw ValidationError("spread_sigma: origin out of range");
  double total = 0.0;
  for (double p : dist) {
    if (p < -1e-12)
      throw ValidationError("spread_sigma: negative probability entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ValidationError("spread_sigma: distribution does not sum to 1");

  const int half_up = (n + 1) / 2;
  double mean = 0.0, second = 0.0;
  for (int x = 0; x < n; ++x) {
    int d = (x - origin + n) % n;
    if (d >= half_up) d -= n;  // minimal displacement in [-n/2, n/2)
    mean += dist[x] * d;
    second += dist[x] * static_cast<double>(d) * d;
  }
  return std::sqrt(std::max(0.0, second - mean * mean));
}

}  // namespace qstx::walk
