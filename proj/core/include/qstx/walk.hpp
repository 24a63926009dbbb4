#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstx/program.hpp"
#include "qstx/shift.hpp"
#include "qstx/tensor.hpp"

namespace qstx::walk {

enum class CoinKind { hadamard_y, hadamard_x, rotation };

// 2x2 unitary applied to the direction register before each shift.
//   hadamard_y = (1 + iσ_y)/√2 — NOT the conventional Hadamard (σ_x+σ_z)/√2
//   hadamard_x = (1 + iσ_x)/√2
//   rotation(θ) = exp(iθσ_x) = cosθ·1 + i sinθ·σ_x
struct Coin {
  ComplexMatrix matrix;
  std::string label;
};

Coin make_coin(CoinKind kind, std::optional<double> theta = std::nullopt);
Coin custom_coin(ComplexMatrix m, std::string label = "custom");

// Per-step coin sequence, repeated cyclically: step t uses coins[t mod len].
// A single-coin schedule recovers the plain coined walk.
struct CoinSchedule {
  explicit CoinSchedule(std::vector<Coin> coins);
  const Coin& at_step(long t) const { return coins[t % coins.size()]; }
  std::vector<Coin> coins;
};

struct WalkState {
  PureState state;  // shape [2, n], or [c, 2, n] for controlled walks
  long step_count = 0;
};

// Walker localized at `site` with direction register |coin_state>.
WalkState initial_walker(lattice::LatticeSize n, int coin_state, int site);

// One walk step on 2n dimensions: the coin acts first, then the
// conditional shift moves |0>-direction amplitude forward and
// |1>-direction amplitude backward.
ComplexMatrix walk_step(lattice::LatticeSize n, const Coin& coin);

// T steps under the cyclic schedule; returns all T+1 states including the
// initial one.
std::vector<WalkState> walk_evolve(lattice::LatticeSize n,
                                   const CoinSchedule& schedule, long steps,
                                   const WalkState& initial);

// Marginal probability over lattice sites (the last tensor factor).
std::vector<double> position_distribution(const WalkState& ws);

// Controlled cascade step on (c · 2 · n) dimensions, built literally as
// (C ⊗ 1_n) · (1_c ⊗ B): the conditional shift acts on (direction,
// position), then the bank coin selected by the control acts on
// (control, direction).  Restricted to control |k> this is the coined
// walk with coin bank.ops[k], with the coin applied after the shift.
ComplexMatrix controlled_walk_step(const prog::ProgramBank& bank,
                                   lattice::LatticeSize n);

// Exact distribution of the classical ±1 cyclic random walk after T steps
// (convolution, no sampling).
std::vector<double> classical_walk_reference(lattice::LatticeSize n,
                                             long steps, double p_right);

// Standard deviation of the minimal cyclic displacement from `origin`
// (displacement mapped to [-n/2, n/2)).  Meaningful while the spread stays
// well below half the cycle.
double spread_sigma(const std::vector<double>& dist, int origin);

}  // namespace qstx::walk
