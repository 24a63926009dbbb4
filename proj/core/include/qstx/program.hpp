#pragma once

#include <utility>
#include <vector>

#include "qstx/report.hpp"
#include "qstx/shift.hpp"
#include "qstx/tensor.hpp"

namespace qstx::prog {

// Ordered set of same-dimension unitaries selectable by a control register.
// The control (program) space dimension equals the number of operators.
struct ProgramBank {
  explicit ProgramBank(std::vector<ComplexMatrix> operators,
                       double unitarity_tol = kDefaultTol);

  int size() const { return static_cast<int>(ops.size()); }
  int op_dim() const { return static_cast<int>(ops.front().rows()); }

  std::vector<ComplexMatrix> ops;
};

// Unitary on (program ⊗ data) that is block diagonal in the program basis.
struct ConditionalGate {
  ComplexMatrix matrix;
  int program_dim = 0;
  int data_dim = 0;
};

// C = Σ_k |k><k| ⊗ U_k.
ConditionalGate conditional_gate(const ProgramBank& bank);

// (a ⊗ 1) ∘ gate: rewrites the control register after the conditional
// action, e.g. a coin toss between walk steps.
ComplexMatrix reprogram(const ConditionalGate& gate, const ComplexMatrix& a);

// Data-side operator reconstruction used by check_programmability: the gate
// is applied to (program ⊗ basis-data) inputs, the columns are read off
// against a fixed program-side reference, and the result is aligned to a
// canonical global phase (largest-magnitude entry real positive, ties
// broken by lowest column then row index).
ComplexMatrix extract_data_operator(const ComplexMatrix& gate,
                                    const PureState& program);

// Audits whether `gate` acts on the data register as a single
// data-independent unitary for each given program state:
//   - program/data entanglement after the gate must stay below tol,
//   - the extracted data-side operator must be unitary within tol,
//   - its action must match the gate's output on every data sample.
// Needs at least two data samples; fewer leave data-independence
// undecidable.
Report check_programmability(const ComplexMatrix& gate,
                             const std::vector<PureState>& programs,
                             const std::vector<PureState>& data_samples,
                             double tol);

// Checks that program states implementing distinct operators (distinct up
// to a global phase, measured by 1 - |tr(Ua† Ub)|/d > tol) are mutually
// orthogonal within tol.  Pairs implementing the same operator are exempt.
Report program_overlap_audit(const std::vector<PureState>& programs,
                             const ProgramBank& bank, double tol = 1e-8);

// Two-program conditional shift: control |0> moves the lattice excitation
// forward, control |1> backward.
ConditionalGate qubot_gate(lattice::LatticeSize n);

// Generator of the conditional shift: σ_z ⊗ H, so that exp(i H t) at t = 1
// reproduces qubot_gate.
ComplexMatrix qubot_hamiltonian(lattice::LatticeSize n);

// Conditional transport with a rail switch, on shape [2, 2, n]:
//   H = 1 ⊗ (1 ⊗ H_shift) + g · |1><1| ⊗ (σ_x ⊗ 1).
// The two summands commute, so the evolution factorizes into a rail
// rotation times transport.  g*t = π/2 fully swaps the rails.
ComplexMatrix switch_hamiltonian(lattice::LatticeSize n, double g);

// Default rail coupling 2/(n-1).
double default_switch_coupling(lattice::LatticeSize n);

// Control-selected move velocities on an m×n lattice: for each move pair
// (k, j) the control basis state applies k shifts per unit time on the
// second (n) factor and j on the first (m) factor:
//   H = Σ_(k,j) |k,j><k,j| ⊗ (k · 1_m ⊗ H_n + j · H_m ⊗ 1_n).
// Move pairs must be distinct; the control dimension is the list length.
ComplexMatrix chessman_hamiltonian(lattice::LatticeSize m,
                                   lattice::LatticeSize n,
                                   const std::vector<std::pair<int, int>>& moves);

// King-move default: {-1,0,1}² minus (0,0).
std::vector<std::pair<int, int>> default_chess_moves();

struct RunOutcome {
  PureState state;
  double entropy_bits = 0.0;
};

// Evolves (program ⊗ data) under exp(i h t) and reports the program/data
// entanglement of the result.
RunOutcome run_conditional(const ComplexMatrix& hamiltonian,
                           const PureState& program, const PureState& data,
                           double t);

// Same, applying a conditional gate a whole number of times.
RunOutcome run_conditional(const ConditionalGate& gate,
                           const PureState& program, const PureState& data,
                           int steps);

}  // namespace qstx::prog
