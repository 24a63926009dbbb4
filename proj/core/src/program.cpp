#include "qstx/program.hpp"

#include <cmath>
#include <set>
#include <string>

#include "qstx/errors.hpp"

namespace qstx::prog {

namespace {

// Joint (program ⊗ data) state flattened to the two-factor shape [P, d].
PureState joint_state(const PureState& program, const PureState& data) {
  TensorShape shape({static_cast<int>(program.amps.size()),
                     static_cast<int>(data.amps.size())});
  ComplexVector v(shape.dim());
  const long d = data.amps.size();
  for (long p = 0; p < program.amps.size(); ++p)
    for (long q = 0; q < d; ++q) v[p * d + q] = program.amps[p] * data.amps[q];
  return PureState(std::move(shape), std::move(v));
}

double program_data_entropy(const PureState& program, const PureState& data,
                            const ComplexVector& joint_amps) {
  TensorShape shape({static_cast<int>(program.amps.size()),
                     static_cast<int>(data.amps.size())});
  PureState joint(std::move(shape), joint_amps);
  return entanglement_entropy(joint, {0});
}

}  // namespace

ProgramBank::ProgramBank(std::vector<ComplexMatrix> operators,
                         double unitarity_tol)
    : ops(std::move(operators)) {
  if (ops.empty()) throw ValidationError("ProgramBank: operator list is empty");
  const Eigen::Index d = ops.front().rows();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].rows() != d || ops[k].cols() != d)
      throw ValidationError("ProgramBank: mixed operator dimensions at index " +
                            std::to_string(k));
    const double r = unitarity_residual(ops[k]);
    if (r > unitarity_tol)
      throw ValidationError("ProgramBank: operator " + std::to_string(k) +
                            " is not unitary, residual = " + std::to_string(r));
  }
}

ConditionalGate conditional_gate(const ProgramBank& bank) {
  const int p = bank.size();
  const int d = bank.op_dim();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<long>(p) * d,
                                        static_cast<long>(p) * d);
  for (int k = 0; k < p; ++k)
    m.block(static_cast<long>(k) * d, static_cast<long>(k) * d, d, d) =
        bank.ops[k];
  return ConditionalGate{std::move(m), p, d};
}

ComplexMatrix reprogram(const ConditionalGate& gate, const ComplexMatrix& a) {
  if (a.rows() != gate.program_dim || a.cols() != gate.program_dim)
    throw ValidationError("reprogram: control operator dimension " +
                          std::to_string(a.rows()) +
                          " does not match program dimension " +
                          std::to_string(gate.program_dim));
  const double r = unitarity_residual(a);
  if (r > kDefaultTol)
    throw ValidationError("reprogram: control operator is not unitary, residual = " +
                          std::to_string(r));
  return kron(a, ComplexMatrix::Identity(gate.data_dim, gate.data_dim)) *
         gate.matrix;
}

ComplexMatrix extract_data_operator(const ComplexMatrix& gate,
                                    const PureState& program) {
  const long pd = program.amps.size();
  if (gate.rows() != gate.cols() || gate.rows() % pd != 0)
    throw ValidationError("extract_data_operator: gate dimension incompatible with program");
  const long d = gate.rows() / pd;

  // Columns of the candidate operator, as (program x data) response blocks.
  std::vector<ComplexMatrix> response(d);
  ComplexMatrix gram = ComplexMatrix::Zero(pd, pd);
  ComplexVector in(gate.rows());
  for (long j = 0; j < d; ++j) {
    in.setZero();
    for (long p = 0; p < pd; ++p) in[p * d + j] = program.amps[p];
    ComplexVector out = gate * in;
    ComplexMatrix w(pd, d);
    for (long p = 0; p < pd; ++p)
      for (long q = 0; q < d; ++q) w(p, q) = out[p * d + q];
    gram += w * w.adjoint();
    response[j] = std::move(w);
  }

  // Program-side reference: dominant eigenvector of the summed response
  // Gram matrix.  For a programmable gate the outputs share one program
  // state and the Gram matrix is rank one.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
  ComplexVector p_ref = es.eigenvectors().col(pd - 1);

  ComplexMatrix op(d, d);
  for (long j = 0; j < d; ++j)
    op.col(j) = (p_ref.adjoint() * response[j]).transpose();

  // Canonical global phase: largest-magnitude entry real positive,
  // first such entry (column-major, window 1e-12) on ties.
  double best = -1.0;
  Complex pivot(1, 0);
  for (long j = 0; j < d; ++j)
    for (long q = 0; q < d; ++q) {
      const double mag = std::abs(op(q, j));
      if (mag > best + 1e-12) {
        best = mag;
        pivot = op(q, j);
      }
    }
  if (best > 1e-14) op *= std::conj(pivot) / std::abs(pivot);
  return op;
}

Report check_programmability(const ComplexMatrix& gate,
                             const std::vector<PureState>& programs,
                             const std::vector<PureState>& data_samples,
                             double tol) {
  if (programs.empty())
    throw ValidationError("check_programmability: no program states given");
  if (data_samples.size() < 2)
    throw ValidationError("check_programmability: need at least 2 data samples, got " +
                          std::to_string(data_samples.size()));
  const long pd = programs.front().amps.size();
  const long dd = data_samples.front().amps.size();
  for (const auto& p : programs)
    if (p.amps.size() != pd)
      throw ValidationError("check_programmability: mixed program dimensions");
  for (const auto& s : data_samples)
    if (s.amps.size() != dd)
      throw ValidationError("check_programmability: mixed data dimensions");
  if (gate.rows() != gate.cols() || gate.rows() != pd * dd)
    throw ValidationError("check_programmability: gate dimension does not match program ⊗ data");

  std::vector<Check> checks;
  for (std::size_t pi = 0; pi < programs.size(); ++pi) {
    const auto& program = programs[pi];
    const std::string tag = "program" + std::to_string(pi);

    const ComplexMatrix op = extract_data_operator(gate, program);
    checks.push_back(
        {tag + "/extracted-operator-unitarity", unitarity_residual(op), tol});

    for (std::size_t si = 0; si < data_samples.size(); ++si) {
      const auto& sample = data_samples[si];
      const ComplexVector out = gate * joint_state(program, sample).amps;
      const std::string stag = tag + "/sample" + std::to_string(si);

      checks.push_back({stag + "/entanglement-bits",
                        program_data_entropy(program, sample, out), tol});

      // Data-side output against the extracted operator, phase-free.
      TensorShape shape({static_cast<int>(pd), static_cast<int>(dd)});
      PureState joint(shape, out);
      ComplexMatrix rho = partial_trace(joint, 1);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
      const ComplexVector dominant = es.eigenvectors().col(dd - 1);
      ComplexVector predicted = op * sample.amps;
      const double pn = predicted.norm();
      double residual = 1.0;
      if (pn > 1e-14)
        residual = 1.0 - std::abs(dominant.dot(predicted)) / pn;
      checks.push_back({stag + "/operator-consistency", residual, tol});
    }
  }
  return Report::from_checks(std::move(checks),
                             std::to_string(programs.size()) + " programs, " +
                                 std::to_string(data_samples.size()) +
                                 " data samples");
}

Report program_overlap_audit(const std::vector<PureState>& programs,
                             const ProgramBank& bank, double tol) {
  if (programs.size() != bank.ops.size())
    throw ValidationError("program_overlap_audit: program count " +
                          std::to_string(programs.size()) +
                          " does not match bank size " +
                          std::to_string(bank.ops.size()));
  const int p = bank.size();
  const double d = bank.op_dim();
  for (const auto& ps : programs)
    if (ps.amps.size() != p)
      throw ValidationError("program_overlap_audit: program state dimension must equal bank size");

  std::vector<Check> checks;
  int exempt = 0;
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) {
      const double distinctness =
          1.0 - std::abs((bank.ops[a].adjoint() * bank.ops[b]).trace()) / d;
      if (distinctness <= tol) {
        ++exempt;  // same operator up to global phase; no constraint
        continue;
      }
      const double overlap = std::abs(programs[a].amps.dot(programs[b].amps));
      checks.push_back({"overlap(" + std::to_string(a) + "," +
                            std::to_string(b) + ")",
                        overlap, tol});
    }
  return Report::from_checks(std::move(checks),
                             std::to_string(exempt) + " pair(s) exempt (identical operators)");
}

ConditionalGate qubot_gate(lattice::LatticeSize n) {
  const ComplexMatrix u = lattice::shift_operator(n);
  return conditional_gate(ProgramBank({u, u.adjoint()}));
}

ComplexMatrix qubot_hamiltonian(lattice::LatticeSize n) {
  return kron(pauli_z(), lattice::shift_hamiltonian_spectral(n));
}

double default_switch_coupling(lattice::LatticeSize n) {
  return 2.0 / (n.value() - 1);
}

ComplexMatrix switch_hamiltonian(lattice::LatticeSize n, double g) {
  if (!std::isfinite(g))
    throw ValidationError("switch_hamiltonian: coupling must be finite");
  const int N = n.value();
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix idn = ComplexMatrix::Identity(N, N);
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const ComplexMatrix transport =
      kron(id2, kron(id2, lattice::shift_hamiltonian_spectral(n)));
  const ComplexMatrix rail = kron(p1, kron(pauli_x(), idn));
  return transport + g * rail;
}

std::vector<std::pair<int, int>> default_chess_moves() {
  std::vector<std::pair<int, int>> moves;
  for (int k = -1; k <= 1; ++k)
    for (int j = -1; j <= 1; ++j)
      if (k != 0 || j != 0) moves.emplace_back(k, j);
  return moves;
}

ComplexMatrix chessman_hamiltonian(
    lattice::LatticeSize m, lattice::LatticeSize n,
    const std::vector<std::pair<int, int>>& moves) {
  if (moves.empty())
    throw ValidationError("chessman_hamiltonian: move list is empty");
  std::set<std::pair<int, int>> seen(moves.begin(), moves.end());
  if (seen.size() != moves.size())
    throw ValidationError("chessman_hamiltonian: duplicate move pairs");

  const long c = static_cast<long>(moves.size());
  const long mn = static_cast<long>(m.value()) * n.value();
  if (c * mn > kDimensionCap)
    throw CapacityError("chessman_hamiltonian: dimension exceeds cap");

  const ComplexMatrix hm = lattice::shift_hamiltonian_spectral(m);
  const ComplexMatrix hn = lattice::shift_hamiltonian_spectral(n);
  const ComplexMatrix idm = ComplexMatrix::Identity(m.value(), m.value());
  const ComplexMatrix idn = ComplexMatrix::Identity(n.value(), n.value());

  ComplexMatrix h = ComplexMatrix::Zero(c * mn, c * mn);
  for (long i = 0; i < c; ++i) {
    const auto [k, j] = moves[i];
    h.block(i * mn, i * mn, mn, mn) =
        static_cast<double>(k) * kron(idm, hn) +
        static_cast<double>(j) * kron(hm, idn);
  }
  return h;
}

RunOutcome run_conditional(const ComplexMatrix& hamiltonian,
                           const PureState& program, const PureState& data,
                           double t) {
  PureState joint = tensor(program, data);
  if (hamiltonian.rows() != joint.amps.size())
    throw ValidationError("run_conditional: Hamiltonian dimension " +
                          std::to_string(hamiltonian.rows()) +
                          " does not match program ⊗ data dimension " +
                          std::to_string(joint.amps.size()));
  PureState evolved(joint.shape, mat_exp_i(hamiltonian, t) * joint.amps);
  std::vector<int> cut(program.shape.rank());
  for (int i = 0; i < program.shape.rank(); ++i) cut[i] = i;
  const double s = entanglement_entropy(evolved, cut);
  return RunOutcome{std::move(evolved), s};
}

RunOutcome run_conditional(const ConditionalGate& gate,
                           const PureState& program, const PureState& data,
                           int steps) {
  if (steps < 0)
    throw ValidationError("run_conditional: step count must be non-negative");
  PureState joint = tensor(program, data);
  if (gate.matrix.rows() != joint.amps.size())
    throw ValidationError("run_conditional: gate dimension " +
                          std::to_string(gate.matrix.rows()) +
                          " does not match program ⊗ data dimension " +
                          std::to_string(joint.amps.size()));
  ComplexVector v = joint.amps;
  for (int s = 0; s < steps; ++s) v = gate.matrix * v;
  PureState evolved(joint.shape, std::move(v));
  std::vector<int> cut(program.shape.rank());
  for (int i = 0; i < program.shape.rank(); ++i) cut[i] = i;
  const double s = entanglement_entropy(evolved, cut);
  return RunOutcome{std::move(evolved), s};
}

}  // namespace qstx::prog
