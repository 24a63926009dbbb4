#include "qstx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "qstx/errors.hpp"
#include "qstx/program.hpp"
#include "qstx/shift.hpp"
#include "qstx/tensor.hpp"
#include "qstx/transfer.hpp"
#include "qstx/walk.hpp"

namespace qstx::verify {

namespace {

constexpr double kPi = std::numbers::pi;

using lattice::LatticeSize;

double def_tol(const Options& o) {
  return o.default_tol_override.value_or(kDefaultTol);
}

ComplexMatrix random_matrix(int d, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

ComplexMatrix random_hermitian(int d, std::mt19937& rng) {
  ComplexMatrix m = random_matrix(d, rng);
  return 0.5 * (m + m.adjoint().eval());
}

ComplexMatrix random_unitary(int d, std::mt19937& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(d, rng));
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex p = r(i, i);
    if (std::abs(p) > 1e-14) q.col(i) *= p / std::abs(p);
  }
  return q;
}

ComplexVector random_state_vec(long dim, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(dim);
  for (long i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  v /= v.norm();
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------
// tensor-core
// ---------------------------------------------------------------------

Check exp_additivity(const Options& o) {
  std::mt19937 rng(101);
  double worst = 0.0;
  const double pairs[][2] = {{0.3, 0.4}, {-1.2, 2.5}, {std::sqrt(2.0), 7.5}};
  for (int trial = 0; trial < 4; ++trial) {
    const ComplexMatrix h = random_hermitian(6, rng);
    for (const auto& p : pairs) {
      const ComplexMatrix lhs = mat_exp_i(h, p[0]) * mat_exp_i(h, p[1]);
      worst = std::max(worst, max_abs_diff(lhs, mat_exp_i(h, p[0] + p[1])));
    }
  }
  return {"exp-additivity", worst, def_tol(o)};
}

Check dft_unitarity(const Options&) {
  const int n_max = 512;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<double>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [w, workers, n_max] {
      double worst = 0.0;
      for (int n = 1 + static_cast<int>(w); n <= n_max;
           n += static_cast<int>(workers))
        worst = std::max(worst, unitarity_residual(dft_matrix(n)));
      return worst;
    }));
  }
  double worst = 0.0;
  for (auto& f : futures) worst = std::max(worst, f.get());
  return {"dft-unitarity(n<=512)", worst, 1e-11};
}

Check kron_associativity(const Options&) {
  std::mt19937 rng(102);
  const ComplexMatrix a = random_matrix(2, rng);
  const ComplexMatrix b = random_matrix(3, rng);
  const ComplexMatrix c = random_matrix(4, rng);
  const double worst = max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c)));
  return {"kron-associativity", worst, 1e-13};
}

Check entropy_cut_symmetry(const Options& o) {
  std::mt19937 rng(103);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    PureState s(TensorShape({2, 3, 4}), random_state_vec(24, rng));
    worst = std::max(worst, std::abs(entanglement_entropy(s, {0}) -
                                     entanglement_entropy(s, {1, 2})));
    worst = std::max(worst, std::abs(entanglement_entropy(s, {1}) -
                                     entanglement_entropy(s, {0, 2})));
    worst = std::max(worst, std::abs(entanglement_entropy(s, {0, 1}) -
                                     entanglement_entropy(s, {2})));
  }
  return {"entropy-cut-symmetry", worst, def_tol(o)};
}

Check partial_trace_unit_trace(const Options&) {
  std::mt19937 rng(104);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    PureState s(TensorShape({3, 2, 5}), random_state_vec(30, rng));
    for (int f = 0; f < 3; ++f) {
      const ComplexMatrix rho = partial_trace(s, f);
      worst = std::max(worst, std::abs(rho.trace() - Complex(1, 0)));
      worst = std::max(worst, hermiticity_residual(rho));
    }
  }
  return {"partial-trace-unit-trace", worst, 1e-12};
}

// ---------------------------------------------------------------------
// shift-lattice
// ---------------------------------------------------------------------

Check root_group_law(const Options& o) {
  std::mt19937 rng(201);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int n = 2; n <= 64; ++n) {
    const LatticeSize ls(n);
    for (int trial = 0; trial < 3; ++trial) {
      const double a = u(rng), b = u(rng);
      worst = std::max(worst,
                       max_abs_diff(lattice::shift_root_spectral(ls, a) *
                                        lattice::shift_root_spectral(ls, b),
                                    lattice::shift_root_spectral(ls, a + b)));
      worst = std::max(worst,
                       max_abs_diff(lattice::shift_root_closed(ls, a) *
                                        lattice::shift_root_closed(ls, b),
                                    lattice::shift_root_closed(ls, a + b)));
    }
  }
  return {"root-group-law", worst, def_tol(o)};
}

Check root_periodicity(const Options& o) {
  double worst = 0.0;
  for (int n : {2, 5, 16, 64}) {
    const LatticeSize ls(n);
    for (double a : {0.37, -1.25, 2.0}) {
      worst = std::max(worst, max_abs_diff(lattice::shift_root_spectral(ls, a + n),
                                           lattice::shift_root_spectral(ls, a)));
      worst = std::max(worst, max_abs_diff(lattice::shift_root_closed(ls, a + n),
                                           lattice::shift_root_closed(ls, a)));
    }
  }
  return {"root-periodicity", worst, def_tol(o)};
}

// Closed-form fractional shift with the optional test fault applied at the
// entries produced by the kernel's singular branch.
ComplexMatrix closed_root_with_fault(LatticeSize n, double alpha, double fault) {
  ComplexMatrix m = lattice::shift_root_closed(n, alpha);
  if (fault != 0.0) {
    const int N = n.value();
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        const double x = static_cast<double>(k) - j + alpha;
        const double xr = x - N * std::round(x / N);
        if (std::abs(xr) < 1e-9) m(j, k) += fault;
      }
  }
  return m;
}

Check dual_construction_roots(const Options& o) {
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int n = 2; n <= 128; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix f = dft_matrix(n);
    std::vector<double> alphas = {0.0, 1.0, 2.0};  // singular-branch coverage
    while (alphas.size() < 20) alphas.push_back(u(rng));
    for (double a : alphas) {
      const ComplexMatrix spectral =
          f.adjoint() * (lattice::clock_operator(ls, a) * f);
      worst = std::max(
          worst, max_abs_diff(spectral,
                              closed_root_with_fault(ls, a, o.closed_kernel_fault)));
    }
  }
  return {"dual-construction-roots", worst, 1e-10};
}

Check dual_construction_hamiltonian(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 128; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix closed = lattice::shift_hamiltonian_closed(ls);
    worst = std::max(worst,
                     max_abs_diff(lattice::shift_hamiltonian_spectral(ls), closed));
    for (int j = 0; j < n; ++j)
      worst = std::max(worst,
                       std::abs(closed(j, j) - Complex(ls.spectral_midpoint(), 0)));
  }
  return {"dual-construction-hamiltonian", worst, 1e-10};
}

Check generator_identity(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 64; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix h = lattice::shift_hamiltonian_spectral(ls);
    for (double t : {0.25, 1.0, std::sqrt(2.0), 7.5})
      worst = std::max(worst, max_abs_diff(mat_exp_i(h, t),
                                           lattice::shift_root_spectral(ls, t)));
  }
  return {"generator-identity", worst, 1e-9};
}

Check root_property(const Options&) {
  double worst = 0.0;
  for (int n : {4, 16, 64}) {
    const LatticeSize ls(n);
    const ComplexMatrix u = lattice::shift_operator(ls);
    for (int m : {2, 3, 5, 8}) {
      const ComplexMatrix r = lattice::shift_root_spectral(ls, 1.0 / m);
      ComplexMatrix acc = ComplexMatrix::Identity(n, n);
      for (int i = 0; i < m; ++i) acc = r * acc;
      worst = std::max(worst, max_abs_diff(acc, u));
    }
  }
  return {"root-property", worst, 1e-9};
}

Check localization_dichotomy(const Options&) {
  int violations = 0;
  for (int n : {8, 32}) {
    const LatticeSize ls(n);
    for (double a : {-2.0, 0.0, 1.0, 5.0}) {
      const ComplexVector col = lattice::shift_root_spectral(ls, a).col(0);
      int sharp = 0, visible = 0;
      for (int i = 0; i < n; ++i) {
        if (std::abs(col[i]) > 1.0 - 1e-8) ++sharp;
        if (std::abs(col[i]) > 1e-8) ++visible;
      }
      if (sharp != 1 || visible != 1) ++violations;
    }
    for (double a : {-1.5, 0.5, 3.5}) {
      const ComplexVector col = lattice::shift_root_spectral(ls, a).col(0);
      int above = 0;
      for (int i = 0; i < n; ++i)
        if (std::abs(col[i]) > 1.0 / n) ++above;
      if (above < (n + 1) / 2) ++violations;
    }
  }
  return {"localization-dichotomy", static_cast<double>(violations), 0.0};
}

Check attenuation_law(const Options&) {
  const LatticeSize ls(1024);
  const ComplexMatrix h = lattice::shift_hamiltonian_closed(ls);
  double worst = 0.0;
  for (int j = 0; j < 1024; ++j)
    for (int d = 1; d <= 8; ++d) {
      for (int k : {j - d, j + d}) {
        if (k < 0 || k >= 1024) continue;
        const double v = std::abs(h(j, k)) * d;
        worst = std::max(worst, std::max(0.95 - v, v - 1.05));
      }
    }
  return {"attenuation-law(n=1024)", std::max(0.0, worst), 0.0};
}

Check weyl_integer(const Options&) {
  const LatticeSize ls(5);
  double worst = 0.0;
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 1}, {2, 3}, {-1, 2}})
    worst = std::max(worst, std::abs(lattice::weyl_commutation_defect(ls, a, b)));
  return {"weyl-integer-defect", worst, 1e-12};
}

Check weyl_fractional(const Options&) {
  const double d = std::abs(lattice::weyl_commutation_defect(LatticeSize(5), 0.5, 0.5));
  return {"weyl-fractional-separation(defect=" + fmt(d) + ")",
          std::max(0.0, 1e-3 - d), 0.0};
}

// ---------------------------------------------------------------------
// programmable-dynamics
// ---------------------------------------------------------------------

Check gate_block_structure(const Options&) {
  std::mt19937 rng(301);
  double worst = 0.0;
  for (auto [count, dim] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {4, 4}}) {
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < count; ++k) ops.push_back(random_unitary(dim, rng));
    const ComplexMatrix m = prog::conditional_gate(prog::ProgramBank(ops)).matrix;
    for (int bi = 0; bi < count; ++bi)
      for (int bj = 0; bj < count; ++bj) {
        if (bi == bj) continue;
        worst = std::max(worst, m.block(bi * dim, bj * dim, dim, dim)
                                    .cwiseAbs()
                                    .maxCoeff());
      }
  }
  return {"gate-block-structure", worst, 1e-12};
}

Check basis_program_compliance(const Options& o) {
  std::mt19937 rng(302);
  double worst = 0.0;

  const auto audit_bank = [&](const prog::ProgramBank& bank) {
    const prog::ConditionalGate gate = prog::conditional_gate(bank);
    std::vector<PureState> programs;
    for (int k = 0; k < bank.size(); ++k)
      programs.push_back(PureState::basis(TensorShape({bank.size()}), {k}));
    std::vector<PureState> samples;
    for (int s = 0; s < 50; ++s)
      samples.emplace_back(TensorShape({bank.op_dim()}),
                           random_state_vec(bank.op_dim(), rng));
    const Report r =
        prog::check_programmability(gate.matrix, programs, samples, def_tol(o));
    worst = std::max(worst, r.max_residual());
    for (int k = 0; k < bank.size(); ++k)
      worst = std::max(worst, phase_aligned_diff(prog::extract_data_operator(
                                                     gate.matrix, programs[k]),
                                                 bank.ops[k]));
  };

  const ComplexMatrix u = lattice::shift_operator(LatticeSize(6));
  audit_bank(prog::ProgramBank({u, u.adjoint()}));
  audit_bank(prog::ProgramBank({random_unitary(2, rng), random_unitary(2, rng)}));
  return {"basis-program-compliance", worst, def_tol(o)};
}

Check orthogonality_audit_basis(const Options&) {
  const LatticeSize ls(5);
  const ComplexMatrix u = lattice::shift_operator(ls);
  const prog::ProgramBank bank({u, u.adjoint()});
  std::vector<PureState> programs = {PureState::basis(TensorShape({2}), {0}),
                                     PureState::basis(TensorShape({2}), {1})};
  const Report overlap = prog::program_overlap_audit(programs, bank, 1e-8);

  std::mt19937 rng(303);
  std::vector<PureState> samples = {
      PureState::basis(TensorShape({5}), {0}),
      PureState::basis(TensorShape({5}), {1}),
      PureState(TensorShape({5}), random_state_vec(5, rng))};
  const Report programmable = prog::check_programmability(
      prog::conditional_gate(bank).matrix, programs, samples, 1e-8);

  const double worst =
      std::max(overlap.passed ? overlap.max_residual() : 1.0,
               programmable.passed ? programmable.max_residual() : 1.0);
  return {"orthogonal-basis-programs-pass", worst, 1e-8};
}

Check orthogonality_audit_detects(const Options&) {
  const LatticeSize ls(5);
  const ComplexMatrix u = lattice::shift_operator(ls);
  const prog::ProgramBank bank({u, u.adjoint()});
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  std::vector<PureState> programs = {PureState::basis(TensorShape({2}), {0}),
                                     PureState(TensorShape({2}), plus)};
  const Report overlap = prog::program_overlap_audit(programs, bank, 1e-8);

  std::vector<PureState> samples = {PureState::basis(TensorShape({5}), {0}),
                                    PureState::basis(TensorShape({5}), {2})};
  const Report programmable = prog::check_programmability(
      prog::conditional_gate(bank).matrix, programs, samples, 1e-8);

  // Both audits must detect the non-orthogonal program pair.
  const double violations =
      (overlap.passed ? 1.0 : 0.0) + (programmable.passed ? 1.0 : 0.0);
  return {"nonorthogonal-programs-detected", violations, 0.0};
}

Check superposition_entropy(const Options&) {
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  for (int n : {3, 8}) {
    const auto out = prog::run_conditional(
        prog::qubot_gate(LatticeSize(n)), PureState(TensorShape({2}), plus),
        PureState::basis(TensorShape({n}), {0}), 1);
    worst = std::max(worst, std::abs(out.entropy_bits - 1.0));
  }
  return {"superposition-program-entropy-1bit", worst, 1e-6};
}

Check two_site_superposition_entropy(const Options&) {
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto out = prog::run_conditional(
      prog::qubot_gate(LatticeSize(2)), PureState(TensorShape({2}), plus),
      PureState::basis(TensorShape({2}), {0}), 1);
  return {"two-site-superposition-entropy-0", out.entropy_bits, 1e-10};
}

Check switch_commutation(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 32; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix idn = ComplexMatrix::Identity(n, n);
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    const ComplexMatrix a =
        kron(id2, kron(id2, lattice::shift_hamiltonian_spectral(ls)));
    const ComplexMatrix b = kron(p1, kron(pauli_x(), idn));
    worst = std::max(worst, (a * b - b * a).cwiseAbs().maxCoeff());
  }
  return {"switch-commutation", worst, 1e-12};
}

Check switch_rail_leak(const Options&) {
  const LatticeSize ls(5);
  const ComplexMatrix h =
      prog::switch_hamiltonian(ls, prog::default_switch_coupling(ls));
  const PureState start = PureState::basis(TensorShape({2, 2, 5}), {0, 0, 2});
  double worst = 0.0;
  for (double t : {0.5, 1.0, 3.0}) {
    const PureState evolved(start.shape, mat_exp_i(h, t) * start.amps);
    worst = std::max(worst, factor_distribution(evolved, 1)[1]);
  }
  return {"switch-rail-leak(control0)", worst, 1e-12};
}

Check switch_rail_swap(const Options&) {
  const LatticeSize ls(5);
  const double g = prog::default_switch_coupling(ls);
  const ComplexMatrix h = prog::switch_hamiltonian(ls, g);
  const PureState start = PureState::basis(TensorShape({2, 2, 5}), {1, 0, 2});
  const double t = (kPi / 2.0) / g;
  const PureState evolved(start.shape, mat_exp_i(h, t) * start.amps);
  const auto rails = factor_distribution(evolved, 1);
  const double worst = std::max(rails[0], std::abs(1.0 - rails[1]));
  return {"switch-rail-swap(g*t=pi/2)", worst, 1e-10};
}

Check chessman_single_move(const Options&) {
  double worst = 0.0;
  const LatticeSize m(3), n(4);
  for (auto [k, j] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {0, -1}}) {
    const ComplexMatrix h = prog::chessman_hamiltonian(m, n, {{k, j}});
    const double t = 1.0;
    const PureState start = PureState::basis(TensorShape({1, 3, 4}), {0, 1, 2});
    const ComplexVector evolved = mat_exp_i(h, t) * start.amps;
    const ComplexMatrix oracle =
        kron(lattice::shift_root_spectral(m, j * t),
             lattice::shift_root_spectral(n, k * t));
    const ComplexVector expected =
        oracle * PureState::basis(TensorShape({3, 4}), {1, 2}).amps;
    worst = std::max(worst, (evolved - expected).cwiseAbs().maxCoeff());
  }
  return {"chessman-single-move-consistency", worst, 1e-9};
}

// ---------------------------------------------------------------------
// perfect-transfer
// ---------------------------------------------------------------------

Check isospectrality(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 64; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix lhs =
        (2.0 * kPi / n) * pst::spin_operators(ls).jx +
        ls.spectral_midpoint() * ComplexMatrix::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(lhs, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(
        lattice::shift_hamiltonian_spectral(ls), Eigen::EigenvaluesOnly);
    worst = std::max(worst,
                     (ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff());
  }
  return {"lattice-spin-isospectrality", worst, 1e-9};
}

Check conjugation_exactness(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 64; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix ox = pst::basis_change_ox(ls);
    const ComplexMatrix rescaled =
        (n / (2.0 * kPi)) *
        (lattice::shift_hamiltonian_spectral(ls) -
         ls.spectral_midpoint() * ComplexMatrix::Identity(n, n));
    worst = std::max(worst, max_abs_diff(ox * rescaled * ox.adjoint(),
                                         pst::spin_operators(ls).jx));
    worst = std::max(worst, unitarity_residual(ox));
  }
  return {"conjugation-exactness", worst, 1e-9};
}

Check endpoint_transfer(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 32; ++n)
    for (double omega : {0.5, 1.0, 2.0}) {
      const double f = pst::transfer_fidelity(
          pst::pst_hamiltonian(LatticeSize(n), omega), kPi / omega, 0, n - 1);
      worst = std::max(worst, std::abs(1.0 - f));
    }
  return {"endpoint-transfer", worst, 1e-9};
}

Check mirror_property(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 32; ++n) {
    const ComplexMatrix m = mat_exp_i(pst::spin_operators(LatticeSize(n)).jx, kPi);
    for (int s = 0; s < n; ++s)
      for (int r = 0; r < n; ++r) {
        const double mag = std::abs(m(r, s));
        worst = std::max(worst,
                         r == n - 1 - s ? std::abs(1.0 - mag) : mag);
      }
  }
  return {"mirror-property", worst, 1e-9};
}

Check transfer_periodicity(const Options&) {
  double worst = 0.0;
  for (int n : {2, 3, 8, 17, 32}) {
    const ComplexMatrix h = pst::pst_hamiltonian(LatticeSize(n), 1.0);
    for (int s : {0, n / 2, n - 1})
      worst = std::max(worst,
                       std::abs(1.0 - pst::transfer_fidelity(h, 2.0 * kPi, s, s)));
  }
  return {"transfer-periodicity", worst, 1e-9};
}

Check pst_switch_commutation(const Options&) {
  double worst = 0.0;
  for (int n = 2; n <= 32; ++n) {
    const LatticeSize ls(n);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix idn = ComplexMatrix::Identity(n, n);
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    const ComplexMatrix a = kron(id2, kron(id2, pst::spin_operators(ls).jx));
    const ComplexMatrix b = kron(p1, kron(pauli_x(), idn));
    worst = std::max(worst, (a * b - b * a).cwiseAbs().maxCoeff());
  }
  return {"pst-switch-commutation", worst, 1e-12};
}

Check pst_switch_rail_leak(const Options&) {
  const LatticeSize ls(6);
  const ComplexMatrix h =
      pst::pst_switch_hamiltonian(ls, prog::default_switch_coupling(ls));
  const PureState start = PureState::basis(TensorShape({2, 2, 6}), {0, 0, 0});
  double worst = 0.0;
  for (double t : {0.7, kPi, 2.5}) {
    const PureState evolved(start.shape, mat_exp_i(h, t) * start.amps);
    worst = std::max(worst, factor_distribution(evolved, 1)[1]);
  }
  return {"pst-switch-rail-leak(control0)", worst, 1e-12};
}

// ---------------------------------------------------------------------
// coined-walk
// ---------------------------------------------------------------------

Check probability_conservation(const Options&) {
  const LatticeSize ls(64);
  const walk::CoinSchedule schedule({walk::make_coin(walk::CoinKind::hadamard_y)});
  const auto traj = walk::walk_evolve(ls, schedule, 1000,
                                      walk::initial_walker(ls, 0, 0));
  double worst = 0.0;
  for (const auto& ws : traj) {
    double total = 0.0;
    for (double p : walk::position_distribution(ws)) total += p;
    worst = std::max(worst, std::abs(1.0 - total));
  }
  return {"probability-conservation(1000 steps)", worst, 1e-12};
}

Check ordering_consistency(const Options&) {
  const LatticeSize ls(16);
  const walk::Coin coin = walk::make_coin(walk::CoinKind::hadamard_y);
  const ComplexMatrix step = walk::walk_step(ls, coin);
  const auto traj = walk::walk_evolve(ls, walk::CoinSchedule({coin}), 25,
                                      walk::initial_walker(ls, 0, 3));
  ComplexMatrix power = ComplexMatrix::Identity(32, 32);
  double worst = 0.0;
  for (long t = 1; t <= 25; ++t) {
    power = step * power;
    const ComplexVector oracle = power * traj.front().state.amps;
    worst = std::max(worst,
                     (oracle - traj[t].state.amps).cwiseAbs().maxCoeff());
  }
  return {"ordering-consistency(n=16,T=25)", worst, 1e-10};
}

Check one_step_distribution(const Options&) {
  const LatticeSize ls(8);
  const auto traj = walk::walk_evolve(
      ls, walk::CoinSchedule({walk::make_coin(walk::CoinKind::hadamard_y)}), 1,
      walk::initial_walker(ls, 0, 0));
  const auto dist = walk::position_distribution(traj.back());
  double worst = 0.0;
  for (int x = 0; x < 8; ++x) {
    const double expected = (x == 1 || x == 7) ? 0.5 : 0.0;
    worst = std::max(worst, std::abs(dist[x] - expected));
  }
  return {"one-step-hadamard-distribution", worst, 1e-12};
}

Check deterministic_motion(const Options&) {
  const LatticeSize ls(7);
  const auto traj = walk::walk_evolve(
      ls, walk::CoinSchedule({walk::make_coin(walk::CoinKind::rotation, 0.0)}),
      10, walk::initial_walker(ls, 0, 0));
  double worst = 0.0;
  for (long t = 0; t < static_cast<long>(traj.size()); ++t) {
    const auto dist = walk::position_distribution(traj[t]);
    for (int x = 0; x < 7; ++x) {
      const double expected = (x == t % 7) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dist[x] - expected));
    }
  }
  return {"deterministic-motion(rotation0)", worst, 1e-12};
}

Check control_block_reduction(const Options&) {
  const LatticeSize ls(5);
  const prog::ProgramBank bank({walk::make_coin(walk::CoinKind::hadamard_y).matrix,
                                walk::make_coin(walk::CoinKind::hadamard_x).matrix,
                                walk::make_coin(walk::CoinKind::rotation, 0.3).matrix});
  const ComplexMatrix s = walk::controlled_walk_step(bank, ls);
  const ComplexMatrix b = prog::qubot_gate(ls).matrix;
  const ComplexMatrix idn = ComplexMatrix::Identity(5, 5);
  double worst = 0.0;
  for (int k = 0; k < bank.size(); ++k) {
    // Restricted to control |k> the cascade is the single-coin walk step
    // in the cascade's own ordering: coin after shift.
    const ComplexMatrix block = s.block(k * 10, k * 10, 10, 10);
    worst = std::max(worst, max_abs_diff(block, kron(bank.ops[k], idn) * b));
    // Off-blocks vanish identically.
    for (int l = 0; l < bank.size(); ++l)
      if (l != k)
        worst = std::max(worst,
                         s.block(k * 10, l * 10, 10, 10).cwiseAbs().maxCoeff());
  }
  return {"control-block-reduction", worst, 1e-12};
}

Check theta_continuity(const Options&) {
  const LatticeSize ls(32);
  std::vector<double> prev;
  double worst = 0.0;
  for (double theta = 0.0; theta <= kPi / 2.0 + 1e-12; theta += 0.01) {
    const auto traj = walk::walk_evolve(
        ls, walk::CoinSchedule({walk::make_coin(walk::CoinKind::rotation, theta)}),
        16, walk::initial_walker(ls, 0, 0));
    const auto dist = walk::position_distribution(traj.back());
    if (!prev.empty()) {
      double tv = 0.0;
      for (int x = 0; x < 32; ++x) tv += std::abs(dist[x] - prev[x]);
      worst = std::max(worst, 0.5 * tv);
    }
    prev = dist;
  }
  // Bound calibrated against the measured transition rate: the family is
  // continuous but steepest near the flip point θ = π/2, where the TV
  // change per Δθ = 0.01 peaks at ~0.067.
  return {"theta-continuity(maxTV)", worst, 0.1};
}

Check spread_ratio(const Options&) {
  const LatticeSize ls(128);
  const auto traj = walk::walk_evolve(
      ls, walk::CoinSchedule({walk::make_coin(walk::CoinKind::hadamard_y)}), 40,
      walk::initial_walker(ls, 0, 0));
  const double quantum =
      walk::spread_sigma(walk::position_distribution(traj.back()), 0);
  const double classical =
      walk::spread_sigma(walk::classical_walk_reference(ls, 40, 0.5), 0);
  const double ratio = quantum / classical;
  return {"spread-ratio(ratio=" + fmt(ratio) + ")", std::max(0.0, 2.0 - ratio),
          0.0};
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  const auto add = [&r](std::string module, int criterion,
                        Check (*fn)(const Options&)) {
    r.push_back(Entry{std::move(module), "", criterion,
                      [fn](const Options& o) { return fn(o); }});
  };

  add("tensor-core", 0, exp_additivity);
  add("tensor-core", 0, dft_unitarity);
  add("tensor-core", 0, kron_associativity);
  add("tensor-core", 0, entropy_cut_symmetry);
  add("tensor-core", 0, partial_trace_unit_trace);

  add("shift-lattice", 0, root_group_law);
  add("shift-lattice", 0, root_periodicity);
  add("shift-lattice", 2, dual_construction_roots);
  add("shift-lattice", 2, dual_construction_hamiltonian);
  add("shift-lattice", 1, generator_identity);
  add("shift-lattice", 3, root_property);
  add("shift-lattice", 4, localization_dichotomy);
  add("shift-lattice", 5, attenuation_law);
  add("shift-lattice", 0, weyl_integer);
  add("shift-lattice", 0, weyl_fractional);

  add("programmable-dynamics", 0, gate_block_structure);
  add("programmable-dynamics", 0, basis_program_compliance);
  add("programmable-dynamics", 6, orthogonality_audit_basis);
  add("programmable-dynamics", 6, orthogonality_audit_detects);
  add("programmable-dynamics", 6, superposition_entropy);
  add("programmable-dynamics", 6, two_site_superposition_entropy);
  add("programmable-dynamics", 9, switch_commutation);
  add("programmable-dynamics", 9, switch_rail_leak);
  add("programmable-dynamics", 9, switch_rail_swap);
  add("programmable-dynamics", 0, chessman_single_move);

  add("perfect-transfer", 7, isospectrality);
  add("perfect-transfer", 7, conjugation_exactness);
  add("perfect-transfer", 8, endpoint_transfer);
  add("perfect-transfer", 8, mirror_property);
  add("perfect-transfer", 0, transfer_periodicity);
  add("perfect-transfer", 0, pst_switch_commutation);
  add("perfect-transfer", 0, pst_switch_rail_leak);

  add("coined-walk", 0, probability_conservation);
  add("coined-walk", 10, ordering_consistency);
  add("coined-walk", 10, one_step_distribution);
  add("coined-walk", 10, deterministic_motion);
  add("coined-walk", 10, control_block_reduction);
  add("coined-walk", 0, theta_continuity);
  add("coined-walk", 11, spread_ratio);
  return r;
}

}  // namespace

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = build_registry();
  return entries;
}

std::vector<std::string> module_names() {
  std::vector<std::string> names;
  for (const auto& e : registry())
    if (std::find(names.begin(), names.end(), e.module) == names.end())
      names.push_back(e.module);
  return names;
}

int run_suite(const std::string& selection, const Options& options,
              std::ostream& out) {
  const auto names = module_names();
  if (selection != "all" &&
      std::find(names.begin(), names.end(), selection) == names.end()) {
    std::string known = "all";
    for (const auto& n : names) known += ", " + n;
    throw ValidationError("verify: unknown module '" + selection +
                          "' (known: " + known + ")");
  }

  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0, total = 0;
  for (const auto& e : registry()) {
    if (selection != "all" && e.module != selection) continue;
    const Check c = e.run(options);
    ++total;
    const bool ok = c.passed();
    if (!ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::scientific);
    line.precision(3);
    line << (ok ? "[PASS] " : "[FAIL] ") << e.module << "/" << c.name
         << "  residual=" << c.residual << "  tol=" << c.tolerance;
    out << line.str() << "\n";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << (failures == 0 ? "OK" : "FAILED") << ": " << (total - failures) << "/"
      << total << " invariants passed in " << fmt(elapsed) << "s\n";
  return failures == 0 ? 0 : 1;
}

std::vector<Check> run_criterion(int criterion, const Options& options) {
  std::vector<Check> checks;
  for (const auto& e : registry())
    if (e.criterion == criterion) checks.push_back(e.run(options));
  return checks;
}

}  // namespace qstx::verify
