#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qstx/errors.hpp"
#include "qstx/program.hpp"
#include "qstx/transfer.hpp"

using namespace qstx;
using lattice::LatticeSize;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spin_operators small representations") {
  const pst::SpinRep half = pst::spin_operators(LatticeSize(2));
  CHECK(half.j == doctest::Approx(0.5));
  CHECK(max_abs_diff(half.jx, 0.5 * pauli_x()) < 1e-15);
  CHECK(max_abs_diff(half.jz, 0.5 * pauli_z()) < 1e-15);
  CHECK(max_abs_diff(half.jy, 0.5 * pauli_y()) < 1e-15);

  const pst::SpinRep one = pst::spin_operators(LatticeSize(3));
  ComplexMatrix jx3(3, 3);
  const double s = 1.0 / std::sqrt(2.0);
  jx3 << 0, s, 0, s, 0, s, 0, s, 0;
  CHECK(max_abs_diff(one.jx, jx3) < 1e-15);

  const pst::SpinRep two = pst::spin_operators(LatticeSize(5));
  for (int i = 0; i < 5; ++i)
    CHECK(two.jz(i, i).real() == doctest::Approx(2.0 - i));
}

TEST_CASE("spin_operators satisfy the angular momentum algebra") {
  for (int n : {2, 3, 6, 11}) {
    const pst::SpinRep s = pst::spin_operators(LatticeSize(n));
    CHECK(max_abs_diff(s.jx * s.jy - s.jy * s.jx, Complex(0, 1) * s.jz) <
          1e-11);
    CHECK(max_abs_diff(s.jy * s.jz - s.jz * s.jy, Complex(0, 1) * s.jx) <
          1e-11);
    CHECK(max_abs_diff(s.jz * s.jx - s.jx * s.jz, Complex(0, 1) * s.jy) <
          1e-11);
    CHECK(hermiticity_residual(s.jx) == 0.0);
  }
}

TEST_CASE("pst_hamiltonian bond profile") {
  CHECK(max_abs_diff(pst::pst_hamiltonian(LatticeSize(2), 1.0),
                     0.5 * pauli_x()) < 1e-15);

  const ComplexMatrix h = pst::pst_hamiltonian(LatticeSize(4), 2.0);
  CHECK(h(0, 1).real() == doctest::Approx(std::sqrt(3.0)));
  CHECK(h(1, 2).real() == doctest::Approx(2.0));
  CHECK(h(2, 3).real() == doctest::Approx(std::sqrt(3.0)));
  // strictly tridiagonal
  CHECK(std::abs(h(0, 2)) == 0.0);
  CHECK(std::abs(h(0, 3)) == 0.0);
  CHECK(std::abs(h(1, 3)) == 0.0);

  CHECK_THROWS_AS((void)pst::pst_hamiltonian(LatticeSize(4), 0.0),
                  ValidationError);
}

TEST_CASE("coupling_profile values and symmetry") {
  const auto two = pst::coupling_profile(LatticeSize(2), 1.0);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == doctest::Approx(0.5));

  const auto five = pst::coupling_profile(LatticeSize(5), 1.0);
  REQUIRE(five.size() == 4);
  CHECK(five[0] == doctest::Approx(1.0));
  CHECK(five[1] == doctest::Approx(std::sqrt(6.0) / 2));
  CHECK(five[2] == doctest::Approx(std::sqrt(6.0) / 2));
  CHECK(five[3] == doctest::Approx(1.0));

  // k(n-k) symmetry is exact in floating point
  const auto sym = pst::coupling_profile(LatticeSize(17), 0.7);
  for (std::size_t k = 0; k < sym.size(); ++k)
    CHECK(sym[k] == sym[sym.size() - 1 - k]);
}

TEST_CASE("basis_change_ox conjugates the lattice generator into jx") {
  for (int n : {2, 3, 8, 16}) {
    const LatticeSize ls(n);
    const ComplexMatrix ox = pst::basis_change_ox(ls);
    CHECK(unitarity_residual(ox) < 1e-11);
    const ComplexMatrix rescaled =
        (n / (2.0 * kPi)) *
        (lattice::shift_hamiltonian_spectral(ls) -
         ls.spectral_midpoint() * ComplexMatrix::Identity(n, n));
    const ComplexMatrix conj = ox * rescaled * ox.adjoint();
    CHECK(max_abs_diff(conj, pst::spin_operators(ls).jx) < 1e-10);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(conj,
                                                    Eigen::EigenvaluesOnly);
    const double j = 0.5 * (n - 1);
    for (int k = 0; k < n; ++k)
      CHECK(std::abs(es.eigenvalues()[k] - (k - j)) < 1e-10);
  }
}

TEST_CASE("transfer_fidelity endpoint transfer and off-resonance") {
  CHECK(pst::transfer_fidelity(pst::pst_hamiltonian(LatticeSize(5), 1.0), 0.0,
                               0, 4) == doctest::Approx(0.0));

  for (int n : {2, 7, 16, 32})
    for (double omega : {0.5, 1.0, 2.0})
      CHECK(pst::transfer_fidelity(pst::pst_hamiltonian(LatticeSize(n), omega),
                                   kPi / omega, 0, n - 1) ==
            doctest::Approx(1.0).epsilon(1e-9));

  CHECK(pst::transfer_fidelity(pst::pst_hamiltonian(LatticeSize(5), 1.0),
                               kPi / 2, 0, 4) < 1.0 - 1e-6);

  CHECK_THROWS_AS((void)pst::transfer_fidelity(
                      pst::pst_hamiltonian(LatticeSize(5), 1.0), 1.0, 0, 5),
                  ValidationError);
}

TEST_CASE("mirror property and full-period revival") {
  for (int n : {2, 5, 12}) {
    const ComplexMatrix m =
        mat_exp_i(pst::spin_operators(LatticeSize(n)).jx, kPi);
    for (int s = 0; s < n; ++s)
      for (int r = 0; r < n; ++r) {
        if (r == n - 1 - s)
          CHECK(std::abs(m(r, s)) == doctest::Approx(1.0).epsilon(1e-9));
        else
          CHECK(std::abs(m(r, s)) < 1e-9);
      }
  }
  const ComplexMatrix h = pst::pst_hamiltonian(LatticeSize(9), 1.0);
  for (int s : {0, 4, 8})
    CHECK(pst::transfer_fidelity(h, 2 * kPi, s, s) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("conditional_pst_hamiltonian evolves both control branches") {
  const LatticeSize n(6);
  const ComplexMatrix h = pst::conditional_pst_hamiltonian(n);
  CHECK(hermiticity_residual(h) < 1e-14);

  const ComplexMatrix u = mat_exp_i(h, kPi);
  // both control branches transfer endpoint to endpoint at t = pi
  for (int c : {0, 1}) {
    const PureState in = PureState::basis(TensorShape({2, 6}), {c, 0});
    const ComplexVector out = u * in.amps;
    const PureState target = PureState::basis(TensorShape({2, 6}), {c, 5});
    CHECK(std::abs(target.amps.dot(out)) == doctest::Approx(1.0).epsilon(1e-9));
  }

  // superposed control at t = pi/2 entangles control and chain
  ComplexVector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const auto run = prog::run_conditional(
      h, PureState(TensorShape({2}), plus),
      PureState::basis(TensorShape({6}), {0}), kPi / 2);
  CHECK(run.entropy_bits > 0.1);
}

TEST_CASE("pst_switch_hamiltonian rail control") {
  const LatticeSize n(6);
  const double g = 0.4;
  const ComplexMatrix h = pst::pst_switch_hamiltonian(n, g);
  CHECK(hermiticity_residual(h) < 1e-14);

  const PureState c0 = PureState::basis(TensorShape({2, 2, 6}), {0, 0, 0});
  for (double t : {0.5, 2.0}) {
    const PureState evolved(c0.shape, mat_exp_i(h, t) * c0.amps);
    CHECK(factor_distribution(evolved, 1)[1] < 1e-12);
  }

  const PureState c1 = PureState::basis(TensorShape({2, 2, 6}), {1, 0, 0});
  const PureState swapped(c1.shape, mat_exp_i(h, (kPi / 2) / g) * c1.amps);
  CHECK(factor_distribution(swapped, 1)[1] ==
        doctest::Approx(1.0).epsilon(1e-10));

  const ComplexMatrix plain =
      kron(ComplexMatrix::Identity(4, 4),
           mat_exp_i(pst::spin_operators(n).jx, 1.1));
  CHECK(max_abs_diff(mat_exp_i(pst::pst_switch_hamiltonian(n, 0.0), 1.1),
                     plain) < 1e-12);
}

TEST_CASE("lattice and spin pictures are isospectral") {
  for (int n : {2, 9, 33}) {
    const LatticeSize ls(n);
    const ComplexMatrix lhs =
        (2.0 * kPi / n) * pst::spin_operators(ls).jx +
        ls.spectral_midpoint() * ComplexMatrix::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(lhs, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(
        lattice::shift_hamiltonian_spectral(ls), Eigen::EigenvaluesOnly);
    CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-9);
  }
}
