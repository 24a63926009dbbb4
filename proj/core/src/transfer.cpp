#include "qstx/transfer.hpp"

#include <cmath>
#include <string>

#include "qstx/errors.hpp"

namespace qstx::pst {

SpinRep spin_operators(lattice::LatticeSize n) {
  const int N = n.value();
  const double j = 0.5 * (N - 1);

  ComplexMatrix jz = ComplexMatrix::Zero(N, N);
  for (int i = 0; i < N; ++i) jz(i, i) = j - i;

  // Ladder matrix element <m+1|J+|m> = √((j-m)(j+m+1)); with m = j - i this
  // is √(i(n-i)) on the (i-1, i) entry.
  ComplexMatrix jp = ComplexMatrix::Zero(N, N);
  for (int i = 1; i < N; ++i)
    jp(i - 1, i) = std::sqrt(static_cast<double>(i) * (N - i));

  ComplexMatrix jx = 0.5 * (jp + jp.adjoint());
  ComplexMatrix jy = Complex(0, -0.5) * (jp - jp.adjoint().eval());
  return SpinRep{n, j, std::move(jx), std::move(jy), std::move(jz)};
}

ComplexMatrix pst_hamiltonian(lattice::LatticeSize n, double omega) {
  if (omega == 0.0)
    throw ValidationError("pst_hamiltonian: coupling strength must be non-zero");
  if (!std::isfinite(omega))
    throw ValidationError("pst_hamiltonian: coupling strength must be finite");
  return omega * spin_operators(n).jx;
}

ComplexMatrix basis_change_ox(lattice::LatticeSize n) {
  const int N = n.value();
  const SpinRep s = spin_operators(n);

  // Jx eigenbasis, ascending eigenvalues {-j..j}; the spectrum is simple so
  // the only freedom left is one phase per column.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s.jx);
  ComplexMatrix q = es.eigenvectors();
  for (int c = 0; c < N; ++c) {
    for (int r = 0; r < N; ++r) {
      const Complex e = q(r, c);
      if (std::abs(e) > 1e-8) {
        q.col(c) *= std::conj(e) / std::abs(e);
        break;
      }
    }
  }
  // F maps the rescaled lattice generator to diag(-j..j) = Jz eigenbasis
  // order; q then rotates that diagonal into Jx.
  return q * dft_matrix(N);
}

double transfer_fidelity(const ComplexMatrix& hamiltonian, double t,
                         int source, int target) {
  const long dim = hamiltonian.rows();
  if (source < 0 || source >= dim || target < 0 || target >= dim)
    throw ValidationError("transfer_fidelity: site index out of range for dimension " +
                          std::to_string(dim));
  const ComplexMatrix u = mat_exp_i(hamiltonian, t);
  return std::abs(u(target, source));
}

ComplexMatrix conditional_pst_hamiltonian(lattice::LatticeSize n) {
  return kron(pauli_z(), spin_operators(n).jx);
}

ComplexMatrix pst_switch_hamiltonian(lattice::LatticeSize n, double g) {
  if (!std::isfinite(g))
    throw ValidationError("pst_switch_hamiltonian: coupling must be finite");
  const int N = n.value();
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix idn = ComplexMatrix::Identity(N, N);
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  return kron(id2, kron(id2, spin_operators(n).jx)) +
         g * kron(p1, kron(pauli_x(), idn));
}

std::vector<double> coupling_profile(lattice::LatticeSize n, double omega) {
  const int N = n.value();
  std::vector<double> bonds;
  bonds.reserve(N - 1);
  for (int k = 1; k < N; ++k)
    bonds.push_back(omega * 0.5 * std::sqrt(static_cast<double>(k) * (N - k)));
  return bonds;
}

}  // namespace qstx::pst
