#pragma once

#include <vector>

#include "qstx/shift.hpp"
#include "qstx/tensor.hpp"

namespace qstx::pst {

// Angular momentum matrices of a fictitious spin-(n-1)/2 particle on the
// n-dimensional single-excitation space.  Basis index i corresponds to
// magnetic quantum number m = j - i, so jz = diag(j, j-1, ..., -j) and
// jx is real symmetric tridiagonal with bond k coupling √(k(n-k))/2.
struct SpinRep {
  lattice::LatticeSize n;
  double j;
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

SpinRep spin_operators(lattice::LatticeSize n);

// Engineered-coupling chain generator Ω·Jx: nearest-neighbour only, with
// bond strengths Ω√(k(n-k))/2.  Rotation by t = π/Ω mirrors the chain and
// in particular transfers site 0 to site n-1 with unit fidelity.
ComplexMatrix pst_hamiltonian(lattice::LatticeSize n, double omega);

// Unitary change of basis O with
//   O · ((n/2π)(H_shift - w·1)) · O† = Jx,   w = spectral midpoint,
// built as the phase-canonicalized Jx eigenbasis composed with the DFT.
// The rescaling (n/2π) is the unique one matching the two spectra exactly.
ComplexMatrix basis_change_ox(lattice::LatticeSize n);

// |<target| exp(i h t) |source>|.
double transfer_fidelity(const ComplexMatrix& hamiltonian, double t,
                         int source, int target);

// σ_z ⊗ Jx: control |0> evolves under +Jx, control |1> under -Jx.
ComplexMatrix conditional_pst_hamiltonian(lattice::LatticeSize n);

// Chain transport with a rail switch, on shape [2, 2, n]:
//   H = 1 ⊗ 1 ⊗ Jx + g · |1><1| ⊗ σ_x ⊗ 1.
// Summands commute; control |0> never populates the second rail.
ComplexMatrix pst_switch_hamiltonian(lattice::LatticeSize n, double g);

// The n-1 bond strengths Ω√(k(n-k))/2, symmetric under k ↔ n-k.
std::vector<double> coupling_profile(lattice::LatticeSize n, double omega);

// Endpoint-transfer request used by the CLI.
struct TransferSpec {
  double omega = 1.0;
  int source = 0;
  int target = 0;
};

}  // namespace qstx::pst
