#pragma once

#include "qstx/tensor.hpp"

namespace qstx::lattice {

// Number of sites of a cyclic lattice.  One site degenerates every
// construction in this module (the DFT, the spectral midpoint, the kernel
// attenuation), so n >= 2 is required.
class LatticeSize {
 public:
  explicit LatticeSize(int n);

  int value() const { return n_; }

  // π(n-1)/n: the midpoint of the shift-generator spectrum {2πk/n}, the
  // constant diagonal of the generator, and the phase slope of the
  // periodic sinc kernel.  Stored once so the closed forms and the
  // spectral forms cannot drift apart.
  double spectral_midpoint() const { return midpoint_; }

 private:
  int n_;
  double midpoint_;
};

// Dimensionless shift amount; integer values are whole-site shifts.
// Any finite real is valid (shifts are periodic in the lattice size).
struct FractionalPower {
  FractionalPower(double v);  // NOLINT: implicit by design
  double value;
};

// Cyclic one-site shift: U|j> = |j+1 mod n>.  Real permutation matrix,
// exactly unitary.
ComplexMatrix shift_operator(LatticeSize n);

// Diagonal clock phases: V(a) = diag(exp(2πi a k/n)), k = 0..n-1.
ComplexMatrix clock_operator(LatticeSize n, FractionalPower alpha);

// Fractional shift by Fourier conjugation of the clock: U(a) = F† V(a) F.
// Satisfies the group law U(a)U(b) = U(a+b), U(1) = shift_operator, and
// U(1/m)^m = U.
ComplexMatrix shift_root_spectral(LatticeSize n, FractionalPower alpha);

// Periodic sinc amplitude kernel:
//   s(x) = exp(i w x) sin(πx) / (n sin(πx/n)),  w = spectral midpoint,
// n-periodic, with the removable singularities at x ≡ 0 (mod n) evaluated
// by their analytic limit.  |s(x)| <= 1.
Complex periodic_sinc(LatticeSize n, double x);

// Fractional shift assembled entry-wise from the kernel:
//   U(a)[j][k] = s(k - j + a).
// Agrees element-wise with shift_root_spectral.
ComplexMatrix shift_root_closed(LatticeSize n, FractionalPower alpha);

// Shift generator H = F† K F with K = diag(2πk/n): Hermitian, spectrum
// {2πk/n}, and exp(i H t) equals the fractional shift U(t).
ComplexMatrix shift_hamiltonian_spectral(LatticeSize n);

// The same generator in closed form:
//   H[j][j] = spectral midpoint,
//   H[j][k] = -(2π/n) / (1 - exp(2πi (k-j)/n)),  j != k,
// from summing the spectral form directly.  Off-diagonal magnitudes decay
// approximately as 1/|j-k| for |j-k| << n.
ComplexMatrix shift_hamiltonian_closed(LatticeSize n);

// Commutation defect of the clock/shift pair: the relation
//   V(b) U(a) = exp(2πi a b/n) U(a) V(b)
// holds exactly for integer a, b and fails otherwise.  Returns the
// element-wise ratio deviation (A/B - 1) of largest magnitude, taken over
// entries where B is non-negligible.
Complex weyl_commutation_defect(LatticeSize n, double alpha, double beta);

}  // namespace qstx::lattice
