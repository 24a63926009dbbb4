#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qstx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Largest total Hilbert-space dimension any tensor construction may reach.
inline constexpr long kDimensionCap = 1L << 20;

// Default element-wise comparison tolerance.  Calibrated for double
// precision and operator dimensions up to ~1024.
inline constexpr double kDefaultTol = 1e-10;

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// max_ij |m - m†|_ij
double hermiticity_residual(const ComplexMatrix& m);
// max_ij |m†m - 1|_ij
double unitarity_residual(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

// Largest element-wise absolute difference; the comparison metric used
// throughout the library and its verification suite.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Same metric after aligning b to a by the best global phase.
double phase_aligned_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Ordered list of subsystem dimensions, slowest factor first.  Flat index
// convention is row-major: digits (d0, d1, ..) map to ((d0*n1)+d1)*n2+...,
// matching the Kronecker-product ordering of operators.
struct TensorShape {
  explicit TensorShape(std::vector<int> factor_dims);

  long dim() const;
  int rank() const { return static_cast<int>(factors.size()); }

  std::vector<int> factors;
};

// Normalized complex amplitude vector over a tensor-factored Hilbert space.
struct PureState {
  PureState(TensorShape shape, ComplexVector amplitudes);

  // Computational basis state |d0 d1 ...>.
  static PureState basis(TensorShape shape, const std::vector<int>& digits);

  double norm() const { return amps.norm(); }

  TensorShape shape;
  ComplexVector amps;
};

// |a> ⊗ |b>; factor lists concatenate.
PureState tensor(const PureState& a, const PureState& b);

// Kronecker product.  Throws CapacityError past kDimensionCap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// exp(i h t) for Hermitian h, via eigendecomposition.  Stays unitary to
// solver accuracy for arbitrarily long times, unlike series methods.
ComplexMatrix mat_exp_i(const ComplexMatrix& hermitian, double t);

// Discrete Fourier matrix F[j][k] = exp(+2πi jk/n)/√n.
//
// NOTE the positive exponent: most numeric FFT libraries define the forward
// transform with exp(-2πi jk/n).  Everything downstream (fractional shifts,
// shift Hamiltonians, the lattice/spin basis change) assumes this sign.
ComplexMatrix dft_matrix(int n);

// Reduced density matrix of factor `keep` of a pure state: Hermitian,
// unit trace, positive semidefinite up to rounding.
ComplexMatrix partial_trace(const PureState& state, int keep);

// Von Neumann entropy, in bits, across the bipartition (side_a | rest).
// Reduced-state eigenvalues below 1e-14 contribute zero.
double entanglement_entropy(const PureState& state,
                            const std::vector<int>& side_a);

// Probability marginal of one tensor factor.
std::vector<double> factor_distribution(const PureState& state, int factor);

}  // namespace qstx
