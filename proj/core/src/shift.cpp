#include "qstx/shift.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qstx/errors.hpp"

namespace qstx::lattice {

namespace {
constexpr double kPi = std::numbers::pi;
}

LatticeSize::LatticeSize(int n) : n_(n) {
  if (n < 2)
    throw ValidationError("LatticeSize: need at least 2 sites, got " +
                          std::to_string(n));
  midpoint_ = kPi * (n - 1) / n;
}

FractionalPower::FractionalPower(double v) : value(v) {
  if (!std::isfinite(v))
    throw ValidationError("FractionalPower: shift amount must be finite");
}

ComplexMatrix shift_operator(LatticeSize n) {
  const int N = n.value();
  ComplexMatrix u = ComplexMatrix::Zero(N, N);
  for (int j = 0; j < N; ++j) u((j + 1) % N, j) = 1.0;
  return u;
}

ComplexMatrix clock_operator(LatticeSize n, FractionalPower alpha) {
  const int N = n.value();
  ComplexMatrix v = ComplexMatrix::Zero(N, N);
  for (int k = 0; k < N; ++k)
    v(k, k) = std::polar(1.0, 2.0 * kPi * alpha.value * k / N);
  return v;
}

ComplexMatrix shift_root_spectral(LatticeSize n, FractionalPower alpha) {
  const ComplexMatrix f = dft_matrix(n.value());
  const ComplexMatrix v = clock_operator(n, alpha);
  return f.adjoint() * (v * f);
}

Complex periodic_sinc(LatticeSize n, double x) {
  if (!std::isfinite(x))
    throw ValidationError("periodic_sinc: argument must be finite");
  const double N = n.value();
  // The kernel is exactly n-periodic; reducing the argument to
  // [-n/2, n/2] removes the large-argument precision loss of sin(πx).
  const double xr = x - N * std::round(x / N);
  const double w = n.spectral_midpoint();
  if (std::abs(xr) < 1e-9) {
    // Removable singularity: the limit at x ≡ 0 (mod n) is exp(i w xr).
    return std::polar(1.0, w * xr);
  }
  Complex v = std::polar(1.0, w * xr) *
              (std::sin(kPi * xr) / (N * std::sin(kPi * xr / N)));
  const double mag = std::abs(v);
  if (mag > 1.0) v /= mag;
  return v;
}

ComplexMatrix shift_root_closed(LatticeSize n, FractionalPower alpha) {
  const int N = n.value();
  ComplexMatrix u(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k)
      u(j, k) = periodic_sinc(n, static_cast<double>(k) - j + alpha.value);
  return u;
}

ComplexMatrix shift_hamiltonian_spectral(LatticeSize n) {
  const int N = n.value();
  const ComplexMatrix f = dft_matrix(N);
  ComplexVector k(N);
  for (int i = 0; i < N; ++i) k[i] = 2.0 * kPi * i / N;
  return f.adjoint() * (k.asDiagonal() * f);
}

ComplexMatrix shift_hamiltonian_closed(LatticeSize n) {
  const int N = n.value();
  const double w = n.spectral_midpoint();
  ComplexMatrix h(N, N);
  for (int j = 0; j < N; ++j) {
    h(j, j) = w;
    for (int k = 0; k < N; ++k) {
      if (k == j) continue;
      const Complex z = std::polar(1.0, 2.0 * kPi * (k - j) / N);
      h(j, k) = -(2.0 * kPi / N) / (1.0 - z);
    }
  }
  return h;
}

Complex weyl_commutation_defect(LatticeSize n, double alpha, double beta) {
  const ComplexMatrix u = shift_root_spectral(n, alpha);
  const ComplexMatrix v = clock_operator(n, beta);
  const ComplexMatrix lhs = v * u;
  const ComplexMatrix rhs =
      std::polar(1.0, 2.0 * kPi * alpha * beta / n.value()) * (u * v);
  const double floor = 1e-12 * rhs.cwiseAbs().maxCoeff();
  Complex worst(0, 0);
  for (Eigen::Index j = 0; j < rhs.rows(); ++j)
    for (Eigen::Index k = 0; k < rhs.cols(); ++k) {
      if (std::abs(rhs(j, k)) <= floor) continue;
      const Complex d = lhs(j, k) / rhs(j, k) - 1.0;
      if (std::abs(d) > std::abs(worst)) worst = d;
    }
  return worst;
}

}  // namespace qstx::lattice
