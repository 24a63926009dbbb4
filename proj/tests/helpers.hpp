#pragma once

#include <random>

#include "qstx/tensor.hpp"

// Test-local random constructions, independent of the library's internals.

inline qstx::ComplexMatrix rand_matrix(int d, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  qstx::ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = qstx::Complex(g(rng), g(rng));
  return m;
}

inline qstx::ComplexMatrix rand_hermitian(int d, std::mt19937& rng) {
  qstx::ComplexMatrix m = rand_matrix(d, rng);
  return 0.5 * (m + m.adjoint().eval());
}

inline qstx::ComplexMatrix rand_unitary(int d, std::mt19937& rng) {
  Eigen::HouseholderQR<qstx::ComplexMatrix> qr(rand_matrix(d, rng));
  qstx::ComplexMatrix q = qr.householderQ();
  qstx::ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const qstx::Complex p = r(i, i);
    if (std::abs(p) > 1e-14) q.col(i) *= p / std::abs(p);
  }
  return q;
}

inline qstx::ComplexVector rand_state(long dim, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  qstx::ComplexVector v(dim);
  for (long i = 0; i < dim; ++i) v[i] = qstx::Complex(g(rng), g(rng));
  return v / v.norm();
}
