#include "qstx/tensor.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qstx/errors.hpp"

namespace qstx {

namespace {

constexpr double kPi = std::numbers::pi;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ValidationError(std::string(what) + " requires a non-empty square matrix");
}

}  // namespace

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

double unitarity_residual(const ComplexMatrix& m) {
  require_square(m, "unitarity_residual");
  ComplexMatrix g = m.adjoint() * m;
  g -= ComplexMatrix::Identity(m.rows(), m.cols());
  return g.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_residual(m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_residual(m) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("max_abs_diff: dimension mismatch");
  if (a.size() == 0) throw ValidationError("max_abs_diff: empty matrices");
  return (a - b).cwiseAbs().maxCoeff();
}

double phase_aligned_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("phase_aligned_diff: dimension mismatch");
  Complex overlap = (b.adjoint() * a).trace();
  Complex phase(1, 0);
  if (std::abs(overlap) > 1e-14) {
    phase = overlap / std::abs(overlap);
  } else {
    // Traceless overlap: align on the largest entry of b instead.
    Eigen::Index i = 0, j = 0;
    b.cwiseAbs().maxCoeff(&i, &j);
    if (std::abs(b(i, j)) > 1e-14 && std::abs(a(i, j)) > 1e-14) {
      Complex r = a(i, j) / b(i, j);
      phase = r / std::abs(r);
    }
  }
  return max_abs_diff(a, phase * b);
}

TensorShape::TensorShape(std::vector<int> factor_dims)
    : factors(std::move(factor_dims)) {
  if (factors.empty())
    throw ValidationError("TensorShape: factor list must be non-empty");
  long prod = 1;
  for (int d : factors) {
    if (d < 1)
      throw ValidationError("TensorShape: factors must be >= 1, got " +
                            std::to_string(d));
    prod *= d;
    if (prod > kDimensionCap)
      throw CapacityError("TensorShape: total dimension exceeds cap " +
                          std::to_string(kDimensionCap));
  }
}

long TensorShape::dim() const {
  long prod = 1;
  for (int d : factors) prod *= d;
  return prod;
}

PureState::PureState(TensorShape shape_, ComplexVector amplitudes)
    : shape(std::move(shape_)), amps(std::move(amplitudes)) {
  if (amps.size() != shape.dim())
    throw ValidationError("PureState: amplitude count " +
                          std::to_string(amps.size()) +
                          " does not match shape dimension " +
                          std::to_string(shape.dim()));
  const double n = amps.norm();
  if (std::abs(n - 1.0) > 1e-8)
    throw ValidationError("PureState: amplitudes not normalized, |norm - 1| = " +
                          std::to_string(std::abs(n - 1.0)));
}

PureState PureState::basis(TensorShape shape, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != shape.rank())
    throw ValidationError("PureState::basis: digit count does not match rank");
  long flat = 0;
  for (int i = 0; i < shape.rank(); ++i) {
    if (digits[i] < 0 || digits[i] >= shape.factors[i])
      throw ValidationError("PureState::basis: digit " + std::to_string(i) +
                            " out of range");
    flat = flat * shape.factors[i] + digits[i];
  }
  ComplexVector v = ComplexVector::Zero(shape.dim());
  v[flat] = 1.0;
  return PureState(std::move(shape), std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<int> factors = a.shape.factors;
  factors.insert(factors.end(), b.shape.factors.begin(), b.shape.factors.end());
  TensorShape shape(std::move(factors));
  const long bd = b.shape.dim();
  ComplexVector v(shape.dim());
  for (long i = 0; i < a.amps.size(); ++i)
    for (long j = 0; j < bd; ++j) v[i * bd + j] = a.amps[i] * b.amps[j];
  return PureState(std::move(shape), std::move(v));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long rows = static_cast<long>(a.rows()) * b.rows();
  const long cols = static_cast<long>(a.cols()) * b.cols();
  if (rows > kDimensionCap || cols > kDimensionCap)
    throw CapacityError("kron: result dimension exceeds cap " +
                        std::to_string(kDimensionCap));
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix mat_exp_i(const ComplexMatrix& hermitian, double t) {
  require_square(hermitian, "mat_exp_i");
  const double asym = hermiticity_residual(hermitian);
  if (asym > 1e-10)
    throw ValidationError("mat_exp_i: generator is not Hermitian, max asymmetry residual = " +
                          std::to_string(asym));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian);
  if (es.info() != Eigen::Success)
    throw ValidationError("mat_exp_i: eigendecomposition failed");
  ComplexVector phases(hermitian.rows());
  for (Eigen::Index k = 0; k < hermitian.rows(); ++k)
    phases[k] = std::polar(1.0, es.eigenvalues()[k] * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix dft_matrix(int n) {
  if (n < 1)
    throw ValidationError("dft_matrix: n must be >= 1, got " + std::to_string(n));
  if (n > kDimensionCap)
    throw CapacityError("dft_matrix: n exceeds cap");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // jk reduced mod n keeps the phase argument small and exact.
      const long r = (static_cast<long>(j) * k) % n;
      f(j, k) = std::polar(scale, 2.0 * kPi * static_cast<double>(r) / n);
    }
  return f;
}

ComplexMatrix partial_trace(const PureState& state, int keep) {
  const auto& dims = state.shape.factors;
  if (keep < 0 || keep >= state.shape.rank())
    throw ValidationError("partial_trace: factor index " + std::to_string(keep) +
                          " out of range for rank " +
                          std::to_string(state.shape.rank()));
  long left = 1, right = 1;
  for (int i = 0; i < keep; ++i) left *= dims[i];
  for (int i = keep + 1; i < state.shape.rank(); ++i) right *= dims[i];
  const long d = dims[keep];

  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (long l = 0; l < left; ++l)
    for (long m = 0; m < d; ++m)
      for (long mp = 0; mp < d; ++mp) {
        Complex acc(0, 0);
        const long base_m = (l * d + m) * right;
        const long base_mp = (l * d + mp) * right;
        for (long r = 0; r < right; ++r)
          acc += state.amps[base_m + r] * std::conj(state.amps[base_mp + r]);
        rho(m, mp) += acc;
      }
  return rho;
}

double entanglement_entropy(const PureState& state,
                            const std::vector<int>& side_a) {
  const int rank = state.shape.rank();
  if (side_a.empty())
    throw ValidationError("entanglement_entropy: empty cut side");
  std::vector<bool> in_a(rank, false);
  for (int idx : side_a) {
    if (idx < 0 || idx >= rank)
      throw ValidationError("entanglement_entropy: factor index out of range");
    if (in_a[idx])
      throw ValidationError("entanglement_entropy: duplicate factor index");
    in_a[idx] = true;
  }
  if (static_cast<int>(side_a.size()) == rank)
    throw ValidationError("entanglement_entropy: cut must leave both sides non-empty");

  const auto& dims = state.shape.factors;
  long da = 1, db = 1;
  for (int i = 0; i < rank; ++i) (in_a[i] ? da : db) *= dims[i];

  // Rearrange amplitudes into the (side_a x side_b) bipartition matrix.
  ComplexMatrix m(da, db);
  std::vector<int> digit(rank, 0);
  for (long g = 0; g < state.amps.size(); ++g) {
    long rem = g;
    for (int i = rank - 1; i >= 0; --i) {
      digit[i] = static_cast<int>(rem % dims[i]);
      rem /= dims[i];
    }
    long ai = 0, bi = 0;
    for (int i = 0; i < rank; ++i) {
      if (in_a[i])
        ai = ai * dims[i] + digit[i];
      else
        bi = bi * dims[i] + digit[i];
    }
    m(ai, bi) = state.amps[g];
  }

  // Schmidt spectrum from the smaller-side Gram matrix.
  ComplexMatrix gram =
      (da <= db) ? ComplexMatrix(m * m.adjoint()) : ComplexMatrix(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()[i];
    if (p > 1e-14) entropy -= p * std::log2(p);
  }
  return entropy;
}

std::vector<double> factor_distribution(const PureState& state, int factor) {
  const auto& dims = state.shape.factors;
  if (factor < 0 || factor >= state.shape.rank())
    throw ValidationError("factor_distribution: factor index out of range");
  long left = 1, right = 1;
  for (int i = 0; i < factor; ++i) left *= dims[i];
  for (int i = factor + 1; i < state.shape.rank(); ++i) right *= dims[i];
  const long d = dims[factor];
  std::vector<double> p(d, 0.0);
  for (long l = 0; l < left; ++l)
    for (long m = 0; m < d; ++m) {
      const long base = (l * d + m) * right;
      for (long r = 0; r < right; ++r) p[m] += std::norm(state.amps[base + r]);
    }
  return p;
}

}  // namespace qstx
