#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "mcpauli/gate.hpp"

namespace mcpauli {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

template <typename Real>
using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <typename Real = double>
Matrix2c<Real> gate_matrix(GateKind kind) {
  using C = std::complex<Real>;
  const Real r = Real(1) / std::sqrt(Real(2));
  const C w = std::polar(Real(1), std::numbers::pi_v<Real> / 4);
  const C i(0, 1);
  Matrix2c<Real> m;
  switch (kind) {
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::T: m << 1, 0, 0, w; break;
    case GateKind::Tdg: m << 1, 0, 0, std::conj(w); break;
    case GateKind::S: m << 1, 0, 0, i; break;
    case GateKind::Sdg: m << 1, 0, 0, -i; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -i, i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::SX: m << C(1, 1), C(1, -1), C(1, -1), C(1, 1); m *= Real(0.5); break;
    case GateKind::SXdg: m << C(1, -1), C(1, 1), C(1, 1), C(1, -1); m *= Real(0.5); break;
    default: throw std::invalid_argument("gate_matrix: not a single-qubit gate");
  }
  return m;
}

template <typename Real = double>
Matrix2c<Real> pauli_matrix(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return gate_matrix<Real>(GateKind::X);
    case PauliAxis::Y: return gate_matrix<Real>(GateKind::Y);
    case PauliAxis::Z: return gate_matrix<Real>(GateKind::Z);
  }
  return gate_matrix<Real>(GateKind::Z);
}

// diag(1, ..., 1, -1) on n+1 qubits, straight from the definition
Matrix mcz_matrix(int n);

double max_abs_diff(const Matrix& a, const Matrix& b);

// Haar-random unitary of dimension dim
template <typename Rng>
Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> nd;
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const cplx d = rr(k, k);
    q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : cplx(1);
  }
  return q;
}

}  // namespace mcpauli
