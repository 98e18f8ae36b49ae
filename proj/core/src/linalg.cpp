// Copyright 2026 The edtradeoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edt/errors.hpp"
#include "edt/tolerances.hpp"

namespace edt {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTarget = 1e-14;

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p, q) with the unitary J = D G, where D = diag(.., 1 @ p, ..,
// e^{-i phi} @ q, ..) makes the pivot real and G is the real Jacobi rotation.
// a <- J^dagger a J and v <- v J.
void rotate(CMatrix& a, CMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;
  const Complex phase = apq / magnitude;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * magnitude);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex conj_phase = std::conj(phase);

  // Columns: col_p' = c col_p - s e^{-i phi} col_q, col_q' = s col_p + c e^{-i phi} col_q.
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * conj_phase * akq;
    a(k, q) = s * akp + c * conj_phase * akq;
  }
  // Rows: row_p' = c row_p - s e^{i phi} row_q, row_q' = s row_p + c e^{i phi} row_q.
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * conj_phase * vkq;
    v(k, q) = s * vkp + c * conj_phase * vkq;
  }
}

}  // namespace

void require_hermitian(const CMatrix& m, double tolerance) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw ValidationError(msg.str());
  }
  double worst = 0.0;
  Eigen::Index wi = 0, wj = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double defect = std::abs(m(i, j) - std::conj(m(j, i)));
      if (defect > worst) {
        worst = defect;
        wi = i;
        wj = j;
      }
    }
  }
  if (!(worst <= tolerance)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: |m(" << wi << "," << wj << ") - conj(m(" << wj << ","
        << wi << "))| = " << worst << " exceeds " << tolerance;
    throw ValidationError(msg.str());
  }
}

CMatrix symmetrized(const CMatrix& m, double tolerance) {
  require_hermitian(m, tolerance);
  return (m + m.adjoint()) / 2.0;
}

HermitianEigen eig_hermitian(const CMatrix& m) {
  CMatrix a = symmetrized(m, tol::kValidation);
  const Eigen::Index n = a.rows();
  CMatrix v = CMatrix::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  bool converged = off_diagonal_norm(a) < kOffDiagonalTarget * scale;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) < kOffDiagonalTarget * scale;
  }
  if (!converged) throw std::runtime_error("Jacobi eigensolver did not converge in 100 sweeps");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigen result;
  result.eigenvalues.resize(n);
  result.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    result.eigenvalues(k) = a(src, src).real();
    result.eigenvectors.col(k) = v.col(src);
  }
  return result;
}

double spectral_radius(const CMatrix& m) {
  const HermitianEigen e = eig_hermitian(m);
  const Eigen::Index n = e.eigenvalues.size();
  return std::max(std::abs(e.eigenvalues(0)), std::abs(e.eigenvalues(n - 1)));
}

DominantEigen dominant_eigen(const CMatrix& m) {
  HermitianEigen e = eig_hermitian(m);
  const Eigen::Index n = e.eigenvalues.size();
  const double top = e.eigenvalues(n - 1);
  const double bottom = e.eigenvalues(0);
  DominantEigen result;
  if (top >= -bottom) {
    result.radius = std::abs(top);
    result.eigenvalue = top;
    result.eigenvector = e.eigenvectors.col(n - 1);
  } else {
    result.radius = -bottom;
    result.eigenvalue = bottom;
    result.eigenvector = e.eigenvectors.col(0);
  }
  return result;
}

CMatrix haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw ValidationError("Haar sampling needs dim >= 1");
  CMatrix z(dim, dim);
  // Column-major fill order is part of the reproducibility contract.
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) z(i, j) = rng.complex_normal();

  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

CVector haar_random_vector(int dim, Rng& rng) {
  if (dim < 1) throw ValidationError("Haar sampling needs dim >= 1");
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

double unitarity_defect(const CMatrix& u) {
  const CMatrix g = u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace edt
