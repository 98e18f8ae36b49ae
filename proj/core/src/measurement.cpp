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

#include "edt/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "edt/errors.hpp"

namespace edt {
namespace {

// Worst |<v_i|v_j> - delta_ij| and the pair attaining it.
struct GramDefect {
  double value = 0.0;
  Eigen::Index i = 0;
  Eigen::Index j = 0;
};

GramDefect gram_defect(const CMatrix& columns) {
  const CMatrix gram = columns.adjoint() * columns;
  GramDefect worst;
  for (Eigen::Index j = 0; j < gram.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double target = i == j ? 1.0 : 0.0;
      const double defect = std::abs(gram(i, j) - target);
      if (defect > worst.value || std::isnan(defect)) {
        worst = {defect, i, j};
        if (std::isnan(defect)) return worst;
      }
    }
  }
  return worst;
}

void require_orthonormal(const CMatrix& columns, double tolerance) {
  const GramDefect worst = gram_defect(columns);
  if (!(worst.value <= tolerance)) {
    std::ostringstream msg;
    if (worst.i == worst.j) {
      msg << "basis vector " << worst.i << " is not normalized: |<v" << worst.i << "|v"
          << worst.i << "> - 1| = " << worst.value;
    } else {
      msg << "basis vectors " << worst.i << " and " << worst.j
          << " are not orthogonal: |<v" << worst.i << "|v" << worst.j
          << ">| = " << worst.value;
    }
    msg << " exceeds " << tolerance;
    throw ValidationError(msg.str());
  }
}

void require_square(const CMatrix& columns, int min_dim) {
  if (columns.rows() != columns.cols()) {
    std::ostringstream msg;
    msg << "basis needs as many vectors as dimensions, got " << columns.cols()
        << " vectors of dimension " << columns.rows();
    throw ValidationError(msg.str());
  }
  if (columns.cols() < min_dim) {
    std::ostringstream msg;
    msg << "basis dimension must be at least " << min_dim << ", got " << columns.cols();
    throw ValidationError(msg.str());
  }
  if (columns.cols() > kMaxDim) {
    std::ostringstream msg;
    msg << "basis dimension " << columns.cols() << " exceeds the supported maximum " << kMaxDim;
    throw UnsupportedSizeError(msg.str());
  }
}

void require_min_dim(int dim) {
  if (dim < 2) {
    std::ostringstream msg;
    msg << "dimension must be at least 2, got " << dim;
    throw ValidationError(msg.str());
  }
  if (dim > kMaxDim) {
    std::ostringstream msg;
    msg << "dimension " << dim << " exceeds the supported maximum " << kMaxDim;
    throw UnsupportedSizeError(msg.str());
  }
}

}  // namespace

void require_same_dim(int lhs, int rhs, const char* what) {
  if (lhs != rhs) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << lhs << " vs " << rhs << ")";
    throw ValidationError(msg.str());
  }
}

OrthonormalBasis OrthonormalBasis::from_columns(CMatrix columns, double tolerance,
                                                bool allow_trivial) {
  require_square(columns, allow_trivial ? 1 : 2);
  require_orthonormal(columns, tolerance);
  return OrthonormalBasis(std::move(columns));
}

OrthonormalBasis OrthonormalBasis::from_vectors(std::span<const CVector> vectors,
                                                double tolerance) {
  const auto n = static_cast<Eigen::Index>(vectors.size());
  if (n == 0) throw ValidationError("basis needs at least one vector");
  CMatrix columns(vectors.front().size(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const CVector& v = vectors[static_cast<std::size_t>(k)];
    if (v.size() != columns.rows()) {
      std::ostringstream msg;
      msg << "basis vector " << k << " has length " << v.size() << ", expected "
          << columns.rows();
      throw ValidationError(msg.str());
    }
    columns.col(k) = v;
  }
  return from_columns(std::move(columns), tolerance);
}

OrthonormalBasis OrthonormalBasis::repaired(CMatrix columns, double tolerance) {
  require_square(columns, 2);
  require_orthonormal(columns, tolerance);
  for (Eigen::Index k = 0; k < columns.cols(); ++k) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const Complex overlap = columns.col(j).dot(columns.col(k));
      columns.col(k) -= overlap * columns.col(j);
    }
    columns.col(k) /= columns.col(k).norm();
  }
  return OrthonormalBasis(std::move(columns));
}

OrthonormalBasis OrthonormalBasis::computational(int dim) {
  require_min_dim(dim);
  return OrthonormalBasis(CMatrix::Identity(dim, dim));
}

Eigen::MatrixXd OrthonormalBasis::overlaps_squared(const OrthonormalBasis& other) const {
  require_same_dim(dim(), other.dim(), "overlaps_squared");
  return (columns_.adjoint() * other.columns_).cwiseAbs2();
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix& m) {
  CMatrix h = symmetrized(m, tol::kValidation);
  if (h.rows() < 2) throw ValidationError("density matrix dimension must be at least 2");
  const double trace = h.trace().real();
  if (!(std::abs(trace - 1.0) <= tol::kValidation)) {
    std::ostringstream msg;
    msg << "density matrix trace " << trace << " differs from 1";
    throw ValidationError(msg.str());
  }
  const double min_eig = eig_hermitian(h).eigenvalues(0);
  if (min_eig < -tol::kValidation) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eig;
    throw ValidationError(msg.str());
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  require_min_dim(static_cast<int>(psi.size()));
  const double n2 = psi.squaredNorm();
  if (!(std::abs(n2 - 1.0) <= tol::kValidation)) {
    std::ostringstream msg;
    msg << "state vector is not normalized: |psi|^2 = " << n2;
    throw ValidationError(msg.str());
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  require_min_dim(dim);
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

ProbVector ProbVector::from_values(std::vector<double> values) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double& p = values[i];
    if (!(p >= -tol::kProbabilityClamp && p <= 1.0 + tol::kProbabilityClamp)) {
      std::ostringstream msg;
      msg << "probability " << i << " = " << p << " lies outside [0, 1]";
      throw ValidationError(msg.str());
    }
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (values.empty() || !(std::abs(sum - 1.0) <= tol::kValidation)) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum << ", expected 1";
    throw ValidationError(msg.str());
  }
  return ProbVector(std::move(values));
}

ProbVector born_probabilities(const OrthonormalBasis& basis, const DensityMatrix& rho) {
  require_same_dim(basis.dim(), rho.dim(), "born_probabilities");
  std::vector<double> p(static_cast<std::size_t>(basis.dim()));
  for (int i = 0; i < basis.dim(); ++i) {
    const auto v = basis.matrix().col(i);
    p[static_cast<std::size_t>(i)] = v.dot(rho.matrix() * v).real();
  }
  return ProbVector::from_values(std::move(p));
}

DensityMatrix post_measurement_state(const OrthonormalBasis& basis, const DensityMatrix& rho) {
  const ProbVector p = born_probabilities(basis, rho);
  const CMatrix& u = basis.matrix();
  Eigen::VectorXd weights(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) weights(i) = p[i];
  CMatrix out = u * weights.cast<Complex>().asDiagonal() * u.adjoint();
  out = (out + out.adjoint()) / 2.0;
  return DensityMatrix(std::move(out));
}

double infinity_distance(const ProbVector& x, const ProbVector& y) {
  require_same_dim(x.size(), y.size(), "infinity_distance");
  double worst = 0.0;
  for (int i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

OrthonormalBasis haar_random_basis(int dim, Rng& rng) {
  require_min_dim(dim);
  return OrthonormalBasis::from_columns(haar_random_unitary(dim, rng));
}

OrthonormalBasis haar_random_basis(int dim, std::uint64_t seed) {
  require_min_dim(dim);
  Rng rng(seed);
  return haar_random_basis(dim, rng);
}

DensityMatrix random_pure_state(int dim, std::uint64_t seed) {
  require_min_dim(dim);
  Rng rng(seed);
  return DensityMatrix::pure(haar_random_vector(dim, rng));
}

OrthonormalBasis extend_to_basis(const CVector& first) {
  const auto dim = static_cast<int>(first.size());
  require_min_dim(dim);
  const double n = first.norm();
  if (!(n > 0.0)) throw ValidationError("cannot extend a zero vector to a basis");

  CMatrix columns(dim, dim);
  columns.col(0) = first / n;
  int filled = 1;
  for (int e = 0; e < dim && filled < dim; ++e) {
    CVector candidate = CVector::Unit(dim, e);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < filled; ++j) candidate -= columns.col(j).dot(candidate) * columns.col(j);
    const double cn = candidate.norm();
    if (cn > 1e-6) columns.col(filled++) = candidate / cn;
  }
  return OrthonormalBasis::from_columns(std::move(columns));
}

}  // namespace edt
