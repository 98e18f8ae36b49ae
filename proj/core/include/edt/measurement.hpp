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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edt/linalg.hpp"
#include "edt/tolerances.hpp"

namespace edt {

/// Ordered orthonormal basis {|v_0>, ..., |v_{d-1}>} of C^d, stored as the
/// columns of a unitary matrix. Index i is the outcome label of the rank-one
/// projective measurement {|v_i><v_i|}.
class OrthonormalBasis {
 public:
  /// Validates that `columns` is square, d >= 2 (or d >= 1 when
  /// `allow_trivial`), and orthonormal within `tolerance`. The error message
  /// names the failing pair (i, j).
  static OrthonormalBasis from_columns(CMatrix columns, double tolerance = tol::kValidation,
                                       bool allow_trivial = false);
  static OrthonormalBasis from_vectors(std::span<const CVector> vectors,
                                       double tolerance = tol::kValidation);

  /// Accepts a near-orthonormal set (within `tolerance`) and returns the
  /// modified Gram-Schmidt orthonormalization. Larger defects are rejected
  /// with the failing pair of indices.
  static OrthonormalBasis repaired(CMatrix columns, double tolerance = tol::kFileBasis);

  static OrthonormalBasis computational(int dim);

  int dim() const { return static_cast<int>(columns_.cols()); }
  const CMatrix& matrix() const { return columns_; }
  CVector vector(int i) const { return columns_.col(i); }
  CMatrix projector(int i) const { return columns_.col(i) * columns_.col(i).adjoint(); }

  /// |<this_i | other_j>|^2 as a d x d real matrix.
  Eigen::MatrixXd overlaps_squared(const OrthonormalBasis& other) const;

 private:
  explicit OrthonormalBasis(CMatrix columns) : columns_(std::move(columns)) {}
  CMatrix columns_;
};

/// Hermitian, positive-semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity, trace and minimum eigenvalue within
  /// tol::kValidation; stores the symmetrized matrix.
  static DensityMatrix from_matrix(const CMatrix& m);
  /// |psi><psi| for a unit vector (norm checked within tol::kValidation).
  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  double purity() const;

 private:
  friend DensityMatrix post_measurement_state(const OrthonormalBasis&, const DensityMatrix&);
  explicit DensityMatrix(CMatrix m) : matrix_(std::move(m)) {}
  CMatrix matrix_;
};

/// Classical outcome distribution.
class ProbVector {
 public:
  /// Entries must lie in [-1e-12, 1 + 1e-12] and sum to 1 within
  /// tol::kValidation. Negative round-off is clamped to 0.
  static ProbVector from_values(std::vector<double> values);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return probs_; }

 private:
  explicit ProbVector(std::vector<double> p) : probs_(std::move(p)) {}
  std::vector<double> probs_;
};

/// p_i = <v_i| rho |v_i>.
ProbVector born_probabilities(const OrthonormalBasis& basis, const DensityMatrix& rho);

/// Non-selective collapse: sum_i <v_i|rho|v_i> |v_i><v_i|.
DensityMatrix post_measurement_state(const OrthonormalBasis& basis, const DensityMatrix& rho);

/// max_i |x_i - y_i|.
double infinity_distance(const ProbVector& x, const ProbVector& y);

/// Basis whose column matrix is Haar-distributed; deterministic in (dim, seed).
OrthonormalBasis haar_random_basis(int dim, std::uint64_t seed);
OrthonormalBasis haar_random_basis(int dim, Rng& rng);

/// Rank-one state from a Haar-random unit vector; deterministic in (dim, seed).
DensityMatrix random_pure_state(int dim, std::uint64_t seed);

/// Orthonormal basis whose first vector is `first` (normalized), completed
/// by Gram-Schmidt against the computational basis.
OrthonormalBasis extend_to_basis(const CVector& first);

void require_same_dim(int lhs, int rhs, const char* what);

}  // namespace edt
