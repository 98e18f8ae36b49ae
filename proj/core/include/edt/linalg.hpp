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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "edt/rng.hpp"

namespace edt {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Largest supported Hilbert-space dimension.
inline constexpr int kMaxDim = 16;

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascend; column k of
/// `eigenvectors` belongs to `eigenvalues[k]`.
struct HermitianEigen {
  Eigen::VectorXd eigenvalues;
  CMatrix eigenvectors;
};

/// Throws ValidationError naming the worst entry if max |m - m^dagger|
/// exceeds `tolerance`, or if `m` is not square.
void require_hermitian(const CMatrix& m, double tolerance);

/// (m + m^dagger) / 2 after require_hermitian.
CMatrix symmetrized(const CMatrix& m, double tolerance);

/// Cyclic complex Jacobi eigensolver.
HermitianEigen eig_hermitian(const CMatrix& m);

/// max_k |lambda_k| of a Hermitian matrix.
double spectral_radius(const CMatrix& m);

/// Eigenvector of the eigenvalue of largest modulus together with that
/// modulus. Ties prefer the most positive eigenvalue.
struct DominantEigen {
  double radius = 0.0;
  double eigenvalue = 0.0;
  CVector eigenvector;
};
DominantEigen dominant_eigen(const CMatrix& m);

/// Haar-distributed unitary: Ginibre matrix, Householder QR, then the
/// columns of Q rephased by the phases of diag(R).
CMatrix haar_random_unitary(int dim, Rng& rng);

/// Haar-random unit vector (normalized complex Gaussian).
CVector haar_random_vector(int dim, Rng& rng);

/// max entrywise |u^dagger u - I|.
double unitarity_defect(const CMatrix& u);

}  // namespace edt
