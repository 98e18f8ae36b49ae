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

#include <array>
#include <cstdint>
#include <functional>

#include "edt/linalg.hpp"
#include "edt/measurement.hpp"

// Brute-force verifiers. Nothing here calls the Jacobi eigensolver: maxima
// over states are found by sampling plus local refinement on the unit
// sphere, and small eigenproblems are solved in closed form.
namespace edt::oracle {

struct OracleResult {
  double value = 0.0;
  CVector maximizer;
  long samples_used = 0;
  long refinement_steps = 0;
};

struct SearchOptions {
  long samples = 10000;
  int refine_iters = 200;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Number of best samples handed to the local refinement.
  int refine_candidates = 4;
};

/// Objective over unit vectors of C^d.
using PureStateObjective = std::function<double(const CVector&)>;

/// Sample `samples` Haar-random unit vectors (sample k uses
/// derive_seed(seed, k)), then run projected coordinate ascent from the best
/// `refine_candidates` of them: each iteration tries +/- step along the real
/// and imaginary part of every coordinate, renormalizes, keeps improvements,
/// and halves the step after a pass without improvement (floor 1e-10).
OracleResult maximize_pure(int dim, const PureStateObjective& objective,
                           const SearchOptions& options);

/// max over unit psi of |<psi|m|psi>|.
OracleResult max_expectation(const CMatrix& m, const SearchOptions& options);

/// max over pure rho of eps_rho(A, A').
OracleResult max_error_over_states(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                   const SearchOptions& options);
/// max over pure rho of eta_rho(A', B).
OracleResult max_disturbance_over_states(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                         const SearchOptions& options);
/// max over pure rho of eps_rho(A, A') + eta_rho(A', B).
OracleResult max_sum_over_states(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                 const OrthonormalBasis& b, const SearchOptions& options);

/// Pure-state error and disturbance evaluated directly from Born
/// probabilities (no matrices formed).
double pure_state_error(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                        const CVector& psi);
double pure_state_disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                              const CVector& psi);

/// Ascending eigenvalues of a Hermitian 2x2 matrix via the quadratic formula.
std::array<double, 2> eig2_closed(const CMatrix& m);
/// Ascending eigenvalues of a Hermitian 3x3 matrix via the trigonometric
/// solution of the characteristic cubic.
std::array<double, 3> eig3_closed(const CMatrix& m);

}  // namespace edt::oracle
