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

#include <vector>

#include "edt/linalg.hpp"
#include "edt/measurement.hpp"

// Error, disturbance and overall error of the consecutive measurement
// B o A' compared with the ideal measurements A and B, all measured with the
// infinity-norm distance between outcome distributions. `a`, `ap`, `b` name
// the bases of A, A' and B throughout.
namespace edt {

/// A maximum over outcome labels together with the (lowest) label attaining it.
struct IndexedValue {
  double value = 0.0;
  int index = 0;
};

double state_dependent_error(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                             const DensityMatrix& rho);
double state_dependent_disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                   const DensityMatrix& rho);

/// max_i sqrt(1 - |<a'_i|a_i>|^2).
IndexedValue error(const OrthonormalBasis& a, const OrthonormalBasis& ap);

/// |a_i><a_i| - |a'_i><a'_i|.
CMatrix error_matrix(const OrthonormalBasis& a, const OrthonormalBasis& ap, int i);

/// |b_i><b_i| - sum_k |<b_i|a'_k>|^2 |a'_k><a'_k|.
CMatrix disturbance_matrix(const OrthonormalBasis& ap, const OrthonormalBasis& b, int i);

/// Spectral radius of disturbance_matrix(ap, b, i).
double disturbance_for_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b, int i);

/// max_i of disturbance_for_outcome.
IndexedValue disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b);

/// Multiplies each |a'_k> by a phase making <target|a'_k> real and
/// non-negative. Vectors orthogonal to `target` are left untouched.
OrthonormalBasis rephase_against(const CVector& target, const OrthonormalBasis& basis);

/// disturbance_matrix(ap, b, i) written in the {|a'_k>} basis after
/// rephasing against |b_i>. Off-diagonal entries are |<b_i|a'_j>||<b_i|a'_k>|
/// and the diagonal vanishes, so the result is entrywise non-negative.
Eigen::MatrixXd rephased_disturbance_matrix(const OrthonormalBasis& ap,
                                            const OrthonormalBasis& b, int i);

struct OverallError {
  double value = 0.0;
  int error_index = 0;        // i of |a_i><a_i| - |a'_i><a'_i|
  int disturbance_index = 0;  // j of the disturbance term
  int sign = +1;              // relative sign between the two terms
  CVector witness;            // pure state attaining the maximum
};

/// max over (i, j, sign) of R(error_matrix(i) + sign * disturbance_matrix(j)).
/// Ties keep the first candidate in (i, j, +, -) lexicographic order.
OverallError overall_error(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                           const OrthonormalBasis& b);

/// max_i (1 - |<a'_i|a_i>|^2).
double calibration_error(const OrthonormalBasis& a, const OrthonormalBasis& ap);
/// max_i (1 - sum_k |<a'_k|b_i>|^4).
double calibration_disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b);

/// sqrt((1 - 1/d)(1 - sum_k |<a'_k|b_i>|^4)) for one outcome i.
double disturbance_bound_1_for_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                       int i);
/// max_j |<a'_j|b_i>| sum_{k != j} |<a'_k|b_i>| for one outcome i.
double disturbance_bound_2_for_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                       int i);
double disturbance_bound_1(const OrthonormalBasis& ap, const OrthonormalBasis& b);
double disturbance_bound_2(const OrthonormalBasis& ap, const OrthonormalBasis& b);

/// Largest dimension for which relabelings are enumerated exhaustively.
inline constexpr int kMaxRelabelDim = 8;

struct RelaxedError {
  double value = 0.0;
  /// permutation[i] is the label of `b` matched with outcome i of `a`.
  std::vector<int> permutation;
};

/// Error of `a` against the best relabeling of `b`'s outcomes:
/// min over permutations s of max_i sqrt(1 - |<b_s(i)|a_i>|^2).
RelaxedError relaxed_error(const OrthonormalBasis& a, const OrthonormalBasis& b);

/// `b` with its vectors reordered by `permutation` (vector i <- b_perm[i]).
OrthonormalBasis relabeled(const OrthonormalBasis& b, const std::vector<int>& permutation);

/// min(relaxed_error(a, b), disturbance(a, b)).
double conjecture_floor(const OrthonormalBasis& a, const OrthonormalBasis& b);

struct TradeoffReport {
  int dim = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  double delta = 0.0;
  double epsilon_cal = 0.0;
  double eta_cal = 0.0;
  double bound1 = 0.0;
  double bound2 = 0.0;
  int witness_error_index = 0;        // argmax of epsilon
  int witness_disturbance_index = 0;  // argmax of eta
  // Maximizing (i, j, sign) of delta and its eigenvector.
  int delta_error_index = 0;
  int delta_disturbance_index = 0;
  int delta_sign = +1;
  CVector witness_state;
};

TradeoffReport compute_tradeoff(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                const OrthonormalBasis& b);

}  // namespace edt
