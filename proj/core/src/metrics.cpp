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

#include "edt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "edt/errors.hpp"

namespace edt {
namespace {

double clamped_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

// |<b_i|a'_k>|^2 for all k.
Eigen::VectorXd overlaps_of_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                    int i) {
  return (ap.matrix().adjoint() * b.matrix().col(i)).cwiseAbs2();
}

// 1 - |<a_i|b_j>|^2 written as sum_{k != j} |<a_i|b_k>|^2, which stays
// accurate near zero where the direct difference loses half the digits.
Eigen::MatrixXd infidelities(const OrthonormalBasis& a, const OrthonormalBasis& b) {
  const Eigen::MatrixXd f = a.overlaps_squared(b);
  const Eigen::Index d = f.rows();
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      double sum = 0.0;
      for (Eigen::Index k = 0; k < d; ++k)
        if (k != j) sum += f(i, k);
      out(i, j) = std::min(1.0, sum);
    }
  return out;
}

void require_outcome(const OrthonormalBasis& basis, int i) {
  if (i < 0 || i >= basis.dim()) {
    std::ostringstream msg;
    msg << "outcome index " << i << " out of range for dimension " << basis.dim();
    throw ValidationError(msg.str());
  }
}

}  // namespace

double state_dependent_error(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                             const DensityMatrix& rho) {
  require_same_dim(a.dim(), ap.dim(), "state_dependent_error");
  return infinity_distance(born_probabilities(a, rho), born_probabilities(ap, rho));
}

double state_dependent_disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                   const DensityMatrix& rho) {
  require_same_dim(ap.dim(), b.dim(), "state_dependent_disturbance");
  return infinity_distance(born_probabilities(b, rho),
                           born_probabilities(b, post_measurement_state(ap, rho)));
}

IndexedValue error(const OrthonormalBasis& a, const OrthonormalBasis& ap) {
  require_same_dim(a.dim(), ap.dim(), "error");
  const Eigen::MatrixXd miss = infidelities(a, ap);
  IndexedValue best{-1.0, 0};
  for (int i = 0; i < a.dim(); ++i) {
    const double value = clamped_sqrt(miss(i, i));
    if (value > best.value) best = {value, i};
  }
  return best;
}

CMatrix error_matrix(const OrthonormalBasis& a, const OrthonormalBasis& ap, int i) {
  require_same_dim(a.dim(), ap.dim(), "error_matrix");
  require_outcome(a, i);
  return a.projector(i) - ap.projector(i);
}

CMatrix disturbance_matrix(const OrthonormalBasis& ap, const OrthonormalBasis& b, int i) {
  require_same_dim(ap.dim(), b.dim(), "disturbance_matrix");
  require_outcome(b, i);
  const Eigen::VectorXd weights = overlaps_of_outcome(ap, b, i);
  const CMatrix& u = ap.matrix();
  return b.projector(i) - u * weights.cast<Complex>().asDiagonal() * u.adjoint();
}

double disturbance_for_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b, int i) {
  return spectral_radius(disturbance_matrix(ap, b, i));
}

IndexedValue disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b) {
  require_same_dim(ap.dim(), b.dim(), "disturbance");
  IndexedValue best{-1.0, 0};
  for (int i = 0; i < b.dim(); ++i) {
    const double value = disturbance_for_outcome(ap, b, i);
    if (value > best.value) best = {value, i};
  }
  return best;
}

OrthonormalBasis rephase_against(const CVector& target, const OrthonormalBasis& basis) {
  require_same_dim(static_cast<int>(target.size()), basis.dim(), "rephase_against");
  CMatrix columns = basis.matrix();
  for (Eigen::Index k = 0; k < columns.cols(); ++k) {
    const Complex overlap = target.dot(columns.col(k));
    const double magnitude = std::abs(overlap);
    if (magnitude > 0.0) columns.col(k) *= std::conj(overlap) / magnitude;
  }
  return OrthonormalBasis::from_columns(std::move(columns));
}

Eigen::MatrixXd rephased_disturbance_matrix(const OrthonormalBasis& ap,
                                            const OrthonormalBasis& b, int i) {
  const OrthonormalBasis rephased = rephase_against(b.vector(i), ap);
  const CMatrix m = disturbance_matrix(rephased, b, i);
  const CMatrix in_basis = rephased.matrix().adjoint() * m * rephased.matrix();
  return in_basis.real();
}

OverallError overall_error(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                           const OrthonormalBasis& b) {
  require_same_dim(a.dim(), ap.dim(), "overall_error");
  require_same_dim(ap.dim(), b.dim(), "overall_error");
  const int d = a.dim();
  std::vector<CMatrix> errors, disturbances;
  errors.reserve(static_cast<std::size_t>(d));
  disturbances.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    errors.push_back(error_matrix(a, ap, i));
    disturbances.push_back(disturbance_matrix(ap, b, i));
  }

  OverallError best;
  best.value = -1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const int sign : {+1, -1}) {
        const CMatrix m = errors[static_cast<std::size_t>(i)] +
                          static_cast<double>(sign) * disturbances[static_cast<std::size_t>(j)];
        DominantEigen top = dominant_eigen(m);
        if (top.radius > best.value) {
          best.value = top.radius;
          best.error_index = i;
          best.disturbance_index = j;
          best.sign = sign;
          best.witness = std::move(top.eigenvector);
        }
      }
    }
  }
  return best;
}

double calibration_error(const OrthonormalBasis& a, const OrthonormalBasis& ap) {
  require_same_dim(a.dim(), ap.dim(), "calibration_error");
  return infidelities(a, ap).diagonal().maxCoeff();
}

double calibration_disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b) {
  require_same_dim(ap.dim(), b.dim(), "calibration_disturbance");
  double worst = 0.0;
  for (int i = 0; i < b.dim(); ++i)
    worst = std::max(worst, 1.0 - overlaps_of_outcome(ap, b, i).squaredNorm());
  return worst;
}

double disturbance_bound_1_for_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                       int i) {
  require_same_dim(ap.dim(), b.dim(), "disturbance_bound_1");
  require_outcome(b, i);
  const double d = b.dim();
  return clamped_sqrt((1.0 - 1.0 / d) * (1.0 - overlaps_of_outcome(ap, b, i).squaredNorm()));
}

double disturbance_bound_2_for_outcome(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                       int i) {
  require_same_dim(ap.dim(), b.dim(), "disturbance_bound_2");
  require_outcome(b, i);
  const Eigen::VectorXd moduli = overlaps_of_outcome(ap, b, i).cwiseSqrt();
  const double total = moduli.sum();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < moduli.size(); ++j)
    worst = std::max(worst, moduli(j) * (total - moduli(j)));
  return worst;
}

double disturbance_bound_1(const OrthonormalBasis& ap, const OrthonormalBasis& b) {
  double worst = 0.0;
  for (int i = 0; i < b.dim(); ++i)
    worst = std::max(worst, disturbance_bound_1_for_outcome(ap, b, i));
  return worst;
}

double disturbance_bound_2(const OrthonormalBasis& ap, const OrthonormalBasis& b) {
  double worst = 0.0;
  for (int i = 0; i < b.dim(); ++i)
    worst = std::max(worst, disturbance_bound_2_for_outcome(ap, b, i));
  return worst;
}

RelaxedError relaxed_error(const OrthonormalBasis& a, const OrthonormalBasis& b) {
  require_same_dim(a.dim(), b.dim(), "relaxed_error");
  const int d = a.dim();
  if (d > kMaxRelabelDim) {
    std::ostringstream msg;
    msg << "relaxed error enumerates relabelings only up to d = " << kMaxRelabelDim
        << ", got d = " << d;
    throw UnsupportedSizeError(msg.str());
  }
  // miss(i, j) = 1 - |<a_i|b_j>|^2
  const Eigen::MatrixXd miss = infidelities(a, b);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);

  // Minimize the largest matched infidelity; first permutation wins ties.
  double best_max = 2.0;
  std::vector<int> best_perm = perm;
  do {
    double worst = 0.0;
    for (int i = 0; i < d && worst < best_max; ++i)
      worst = std::max(worst, miss(i, perm[static_cast<std::size_t>(i)]));
    if (worst < best_max) {
      best_max = worst;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {clamped_sqrt(best_max), std::move(best_perm)};
}

OrthonormalBasis relabeled(const OrthonormalBasis& b, const std::vector<int>& permutation) {
  const int d = b.dim();
  if (static_cast<int>(permutation.size()) != d)
    throw ValidationError("relabeling must list every outcome exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  CMatrix columns(d, d);
  for (int i = 0; i < d; ++i) {
    const int src = permutation[static_cast<std::size_t>(i)];
    if (src < 0 || src >= d || seen[static_cast<std::size_t>(src)])
      throw ValidationError("relabeling must list every outcome exactly once");
    seen[static_cast<std::size_t>(src)] = true;
    columns.col(i) = b.matrix().col(src);
  }
  return OrthonormalBasis::from_columns(std::move(columns));
}

double conjecture_floor(const OrthonormalBasis& a, const OrthonormalBasis& b) {
  return std::min(relaxed_error(a, b).value, disturbance(a, b).value);
}

TradeoffReport compute_tradeoff(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                const OrthonormalBasis& b) {
  const IndexedValue eps = error(a, ap);
  const IndexedValue eta = disturbance(ap, b);
  OverallError delta = overall_error(a, ap, b);

  TradeoffReport report;
  report.dim = a.dim();
  report.epsilon = eps.value;
  report.eta = eta.value;
  report.delta = delta.value;
  report.epsilon_cal = calibration_error(a, ap);
  report.eta_cal = calibration_disturbance(ap, b);
  report.bound1 = disturbance_bound_1(ap, b);
  report.bound2 = disturbance_bound_2(ap, b);
  report.witness_error_index = eps.index;
  report.witness_disturbance_index = eta.index;
  report.delta_error_index = delta.error_index;
  report.delta_disturbance_index = delta.disturbance_index;
  report.delta_sign = delta.sign;
  report.witness_state = std::move(delta.witness);
  return report;
}

}  // namespace edt
