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
#include <optional>
#include <string>
#include <vector>

#include "edt/measurement.hpp"
#include "edt/structures.hpp"
#include "edt/tolerances.hpp"

// Experiment drivers. Every driver is a pure function of its parameters and
// seed; per-trial seeds are derive_seed(seed, trial), so results do not
// depend on the worker count.
namespace edt {

struct ScanTable {
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> rows;
};

/// Qubit sweep with a = +z and b at polar angle `b_angle` in the xz-plane.
/// a' runs over the great circle through a in Span{a, b} (or, when
/// `plane_only` is false, the circle through a perpendicular to that plane).
/// Columns: angle, sum (eps + eta), delta. Angles are 2 pi (k - steps/2) /
/// steps, so the grid always contains 0.
ScanTable scan_theorem1(double b_angle, int steps, bool plane_only = true);

/// d = 3 disturbance against its two upper bounds for a single outcome b
/// with squared overlaps (p1, p2, 1 - p1 - p2) on {|a'_k>}. p1 is fixed and
/// p2 sweeps [p1, (1 - p1)/2] so that p1 <= p2 <= p3.
/// Columns: overlap2_sq, eta, bound1, bound2.
ScanTable scan_bounds_d3(double overlap1_sq, int steps);

struct TrialViolation {
  long trial = 0;
  double slack_sum = 0.0;
  double slack_delta = 0.0;
  BasisTriple instance;
};

struct Theorem2Summary {
  int dim = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  double floor = 0.0;            // 1 - 1/d
  double sum_at_identity = 0.0;  // eps + eta at A' = A
  double min_sum = 0.0;          // over the random A'
  long min_sum_trial = -1;
  std::vector<TrialViolation> violations;
};

/// A = computational, B = Fourier, A' Haar-random per trial.
Theorem2Summary verify_theorem2(int dim, long trials, std::uint64_t seed, unsigned threads = 1,
                                double tolerance = tol::kAssertion);

struct ConjectureSlack {
  double sum = 0.0;    // eps(A, A') + eta(A', B)
  double delta = 0.0;  // Delta(A, A', B)
  double floor = 0.0;  // min(relaxed eps(A, B), eta(A, B))
  double slack_sum = 0.0;
  double slack_delta = 0.0;
  bool floor_from_error = false;  // relaxed eps(A, B) < eta(A, B)
};

ConjectureSlack conjecture_slack(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                 const OrthonormalBasis& b);

/// Largest dimension accepted by the randomized searches.
inline constexpr int kMaxSearchDim = 5;

struct ConjectureRun {
  int dim = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  double min_slack_sum = 0.0;
  double min_slack_delta = 0.0;
  long min_slack_sum_trial = -1;
  long min_slack_delta_trial = -1;
  long error_branch_trials = 0;  // trials whose floor is the relaxed error
  long disturbance_branch_trials = 0;
  std::vector<TrialViolation> violations;
  // Relaxed-error distance of the A' of the min_slack_sum trial to A and B.
  double argmin_distance_to_a = 0.0;
  double argmin_distance_to_b = 0.0;
};

/// Haar-random (A, A', B) per trial.
ConjectureRun conjecture_search(int dim, long trials, std::uint64_t seed, unsigned threads = 1,
                                double tolerance = tol::kAssertion);

struct MinimizeOptions {
  int restarts = 20;
  int iterations = 500;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct IntermediateOptimum {
  double value = 0.0;
  CMatrix aprime;  // columns form the best A'
  int restart = 0;
  double distance_to_a = 0.0;  // relaxed_error(A, A')
  double distance_to_b = 0.0;  // relaxed_error(B, A')
};

struct MinimizeResult {
  double floor = 0.0;  // conjecture_floor(A, B)
  IntermediateOptimum sum;
  IntermediateOptimum delta;
};

/// Random-restart local search over A' for both eps(A, A') + eta(A', B) and
/// Delta(A, A', B). Restart 0 starts at A, restart 1 at the relabeling of B
/// closest to A, the rest at Haar-random bases. Each iteration tries
/// A' exp(+/- s K) for a random anti-Hermitian direction K (2 d^2 real
/// parameters); s halves after 2 d^2 consecutive failures. A later restart
/// replaces the incumbent only if it is lower by more than 1e-12.
MinimizeResult minimize_over_intermediate(const OrthonormalBasis& a, const OrthonormalBasis& b,
                                          const MinimizeOptions& options);

struct PropertyCheck {
  std::string name;
  long instances = 0;
  /// Smallest slack seen; negative beyond -tolerance means a violation.
  double worst_margin = 0.0;
  bool passed = true;
};

struct PropertyOptions {
  std::vector<int> dims{2, 3, 4, 5};
  long trials = 1000;
  long structured_trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double tolerance = tol::kAssertion;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

/// Bounds, bound estimates, calibration relations, rephasing, reducibility
/// and subsystem properties over seeded random instances.
PropertyReport verify_properties(const PropertyOptions& options);

struct OracleCheckOptions {
  int dim = 3;
  long trials = 100;
  std::uint64_t seed = 0;
  long samples = 10000;
  int refine_iters = 200;
  unsigned threads = 1;
  double lower_gap = 1e-4;
  double upper_slack = tol::kAssertion;
};

struct OracleCheckReport {
  int dim = 0;
  long trials = 0;
  // Extremes of (oracle - analytic) per quantity.
  double min_gap_error = 0.0, max_gap_error = 0.0;
  double min_gap_disturbance = 0.0, max_gap_disturbance = 0.0;
  double min_gap_delta = 0.0, max_gap_delta = 0.0;
  double max_closed_form_eig_diff = 0.0;  // Jacobi vs closed form (d = 2, 3)
  bool passed = true;
};

/// Cross-validates the spectral formulas against sampled maxima over pure
/// states, and the Jacobi solver against closed-form 2x2 / 3x3 eigenvalues.
OracleCheckReport oracle_check(const OracleCheckOptions& options);

}  // namespace edt
