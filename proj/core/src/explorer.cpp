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

#include "edt/explorer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "edt/bloch.hpp"
#include "edt/errors.hpp"
#include "edt/metrics.hpp"
#include "edt/oracle.hpp"
#include "edt/parallel.hpp"

namespace edt {
namespace {

constexpr double kReplaceMargin = 1e-12;

void require_search_dim(int dim) {
  if (dim < 2) {
    std::ostringstream msg;
    msg << "dimension must be at least 2, got " << dim;
    throw ValidationError(msg.str());
  }
  if (dim > kMaxSearchDim) {
    std::ostringstream msg;
    msg << "randomized searches support d <= " << kMaxSearchDim << ", got d = " << dim;
    throw UnsupportedSizeError(msg.str());
  }
}

void require_positive(long value, const char* what) {
  if (value < 1) {
    std::ostringstream msg;
    msg << what << " must be positive, got " << value;
    throw ValidationError(msg.str());
  }
}

double sum_of_parts(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                    const OrthonormalBasis& b) {
  return error(a, ap).value + disturbance(ap, b).value;
}

}  // namespace

// --- scans -----------------------------------------------------------------

ScanTable scan_theorem1(double b_angle, int steps, bool plane_only) {
  if (steps < 3) throw ValidationError("scan needs at least 3 steps");
  if (!std::isfinite(b_angle)) throw ValidationError("b angle must be finite");
  using bloch::BlochVector;
  const BlochVector a{0.0, 0.0, 1.0};
  const BlochVector b = bloch::from_angles(b_angle, 0.0);

  ScanTable table{{"angle", "sum", "delta"}, {}};
  table.rows.reserve(static_cast<std::size_t>(steps));
  const int center = steps / 2;
  for (int k = 0; k < steps; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k - center) / steps;
    const BlochVector ap = plane_only ? BlochVector{std::sin(t), 0.0, std::cos(t)}
                                      : BlochVector{0.0, std::sin(t), std::cos(t)};
    const double sum = bloch::bloch_error(a, ap) + bloch::bloch_disturbance(ap, b);
    const double delta = bloch::bloch_overall(a, ap, b);
    table.rows.push_back({t, sum, delta});
  }
  return table;
}

ScanTable scan_bounds_d3(double overlap1_sq, int steps) {
  constexpr double kEdge = 1e-12;
  if (!(overlap1_sq >= -kEdge && overlap1_sq <= 1.0 / 3.0 + kEdge)) {
    std::ostringstream msg;
    msg << "first squared overlap must lie in [0, 1/3] to respect p1 <= p2 <= p3, got "
        << overlap1_sq;
    throw ValidationError(msg.str());
  }
  if (steps < 1) throw ValidationError("scan needs at least 1 step");
  const double p1 = std::clamp(overlap1_sq, 0.0, 1.0 / 3.0);
  const double upper = (1.0 - p1) / 2.0;
  const OrthonormalBasis ap = OrthonormalBasis::computational(3);

  ScanTable table{{"overlap2_sq", "eta", "bound1", "bound2"}, {}};
  table.rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double frac = steps == 1 ? 0.0 : static_cast<double>(k) / (steps - 1);
    const double p2 = k == steps - 1 && steps > 1 ? upper : p1 + frac * (upper - p1);
    const double p3 = std::max(0.0, 1.0 - p1 - p2);
    CVector first(3);
    first << std::sqrt(p1), std::sqrt(p2), std::sqrt(p3);
    const OrthonormalBasis b = extend_to_basis(first);
    table.rows.push_back({p2, disturbance_for_outcome(ap, b, 0),
                          disturbance_bound_1_for_outcome(ap, b, 0),
                          disturbance_bound_2_for_outcome(ap, b, 0)});
  }
  return table;
}

// --- unbiased pair ----------------------------------------------------------

Theorem2Summary verify_theorem2(int dim, long trials, std::uint64_t seed, unsigned threads,
                                double tolerance) {
  if (dim < 2) throw ValidationError("unbiased-pair check needs dim >= 2");
  require_positive(trials, "trials");
  const OrthonormalBasis a = OrthonormalBasis::computational(dim);
  const OrthonormalBasis b = fourier_basis(dim);

  Theorem2Summary summary;
  summary.dim = dim;
  summary.trials = trials;
  summary.seed = seed;
  summary.floor = 1.0 - 1.0 / dim;
  summary.sum_at_identity = sum_of_parts(a, a, b);

  std::vector<double> sums(static_cast<std::size_t>(trials));
  parallel_for(sums.size(), threads, [&](std::size_t t) {
    const OrthonormalBasis ap = haar_random_basis(dim, derive_seed(seed, t));
    sums[t] = sum_of_parts(a, ap, b);
  });

  summary.min_sum = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < sums.size(); ++t) {
    if (sums[t] < summary.min_sum) {
      summary.min_sum = sums[t];
      summary.min_sum_trial = static_cast<long>(t);
    }
    if (sums[t] - summary.floor < -tolerance) {
      OrthonormalBasis ap = haar_random_basis(dim, derive_seed(seed, t));
      const double delta = overall_error(a, ap, b).value;
      summary.violations.push_back(
          {static_cast<long>(t), sums[t] - summary.floor, delta - summary.floor, {a, ap, b}});
    }
  }
  return summary;
}

// --- conjecture --------------------------------------------------------------

ConjectureSlack conjecture_slack(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                 const OrthonormalBasis& b) {
  ConjectureSlack s;
  s.sum = sum_of_parts(a, ap, b);
  s.delta = overall_error(a, ap, b).value;
  const double relaxed = relaxed_error(a, b).value;
  const double eta_ab = disturbance(a, b).value;
  s.floor = std::min(relaxed, eta_ab);
  s.floor_from_error = relaxed < eta_ab;
  s.slack_sum = s.sum - s.floor;
  s.slack_delta = s.delta - s.floor;
  return s;
}

ConjectureRun conjecture_search(int dim, long trials, std::uint64_t seed, unsigned threads,
                                double tolerance) {
  require_search_dim(dim);
  require_positive(trials, "trials");

  std::vector<ConjectureSlack> slacks(static_cast<std::size_t>(trials));
  parallel_for(slacks.size(), threads, [&](std::size_t t) {
    const BasisTriple triple = random_triple(dim, derive_seed(seed, t));
    slacks[t] = conjecture_slack(triple.a, triple.ap, triple.b);
  });

  ConjectureRun run;
  run.dim = dim;
  run.trials = trials;
  run.seed = seed;
  run.min_slack_sum = std::numeric_limits<double>::infinity();
  run.min_slack_delta = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < slacks.size(); ++t) {
    const ConjectureSlack& s = slacks[t];
    if (s.slack_sum < run.min_slack_sum) {
      run.min_slack_sum = s.slack_sum;
      run.min_slack_sum_trial = static_cast<long>(t);
    }
    if (s.slack_delta < run.min_slack_delta) {
      run.min_slack_delta = s.slack_delta;
      run.min_slack_delta_trial = static_cast<long>(t);
    }
    if (s.floor_from_error)
      ++run.error_branch_trials;
    else
      ++run.disturbance_branch_trials;
    if (s.slack_sum < -tolerance || s.slack_delta < -tolerance) {
      run.violations.push_back({static_cast<long>(t), s.slack_sum, s.slack_delta,
                                random_triple(dim, derive_seed(seed, t))});
    }
  }

  const BasisTriple argmin =
      random_triple(dim, derive_seed(seed, static_cast<std::uint64_t>(run.min_slack_sum_trial)));
  run.argmin_distance_to_a = relaxed_error(argmin.a, argmin.ap).value;
  run.argmin_distance_to_b = relaxed_error(argmin.b, argmin.ap).value;
  return run;
}

// --- minimization over A' ----------------------------------------------------

namespace {

using BasisObjective = std::function<double(const OrthonormalBasis&)>;

struct LocalOptimum {
  double value = 0.0;
  CMatrix unitary;
};

// exp(s K) for anti-Hermitian K = i H, via the eigen-decomposition of H.
struct Exponentiator {
  HermitianEigen eig;
  CMatrix at(double s) const {
    const Eigen::VectorXcd phases = (Complex(0.0, s) * eig.eigenvalues.cast<Complex>())
                                        .array()
                                        .exp()
                                        .matrix();
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  }
};

LocalOptimum local_search(const BasisObjective& objective, CMatrix start, int iterations,
                          Rng& rng) {
  const Eigen::Index d = start.rows();
  const long params = 2 * d * d;
  OrthonormalBasis current = OrthonormalBasis::repaired(std::move(start));
  double value = objective(current);
  double step = 0.3;
  long failures = 0;

  for (int it = 0; it < iterations && step >= 1e-9; ++it) {
    CMatrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index i = 0; i < d; ++i) z(i, j) = rng.complex_normal();
    // H Hermitian, K = iH anti-Hermitian, unit Frobenius norm.
    CMatrix h = (z + z.adjoint()) / 2.0;
    h /= h.norm();
    const Exponentiator exp_k{eig_hermitian(h)};

    bool improved = false;
    for (const double sign : {1.0, -1.0}) {
      CMatrix moved = current.matrix() * exp_k.at(sign * step);
      OrthonormalBasis candidate = OrthonormalBasis::repaired(std::move(moved));
      const double v = objective(candidate);
      if (v < value) {
        current = std::move(candidate);
        value = v;
        improved = true;
        break;
      }
    }
    if (improved) {
      failures = 0;
    } else if (++failures >= params) {
      step /= 2.0;
      failures = 0;
    }
  }
  return {value, current.matrix()};
}

IntermediateOptimum best_of(const std::vector<LocalOptimum>& runs, const OrthonormalBasis& a,
                            const OrthonormalBasis& b) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].value < runs[best].value - kReplaceMargin) best = r;
  const OrthonormalBasis ap = OrthonormalBasis::from_columns(runs[best].unitary);
  IntermediateOptimum out;
  out.value = runs[best].value;
  out.aprime = runs[best].unitary;
  out.restart = static_cast<int>(best);
  out.distance_to_a = relaxed_error(a, ap).value;
  out.distance_to_b = relaxed_error(b, ap).value;
  return out;
}

}  // namespace

MinimizeResult minimize_over_intermediate(const OrthonormalBasis& a, const OrthonormalBasis& b,
                                          const MinimizeOptions& options) {
  require_same_dim(a.dim(), b.dim(), "minimize_over_intermediate");
  const int d = a.dim();
  require_search_dim(d);
  require_positive(options.restarts, "restarts");
  if (options.iterations < 0) throw ValidationError("iterations must be >= 0");

  const RelaxedError closest = relaxed_error(a, b);
  const OrthonormalBasis b_relabeled = relabeled(b, closest.permutation);

  const BasisObjective sum_objective = [&](const OrthonormalBasis& ap) {
    return sum_of_parts(a, ap, b);
  };
  const BasisObjective delta_objective = [&](const OrthonormalBasis& ap) {
    return overall_error(a, ap, b).value;
  };

  const auto restarts = static_cast<std::size_t>(options.restarts);
  std::vector<LocalOptimum> sum_runs(restarts), delta_runs(restarts);
  parallel_for(restarts, options.threads, [&](std::size_t r) {
    const std::uint64_t restart_seed = derive_seed(options.seed, r);
    CMatrix start;
    if (r == 0) {
      start = a.matrix();
    } else if (r == 1) {
      start = b_relabeled.matrix();
    } else {
      Rng start_rng(restart_seed);
      start = haar_random_unitary(d, start_rng);
    }
    Rng sum_rng(derive_seed(restart_seed, 1));
    Rng delta_rng(derive_seed(restart_seed, 2));
    sum_runs[r] = local_search(sum_objective, start, options.iterations, sum_rng);
    delta_runs[r] = local_search(delta_objective, start, options.iterations, delta_rng);
  });

  MinimizeResult result;
  result.floor = std::min(closest.value, disturbance(a, b).value);
  result.sum = best_of(sum_runs, a, b);
  result.delta = best_of(delta_runs, a, b);
  return result;
}

// --- property verification ---------------------------------------------------

bool PropertyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.passed; });
}

namespace {

enum Check : std::size_t {
  kErrorAtMostOne,
  kDisturbanceAtMostMax,
  kErrorEquality,
  kDisturbanceEquality,
  kBound1Dominates,
  kBound2Dominates,
  kCalibrationBound,
  kErrorCalibrationIdentity,
  kQubitBoundEquality,
  kDisturbanceAboveCalibration,
  kPerronNonNegative,
  kPerronTopEigenvalue,
  kSumDecomposition,
  kOverallDominatesParts,
  kPointwiseError,
  kPointwiseDisturbance,
  kReducibilityError,
  kReducibilityDisturbance,
  kSubsystemError,
  kSubsystemDisturbance,
  kCheckCount
};

struct CheckSpec {
  const char* name;
  double tolerance;  // 0 means "use the assertion tolerance"
};

constexpr std::array<CheckSpec, kCheckCount> kChecks{{
    {"property1.error_at_most_one", 1e-12},
    {"property1.disturbance_at_most_1_minus_1_over_d", 0.0},
    {"property1.error_equality_orthogonal_pair", 0.0},
    {"property1.disturbance_equality_unbiased", 0.0},
    {"property4.bound1_dominates", 0.0},
    {"property4.bound2_dominates", 0.0},
    {"property4.calibration_geometric_mean_bound", 0.0},
    {"property4.error_is_sqrt_calibration_error", 0.0},
    {"property4.qubit_bounds_are_equalities", 0.0},
    {"calibration.disturbance_at_least_calibration", 0.0},
    {"perron.rephased_entries_nonnegative", 1e-12},
    {"perron.top_eigenvalue_is_spectral_radius", 1e-10},
    {"overall.at_most_error_plus_disturbance", 0.0},
    {"overall.at_least_each_part", 0.0},
    {"pointwise.state_error_at_most_error", 0.0},
    {"pointwise.state_disturbance_at_most_disturbance", 0.0},
    {"property2.reducibility_error", 1e-12},
    {"property2.reducibility_disturbance", 1e-12},
    {"property3.subsystem_error", 0.0},
    {"property3.subsystem_disturbance", 0.0},
}};

using Margins = std::array<double, kCheckCount>;

Margins empty_margins() {
  Margins m;
  m.fill(std::numeric_limits<double>::quiet_NaN());
  return m;
}

Margins random_instance_margins(int d, std::uint64_t seed) {
  Margins m = empty_margins();
  Rng rng(seed);
  const OrthonormalBasis a = haar_random_basis(d, rng);
  const OrthonormalBasis ap = haar_random_basis(d, rng);
  const OrthonormalBasis b = haar_random_basis(d, rng);
  const DensityMatrix rho = DensityMatrix::pure(haar_random_vector(d, rng));
  const double max_disturbance = 1.0 - 1.0 / d;

  const double eps = error(a, ap).value;
  const double eta = disturbance(ap, b).value;
  const double delta = overall_error(a, ap, b).value;
  const double eps_cal = calibration_error(a, ap);
  const double eta_cal = calibration_disturbance(ap, b);
  const double bound1 = disturbance_bound_1(ap, b);
  const double bound2 = disturbance_bound_2(ap, b);

  m[kErrorAtMostOne] = 1.0 - eps;
  m[kDisturbanceAtMostMax] = max_disturbance - eta;
  m[kBound1Dominates] = bound1 - eta;
  m[kBound2Dominates] = bound2 - eta;
  m[kCalibrationBound] = std::sqrt(max_disturbance * eta_cal) - eta;
  m[kErrorCalibrationIdentity] = -std::abs(eps - std::sqrt(eps_cal));
  if (d == 2) m[kQubitBoundEquality] = -std::max(std::abs(bound1 - eta), std::abs(bound2 - eta));
  m[kDisturbanceAboveCalibration] = eta - eta_cal;
  m[kSumDecomposition] = eps + eta - delta;
  m[kOverallDominatesParts] = delta - std::max(eps, eta);
  m[kPointwiseError] = eps - state_dependent_error(a, ap, rho);
  m[kPointwiseDisturbance] = eta - state_dependent_disturbance(ap, b, rho);

  double min_entry = std::numeric_limits<double>::infinity();
  double worst_top = 0.0;
  for (int i = 0; i < d; ++i) {
    const Eigen::MatrixXd r = rephased_disturbance_matrix(ap, b, i);
    min_entry = std::min(min_entry, r.minCoeff());
    const HermitianEigen e = eig_hermitian(r.cast<Complex>());
    const double radius = std::max(std::abs(e.eigenvalues(0)), std::abs(e.eigenvalues(d - 1)));
    worst_top = std::max(worst_top, std::abs(e.eigenvalues(d - 1) - radius));
  }
  m[kPerronNonNegative] = std::min(0.0, min_entry);
  m[kPerronTopEigenvalue] = -worst_top;

  // Equality instances built from the same random frame.
  CMatrix swapped = a.matrix();
  swapped.col(0).swap(swapped.col(1));
  m[kErrorEquality] = -std::abs(error(a, OrthonormalBasis::from_columns(swapped)).value - 1.0);
  const OrthonormalBasis unbiased =
      OrthonormalBasis::from_columns(ap.matrix() * fourier_basis(d).matrix());
  m[kDisturbanceEquality] = -std::abs(disturbance(ap, unbiased).value - max_disturbance);
  return m;
}

Margins structured_instance_margins(std::uint64_t seed) {
  Margins m = empty_margins();
  Rng rng(seed);
  auto qubit_triple = [&rng]() -> BasisTriple {
    OrthonormalBasis a = haar_random_basis(2, rng);
    OrthonormalBasis ap = haar_random_basis(2, rng);
    OrthonormalBasis b = haar_random_basis(2, rng);
    return {std::move(a), std::move(ap), std::move(b)};
  };
  const BasisTriple first = qubit_triple();
  const BasisTriple second = qubit_triple();

  const BasisTriple sum = direct_sum({{first, second}});
  const double block_eps = std::max(error(first.a, first.ap).value, error(second.a, second.ap).value);
  const double block_eta =
      std::max(disturbance(first.ap, first.b).value, disturbance(second.ap, second.b).value);
  m[kReducibilityError] = -std::abs(error(sum.a, sum.ap).value - block_eps);
  m[kReducibilityDisturbance] = -std::abs(disturbance(sum.ap, sum.b).value - block_eta);

  const BasisTriple product = tensor_product({first, second});
  m[kSubsystemError] = error(product.a, product.ap).value - block_eps;
  m[kSubsystemDisturbance] = disturbance(product.ap, product.b).value - block_eta;
  return m;
}

void fold(std::vector<PropertyCheck>& checks, const Margins& margins) {
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    if (std::isnan(margins[c])) continue;
    PropertyCheck& check = checks[c];
    if (check.instances == 0 || margins[c] < check.worst_margin) check.worst_margin = margins[c];
    ++check.instances;
  }
}

}  // namespace

PropertyReport verify_properties(const PropertyOptions& options) {
  require_positive(options.trials, "trials");
  require_positive(options.structured_trials, "structured trials");
  for (const int d : options.dims) {
    if (d < 2 || d > kMaxDim) {
      std::ostringstream msg;
      msg << "property dimensions must lie in [2, " << kMaxDim << "], got " << d;
      throw ValidationError(msg.str());
    }
  }

  std::vector<PropertyCheck> checks(kCheckCount);
  for (std::size_t c = 0; c < kCheckCount; ++c) checks[c].name = kChecks[c].name;

  for (const int d : options.dims) {
    std::vector<Margins> margins(static_cast<std::size_t>(options.trials));
    const std::uint64_t dim_seed = derive_seed(options.seed, static_cast<std::uint64_t>(d));
    parallel_for(margins.size(), options.threads, [&](std::size_t t) {
      margins[t] = random_instance_margins(d, derive_seed(dim_seed, t));
    });
    for (const Margins& m : margins) fold(checks, m);
  }

  std::vector<Margins> structured(static_cast<std::size_t>(options.structured_trials));
  const std::uint64_t structured_seed = derive_seed(options.seed, 1000);
  parallel_for(structured.size(), options.threads, [&](std::size_t t) {
    structured[t] = structured_instance_margins(derive_seed(structured_seed, t));
  });
  for (const Margins& m : structured) fold(checks, m);

  for (std::size_t c = 0; c < kCheckCount; ++c) {
    const double tolerance = kChecks[c].tolerance > 0.0 ? kChecks[c].tolerance : options.tolerance;
    checks[c].passed = checks[c].instances == 0 || checks[c].worst_margin >= -tolerance;
  }
  return {std::move(checks)};
}

// --- oracle cross-check ------------------------------------------------------

OracleCheckReport oracle_check(const OracleCheckOptions& options) {
  require_search_dim(options.dim);
  require_positive(options.trials, "trials");

  struct Gaps {
    double error = 0.0, disturbance = 0.0, delta = 0.0, eig = 0.0;
  };
  std::vector<Gaps> gaps(static_cast<std::size_t>(options.trials));
  parallel_for(gaps.size(), options.threads, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(options.seed, t);
    const BasisTriple triple = random_triple(options.dim, trial_seed);
    oracle::SearchOptions search;
    search.samples = options.samples;
    search.refine_iters = options.refine_iters;
    search.seed = derive_seed(trial_seed, 1);

    Gaps g;
    g.error = oracle::max_error_over_states(triple.a, triple.ap, search).value -
              error(triple.a, triple.ap).value;
    g.disturbance = oracle::max_disturbance_over_states(triple.ap, triple.b, search).value -
                    disturbance(triple.ap, triple.b).value;
    g.delta = oracle::max_sum_over_states(triple.a, triple.ap, triple.b, search).value -
              overall_error(triple.a, triple.ap, triple.b).value;

    Rng rng(derive_seed(trial_seed, 2));
    for (const int n : {2, 3}) {
      CMatrix z(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) z(i, j) = rng.complex_normal();
      const CMatrix h = (z + z.adjoint()) / 2.0;
      const Eigen::VectorXd jacobi = eig_hermitian(h).eigenvalues;
      if (n == 2) {
        const auto closed = oracle::eig2_closed(h);
        for (int k = 0; k < 2; ++k) g.eig = std::max(g.eig, std::abs(jacobi(k) - closed[static_cast<std::size_t>(k)]));
      } else {
        const auto closed = oracle::eig3_closed(h);
        for (int k = 0; k < 3; ++k) g.eig = std::max(g.eig, std::abs(jacobi(k) - closed[static_cast<std::size_t>(k)]));
      }
    }
    gaps[t] = g;
  });

  OracleCheckReport report;
  report.dim = options.dim;
  report.trials = options.trials;
  report.min_gap_error = report.min_gap_disturbance = report.min_gap_delta =
      std::numeric_limits<double>::infinity();
  report.max_gap_error = report.max_gap_disturbance = report.max_gap_delta =
      -std::numeric_limits<double>::infinity();
  for (const Gaps& g : gaps) {
    report.min_gap_error = std::min(report.min_gap_error, g.error);
    report.max_gap_error = std::max(report.max_gap_error, g.error);
    report.min_gap_disturbance = std::min(report.min_gap_disturbance, g.disturbance);
    report.max_gap_disturbance = std::max(report.max_gap_disturbance, g.disturbance);
    report.min_gap_delta = std::min(report.min_gap_delta, g.delta);
    report.max_gap_delta = std::max(report.max_gap_delta, g.delta);
    report.max_closed_form_eig_diff = std::max(report.max_closed_form_eig_diff, g.eig);
  }
  const double lo = -options.lower_gap;
  const double hi = options.upper_slack;
  report.passed = report.min_gap_error >= lo && report.max_gap_error <= hi &&
                  report.min_gap_disturbance >= lo && report.max_gap_disturbance <= hi &&
                  report.min_gap_delta >= lo && report.max_gap_delta <= hi &&
                  report.max_closed_form_eig_diff <= tol::kAssertion;
  return report;
}

}  // namespace edt
