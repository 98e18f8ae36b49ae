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

#include "edt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include "edt/errors.hpp"
#include "edt/parallel.hpp"
#include "edt/tolerances.hpp"

namespace edt::oracle {
namespace {

constexpr double kInitialStep = 0.1;
constexpr double kStepFloor = 1e-10;

struct Refined {
  CVector psi;
  double value = 0.0;
  long iterations = 0;
};

Refined refine(const PureStateObjective& objective, CVector psi, double value, int max_iters) {
  const Eigen::Index d = psi.size();
  const Complex directions[2] = {Complex(1.0, 0.0), Complex(0.0, 1.0)};
  double step = kInitialStep;
  long iters = 0;
  while (iters < max_iters && step >= kStepFloor) {
    bool improved = false;
    for (Eigen::Index k = 0; k < d; ++k) {
      for (const Complex& dir : directions) {
        for (const double sign : {1.0, -1.0}) {
          CVector trial = psi;
          trial(k) += sign * step * dir;
          trial /= trial.norm();
          const double v = objective(trial);
          if (v > value) {
            psi = std::move(trial);
            value = v;
            improved = true;
          }
        }
      }
    }
    ++iters;
    if (!improved) step /= 2.0;
  }
  return {std::move(psi), value, iters};
}

CVector sample_vector(int dim, std::uint64_t seed, long k) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
  return haar_random_vector(dim, rng);
}

void require_options(const SearchOptions& options) {
  if (options.samples < 1) throw ValidationError("oracle needs at least one sample");
  if (options.refine_iters < 0) throw ValidationError("refinement iterations must be >= 0");
}

}  // namespace

OracleResult maximize_pure(int dim, const PureStateObjective& objective,
                           const SearchOptions& options) {
  require_options(options);
  if (dim < 1) throw ValidationError("oracle dimension must be positive");
  const auto n = static_cast<std::size_t>(options.samples);
  std::vector<double> values(n);
  parallel_for(n, options.threads, [&](std::size_t k) {
    values[k] = objective(sample_vector(dim, options.seed, static_cast<long>(k)));
  });

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t keep =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, options.refine_candidates)));
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::size_t x, std::size_t y) {
                      return values[x] != values[y] ? values[x] > values[y] : x < y;
                    });

  OracleResult result;
  result.samples_used = options.samples;
  result.value = -1.0;
  for (std::size_t c = 0; c < keep; ++c) {
    const std::size_t k = order[c];
    Refined r = refine(objective, sample_vector(dim, options.seed, static_cast<long>(k)),
                       values[k], options.refine_iters);
    result.refinement_steps += r.iterations;
    if (r.value > result.value) {
      result.value = r.value;
      result.maximizer = std::move(r.psi);
    }
  }
  return result;
}

namespace {

double quadratic_form(const CMatrix& h, const CVector& psi) { return psi.dot(h * psi).real(); }

// Maximizes `objective`, which must equal the largest of <psi|forms[t]|psi>
// over t. Each form is a Rayleigh quotient without spurious local maxima, so
// refining every form from its own best samples avoids the traps of the
// nonsmooth objective. One shared sample set serves all forms.
OracleResult maximize_forms(int dim, const std::vector<CMatrix>& forms,
                            const PureStateObjective& objective, const SearchOptions& options) {
  require_options(options);
  const auto n = static_cast<std::size_t>(options.samples);
  const std::size_t terms = forms.size();
  std::vector<double> values(n * terms);
  parallel_for(n, options.threads, [&](std::size_t k) {
    const CVector psi = sample_vector(dim, options.seed, static_cast<long>(k));
    for (std::size_t t = 0; t < terms; ++t) values[k * terms + t] = quadratic_form(forms[t], psi);
  });

  const std::size_t keep =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, options.refine_candidates)));
  std::vector<std::size_t> order(n);
  OracleResult result;
  result.samples_used = options.samples;
  result.value = -1.0;
  for (std::size_t t = 0; t < terms; ++t) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::size_t x, std::size_t y) {
                        const double vx = values[x * terms + t];
                        const double vy = values[y * terms + t];
                        return vx != vy ? vx > vy : x < y;
                      });
    const CMatrix& h = forms[t];
    const PureStateObjective term = [&h](const CVector& psi) { return quadratic_form(h, psi); };
    for (std::size_t c = 0; c < keep; ++c) {
      const std::size_t k = order[c];
      Refined r = refine(term, sample_vector(dim, options.seed, static_cast<long>(k)),
                         values[k * terms + t], options.refine_iters);
      result.refinement_steps += r.iterations;
      const double v = objective(r.psi);
      if (v > result.value) {
        result.value = v;
        result.maximizer = std::move(r.psi);
      }
    }
  }
  return result;
}

// Born-rule difference operators, built from projectors directly:
// error_forms[i] = P(a_i) - P(a'_i), disturbance_forms[j] = P(b_j) - sum_k
// |<b_j|a'_k>|^2 P(a'_k).
std::vector<CMatrix> error_forms(const OrthonormalBasis& a, const OrthonormalBasis& ap) {
  std::vector<CMatrix> out;
  for (int i = 0; i < a.dim(); ++i) out.push_back(a.projector(i) - ap.projector(i));
  return out;
}

std::vector<CMatrix> disturbance_forms(const OrthonormalBasis& ap, const OrthonormalBasis& b) {
  std::vector<CMatrix> out;
  for (int j = 0; j < b.dim(); ++j) {
    CMatrix g = b.projector(j);
    for (int k = 0; k < ap.dim(); ++k) g -= std::norm(b.vector(j).dot(ap.vector(k))) * ap.projector(k);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<CMatrix> with_both_signs(const std::vector<CMatrix>& forms) {
  std::vector<CMatrix> out;
  for (const CMatrix& f : forms) {
    out.push_back(f);
    out.push_back(-f);
  }
  return out;
}

}  // namespace

OracleResult max_expectation(const CMatrix& m, const SearchOptions& options) {
  require_hermitian(m, tol::kValidation);
  const CMatrix h = (m + m.adjoint()) / 2.0;
  // |<psi|h|psi>| has a local maximum at each extreme eigenvector; the
  // signed forms have none besides the global one.
  return maximize_forms(static_cast<int>(h.rows()), {h, -h},
                        [&](const CVector& psi) { return std::abs(quadratic_form(h, psi)); },
                        options);
}

double pure_state_error(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                        const CVector& psi) {
  const Eigen::VectorXd pa = (a.matrix().adjoint() * psi).cwiseAbs2();
  const Eigen::VectorXd pap = (ap.matrix().adjoint() * psi).cwiseAbs2();
  return (pa - pap).cwiseAbs().maxCoeff();
}

namespace {

// transition(i, k) = |<b_i|a'_k>|^2
Eigen::MatrixXd transition_matrix(const OrthonormalBasis& ap, const OrthonormalBasis& b) {
  return (b.matrix().adjoint() * ap.matrix()).cwiseAbs2();
}

double disturbance_with(const Eigen::MatrixXd& transition, const OrthonormalBasis& ap,
                        const OrthonormalBasis& b, const CVector& psi) {
  const Eigen::VectorXd direct = (b.matrix().adjoint() * psi).cwiseAbs2();
  const Eigen::VectorXd intermediate = (ap.matrix().adjoint() * psi).cwiseAbs2();
  const Eigen::VectorXd after = transition * intermediate;
  return (direct - after).cwiseAbs().maxCoeff();
}

}  // namespace

double pure_state_disturbance(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                              const CVector& psi) {
  return disturbance_with(transition_matrix(ap, b), ap, b, psi);
}

OracleResult max_error_over_states(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                   const SearchOptions& options) {
  require_same_dim(a.dim(), ap.dim(), "max_error_over_states");
  return maximize_forms(a.dim(), with_both_signs(error_forms(a, ap)),
                        [&](const CVector& psi) { return pure_state_error(a, ap, psi); }, options);
}

OracleResult max_disturbance_over_states(const OrthonormalBasis& ap, const OrthonormalBasis& b,
                                         const SearchOptions& options) {
  require_same_dim(ap.dim(), b.dim(), "max_disturbance_over_states");
  const Eigen::MatrixXd transition = transition_matrix(ap, b);
  return maximize_forms(
      b.dim(), with_both_signs(disturbance_forms(ap, b)),
      [&](const CVector& psi) { return disturbance_with(transition, ap, b, psi); }, options);
}

OracleResult max_sum_over_states(const OrthonormalBasis& a, const OrthonormalBasis& ap,
                                 const OrthonormalBasis& b, const SearchOptions& options) {
  require_same_dim(a.dim(), ap.dim(), "max_sum_over_states");
  require_same_dim(ap.dim(), b.dim(), "max_sum_over_states");
  // max_i |e_i| + max_j |g_j| = max over (i, j, s, t) of s e_i + t g_j.
  const std::vector<CMatrix> e = with_both_signs(error_forms(a, ap));
  const std::vector<CMatrix> g = with_both_signs(disturbance_forms(ap, b));
  std::vector<CMatrix> sums;
  sums.reserve(e.size() * g.size());
  for (const CMatrix& x : e)
    for (const CMatrix& y : g) sums.push_back(x + y);
  const Eigen::MatrixXd transition = transition_matrix(ap, b);
  return maximize_forms(
      a.dim(), sums,
      [&](const CVector& psi) {
        return pure_state_error(a, ap, psi) + disturbance_with(transition, ap, b, psi);
      },
      options);
}

std::array<double, 2> eig2_closed(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    std::ostringstream msg;
    msg << "eig2_closed needs a 2x2 matrix, got " << m.rows() << "x" << m.cols();
    throw ValidationError(msg.str());
  }
  require_hermitian(m, tol::kValidation);
  const double p = m(0, 0).real();
  const double q = m(1, 1).real();
  const double mean = (p + q) / 2.0;
  const double radius = std::hypot((p - q) / 2.0, std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

std::array<double, 3> eig3_closed(const CMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) {
    std::ostringstream msg;
    msg << "eig3_closed needs a 3x3 matrix, got " << m.rows() << "x" << m.cols();
    throw ValidationError(msg.str());
  }
  require_hermitian(m, tol::kValidation);
  const CMatrix h = (m + m.adjoint()) / 2.0;
  const double off = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
  const double q = h.trace().real() / 3.0;
  const double d0 = h(0, 0).real() - q;
  const double d1 = h(1, 1).real() - q;
  const double d2 = h(2, 2).real() - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * off;
  if (p2 == 0.0) return {q, q, q};
  const double p = std::sqrt(p2 / 6.0);

  // B = (H - qI)/p; r = det(B)/2 lies in [-1, 1].
  CMatrix shifted = h - q * CMatrix::Identity(3, 3);
  shifted /= p;
  const Complex det =
      shifted(0, 0) * (shifted(1, 1) * shifted(2, 2) - shifted(1, 2) * shifted(2, 1)) -
      shifted(0, 1) * (shifted(1, 0) * shifted(2, 2) - shifted(1, 2) * shifted(2, 0)) +
      shifted(0, 2) * (shifted(1, 0) * shifted(2, 1) - shifted(1, 1) * shifted(2, 0));
  const double r = std::clamp(det.real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double largest = q + 2.0 * p * std::cos(phi);
  const double smallest = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double middle = 3.0 * q - largest - smallest;
  return {smallest, middle, largest};
}

}  // namespace edt::oracle
