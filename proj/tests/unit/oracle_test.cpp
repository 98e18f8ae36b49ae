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

#include <cmath>
#include <numbers>

#include "edt/bloch.hpp"
#include "edt/errors.hpp"
#include "edt/metrics.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace edt::oracle {
namespace {

using testing::random_hermitian;

SearchOptions options(std::uint64_t seed, long samples = 10000, int refine = 200) {
  SearchOptions o;
  o.seed = seed;
  o.samples = samples;
  o.refine_iters = refine;
  return o;
}

// Largest-modulus root of det(m - x) via the real cubic x^3 + c2 x^2 + c1 x + c0.
double cubic_largest_modulus(const CMatrix& m) {
  const double tr = m.trace().real();
  const double minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                         m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                            .real();
  const double det = m.determinant().real();
  // Depressed cubic t^3 + p t + q with x = t + tr/3.
  const double shift = tr / 3.0;
  const double p = minors - tr * tr / 3.0;
  const double q = -(2.0 * tr * tr * tr / 27.0 - tr * minors / 3.0 + det);
  double best = 0.0;
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
  for (int k = 0; k < 3; ++k) {
    const double x = r * std::cos(std::acos(arg) / 3.0 - 2.0 * std::numbers::pi * k / 3.0) + shift;
    best = std::max(best, std::abs(x));
  }
  return best;
}

TEST(MaxExpectation, ZeroMatrix) {
  EXPECT_EQ(max_expectation(CMatrix::Zero(3, 3), options(1, 100, 10)).value, 0.0);
}

TEST(MaxExpectation, QubitKnownEigenvalues) {
  for (double lambda : {0.1, 0.7, 2.5}) {
    CMatrix m(2, 2);
    m << lambda * 0.6, Complex(0.0, -lambda * 0.8), Complex(0.0, lambda * 0.8), -lambda * 0.6;
    const OracleResult r = max_expectation(m, options(2));
    EXPECT_NEAR(r.value, lambda, 1e-6);
    EXPECT_LE(r.value, lambda + 1e-9);
  }
}

TEST(MaxExpectation, CubicClosedFormOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = random_hermitian(3, rng);
    const double expected = cubic_largest_modulus(m);
    const OracleResult r = max_expectation(m, options(static_cast<std::uint64_t>(trial)));
    EXPECT_NEAR(r.value, expected, 1e-4);
    EXPECT_LE(r.value, spectral_radius(m) + 1e-9);
  }
}

TEST(MaxExpectation, ValueMatchesMaximizer) {
  Rng rng(4);
  const CMatrix m = random_hermitian(4, rng);
  const OracleResult r = max_expectation(m, options(5, 500, 50));
  EXPECT_NEAR(r.maximizer.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(r.maximizer.dot(m * r.maximizer)), r.value, 1e-12);
  EXPECT_EQ(r.samples_used, 500);
}

TEST(MaxExpectation, RejectsNonHermitian) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(max_expectation(m, options(1)), ValidationError);
}

TEST(MaxSum, IntermediateEqualsFirstQubit) {
  for (double theta : {0.3, 1.0, std::numbers::pi / 2, 2.5}) {
    const OrthonormalBasis a = bloch::bloch_to_basis({0, 0, 1});
    const OrthonormalBasis b = bloch::bloch_to_basis(bloch::from_angles(theta, 0.7));
    EXPECT_NEAR(max_sum_over_states(a, a, b, options(6)).value, 0.5 * std::sin(theta), 1e-4);
  }
}

TEST(MaxSum, IntermediateEqualsLast) {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const OrthonormalBasis a = haar_random_basis(3, rng);
    const OrthonormalBasis b = haar_random_basis(3, rng);
    EXPECT_NEAR(max_sum_over_states(a, b, b, options(8)).value, error(a, b).value, 1e-4);
  }
}

TEST(MaxSum, WithinWindowOfOverallError) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const OrthonormalBasis a = haar_random_basis(3, rng);
    const OrthonormalBasis ap = haar_random_basis(3, rng);
    const OrthonormalBasis b = haar_random_basis(3, rng);
    const double delta = overall_error(a, ap, b).value;
    const double sampled = max_sum_over_states(a, ap, b, options(static_cast<std::uint64_t>(trial))).value;
    EXPECT_LE(sampled, delta + 1e-9);
    EXPECT_GE(sampled, delta - 1e-3);
  }
}

TEST(MaxSum, DimensionMismatch) {
  EXPECT_THROW(max_sum_over_states(haar_random_basis(2, 1), haar_random_basis(3, 1),
                                   haar_random_basis(3, 1), options(1)),
               ValidationError);
}

TEST(PureState, ObjectivesMatchDensityMatrixForms) {
  Rng rng(10);
  const OrthonormalBasis a = haar_random_basis(3, rng);
  const OrthonormalBasis ap = haar_random_basis(3, rng);
  const OrthonormalBasis b = haar_random_basis(3, rng);
  const CVector psi = haar_random_vector(3, rng);
  const DensityMatrix rho = DensityMatrix::pure(psi);
  EXPECT_NEAR(pure_state_error(a, ap, psi), state_dependent_error(a, ap, rho), 1e-13);
  EXPECT_NEAR(pure_state_disturbance(ap, b, psi), state_dependent_disturbance(ap, b, rho), 1e-13);
}

TEST(ClosedForm, Diagonal) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = -1.0;
  const auto e2 = eig2_closed(m);
  EXPECT_EQ(e2[0], -1.0);
  EXPECT_EQ(e2[1], 3.0);
  CMatrix n = CMatrix::Zero(3, 3);
  n.diagonal() << 2.0, -5.0, 0.5;
  const auto e3 = eig3_closed(n);
  EXPECT_NEAR(e3[0], -5.0, 1e-14);
  EXPECT_NEAR(e3[1], 0.5, 1e-14);
  EXPECT_NEAR(e3[2], 2.0, 1e-14);
}

TEST(ClosedForm, TracelessQubit) {
  CMatrix m(2, 2);
  m << 0.3, Complex(0.4, -1.2), Complex(0.4, 1.2), -0.3;
  const double expected = std::sqrt(-m.determinant().real());
  const auto e = eig2_closed(m);
  EXPECT_NEAR(e[0], -expected, 1e-14);
  EXPECT_NEAR(e[1], expected, 1e-14);
}

TEST(ClosedForm, MatchesJacobi) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix m2 = random_hermitian(2, rng);
    const CMatrix m3 = random_hermitian(3, rng);
    const auto c2 = eig2_closed(m2);
    const auto c3 = eig3_closed(m3);
    const HermitianEigen j2 = eig_hermitian(m2);
    const HermitianEigen j3 = eig_hermitian(m3);
    for (int k = 0; k < 2; ++k) EXPECT_NEAR(c2[static_cast<std::size_t>(k)], j2.eigenvalues(k), 1e-9);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(c3[static_cast<std::size_t>(k)], j3.eigenvalues(k), 1e-9);
  }
}

TEST(ClosedForm, DegenerateCubic) {
  const auto e = eig3_closed(CMatrix::Identity(3, 3) * 2.0);
  for (double v : e) EXPECT_NEAR(v, 2.0, 1e-14);
}

TEST(ClosedForm, WrongSize) {
  EXPECT_THROW(eig2_closed(CMatrix::Identity(3, 3)), ValidationError);
  EXPECT_THROW(eig3_closed(CMatrix::Identity(2, 2)), ValidationError);
}

TEST(Invariants, OneSidedSoundnessAndConvergence) {
  Rng rng(12);
  int converged = 0;
  int total = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const OrthonormalBasis a = haar_random_basis(d, rng);
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      const SearchOptions o = options(rng.next_u64());
      const double e = max_error_over_states(a, ap, o).value;
      const double n = max_disturbance_over_states(ap, b, o).value;
      const double s = max_sum_over_states(a, ap, b, o).value;
      const double e_ref = error(a, ap).value;
      const double n_ref = disturbance(ap, b).value;
      const double s_ref = overall_error(a, ap, b).value;
      EXPECT_LE(e, e_ref + 1e-9);
      EXPECT_LE(n, n_ref + 1e-9);
      EXPECT_LE(s, s_ref + 1e-9);
      for (double gap : {e_ref - e, n_ref - n, s_ref - s}) {
        ++total;
        if (gap <= 1e-4) ++converged;
      }
    }
  }
  EXPECT_GE(converged, static_cast<int>(std::ceil(0.99 * total)));
}

TEST(Invariants, DeterministicAcrossThreadCounts) {
  const OrthonormalBasis a = haar_random_basis(3, 13);
  const OrthonormalBasis ap = haar_random_basis(3, 14);
  const OrthonormalBasis b = haar_random_basis(3, 15);
  SearchOptions o = options(16, 3000, 50);
  const OracleResult first = max_sum_over_states(a, ap, b, o);
  const OracleResult again = max_sum_over_states(a, ap, b, o);
  o.threads = 4;
  const OracleResult threaded = max_sum_over_states(a, ap, b, o);
  EXPECT_EQ(first.value, again.value);
  EXPECT_EQ(first.value, threaded.value);
  EXPECT_EQ(first.maximizer, threaded.maximizer);
}

}  // namespace
}  // namespace edt::oracle
