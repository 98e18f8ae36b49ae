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

#include <cmath>
#include <numbers>

#include "edt/bloch.hpp"
#include "edt/errors.hpp"
#include "edt/oracle.hpp"
#include "edt/structures.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace edt {
namespace {

using testing::max_abs;

OrthonormalBasis swap_first_two(const OrthonormalBasis& basis) {
  CMatrix m = basis.matrix();
  m.col(0).swap(m.col(1));
  return OrthonormalBasis::from_columns(m);
}

DensityMatrix random_state(int d, Rng& rng) {
  CMatrix rho = CMatrix::Zero(d, d);
  double total = 0.0;
  const int terms = 1 + static_cast<int>(rng.uniform() * 3);
  for (int k = 0; k < terms; ++k) {
    const double w = rng.uniform() + 0.05;
    const CVector psi = haar_random_vector(d, rng);
    rho += w * psi * psi.adjoint();
    total += w;
  }
  return DensityMatrix::from_matrix(rho / total);
}

// Qubit basis whose Bloch vector makes angle phi with +z.
OrthonormalBasis qubit_at(double phi) { return bloch::bloch_to_basis(bloch::from_angles(phi, 0.0)); }

// The outcome-0 vector of the returned basis is unbiased in the computational basis.
OrthonormalBasis with_unbiased_first_vector(int d) {
  return extend_to_basis(CVector::Ones(d) / std::sqrt(static_cast<double>(d)));
}

TEST(StateDependentError, IdenticalBasesGiveZero) {
  Rng rng(1);
  const OrthonormalBasis a = haar_random_basis(3, rng);
  EXPECT_NEAR(state_dependent_error(a, a, random_state(3, rng)), 0.0, 1e-15);
}

TEST(StateDependentError, OrthogonalEigenstateGivesOne) {
  const OrthonormalBasis a = OrthonormalBasis::computational(2);
  const OrthonormalBasis ap = swap_first_two(a);
  EXPECT_NEAR(state_dependent_error(a, ap, DensityMatrix::pure(a.vector(0))), 1.0, 1e-15);
}

TEST(StateDependentError, MatchesDirectBornRule) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const OrthonormalBasis a = haar_random_basis(3, rng);
    const OrthonormalBasis ap = haar_random_basis(3, rng);
    const CVector psi = haar_random_vector(3, rng);
    double expected = 0.0;
    for (int i = 0; i < 3; ++i) {
      Complex amp_a = 0.0, amp_ap = 0.0;
      for (int k = 0; k < 3; ++k) {
        amp_a += std::conj(a.matrix()(k, i)) * psi(k);
        amp_ap += std::conj(ap.matrix()(k, i)) * psi(k);
      }
      expected = std::max(expected, std::abs(std::norm(amp_a) - std::norm(amp_ap)));
    }
    EXPECT_NEAR(state_dependent_error(a, ap, DensityMatrix::pure(psi)), expected, 1e-12);
  }
}

TEST(StateDependentDisturbance, Examples) {
  Rng rng(3);
  const OrthonormalBasis b = haar_random_basis(3, rng);
  const OrthonormalBasis ap = haar_random_basis(3, rng);
  EXPECT_NEAR(state_dependent_disturbance(b, b, random_state(3, rng)), 0.0, 1e-12);
  EXPECT_NEAR(state_dependent_disturbance(ap, b, DensityMatrix::maximally_mixed(3)), 0.0, 1e-12);
}

TEST(StateDependentDisturbance, IsCompositionOfMeasurementOperations) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const OrthonormalBasis ap = haar_random_basis(3, rng);
    const OrthonormalBasis b = haar_random_basis(3, rng);
    const DensityMatrix rho = random_state(3, rng);
    const ProbVector direct = born_probabilities(b, rho);
    const ProbVector after = born_probabilities(b, post_measurement_state(ap, rho));
    double expected = 0.0;
    for (int i = 0; i < 3; ++i) expected = std::max(expected, std::abs(direct[i] - after[i]));
    EXPECT_NEAR(state_dependent_disturbance(ap, b, rho), expected, 1e-14);
  }
}

TEST(Error, Examples) {
  const OrthonormalBasis a = haar_random_basis(4, 5);
  EXPECT_NEAR(error(a, a).value, 0.0, 1e-7);
  const IndexedValue swapped = error(a, swap_first_two(a));
  EXPECT_NEAR(swapped.value, 1.0, 1e-12);
  EXPECT_EQ(swapped.index, 0);
}

TEST(Error, QubitBlochAngle) {
  for (double phi = 0.05; phi < std::numbers::pi; phi += 0.1) {
    EXPECT_NEAR(error(qubit_at(0.0), qubit_at(phi)).value, std::sin(phi / 2.0), 1e-12);
  }
}

TEST(Error, EqualsSpectralRadiusForm) {
  Rng rng(6);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const OrthonormalBasis a = haar_random_basis(d, rng);
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      double expected = 0.0;
      for (int i = 0; i < d; ++i) expected = std::max(expected, spectral_radius(error_matrix(a, ap, i)));
      EXPECT_NEAR(error(a, ap).value, expected, 1e-10);
    }
  }
}

TEST(Error, DimensionMismatch) {
  EXPECT_THROW(error(haar_random_basis(2, 1), haar_random_basis(3, 1)), ValidationError);
  EXPECT_THROW(disturbance(haar_random_basis(2, 1), haar_random_basis(3, 1)), ValidationError);
  EXPECT_THROW(overall_error(haar_random_basis(2, 1), haar_random_basis(2, 1), haar_random_basis(3, 1)),
               ValidationError);
}

TEST(Disturbance, Examples) {
  const OrthonormalBasis b = haar_random_basis(3, 7);
  EXPECT_NEAR(disturbance(b, b).value, 0.0, 1e-12);
  EXPECT_NEAR(disturbance(OrthonormalBasis::computational(2), fourier_basis(2)).value, 0.5, 1e-12);

  const OrthonormalBasis partly_unbiased = with_unbiased_first_vector(3);
  const IndexedValue eta = disturbance(OrthonormalBasis::computational(3), partly_unbiased);
  EXPECT_NEAR(eta.value, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(eta.index, 0);
}

TEST(Rephase, LeavesNonNegativeOverlapsUnchanged) {
  const OrthonormalBasis ap = OrthonormalBasis::computational(3);
  const CVector target = CVector::Ones(3) / std::sqrt(3.0);
  EXPECT_LE(max_abs(rephase_against(target, ap).matrix() - ap.matrix()), 0.0);
}

TEST(Rephase, MakesOverlapsRealNonNegativeAndKeepsDisturbance) {
  Rng rng(8);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      const OrthonormalBasis rephased = rephase_against(b.vector(0), ap);
      for (int k = 0; k < d; ++k) {
        const Complex overlap = b.vector(0).dot(rephased.vector(k));
        EXPECT_NEAR(overlap.imag(), 0.0, 1e-12);
        EXPECT_GE(overlap.real(), -1e-12);
      }
      EXPECT_NEAR(disturbance(rephased, b).value, disturbance(ap, b).value, 1e-12);
    }
  }
}

TEST(Rephase, ZeroOverlapUntouched) {
  const OrthonormalBasis ap = OrthonormalBasis::computational(3);
  CVector target(3);
  target << 0.0, Complex(0.0, 1.0), 0.0;
  const OrthonormalBasis out = rephase_against(target, ap);
  EXPECT_EQ(out.vector(0), ap.vector(0));
  EXPECT_EQ(out.vector(2), ap.vector(2));
}

TEST(Perron, RephasedMatrixIsNonNegativeWithPositiveTopEigenvalue) {
  Rng rng(9);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      for (int i = 0; i < d; ++i) {
        const Eigen::MatrixXd m = rephased_disturbance_matrix(ap, b, i);
        EXPECT_GE(m.minCoeff(), -1e-12);
        const HermitianEigen e = eig_hermitian(m.cast<Complex>());
        EXPECT_NEAR(e.eigenvalues(d - 1), disturbance_for_outcome(ap, b, i), 1e-10);
      }
    }
  }
}

TEST(OverallError, ReducesToPartsAtEndpoints) {
  Rng rng(10);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const OrthonormalBasis a = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      EXPECT_NEAR(overall_error(a, a, b).value, disturbance(a, b).value, 1e-10);
      EXPECT_NEAR(overall_error(a, b, b).value, error(a, b).value, 1e-10);
    }
  }
}

TEST(OverallError, MatchesPureStateSamplingOnQubits) {
  Rng rng(11);
  oracle::SearchOptions search;
  search.samples = 2000;
  search.refine_iters = 200;
  for (int trial = 0; trial < 10; ++trial) {
    const OrthonormalBasis a = haar_random_basis(2, rng);
    const OrthonormalBasis ap = haar_random_basis(2, rng);
    const OrthonormalBasis b = haar_random_basis(2, rng);
    search.seed = static_cast<std::uint64_t>(trial);
    const double sampled = oracle::max_sum_over_states(a, ap, b, search).value;
    const double delta = overall_error(a, ap, b).value;
    EXPECT_LE(sampled, delta + 1e-9);
    EXPECT_GE(sampled, delta - 1e-3);
  }
}

TEST(OverallError, WitnessAttainsValue) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const OrthonormalBasis a = haar_random_basis(3, rng);
    const OrthonormalBasis ap = haar_random_basis(3, rng);
    const OrthonormalBasis b = haar_random_basis(3, rng);
    const OverallError delta = overall_error(a, ap, b);
    const DensityMatrix witness = DensityMatrix::pure(delta.witness);
    EXPECT_NEAR(state_dependent_error(a, ap, witness) + state_dependent_disturbance(ap, b, witness),
                delta.value, 1e-9);
  }
}

TEST(Calibration, Examples) {
  const OrthonormalBasis b = haar_random_basis(3, 13);
  EXPECT_NEAR(calibration_disturbance(b, b), 0.0, 1e-12);
  for (int d = 2; d <= 6; ++d)
    EXPECT_NEAR(calibration_disturbance(OrthonormalBasis::computational(d), fourier_basis(d)),
                1.0 - 1.0 / d, 1e-12);
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const OrthonormalBasis ap = haar_random_basis(2, rng);
    const OrthonormalBasis bq = haar_random_basis(2, rng);
    EXPECT_NEAR(disturbance(ap, bq).value, std::sqrt(0.5 * calibration_disturbance(ap, bq)), 1e-9);
  }
}

TEST(Bounds, QubitEqualities) {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const OrthonormalBasis ap = haar_random_basis(2, rng);
    const OrthonormalBasis b = haar_random_basis(2, rng);
    const double eta = disturbance(ap, b).value;
    EXPECT_NEAR(disturbance_bound_1(ap, b), eta, 1e-9);
    EXPECT_NEAR(disturbance_bound_2(ap, b), eta, 1e-9);
  }
}

TEST(Bounds, UnbiasedEquality) {
  for (int d = 2; d <= 6; ++d) {
    const OrthonormalBasis ap = OrthonormalBasis::computational(d);
    const OrthonormalBasis b = fourier_basis(d);
    EXPECT_NEAR(disturbance_bound_1(ap, b), 1.0 - 1.0 / d, 1e-12);
    EXPECT_NEAR(disturbance_bound_2(ap, b), 1.0 - 1.0 / d, 1e-12);
    EXPECT_NEAR(disturbance(ap, b).value, 1.0 - 1.0 / d, 1e-12);
  }
}

TEST(Bounds, DominateDisturbanceInHigherDimensions) {
  Rng rng(16);
  for (int d = 3; d <= 5; ++d) {
    for (int trial = 0; trial < 200; ++trial) {
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      for (int i = 0; i < d; ++i) {
        const double eta_i = disturbance_for_outcome(ap, b, i);
        EXPECT_GE(disturbance_bound_1_for_outcome(ap, b, i), eta_i - 1e-9);
        EXPECT_GE(disturbance_bound_2_for_outcome(ap, b, i), eta_i - 1e-9);
      }
    }
  }
}

TEST(RelaxedError, RecoversPermutation) {
  const OrthonormalBasis a = haar_random_basis(5, 17);
  const std::vector<int> perm{3, 0, 4, 1, 2};
  const OrthonormalBasis b = relabeled(a, perm);
  const RelaxedError r = relaxed_error(a, b);
  EXPECT_NEAR(r.value, 0.0, 1e-7);
  // a_i = b_{s(i)}: b_k = a_{perm[k]}, so s is the inverse of perm.
  for (int k = 0; k < 5; ++k) EXPECT_EQ(r.permutation[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])], k);
  EXPECT_NEAR(relaxed_error(a, a).value, 0.0, 1e-7);
}

TEST(RelaxedError, QubitIsMinOverBothLabelings) {
  for (double phi = 0.05; phi < std::numbers::pi; phi += 0.1) {
    const OrthonormalBasis a = qubit_at(0.0);
    const OrthonormalBasis b = qubit_at(phi);
    const double enumerated = std::min(error(a, b).value, error(a, swap_first_two(b)).value);
    EXPECT_NEAR(relaxed_error(a, b).value, enumerated, 1e-12);
    EXPECT_NEAR(relaxed_error(a, b).value, std::min(std::sin(phi / 2), std::cos(phi / 2)), 1e-12);
  }
}

TEST(RelaxedError, SizeLimit) {
  EXPECT_NO_THROW(relaxed_error(haar_random_basis(8, 1), haar_random_basis(8, 2)));
  EXPECT_THROW(relaxed_error(haar_random_basis(9, 1), haar_random_basis(9, 2)), UnsupportedSizeError);
  EXPECT_THROW(conjecture_floor(haar_random_basis(9, 1), haar_random_basis(9, 2)), UnsupportedSizeError);
}

TEST(ConjectureFloor, Examples) {
  const OrthonormalBasis a = haar_random_basis(3, 18);
  EXPECT_NEAR(conjecture_floor(a, a), 0.0, 1e-7);

  // Perpendicular Bloch vectors: relaxed error sin(pi/4), disturbance 1/2.
  const OrthonormalBasis z = qubit_at(0.0);
  const OrthonormalBasis x = qubit_at(std::numbers::pi / 2);
  EXPECT_NEAR(relaxed_error(z, x).value, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(conjecture_floor(z, x), 0.5, 1e-12);

  const OrthonormalBasis c3 = OrthonormalBasis::computational(3);
  const OrthonormalBasis f3 = fourier_basis(3);
  EXPECT_NEAR(relaxed_error(c3, f3).value, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(conjecture_floor(c3, f3), 2.0 / 3.0, 1e-12);
}

TEST(Invariants, PointwiseDominance) {
  Rng rng(19);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 1000; ++trial) {
      const OrthonormalBasis a = haar_random_basis(d, rng);
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      const DensityMatrix rho = random_state(d, rng);
      ASSERT_LE(state_dependent_error(a, ap, rho), error(a, ap).value + 1e-9);
      ASSERT_LE(state_dependent_disturbance(ap, b, rho), disturbance(ap, b).value + 1e-9);
    }
  }
}

TEST(Invariants, ReportRelations) {
  Rng rng(20);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      const OrthonormalBasis a = haar_random_basis(d, rng);
      const OrthonormalBasis ap = haar_random_basis(d, rng);
      const OrthonormalBasis b = haar_random_basis(d, rng);
      const TradeoffReport r = compute_tradeoff(a, ap, b);
      EXPECT_LE(r.epsilon, 1.0 + 1e-12);
      EXPECT_LE(r.eta, 1.0 - 1.0 / d + 1e-9);
      EXPECT_GE(r.eta, r.eta_cal - 1e-9);
      EXPECT_NEAR(r.epsilon, std::sqrt(r.epsilon_cal), 1e-9);
      EXPECT_LE(r.eta, std::min(r.bound1, r.bound2) + 1e-9);
      EXPECT_LE(r.eta, std::sqrt((1.0 - 1.0 / d) * r.eta_cal) + 1e-9);
      EXPECT_LE(r.delta, r.epsilon + r.eta + 1e-9);
      EXPECT_GE(r.delta, std::max(r.epsilon, r.eta) - 1e-9);
      EXPECT_NEAR(r.witness_state.norm(), 1.0, 1e-10);
    }
  }
}

TEST(Invariants, EqualityCasesOfMaximumBounds) {
  Rng rng(21);
  for (int d = 2; d <= 5; ++d) {
    const OrthonormalBasis a = haar_random_basis(d, rng);
    EXPECT_NEAR(error(a, swap_first_two(a)).value, 1.0, 1e-9);
    const OrthonormalBasis unbiased = OrthonormalBasis::from_columns(a.matrix() * fourier_basis(d).matrix());
    EXPECT_NEAR(disturbance(a, unbiased).value, 1.0 - 1.0 / d, 1e-9);
  }
}

}  // namespace
}  // namespace edt
