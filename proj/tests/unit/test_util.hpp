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

#include <algorithm>
#include <cmath>
#include <vector>

#include "edt/linalg.hpp"
#include "edt/rng.hpp"

namespace edt::testing {

inline CMatrix random_hermitian(int n, Rng& rng) {
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = rng.complex_normal();
  return (z + z.adjoint()) / 2.0;
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Kolmogorov-Smirnov statistic of `samples` against a continuous CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double f = cdf(samples[k]);
    worst = std::max({worst, std::abs(static_cast<double>(k + 1) / n - f),
                      std::abs(f - static_cast<double>(k) / n)});
  }
  return worst;
}

// CDF of Beta(1, d - 1): the squared overlap of a Haar vector with a fixed
// unit vector in C^d.
inline double beta_1_dm1_cdf(double x, int d) {
  return 1.0 - std::pow(1.0 - std::clamp(x, 0.0, 1.0), d - 1);
}

}  // namespace edt::testing
