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

#include "edt/measurement.hpp"

namespace edt {

/// Bases of the ideal first measurement A, the implemented measurement A'
/// and the subsequent measurement B.
struct BasisTriple {
  OrthonormalBasis a;
  OrthonormalBasis ap;
  OrthonormalBasis b;
};

/// v_j[k] = exp(2 pi i j k / d) / sqrt(d); unbiased with respect to the
/// computational basis.
OrthonormalBasis fourier_basis(int dim);

/// Blocks of a direct-sum decomposition H = H_1 (+) ... (+) H_l. Each block
/// holds three bases of the same block dimension (1 allowed).
struct DirectSumSpec {
  std::vector<BasisTriple> blocks;
};

/// Embeds every block into the full space. Outcome labels are concatenated
/// in block order.
BasisTriple direct_sum(const DirectSumSpec& spec);

/// Kronecker products of per-factor bases. Outcome (i_1, ..., i_l) maps to
/// the lexicographic index i_1 d_2...d_l + ... + i_l.
BasisTriple tensor_product(const std::vector<BasisTriple>& factors);

/// Haar-random triple, drawn in the order a, ap, b from one stream.
BasisTriple random_triple(int dim, std::uint64_t seed);

}  // namespace edt
