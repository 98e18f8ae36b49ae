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

#include <complex>
#include <cstdint>
#include <random>

namespace edt {

/// Seedable, bit-reproducible random source.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives uniforms and normals with explicit formulas instead of the
/// implementation-defined std:: distributions, so that a given seed yields
/// identical samples on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal (Box-Muller, cached second variate).
  double normal();

  /// Standard complex normal: real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Deterministic sub-seed for stream `index` of a run seeded with `master`.
/// Independent of evaluation order, so parallel workers reproduce serial runs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace edt
