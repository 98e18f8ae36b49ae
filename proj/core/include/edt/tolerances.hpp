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

namespace edt::tol {

/// Hermiticity, orthonormality, unit-norm and trace checks on inputs.
inline constexpr double kValidation = 1e-10;
/// Default slack for checking inequalities between computed quantities.
inline constexpr double kAssertion = 1e-9;
/// Allowed shortfall of a sampled lower bound below its analytic maximum.
inline constexpr double kOracleGap = 1e-3;
/// Orthonormality tolerance for bases read from files before repair.
inline constexpr double kFileBasis = 1e-8;
/// Negative probabilities above -kProbabilityClamp are reported as 0.
inline constexpr double kProbabilityClamp = 1e-12;

}  // namespace edt::tol
