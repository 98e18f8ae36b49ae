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

#include <stdexcept>
#include <string>

namespace edt {

/// Raised when an input violates a documented precondition (non-Hermitian
/// matrix, non-orthonormal basis, mismatched dimensions, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a request exceeds the dimension range an operation supports
/// (exhaustive relabeling beyond d = 8, searches beyond d = 5, ...).
class UnsupportedSizeError : public ValidationError {
 public:
  explicit UnsupportedSizeError(const std::string& what) : ValidationError(what) {}
};

}  // namespace edt
