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

#include "edt/bloch.hpp"

#include <algorithm>
#include <sstream>

#include "edt/errors.hpp"
#include "edt/tolerances.hpp"

namespace edt::bloch {
namespace {

void require_unit(const BlochVector& v, const char* name) {
  const double n = v.norm();
  if (!(std::abs(n - 1.0) <= tol::kValidation)) {
    std::ostringstream msg;
    msg << "Bloch vector " << name << " must be a unit vector, has norm " << n;
    throw ValidationError(msg.str());
  }
}

// Eigenvector of (I + a.sigma)/2 with a real, non-negative leading amplitude.
CVector positive_eigenvector(const BlochVector& a) {
  CVector v(2);
  const double upper = std::max(0.0, (1.0 + a.z) / 2.0);
  const double lower = std::max(0.0, (1.0 - a.z) / 2.0);
  const double transverse = std::hypot(a.x, a.y);
  const Complex phase = transverse > 0.0 ? Complex(a.x, a.y) / transverse : Complex(1.0, 0.0);
  if (upper > 0.0) {
    v << std::sqrt(upper), phase * std::sqrt(lower);
  } else {
    v << 0.0, 1.0;
  }
  return v / v.norm();
}

}  // namespace

BlochVector from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BlochVector basis_to_bloch(const OrthonormalBasis& basis) {
  if (basis.dim() != 2) {
    std::ostringstream msg;
    msg << "Bloch representation needs a qubit basis, got dimension " << basis.dim();
    throw ValidationError(msg.str());
  }
  const Complex alpha = basis.matrix()(0, 0);
  const Complex beta = basis.matrix()(1, 0);
  const Complex coherence = std::conj(alpha) * beta;
  return {2.0 * coherence.real(), 2.0 * coherence.imag(), std::norm(alpha) - std::norm(beta)};
}

OrthonormalBasis bloch_to_basis(const BlochVector& a) {
  require_unit(a, "a");
  const BlochVector unit = a * (1.0 / a.norm());
  CMatrix columns(2, 2);
  columns.col(0) = positive_eigenvector(unit);
  columns.col(1) = positive_eigenvector(-unit);
  return OrthonormalBasis::from_columns(std::move(columns));
}

BlochVector state_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    std::ostringstream msg;
    msg << "Bloch representation needs a qubit state, got dimension " << rho.dim();
    throw ValidationError(msg.str());
  }
  const CMatrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

double bloch_error(const BlochVector& a, const BlochVector& ap) {
  require_unit(a, "a");
  require_unit(ap, "a'");
  return 0.5 * (a - ap).norm();
}

double bloch_disturbance(const BlochVector& ap, const BlochVector& b) {
  require_unit(ap, "a'");
  require_unit(b, "b");
  return 0.5 * (b - ap * dot(b, ap)).norm();
}

double bloch_overall(const BlochVector& a, const BlochVector& ap, const BlochVector& b) {
  require_unit(a, "a");
  require_unit(ap, "a'");
  require_unit(b, "b");
  const BlochVector u = a - ap;
  const BlochVector v = b - ap * dot(b, ap);
  return 0.5 * std::max((u + v).norm(), (u - v).norm());
}

double theorem1_floor(const BlochVector& a, const BlochVector& b) {
  require_unit(a, "a");
  require_unit(b, "b");
  return 0.5 * cross(a, b).norm();
}

}  // namespace edt::bloch
