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

#include <cmath>

#include "edt/measurement.hpp"

// Qubit (d = 2) specialization. A basis {|v_0>, |v_1>} is represented by the
// Bloch vector a with |v_0><v_0| = (I + a.sigma)/2 and |v_1><v_1| =
// (I - a.sigma)/2.
namespace edt::bloch {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
  BlochVector operator-() const { return {-x, -y, -z}; }
};

inline double dot(const BlochVector& u, const BlochVector& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}
inline BlochVector cross(const BlochVector& u, const BlochVector& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

/// Point on the sphere at polar angle theta (from +z) and azimuth phi.
BlochVector from_angles(double theta, double phi);

BlochVector basis_to_bloch(const OrthonormalBasis& basis);

/// Inverse of basis_to_bloch. Each returned vector has its first nonzero
/// amplitude real and positive.
OrthonormalBasis bloch_to_basis(const BlochVector& a);

/// Bloch vector n of a qubit density matrix, rho = (I + n.sigma)/2.
BlochVector state_to_bloch(const DensityMatrix& rho);

/// (1/2)|a - a'|.
double bloch_error(const BlochVector& a, const BlochVector& ap);
/// (1/2)|b - (b.a')a'|.
double bloch_disturbance(const BlochVector& ap, const BlochVector& b);
/// max over |n| <= 1 of (1/2)|(a - a').n| + (1/2)|(b - (b.a')a').n|, which
/// equals (1/2) max(|u + v|, |u - v|) for the two linear forms u, v.
double bloch_overall(const BlochVector& a, const BlochVector& ap, const BlochVector& b);
/// (1/2)|a x b|, the minimum over a' of both error + disturbance and the
/// overall error.
double theorem1_floor(const BlochVector& a, const BlochVector& b);

}  // namespace edt::bloch
