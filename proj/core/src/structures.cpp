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

#include "edt/structures.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "edt/errors.hpp"

namespace edt {
namespace {

CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

}  // namespace

OrthonormalBasis fourier_basis(int dim) {
  if (dim < 2) {
    std::ostringstream msg;
    msg << "Fourier basis needs dim >= 2, got " << dim;
    throw ValidationError(msg.str());
  }
  CMatrix columns(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      // Reduce j*k mod d before forming the angle to keep it small.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) / dim;
      columns(k, j) = std::polar(norm, angle);
    }
  }
  return OrthonormalBasis::from_columns(std::move(columns));
}

BasisTriple direct_sum(const DirectSumSpec& spec) {
  if (spec.blocks.empty()) throw ValidationError("direct sum needs at least one block");
  int total = 0;
  for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
    const BasisTriple& block = spec.blocks[k];
    if (block.a.dim() != block.ap.dim() || block.ap.dim() != block.b.dim()) {
      std::ostringstream msg;
      msg << "direct-sum block " << k << " mixes dimensions " << block.a.dim() << ", "
          << block.ap.dim() << ", " << block.b.dim();
      throw ValidationError(msg.str());
    }
    total += block.a.dim();
  }
  if (total < 2) throw ValidationError("direct sum must have total dimension >= 2");
  if (total > kMaxDim) {
    std::ostringstream msg;
    msg << "direct sum dimension " << total << " exceeds the supported maximum " << kMaxDim;
    throw UnsupportedSizeError(msg.str());
  }

  CMatrix a = CMatrix::Zero(total, total);
  CMatrix ap = CMatrix::Zero(total, total);
  CMatrix b = CMatrix::Zero(total, total);
  int offset = 0;
  for (const BasisTriple& block : spec.blocks) {
    const int d = block.a.dim();
    a.block(offset, offset, d, d) = block.a.matrix();
    ap.block(offset, offset, d, d) = block.ap.matrix();
    b.block(offset, offset, d, d) = block.b.matrix();
    offset += d;
  }
  return {OrthonormalBasis::from_columns(std::move(a)),
          OrthonormalBasis::from_columns(std::move(ap)),
          OrthonormalBasis::from_columns(std::move(b))};
}

BasisTriple tensor_product(const std::vector<BasisTriple>& factors) {
  if (factors.empty()) throw ValidationError("tensor product needs at least one factor");
  long total = 1;
  for (const BasisTriple& f : factors) {
    if (f.a.dim() != f.ap.dim() || f.ap.dim() != f.b.dim())
      throw ValidationError("tensor factor mixes basis dimensions");
    total *= f.a.dim();
    if (total > kMaxDim) {
      std::ostringstream msg;
      msg << "tensor product dimension exceeds the supported maximum " << kMaxDim;
      throw UnsupportedSizeError(msg.str());
    }
  }
  CMatrix a = factors.front().a.matrix();
  CMatrix ap = factors.front().ap.matrix();
  CMatrix b = factors.front().b.matrix();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    a = kron(a, factors[k].a.matrix());
    ap = kron(ap, factors[k].ap.matrix());
    b = kron(b, factors[k].b.matrix());
  }
  return {OrthonormalBasis::from_columns(std::move(a)),
          OrthonormalBasis::from_columns(std::move(ap)),
          OrthonormalBasis::from_columns(std::move(b))};
}

BasisTriple random_triple(int dim, std::uint64_t seed) {
  Rng rng(seed);
  OrthonormalBasis a = haar_random_basis(dim, rng);
  OrthonormalBasis ap = haar_random_basis(dim, rng);
  OrthonormalBasis b = haar_random_basis(dim, rng);
  return {std::move(a), std::move(ap), std::move(b)};
}

}  // namespace edt
