// Copyright 2026 The qecbound Authors
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

#include <cstddef>

#include <Eigen/Core>

namespace qecbound {

namespace internal {

template <typename Scalar>
Scalar neumaier_sum(const Scalar* data, Eigen::Index size) {
  Scalar sum(0);
  Scalar carry(0);
  for (Eigen::Index i = 0; i < size; ++i) {
    const Scalar t = sum + data[i];
    if (Eigen::numext::abs(sum) >= Eigen::numext::abs(data[i])) {
      carry += (sum - t) + data[i];
    } else {
      carry += (data[i] - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

template <typename Scalar>
Scalar pairwise_sum_range(const Scalar* data, Eigen::Index size) {
  constexpr Eigen::Index kLeaf = 256;
  if (size <= kLeaf) return neumaier_sum(data, size);
  const Eigen::Index half = size / 2;
  return pairwise_sum_range(data, half) + pairwise_sum_range(data + half, size - half);
}

}  // namespace internal

/// Sum of all coefficients of a dense expression. The expression is
/// evaluated once; the reduction splits the index range in halves down to
/// compensated leaf sums, so the result depends only on the values and their
/// order.
template <typename Derived>
typename Derived::Scalar pairwise_sum(const Eigen::DenseBase<Derived>& expr) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Array<Scalar, Eigen::Dynamic, 1> values = expr.derived().reshaped().array();
  return internal::pairwise_sum_range(values.data(), values.size());
}

}  // namespace qecbound
