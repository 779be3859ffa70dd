// Copyright 2026 The sdcircle Authors. All Rights Reserved.
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

#include "sdcircle/difference.h"

#include <cmath>
#include <stdexcept>

namespace sdcircle {

DifferenceOperator::DifferenceOperator(int order, Direction direction)
    : order_(order), direction_(direction) {
  if (order < 1) {
    throw std::invalid_argument("DifferenceOperator: order must be >= 1");
  }
}

std::vector<double> DifferenceOperator::apply(
    std::span<const double> seq) const {
  std::vector<double> current(seq.begin(), seq.end());
  for (int pass = 0; pass < order_; ++pass) {
    if (direction_ == Direction::kBackward) {
      double previous = 0.0;
      for (double& value : current) {
        const double here = value;
        value = here - previous;
        previous = here;
      }
    } else {
      if (current.empty()) break;
      for (std::size_t n = 0; n + 1 < current.size(); ++n) {
        current[n] = current[n + 1] - current[n];
      }
      current.pop_back();
    }
  }
  return current;
}

std::vector<double> finite_difference(std::span<const double> seq, int order,
                                      Direction direction) {
  return DifferenceOperator(order, direction).apply(seq);
}

double backward_difference_at(std::span<const double> seq, int order,
                              std::ptrdiff_t index) {
  if (order < 0) {
    throw std::invalid_argument("backward_difference_at: negative order");
  }
  if (index >= static_cast<std::ptrdiff_t>(seq.size())) {
    throw std::out_of_range("backward_difference_at: index past the end");
  }
  // sum_j (-1)^j C(order, j) u_{index-j}
  double total = 0.0;
  double binomial = 1.0;
  for (int j = 0; j <= order; ++j) {
    const std::ptrdiff_t n = index - j;
    if (n >= 0) {
      total += ((j % 2 == 0) ? binomial : -binomial) * seq[n];
    }
    binomial = binomial * (order - j) / (j + 1);
  }
  return total;
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace sdcircle
