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

#ifndef SDCIRCLE_DIFFERENCE_H_
#define SDCIRCLE_DIFFERENCE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace sdcircle {

enum class Direction {
  kBackward,  // (D u)_n = u_n - u_{n-1}
  kForward,   // (D u)_n = u_{n+1} - u_n
};

// Finite differences on sequences indexed from 0.
//
// Backward differences treat every index below 0 as zero history, so the
// result has the input length and its first entries carry the startup terms.
// Forward differences need no history but only len - order entries are
// defined; the output is truncated to those. With this convention
//   forward(order)[n] == backward(order)[n + order]
// for every n in the forward output.
class DifferenceOperator {
 public:
  DifferenceOperator(int order, Direction direction);

  int order() const { return order_; }
  Direction direction() const { return direction_; }

  std::vector<double> apply(std::span<const double> seq) const;

 private:
  int order_;
  Direction direction_;
};

std::vector<double> finite_difference(std::span<const double> seq, int order,
                                      Direction direction);

// (D^order u)_index for the backward difference with zero history. Indices
// below 0 read as zero, so e.g. order 1 at index 0 returns u_0.
double backward_difference_at(std::span<const double> seq, int order,
                              std::ptrdiff_t index);

// Sum with Neumaier compensation.
double compensated_sum(std::span<const double> values);

}  // namespace sdcircle

#endif  // SDCIRCLE_DIFFERENCE_H_
