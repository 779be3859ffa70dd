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

#ifndef SDCIRCLE_QUANTIZER_H_
#define SDCIRCLE_QUANTIZER_H_

#include <span>
#include <vector>

#include "sdcircle/bandlimited.h"

namespace sdcircle {

// Strictly causal feedback filter h = (h_0, ..., h_k) with h_0 = 0.
//
// For an m-th order scheme the taps must satisfy the moment conditions
// sum_j h_j = 1 and sum_j j^r h_j = 0 for r = 1..m-1, which is what makes
// delta^0 - h divisible by m backward differences with a finite quotient.
class FeedbackFilter {
 public:
  // Throws InvalidFilter if order < 1, fewer than two taps, h_0 != 0 or the
  // taps do not sum to 1.
  FeedbackFilter(int order, std::vector<double> taps);

  int order() const { return order_; }
  int tab_count() const { return static_cast<int>(taps_.size()) - 1; }
  std::span<const double> taps() const { return taps_; }
  double l1_norm() const;

 private:
  int order_;
  std::vector<double> taps_;
};

// Finitely supported g with D^m g = delta^0 - h.
class GFilter {
 public:
  // m-fold cumulative sum of delta^0 - h. Throws InvalidFilter if a partial
  // sum fails to vanish past the support.
  static GFilter derive(const FeedbackFilter& filter);

  std::span<const double> taps() const { return taps_; }

 private:
  explicit GFilter(std::vector<double> taps) : taps_(std::move(taps)) {}
  std::vector<double> taps_;
};

class SigmaDeltaScheme {
 public:
  explicit SigmaDeltaScheme(FeedbackFilter filter);

  int order() const { return filter_.order(); }
  const FeedbackFilter& filter() const { return filter_; }
  const GFilter& g() const { return g_; }

  // mu = 2 - ||h||_1; inputs with ||y||_inf <= mu keep the state bounded.
  double stability_margin() const { return margin_; }

 private:
  FeedbackFilter filter_;
  GFilter g_;
  double margin_;
};

// h = (0, 1).
SigmaDeltaScheme make_first_order();

// h = (0, k/(k-1), 0, ..., 0, 1 - k/(k-1)) with k+1 taps. Throws
// InvalidTabCount for k < 2.
SigmaDeltaScheme make_second_order(int k);

// Order-m filter whose only nonzero taps sit at the given m distinct positions
// (all >= 1), solved from the moment conditions. Used for m >= 3, where no
// closed-form family is fixed here.
SigmaDeltaScheme make_minimal_support(int order, std::span<const int> positions);

// max_n |y_n| <= mu.
bool check_stability(const SigmaDeltaScheme& scheme, const SampleGrid& grid);

// Full trace of one greedy 1-bit run.
struct QuantizationRun {
  int order = 0;
  std::vector<double> samples;  // y_n
  std::vector<double> bits;     // q_n in {-1, +1}
  std::vector<double> v;
  std::vector<double> u;        // (g * v)_n
  int plus_count = 0;           // #{n : q_n = +1}
  double remainder = 0.0;       // D^{m-1} u_{N-1} from the trace
  double remainder_from_sums = 0.0;  // sum y - sum q
  bool remainder_consistent = true;  // the two agree to 1e-9
  bool stability_satisfied = true;

  int size() const { return static_cast<int>(bits.size()); }
  double state_sup() const;
  // D^j u_{N-1} with zero history.
  double end_difference(int j) const;
};

// Runs v_n = (h*v)_n + y_n - q_n, q_n = sign((h*v)_n + y_n) from zero history,
// with sign(0) = -1. A violated stability condition is recorded, not raised.
// Throws EmptyGrid for N = 0.
QuantizationRun quantize(const SigmaDeltaScheme& scheme, const SampleGrid& grid);

inline double greedy_sign(double x) { return x > 0.0 ? 1.0 : -1.0; }

}  // namespace sdcircle

#endif  // SDCIRCLE_QUANTIZER_H_
