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

#ifndef SDCIRCLE_UPDATE_H_
#define SDCIRCLE_UPDATE_H_

#include <vector>

#include "sdcircle/bandlimited.h"
#include "sdcircle/quantizer.h"

namespace sdcircle {

// delta = -D^{m-1} u_{N-1} / N for the run's order m.
double compute_update(const QuantizationRun& run, const SampleGrid& grid);

// Result of one constant-update pass: quantize y, shift every sample by
// delta, quantize again.
//
// Since sum y - sum q equals the remainder, the updated remainder always
// equals 2 (L - L~), an even integer. For m in {1, 2} it is also confined to
// (-2, 2) under the stability hypotheses and is therefore zero.
struct UpdatePlan {
  int order = 0;
  double delta = 0.0;
  double baseline_remainder = 0.0;
  QuantizationRun baseline_run;
  SampleGrid shifted_grid{{}, 0};
  QuantizationRun updated_run;
  double updated_remainder = 0.0;
  int bit_flip_count = 0;          // L - L~
  long long nearest_even_remainder = 0;
  bool parity_holds = false;       // |r~ - 2(L - L~)| <= 1e-9
  bool zero_guaranteed = false;    // order 1 or 2 with the hypotheses met
  // D^j u~_{N-1} for j = 0..m-2: the sub-remainders a constant shift leaves.
  std::vector<double> sub_remainders;
};

// Throws StabilityLost if order is 2 and the shifted samples violate the
// stability condition.
UpdatePlan apply_update(const SigmaDeltaScheme& scheme, const SampleGrid& grid);

inline constexpr double kRemainderZeroTolerance = 1e-9;

}  // namespace sdcircle

#endif  // SDCIRCLE_UPDATE_H_
