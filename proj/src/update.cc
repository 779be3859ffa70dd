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

#include "sdcircle/update.h"

#include <cassert>
#include <cmath>
#include <string>

#include "sdcircle/errors.h"

namespace sdcircle {

double compute_update(const QuantizationRun& run, const SampleGrid& grid) {
  if (run.size() != grid.size()) {
    throw LengthMismatch("compute_update: run and grid lengths differ");
  }
  return -run.remainder / grid.size();
}

UpdatePlan apply_update(const SigmaDeltaScheme& scheme,
                        const SampleGrid& grid) {
  UpdatePlan plan;
  plan.order = scheme.order();
  plan.baseline_run = quantize(scheme, grid);
  plan.baseline_remainder = plan.baseline_run.remainder;
  plan.delta = compute_update(plan.baseline_run, grid);
  plan.shifted_grid = grid.shifted(plan.delta);

  [[maybe_unused]] const int n = grid.size();
  const bool baseline_stable = check_stability(scheme, grid);
  const bool shifted_stable = check_stability(scheme, plan.shifted_grid);
  if (plan.order == 2 && !shifted_stable) {
    throw StabilityLost("apply_update: shifted samples reach " +
                        std::to_string(plan.shifted_grid.sup_norm()) +
                        ", above the stability margin " +
                        std::to_string(scheme.stability_margin()));
  }
  if (plan.order == 1 && baseline_stable) {
    assert(plan.shifted_grid.sup_norm() <= 1.0 + 1.0 / n + 1e-12);
  }

  plan.updated_run = quantize(scheme, plan.shifted_grid);
  plan.updated_remainder = plan.updated_run.remainder;
  plan.bit_flip_count = plan.baseline_run.plus_count - plan.updated_run.plus_count;
  plan.nearest_even_remainder =
      2 * std::llround(plan.updated_remainder / 2.0);
  plan.parity_holds = std::abs(plan.updated_remainder -
                               2.0 * plan.bit_flip_count) <=
                      kRemainderZeroTolerance;
  plan.zero_guaranteed = (plan.order == 1 && baseline_stable) ||
                         (plan.order == 2 && baseline_stable && shifted_stable);
  for (int j = 0; j + 1 < plan.order; ++j) {
    plan.sub_remainders.push_back(plan.updated_run.end_difference(j));
  }
  return plan;
}

}  // namespace sdcircle
