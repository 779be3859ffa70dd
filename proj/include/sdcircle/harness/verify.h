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

#ifndef SDCIRCLE_HARNESS_VERIFY_H_
#define SDCIRCLE_HARNESS_VERIFY_H_

#include <string>
#include <vector>

#include "sdcircle/harness/config.h"

namespace sdcircle::harness {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Algebraic identities and guarantees on the configured signal and schemes,
// plus seeded randomized checks (config.seed, config.random_signals).
std::vector<CheckResult> verify_identities(const ExperimentConfig& config);

}  // namespace sdcircle::harness

#endif  // SDCIRCLE_HARNESS_VERIFY_H_
