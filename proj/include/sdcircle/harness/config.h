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

#ifndef SDCIRCLE_HARNESS_CONFIG_H_
#define SDCIRCLE_HARNESS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sdcircle/bandlimited.h"
#include "sdcircle/quantizer.h"

namespace sdcircle::harness {

// Which filter to run. Order 1 is h = (0,1); order 2 uses the k-tap family;
// higher orders take explicit taps or minimal-support positions.
struct SchemeSpec {
  int order = 1;
  int tabs = 4;
  std::vector<double> taps;
  std::vector<int> positions;
};

SigmaDeltaScheme build_scheme(const SchemeSpec& spec);

// Short file-name friendly tag, e.g. "order1", "order2_k4".
std::string scheme_label(const SchemeSpec& spec);

struct SignalSpec {
  // "figure1", "zero", "constant" or "custom".
  std::string name = "figure1";
  double offset = 0.0;
  std::vector<TrigTerm> terms;
};

struct ExperimentConfig {
  std::string preset;
  SignalSpec signal;
  int bandwidth = -1;  // -1: take the signal's own bandwidth
  int n = 9002;
  std::vector<int> sweep;  // empty: default_sweep(K)
  std::vector<SchemeSpec> schemes{SchemeSpec{}};
  bool update = true;
  int grid_resolution = 0;  // 0: 10 N
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 1;
  int random_signals = 50;
};

// Known presets: "paper-fig1".
ExperimentConfig preset_config(std::string_view name);

// Applies one `key = value` setting. Throws ConfigError on unknown keys or
// malformed values. Recognized keys:
//   preset, signal, signal.offset, signal.cos, signal.sin, bandwidth, n,
//   sweep, order, tabs, taps, positions, update, resolution, out, seed,
//   random_signals
void apply_setting(ExperimentConfig& config, std::string_view key,
                   std::string_view value);

// Reads a key-value file: one `key = value` per line, '#' starts a comment.
// A `preset` line resets everything before it.
ExperimentConfig load_config(const std::filesystem::path& path);

TorusSignal build_signal(const ExperimentConfig& config);

// Throws ConfigError unless every N (single and sweep) is >= 2K+1 and the
// schemes are well formed.
void validate(const ExperimentConfig& config);

// N = 2 lambda K + 1 for lambda = 10, 20, ..., 320.
std::vector<int> default_sweep(int bandwidth);

// config.sweep, or the default sweep for the signal bandwidth.
std::vector<int> sweep_values(const ExperimentConfig& config);

int grid_points(const ExperimentConfig& config, int n);

}  // namespace sdcircle::harness

#endif  // SDCIRCLE_HARNESS_CONFIG_H_
