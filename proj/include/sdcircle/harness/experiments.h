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

#ifndef SDCIRCLE_HARNESS_EXPERIMENTS_H_
#define SDCIRCLE_HARNESS_EXPERIMENTS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sdcircle/harness/config.h"
#include "sdcircle/reconstruction.h"
#include "sdcircle/update.h"

namespace sdcircle::harness {

// Everything one scheme contributes to the figure-1 reproduction. With the
// update disabled only the baseline fields are filled.
struct SchemeFigure {
  SchemeSpec spec;
  std::string label;
  double stability_margin = 0.0;
  bool updated = false;
  UpdatePlan plan;            // baseline_run is always set
  ErrorReport baseline;       // f - f_r
  ErrorReport updated_vs_f;   // f - f~_r
  ErrorReport updated_vs_shifted;  // f~ - f~_r, carries the bound
  std::vector<double> f;
  std::vector<double> f_r;
  std::vector<double> f_tilde_r;
};

struct Figure1Result {
  int bandwidth = 0;
  int n = 0;
  int grid_resolution = 0;
  std::vector<SchemeFigure> schemes;
  std::vector<std::filesystem::path> files;
};

// Runs every configured scheme on the configured signal and, if
// `write_files`, emits per-scheme CSV, SVG panels and figure1_summary.json
// under config.out_dir.
Figure1Result run_figure1(const ExperimentConfig& config,
                          bool write_files = true);

// A slope requirement on one sweep curve.
struct SlopeThreshold {
  double value = 0.0;
  bool at_most = true;  // slope <= value, otherwise slope >= value
};

// Updated order 1: <= -0.8; updated order 2: <= -1.8; order 2 without the
// update: >= -1.3. Other curves carry no requirement.
std::optional<SlopeThreshold> slope_threshold(int order, bool updated);

struct SweepPoint {
  int n = 0;
  double sup_error = 0.0;
  double bound = 0.0;
  bool stable = true;
};

struct SweepCurve {
  SchemeSpec spec;
  std::string label;
  bool updated = false;
  std::vector<SweepPoint> points;
  double slope = 0.0;
  std::optional<SlopeThreshold> threshold;
  bool passes = true;
};

struct SweepResult {
  std::vector<SweepCurve> curves;
  bool all_pass = true;
  std::vector<std::filesystem::path> files;
};

// Sup error against N for every scheme, with and without the update. The
// updated error is measured against the shifted signal f + delta. Throws
// ConfigError unless there are >= 6 values of N spanning >= one decade.
SweepResult run_decay_sweep(const ExperimentConfig& config,
                            bool write_files = true);

// Writes the q/v/u traces of every scheme (and of the updated run when the
// update is on). Returns the files written.
std::vector<std::filesystem::path> run_quantize_dump(
    const ExperimentConfig& config);

// Largest |e| at t = 0 relative to the median |e| over the grid.
double spike_ratio(const ErrorReport& report);
double median_abs_error(const ErrorReport& report);

}  // namespace sdcircle::harness

#endif  // SDCIRCLE_HARNESS_EXPERIMENTS_H_
